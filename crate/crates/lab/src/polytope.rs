//! CSV and SVG export of moment polygons.

use std::fmt::Write as _;

use lg_orbit_core::toric::{MomentPolytope2D, Point2};
use lg_orbit_core::{rat, Rational};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::format::rational_text;

const SIZE: f64 = 400.0;
const MARGIN: f64 = 24.0;

/// `kind,x,y` rows: vertices in boundary order, then recession rays.
pub fn polytope_csv(p: &MomentPolytope2D) -> String {
    let mut s = String::from("kind,x,y\n");
    for v in &p.vertices {
        let _ = writeln!(
            s,
            "vertex,{},{}",
            rational_text(&v[0]),
            rational_text(&v[1])
        );
    }
    for r in &p.rays {
        let _ = writeln!(s, "ray,{},{}", r[0], r[1]);
    }
    s
}

/// Clips a convex polygon (counter-clockwise) to `a·x + b·y + c ≥ 0`.
fn clip(poly: &[Point2], a: &Rational, b: &Rational, c: &Rational) -> Vec<Point2> {
    let f = |p: &Point2| a * &p[0] + b * &p[1] + c;
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (p, q) = (&poly[i], &poly[(i + 1) % poly.len()]);
        let (fp, fq) = (f(p), f(q));
        if !fp.is_negative() {
            out.push(p.clone());
        }
        if (fp.is_negative() && fq.is_positive()) || (fp.is_positive() && fq.is_negative()) {
            let t = &fp / (&fp - &fq);
            out.push([&p[0] + &t * (&q[0] - &p[0]), &p[1] + &t * (&q[1] - &p[1])]);
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

fn bounds(pts: &[Point2]) -> Option<[Rational; 4]> {
    let first = pts.first()?;
    let mut b = [
        first[0].clone(),
        first[0].clone(),
        first[1].clone(),
        first[1].clone(),
    ];
    for p in pts {
        if p[0] < b[0] {
            b[0] = p[0].clone();
        }
        if p[0] > b[1] {
            b[1] = p[0].clone();
        }
        if p[1] < b[2] {
            b[2] = p[1].clone();
        }
        if p[1] > b[3] {
            b[3] = p[1].clone();
        }
    }
    Some(b)
}

/// Standalone SVG. Unbounded regions are cut off two units past the vertices;
/// only true edges are stroked.
pub fn polytope_svg(p: &MomentPolytope2D) -> String {
    let pad = if p.is_bounded() { rat(0) } else { rat(2) };
    let [x0, x1, y0, y1] = bounds(&p.vertices).unwrap_or([rat(0), rat(0), rat(0), rat(0)]);
    let (x0, x1, y0, y1) = (&x0 - &pad, &x1 + &pad, &y0 - &pad, &y1 + &pad);
    let (x0, x1, y0, y1) = if x0 == x1 && y0 == y1 {
        (&x0 - rat(2), &x1 + rat(2), &y0 - rat(2), &y1 + rat(2))
    } else {
        (x0, x1, y0, y1)
    };
    let mut region = vec![
        [x0.clone(), y0.clone()],
        [x1.clone(), y0.clone()],
        [x1.clone(), y1.clone()],
        [x0.clone(), y1.clone()],
    ];
    for (n, c) in p.normals.iter().zip(&p.offsets) {
        region = clip(
            &region,
            &Rational::from(n[0].clone()),
            &Rational::from(n[1].clone()),
            c,
        );
    }

    let f = |r: &Rational| r.to_f64().unwrap_or(0.0);
    let span = f(&(&x1 - &x0)).max(f(&(&y1 - &y0))).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let sx = |x: &Rational| MARGIN + (f(x) - f(&x0)) * scale;
    let sy = |y: &Rational| SIZE - MARGIN - (f(y) - f(&y0)) * scale;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        SIZE
    );
    let _ = writeln!(s, r#"<rect width="{0}" height="{0}" fill="white"/>"#, SIZE);
    if region.len() >= 3 {
        let pts: Vec<String> = region
            .iter()
            .map(|q| format!("{:.2},{:.2}", sx(&q[0]), sy(&q[1])))
            .collect();
        let _ = writeln!(
            s,
            r##"<polygon points="{}" fill="#d8bfd8" stroke="none"/>"##,
            pts.join(" ")
        );
    }
    // lattice points inside the frame
    let (ix0, ix1) = (x0.ceil().to_integer(), x1.floor().to_integer());
    let (iy0, iy1) = (y0.ceil().to_integer(), y1.floor().to_integer());
    let mut x = ix0.clone();
    while x <= ix1 {
        let mut y = iy0.clone();
        while y <= iy1 {
            let (qx, qy) = (Rational::from(x.clone()), Rational::from(y.clone()));
            let _ = writeln!(
                s,
                r##"<circle cx="{:.2}" cy="{:.2}" r="1.5" fill="#555"/>"##,
                sx(&qx),
                sy(&qy)
            );
            y += 1;
        }
        x += 1;
    }
    for i in 0..region.len() {
        let (a, b) = (&region[i], &region[(i + 1) % region.len()]);
        let on_facet =
            (0..p.normals.len()).any(|k| p.slack(k, a).is_zero() && p.slack(k, b).is_zero());
        if on_facet && region.len() >= 2 {
            let _ = writeln!(
                s,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="2"/>"#,
                sx(&a[0]),
                sy(&a[1]),
                sx(&b[0]),
                sy(&b[1])
            );
        }
    }
    for v in &p.vertices {
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="black"/>"#,
            sx(&v[0]),
            sy(&v[1])
        );
    }
    s.push_str("</svg>\n");
    s
}
