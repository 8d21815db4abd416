//! Deformation families of LG models.
//!
//! The family parameter `t` is an ordinary variable of the Laurent ring, so
//! every identity below holds symbolically in `t`; specialising is substitution.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::algebra::{rat, LaurentPolynomial, Pretty, Rational, RationalMatrix};
use crate::{Error, Result};

/// Name of the family parameter.
pub const PARAM: &str = "t";

fn v(name: &str) -> LaurentPolynomial {
    LaurentPolynomial::var(name)
}

fn c(n: i64) -> LaurentPolynomial {
    LaurentPolynomial::constant(rat(n))
}

/// Which endpoint `t` multiplies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Interpolation {
    /// `t·w0 + (1 − t)·w1`: `t = 0` gives `w1`, `t = 1` gives `w0`.
    #[default]
    Homotopy,
    /// `w1 + t·w0`.
    Perturbation,
}

/// Whether the underlying space moves with `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceKind {
    FixedSpace,
    SurfaceFamily,
}

impl SpaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::FixedSpace => "fixed-space",
            SpaceKind::SurfaceFamily => "surface-family",
        }
    }
}

/// A potential depending on `t`, optionally with chart parametrisations of the
/// total space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LGFamily {
    pub space: SpaceKind,
    pub potential_t: LaurentPolynomial,
    pub charts: Vec<(Chart, BiProjectivePoint)>,
}

impl LGFamily {
    /// The fibre potential at a rational `t`.
    pub fn potential_at(&self, t: &Rational) -> Result<LaurentPolynomial> {
        Ok(self.potential_t.evaluate(&[(PARAM, t.clone())])?.trimmed())
    }

    /// Chart images at a rational `t`.
    pub fn charts_at(&self, t: &Rational) -> Result<Vec<(Chart, BiProjectivePoint)>> {
        self.charts
            .iter()
            .map(|(ch, p)| Ok((*ch, p.evaluate(&[(PARAM, t.clone())])?)))
            .collect()
    }

    /// Residuals of every chart against the family equations.
    pub fn chart_residuals(&self) -> Vec<(Chart, LaurentPolynomial, LaurentPolynomial)> {
        self.charts
            .iter()
            .map(|(ch, p)| {
                let (a, b) = m_family_residuals(p);
                (*ch, a, b)
            })
            .collect()
    }
}

/// Linear interpolation between two potentials in the given convention.
pub fn potential_family(
    w0: &LaurentPolynomial,
    w1: &LaurentPolynomial,
    convention: Interpolation,
) -> Result<LGFamily> {
    for w in [w0, w1] {
        if w.vars().iter().any(|x| x == PARAM) {
            return Err(Error::ParameterClash(PARAM.to_string()));
        }
    }
    let t = v(PARAM);
    let potential_t = match convention {
        Interpolation::Homotopy => &(&t * w0) + &(&(&LaurentPolynomial::one() - &t) * w1),
        Interpolation::Perturbation => w1 + &(&t * w0),
    };
    Ok(LGFamily {
        space: SpaceKind::FixedSpace,
        potential_t,
        charts: Vec::new(),
    })
}

/// A point of `P¹ × P³` with polynomial coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiProjectivePoint {
    pub p1: [LaurentPolynomial; 2],
    pub p3: [LaurentPolynomial; 4],
}

impl BiProjectivePoint {
    pub fn new(p1: [LaurentPolynomial; 2], p3: [LaurentPolynomial; 4]) -> Result<Self> {
        if p1.iter().all(LaurentPolynomial::is_zero) || p3.iter().all(LaurentPolynomial::is_zero) {
            return Err(Error::DegeneratePoint);
        }
        Ok(Self { p1, p3 })
    }

    /// All 2×2 minors between the two coordinate tuples vanish, factor by factor.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        fn prop(a: &[LaurentPolynomial], b: &[LaurentPolynomial]) -> bool {
            (0..a.len())
                .all(|i| (i + 1..a.len()).all(|j| (&a[i] * &b[j] - &a[j] * &b[i]).is_zero()))
        }
        prop(&self.p1, &other.p1) && prop(&self.p3, &other.p3)
    }

    fn map(&self, f: impl Fn(&LaurentPolynomial) -> Result<LaurentPolynomial>) -> Result<Self> {
        Ok(Self {
            p1: [f(&self.p1[0])?, f(&self.p1[1])?],
            p3: [
                f(&self.p3[0])?,
                f(&self.p3[1])?,
                f(&self.p3[2])?,
                f(&self.p3[3])?,
            ],
        })
    }

    pub fn substitute(&self, bindings: &BTreeMap<String, LaurentPolynomial>) -> Result<Self> {
        self.map(|p| p.substitute(bindings))
    }

    pub fn evaluate(&self, values: &[(&str, Rational)]) -> Result<Self> {
        self.map(|p| Ok(p.evaluate(values)?.trimmed()))
    }

    /// Multiplies the `P³` coordinates by `f`.
    pub fn rescale_p3(&self, f: &LaurentPolynomial) -> Self {
        Self {
            p1: self.p1.clone(),
            p3: [
                &self.p3[0] * f,
                &self.p3[1] * f,
                &self.p3[2] * f,
                &self.p3[3] * f,
            ],
        }
    }
}

impl fmt::Display for BiProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{}, {}], [", Pretty(&self.p1[0]), Pretty(&self.p1[1]))?;
        for (i, y) in self.p3.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", Pretty(y))?;
        }
        f.write_str("])")
    }
}

/// `(x0·y1 − x1·y2 − t·x1·y0, x0·y2 − x1·y3)`; both vanish exactly on `M_t`.
pub fn m_family_residuals(p: &BiProjectivePoint) -> (LaurentPolynomial, LaurentPolynomial) {
    let [x0, x1] = &p.p1;
    let [y0, y1, y2, y3] = &p.p3;
    let t = v(PARAM);
    let r1 = &(&(x0 * y1) - &(x1 * y2)) - &(&(&t * x1) * y0);
    let r2 = &(x0 * y2) - &(x1 * y3);
    (r1, r2)
}

/// The four charts of the `F2 → F0` family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Chart {
    U,
    V,
    UPrime,
    VPrime,
}

impl Chart {
    pub const ALL: [Chart; 4] = [Chart::U, Chart::UPrime, Chart::V, Chart::VPrime];

    pub fn name(self) -> &'static str {
        match self {
            Chart::U => "U",
            Chart::V => "V",
            Chart::UPrime => "U'",
            Chart::VPrime => "V'",
        }
    }

    /// Coordinate names, fibre direction second.
    pub fn coordinates(self) -> (&'static str, &'static str) {
        match self {
            Chart::U => ("z", "u"),
            Chart::V => ("xi", "v"),
            Chart::UPrime => ("z", "mu"),
            Chart::VPrime => ("xi", "eta"),
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Chart {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "U" => Ok(Chart::U),
            "V" => Ok(Chart::V),
            "U'" | "Uprime" => Ok(Chart::UPrime),
            "V'" | "Vprime" => Ok(Chart::VPrime),
            other => Err(Error::UnknownChart(other.to_string())),
        }
    }
}

/// Chart parametrisation in the coordinates of [`Chart::coordinates`] and `t`.
///
/// `U` and `V` are the embedding of the `T*P¹` family; `U'` and `V'` cover
/// the rest of `M_t`.
pub fn chart_embed_j(chart: Chart) -> BiProjectivePoint {
    let t = v(PARAM);
    let (a, b) = chart.coordinates();
    let (a, b) = (v(a), v(b));
    let (p1, p3) = match chart {
        Chart::U => {
            let (z, u) = (a, b);
            (
                [c(1), z.clone()],
                [c(1), &(&(&z * &z) * &u) + &(&t * &z), &z * &u, u],
            )
        }
        Chart::V => {
            let (xi, vv) = (a, b);
            (
                [xi.clone(), c(1)],
                [
                    c(1),
                    vv.clone(),
                    &(&xi * &vv) - &t,
                    &(&(&xi * &xi) * &vv) - &(&t * &xi),
                ],
            )
        }
        Chart::UPrime => {
            let (z, mu) = (a, b);
            (
                [c(1), z.clone()],
                [mu.clone(), &(&z * &z) + &(&(&t * &z) * &mu), z, c(1)],
            )
        }
        Chart::VPrime => {
            let (xi, eta) = (a, b);
            (
                [xi.clone(), c(1)],
                [
                    eta.clone(),
                    c(1),
                    &xi - &(&t * &eta),
                    &(&xi * &xi) - &(&(&t * &xi) * &eta),
                ],
            )
        }
    };
    BiProjectivePoint::new(p1, p3).expect("chart images are nondegenerate")
}

/// `ξ = z⁻¹`, `v = z²u + t·z`.
pub fn transition_bindings() -> BTreeMap<String, LaurentPolynomial> {
    transition_with_sign(1)
}

fn transition_with_sign(sign: i64) -> BTreeMap<String, LaurentPolynomial> {
    let (z, u, t) = (v("z"), v("u"), v(PARAM));
    let mut b = BTreeMap::new();
    b.insert(
        "xi".to_string(),
        LaurentPolynomial::monomial(Rational::one(), &[("z", -1)]),
    );
    b.insert(
        "v".to_string(),
        &(&(&z * &z) * &u) + &(&t * &z).scale(&rat(sign)),
    );
    b
}

/// Whether the `V` image pulled back along `bindings` equals the `U` image.
pub fn transition_check_with(bindings: &BTreeMap<String, LaurentPolynomial>) -> Result<bool> {
    let pulled = chart_embed_j(Chart::V).substitute(bindings)?;
    Ok(pulled.projectively_equal(&chart_embed_j(Chart::U)))
}

/// The stated transition glues `U` and `V`, identically in `z, u, t`.
pub fn transition_check() -> bool {
    transition_check_with(&transition_bindings()).unwrap_or(false)
}

/// Same as [`transition_check`] with `v = z²u − t·z`; fails unless `t = 0`.
pub fn corrupted_transition_check() -> bool {
    transition_check_with(&transition_with_sign(-1)).unwrap_or(false)
}

/// Transition specialised at a fixed `t`.
pub fn transition_check_at(t: &Rational) -> Result<bool> {
    let b: BTreeMap<String, LaurentPolynomial> = transition_bindings()
        .into_iter()
        .map(|(k, p)| Ok((k, p.evaluate(&[(PARAM, t.clone())])?)))
        .collect::<Result<_>>()?;
    let u = chart_embed_j(Chart::U).evaluate(&[(PARAM, t.clone())])?;
    let pulled = chart_embed_j(Chart::V)
        .evaluate(&[(PARAM, t.clone())])?
        .substitute(&b)?;
    Ok(pulled.projectively_equal(&u))
}

/// The `y0 = 0` section on chart `U` or `V`.
pub fn section_at_infinity(chart: Chart) -> Result<BiProjectivePoint> {
    match chart {
        Chart::U => {
            let z = v("z");
            BiProjectivePoint::new([c(1), z.clone()], [c(0), &z * &z, z, c(1)])
        }
        Chart::V => {
            let xi = v("xi");
            BiProjectivePoint::new([xi.clone(), c(1)], [c(0), c(1), xi.clone(), &xi * &xi])
        }
        other => Err(Error::UnknownChart(other.name().to_string())),
    }
}

/// Chart `U` with `u = 1/ε`, `P³` coordinates multiplied by `ε`, then `ε = 0`.
pub fn section_limit_u() -> Result<BiProjectivePoint> {
    let eps = "eps";
    let inv = LaurentPolynomial::monomial(Rational::one(), &[(eps, -1)]);
    let p = chart_embed_j(Chart::U).substitute(&[("u".to_string(), inv)].into_iter().collect())?;
    p.rescale_p3(&v(eps)).evaluate(&[(eps, Rational::zero())])
}

/// Same limit on chart `V` with `v = 1/ε`.
pub fn section_limit_v() -> Result<BiProjectivePoint> {
    let eps = "eps";
    let inv = LaurentPolynomial::monomial(Rational::one(), &[(eps, -1)]);
    let p = chart_embed_j(Chart::V).substitute(&[("v".to_string(), inv)].into_iter().collect())?;
    p.rescale_p3(&v(eps)).evaluate(&[(eps, Rational::zero())])
}

/// `x0 = 1`, `y = (y0, y1, y2, y3)` specialised from the `U` image at `t = 0, u = 0`.
pub fn zero_section() -> Result<BiProjectivePoint> {
    chart_embed_j(Chart::U).evaluate(&[(PARAM, Rational::zero()), ("u", Rational::zero())])
}

/// `F2 → F0`: all four charts, with the toric potential `−2zu − 2` of `T*P¹` on `U`.
pub fn f2_f0_family() -> LGFamily {
    LGFamily {
        space: SpaceKind::SurfaceFamily,
        potential_t: &LaurentPolynomial::monomial(rat(-2), &[("z", 1), ("u", 1)]) + &c(-2),
        charts: Chart::ALL
            .iter()
            .map(|&ch| (ch, chart_embed_j(ch)))
            .collect(),
    }
}

/// `T*P¹ → O₁` (the `sl(2)` minimal orbit): the embedded charts `U`, `V`
/// with the linear potential `2z` on `U`.
pub fn tp1_orbit_family() -> LGFamily {
    LGFamily {
        space: SpaceKind::SurfaceFamily,
        potential_t: LaurentPolynomial::monomial(rat(2), &[("z", 1)]),
        charts: [Chart::U, Chart::V]
            .iter()
            .map(|&ch| (ch, chart_embed_j(ch)))
            .collect(),
    }
}

/// The orbit of `Diag(1, −1)` in `sl(2)` as `{x² + yz = 1}` with potential `2x`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OrbitHypersurface;

impl OrbitHypersurface {
    pub fn defining_polynomial(&self) -> LaurentPolynomial {
        &(&(&v("x") * &v("x")) + &(&v("y") * &v("z"))) - &c(1)
    }

    pub fn potential(&self) -> LaurentPolynomial {
        LaurentPolynomial::monomial(rat(2), &[("x", 1)])
    }

    pub fn contains(&self, p: &[Rational; 3]) -> bool {
        &p[0] * &p[0] + &p[1] * &p[2] == Rational::one()
    }
}

/// `g·Diag(1,−1)·g⁻¹ = [[x, y], [z, −x]]` for `det g = 1`, returned as `(x, y, z)`.
pub fn orbit_membership(g: &RationalMatrix) -> Result<[Rational; 3]> {
    if g.rows() != 2 || g.cols() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: g.rows().max(g.cols()),
        });
    }
    if g.det()? != Rational::one() {
        return Err(Error::NotUnimodular);
    }
    let h0 = RationalMatrix::from_i64_rows(&[[1, 0], [0, -1]])?;
    let inv = RationalMatrix::new(
        2,
        2,
        alloc::vec![
            g.get(1, 1).clone(),
            -g.get(0, 1),
            -g.get(1, 0),
            g.get(0, 0).clone()
        ],
    )?;
    let m = g.mul(&h0)?.mul(&inv)?;
    let p = [
        m.get(0, 0).clone(),
        m.get(0, 1).clone(),
        m.get(1, 0).clone(),
    ];
    debug_assert!(OrbitHypersurface.contains(&p));
    Ok(p)
}

/// Conjugate of `Diag(1,−1)` by a generic `[[a, b], [c, d]]` using the adjugate
/// as inverse, as polynomials in `a, b, c, d`.
pub fn symbolic_orbit_point() -> [LaurentPolynomial; 3] {
    let (a, b, cc, d) = (v("a"), v("b"), v("c"), v("d"));
    // g·H0 = [[a, −b], [c, −d]], adj g = [[d, −b], [−c, a]]
    let gh = [[a.clone(), -&b], [cc.clone(), -&d]];
    let adj = [[d.clone(), -&b], [-&cc, a.clone()]];
    let entry = |i: usize, j: usize| &(&gh[i][0] * &adj[0][j]) + &(&gh[i][1] * &adj[1][j]);
    [entry(0, 0), entry(0, 1), entry(1, 0)]
}

/// Remainder of `x² + yz − 1` at the symbolic orbit point modulo `ad − bc − 1`.
pub fn symbolic_orbit_remainder() -> Result<LaurentPolynomial> {
    let [x, y, z] = symbolic_orbit_point();
    let f = OrbitHypersurface.defining_polynomial();
    let b: BTreeMap<String, LaurentPolynomial> = [
        ("x".to_string(), x),
        ("y".to_string(), y),
        ("z".to_string(), z),
    ]
    .into_iter()
    .collect();
    let f = f.substitute(&b)?;
    let det_minus_one = &(&(&v("a") * &v("d")) - &(&v("b") * &v("c"))) - &c(1);
    Ok(f.divide_rem(&det_minus_one)?.1)
}

/// Critical points of `p·x + q·y + r·z` on `x² + yz = 1`, by decreasing value.
///
/// Lagrange: `(p, q, r) = λ(2x, z, y)` gives `λ² = (p² + 4qr)/4` and value `2λ`.
/// Irrational `λ` is reported as an error.
pub fn orbit_critical_points_of(linear: &[Rational; 3]) -> Result<Vec<([Rational; 3], Rational)>> {
    let [p, q, r] = linear;
    if p.is_zero() && q.is_zero() && r.is_zero() {
        return Err(Error::DegenerateCoefficients);
    }
    let disc = p * p + rat(4) * q * r;
    if disc.is_zero() {
        return Ok(Vec::new());
    }
    // complex critical points with λ imaginary are not rational either
    let root = if disc.is_positive() {
        rational_sqrt(&disc)
    } else {
        None
    }
    .ok_or(Error::InvalidCoefficients(
        "critical points are not rational",
    ))?;
    let mut out = Vec::new();
    for lambda in [&root / rat(2), -&root / rat(2)] {
        let pt = [p / (rat(2) * &lambda), r / &lambda, q / &lambda];
        debug_assert!(OrbitHypersurface.contains(&pt));
        out.push((pt, rat(2) * &lambda));
    }
    Ok(out)
}

/// Critical points of `2x` on the orbit: `(1,0,0) ↦ 2` and `(−1,0,0) ↦ −2`.
pub fn orbit_critical_points() -> Vec<([Rational; 3], Rational)> {
    orbit_critical_points_of(&[rat(2), rat(0), rat(0)]).expect("2x has rational critical points")
}

/// Exact square root of a nonnegative rational, if it is a square.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use proptest::prelude::*;

    fn selfdual() -> LaurentPolynomial {
        &(&v("x") + &v("y")) + &LaurentPolynomial::monomial(rat(1), &[("x", -1), ("y", 2)])
    }

    fn two_x() -> LaurentPolynomial {
        LaurentPolynomial::monomial(rat(2), &[("x", 1)])
    }

    #[test]
    fn potential_family_endpoints() {
        let fam = potential_family(&selfdual(), &two_x(), Interpolation::Homotopy).unwrap();
        assert_eq!(fam.potential_at(&rat(0)).unwrap(), two_x());
        assert_eq!(fam.potential_at(&rat(1)).unwrap(), selfdual());
        let half = &(&LaurentPolynomial::monomial(ratio(3, 2), &[("x", 1)])
            + &LaurentPolynomial::monomial(ratio(1, 2), &[("y", 1)]))
            + &LaurentPolynomial::monomial(ratio(1, 2), &[("x", -1), ("y", 2)]);
        assert_eq!(fam.potential_at(&ratio(1, 2)).unwrap(), half);
        assert_eq!(fam.potential_at(&rat(0)).unwrap().to_string(), "2 * x^1");
    }

    #[test]
    fn perturbation_convention() {
        let fam = potential_family(&selfdual(), &two_x(), Interpolation::Perturbation).unwrap();
        assert_eq!(fam.potential_at(&rat(0)).unwrap(), two_x());
        assert_eq!(fam.potential_at(&rat(1)).unwrap(), &two_x() + &selfdual());
        assert_eq!(
            potential_family(&v(PARAM), &two_x(), Interpolation::Homotopy).unwrap_err(),
            Error::ParameterClash("t".into())
        );
    }

    #[test]
    fn all_charts_lie_on_the_family() {
        for ch in Chart::ALL {
            let (a, b) = m_family_residuals(&chart_embed_j(ch));
            assert!(a.is_zero() && b.is_zero(), "chart {}", ch);
        }
    }

    #[test]
    fn chart_images_match_listed_forms() {
        let p = chart_embed_j(Chart::U);
        assert_eq!(p.to_string(), "([1, z], [1, u*z^2 + t*z, u*z, u])");
        let p = chart_embed_j(Chart::UPrime);
        assert_eq!(
            p.p3[1],
            &(&v("z") * &v("z")) + &(&(&v(PARAM) * &v("z")) * &v("mu"))
        );
    }

    #[test]
    fn generic_point_is_off_the_family() {
        let p = BiProjectivePoint::new([c(1), c(1)], [c(1), c(1), c(0), c(1)]).unwrap();
        let p = p.evaluate(&[(PARAM, rat(0))]).unwrap();
        let (a, b) = m_family_residuals(&p);
        assert_eq!(a.evaluate(&[(PARAM, rat(0))]).unwrap(), c(1));
        assert_eq!(b, c(-1));
    }

    #[test]
    fn degenerate_points_are_rejected() {
        assert_eq!(
            BiProjectivePoint::new([c(0), c(0)], [c(1), c(0), c(0), c(0)]).unwrap_err(),
            Error::DegeneratePoint
        );
        assert!(BiProjectivePoint::new([c(1), c(0)], [c(0), c(0), c(0), c(0)]).is_err());
    }

    #[test]
    fn chart_names_parse() {
        for ch in Chart::ALL {
            assert_eq!(ch.name().parse::<Chart>().unwrap(), ch);
        }
        assert_eq!(
            "W".parse::<Chart>().unwrap_err(),
            Error::UnknownChart("W".into())
        );
    }

    #[test]
    fn transitions() {
        assert!(transition_check());
        assert!(!corrupted_transition_check());
        assert!(transition_check_at(&rat(0)).unwrap());
        assert!(transition_check_at(&ratio(-3, 7)).unwrap());
        let b = transition_bindings();
        let correction = &b["v"] - &(&(&v("z") * &v("z")) * &v("u"));
        assert_eq!(correction, &v(PARAM) * &v("z"));
        assert!(correction.evaluate(&[(PARAM, rat(0))]).unwrap().is_zero());
    }

    #[test]
    fn sections_at_infinity() {
        for ch in [Chart::U, Chart::V] {
            let s = section_at_infinity(ch).unwrap();
            let (a, b) = m_family_residuals(&s);
            assert!(a.is_zero() && b.is_zero());
            assert!(s.p3[0].is_zero());
        }
        assert_eq!(
            section_limit_u().unwrap(),
            section_at_infinity(Chart::U).unwrap()
        );
        assert_eq!(
            section_limit_v().unwrap(),
            section_at_infinity(Chart::V).unwrap()
        );
        assert!(section_at_infinity(Chart::UPrime).is_err());
    }

    #[test]
    fn zero_section_reduces() {
        let z = zero_section().unwrap();
        assert_eq!(z.p1, [c(1), v("z")]);
        assert_eq!(z.p3, [c(1), c(0), c(0), c(0)]);
    }

    #[test]
    fn families() {
        let f = f2_f0_family();
        assert_eq!(f.charts.len(), 4);
        assert!(f
            .chart_residuals()
            .iter()
            .all(|(_, a, b)| a.is_zero() && b.is_zero()));
        assert_eq!(f.potential_at(&rat(1)).unwrap().constant_term(), rat(-2));
        let at1 = f.charts_at(&rat(1)).unwrap();
        assert_eq!(at1[0].1.p3[1], &(&(&v("z") * &v("z")) * &v("u")) + &v("z"));
        let g = tp1_orbit_family();
        assert_eq!(g.charts.len(), 2);
    }

    fn mat(a: [[i64; 2]; 2]) -> RationalMatrix {
        RationalMatrix::from_i64_rows(&a).unwrap()
    }

    #[test]
    fn orbit_membership_examples() {
        assert_eq!(
            orbit_membership(&mat([[1, 0], [0, 1]])).unwrap(),
            [rat(1), rat(0), rat(0)]
        );
        assert_eq!(
            orbit_membership(&mat([[1, 1], [0, 1]])).unwrap(),
            [rat(1), rat(-2), rat(0)]
        );
        assert_eq!(
            orbit_membership(&mat([[2, 0], [0, 1]])).unwrap_err(),
            Error::NotUnimodular
        );
    }

    #[test]
    fn symbolic_membership() {
        // x = ad + bc, y = −2ab, z = 2cd
        let [x, y, z] = symbolic_orbit_point();
        assert_eq!(x, &(&v("a") * &v("d")) + &(&v("b") * &v("c")));
        assert_eq!(
            y,
            LaurentPolynomial::monomial(rat(-2), &[("a", 1), ("b", 1)])
        );
        assert_eq!(
            z,
            LaurentPolynomial::monomial(rat(2), &[("c", 1), ("d", 1)])
        );
        assert!(symbolic_orbit_remainder().unwrap().is_zero());
    }

    /// Lagrange system for `2x` by case analysis: `λz = 0`, `λy = 0`, `2 = 2λx`.
    /// The last forces `λ ≠ 0`, so `y = z = 0` and `x² = 1`.
    fn lagrange_oracle() -> Vec<([Rational; 3], Rational)> {
        let mut out = Vec::new();
        for x in [1i64, -1] {
            let lambda = rat(1) / rat(x);
            assert_eq!(&lambda * rat(2 * x), rat(2));
            out.push(([rat(x), rat(0), rat(0)], rat(2 * x)));
        }
        out
    }

    #[test]
    fn orbit_critical_points_match_oracle() {
        let pts = orbit_critical_points();
        assert_eq!(pts, lagrange_oracle());
        assert_ne!(pts[0].1, pts[1].1);
        let same = orbit_critical_points_of(&[rat(2), rat(0), rat(0)]).unwrap();
        assert_eq!(same, pts);
        assert_eq!(
            orbit_critical_points_of(&[rat(0), rat(0), rat(0)]).unwrap_err(),
            Error::DegenerateCoefficients
        );
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&rat(2)), None);
        assert_eq!(rational_sqrt(&rat(-4)), None);
    }

    proptest! {
        #[test]
        fn conjugates_lie_on_the_orbit(a in -6i64..=6, b in -6i64..=6, k in -6i64..=6) {
            let g = mat([[1, a], [0, 1]]).mul(&mat([[1, 0], [b, 1]])).unwrap()
                .mul(&mat([[1, k], [0, 1]])).unwrap();
            let p = orbit_membership(&g).unwrap();
            prop_assert!(OrbitHypersurface.contains(&p));
        }

        #[test]
        fn linear_potentials_with_square_discriminant(p in 1i64..=6, q in -3i64..=3) {
            let lin = [rat(p), rat(q), rat(0)];
            let pts = orbit_critical_points_of(&lin).unwrap();
            prop_assert_eq!(pts.len(), 2);
            for (pt, val) in &pts {
                prop_assert!(OrbitHypersurface.contains(pt));
                let f = rat(p) * &pt[0] + rat(q) * &pt[1];
                prop_assert_eq!(&f, val);
            }
        }
    }
}
