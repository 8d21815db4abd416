//! Toric Landau-Ginzburg models as `(Div, potential)` pairs.
//!
//! The dual of `(Div, f)` has `Div = Mon(f)` and a potential with one monomial
//! per row of the original `Div`. Coefficients of the dual potential are all 1,
//! and selfduality is tested on exponent sets only.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    cokernel_invariants, rat, CokernelInvariants, IntegerMatrix, LaurentPolynomial, Rational,
};
use crate::lie::DiagonalElement;
use crate::orbit::{lie_potential, LiePotential};
use crate::{Error, Result};

/// Divisor data plus a Laurent potential in the torus variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricLGModel {
    pub name: String,
    pub div: IntegerMatrix,
    pub potential: LaurentPolynomial,
}

impl ToricLGModel {
    /// The potential's variable list must have one name per column of `div`.
    pub fn new(
        name: impl Into<String>,
        div: IntegerMatrix,
        potential: LaurentPolynomial,
    ) -> Result<Self> {
        if potential.vars().len() != div.cols() {
            return Err(Error::DimensionMismatch {
                expected: div.cols(),
                found: potential.vars().len(),
            });
        }
        if potential.is_zero() {
            return Err(Error::InvalidCoefficients(
                "potential must have at least one term",
            ));
        }
        Ok(Self {
            name: name.into(),
            div,
            potential,
        })
    }

    pub fn mon(&self) -> IntegerMatrix {
        mon_matrix(&self.potential)
    }

    /// Exponent vectors of the potential, as a set.
    pub fn monomial_set(&self) -> BTreeSet<Vec<i64>> {
        self.potential.terms().map(|(e, _)| e.clone()).collect()
    }

    pub fn div_row_set(&self) -> BTreeSet<Vec<BigInt>> {
        self.div.row_vecs().into_iter().collect()
    }
}

/// One row per monomial of `f` (its exponent vector), in descending
/// graded-lex order. Coefficients are ignored.
pub fn mon_matrix(f: &LaurentPolynomial) -> IntegerMatrix {
    let rows: Vec<Vec<i64>> = f
        .grlex_terms()
        .into_iter()
        .map(|(e, _)| e.clone())
        .collect();
    if rows.is_empty() {
        return IntegerMatrix::zeros(0, f.vars().len());
    }
    IntegerMatrix::from_rows(&rows).expect("rows share the variable count")
}

/// Exchanges `Div` and `Mon`. The dual potential has coefficient 1 on every
/// monomial and uses the original variable names.
pub fn dualize(m: &ToricLGModel) -> Result<ToricLGModel> {
    let vars = m.potential.vars();
    let mut terms = Vec::with_capacity(m.div.rows());
    for row in m.div.row_vecs() {
        let exps = row
            .iter()
            .map(|x| {
                i64::try_from(x)
                    .map_err(|_| Error::InvalidCoefficients("divisor entry exceeds i64"))
            })
            .collect::<Result<Vec<i64>>>()?;
        terms.push((exps, Rational::one()));
    }
    // repeated rows would merge into one monomial with coefficient 2; keep the set
    let mut seen = BTreeSet::new();
    terms.retain(|(e, _)| seen.insert(e.clone()));
    let potential = LaurentPolynomial::from_terms(vars, terms)?;
    ToricLGModel::new(
        format!("{}^dual", m.name),
        mon_matrix(&m.potential),
        potential,
    )
}

/// `Div` rows equal `Mon` rows as sets, and the dual's monomials equal the original's.
pub fn is_selfdual(m: &ToricLGModel) -> bool {
    let mon = mon_matrix(&m.potential);
    if m.div.sorted_rows() != mon.sorted_rows() {
        return false;
    }
    match dualize(m) {
        Ok(d) => d.monomial_set() == m.monomial_set(),
        Err(_) => false,
    }
}

/// Chow group as the cokernel of `Div`.
pub fn chow_group(m: &ToricLGModel) -> CokernelInvariants {
    cokernel_invariants(&m.div)
}

/// Exact point in the plane.
pub type Point2 = [Rational; 2];

/// `{p : ⟨normal_i, p⟩ + offset_i ≥ 0}` for a rank-2 lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentPolytope2D {
    pub normals: Vec<[BigInt; 2]>,
    pub offsets: Vec<Rational>,
    /// Counter-clockwise, starting from the lexicographically smallest vertex.
    pub vertices: Vec<Point2>,
    /// Primitive generators of the recession cone; empty iff the region is bounded.
    pub rays: Vec<[BigInt; 2]>,
}

impl MomentPolytope2D {
    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    /// `⟨normal_i, p⟩ + offset_i`.
    pub fn slack(&self, i: usize, p: &Point2) -> Rational {
        let [a, b] = &self.normals[i];
        Rational::from_integer(a.clone()) * &p[0]
            + Rational::from_integer(b.clone()) * &p[1]
            + &self.offsets[i]
    }

    pub fn contains(&self, p: &Point2) -> bool {
        (0..self.normals.len()).all(|i| !self.slack(i, p).is_negative())
    }

    /// Indices of constraints tight at `p`.
    pub fn tight_constraints(&self, p: &Point2) -> Vec<usize> {
        (0..self.normals.len())
            .filter(|&i| self.slack(i, p).is_zero())
            .collect()
    }
}

/// Vertices and recession rays of the polygon cut out by `div` rows and offsets.
pub fn moment_polytope(normals: &IntegerMatrix, offsets: &[Rational]) -> Result<MomentPolytope2D> {
    if normals.cols() != 2 {
        return Err(Error::RankUnsupported(normals.cols()));
    }
    if normals.rows() < 2 || offsets.len() != normals.rows() {
        return Err(Error::InsufficientConstraints);
    }
    let ns: Vec<[BigInt; 2]> = normals
        .row_vecs()
        .into_iter()
        .map(|r| [r[0].clone(), r[1].clone()])
        .collect();
    if let Some(i) = ns.iter().position(|n| n[0].is_zero() && n[1].is_zero()) {
        return Err(Error::ZeroNormal(i));
    }
    let mut poly = MomentPolytope2D {
        normals: ns,
        offsets: offsets.to_vec(),
        vertices: Vec::new(),
        rays: Vec::new(),
    };
    let q = |x: &BigInt| Rational::from_integer(x.clone());
    let mut vertices: Vec<Point2> = Vec::new();
    for i in 0..poly.normals.len() {
        for j in i + 1..poly.normals.len() {
            let [a1, b1] = &poly.normals[i];
            let [a2, b2] = &poly.normals[j];
            let det = a1 * b2 - a2 * b1;
            if det.is_zero() {
                continue;
            }
            // a1 x + b1 y = -c1, a2 x + b2 y = -c2
            let c1 = -&poly.offsets[i];
            let c2 = -&poly.offsets[j];
            let det = q(&det);
            let x = (&c1 * q(b2) - &c2 * q(b1)) / &det;
            let y = (q(a1) * &c2 - q(a2) * &c1) / &det;
            let p = [x, y];
            if poly.contains(&p) && !vertices.contains(&p) {
                vertices.push(p);
            }
        }
    }
    let mut rays: Vec<[BigInt; 2]> = Vec::new();
    for [a, b] in &poly.normals {
        for cand in [[-b.clone(), a.clone()], [b.clone(), -a.clone()]] {
            let g = cand[0].gcd(&cand[1]);
            let cand = [&cand[0] / &g, &cand[1] / &g];
            let ok = poly
                .normals
                .iter()
                .all(|[c, d]| !(c * &cand[0] + d * &cand[1]).is_negative());
            if ok && !rays.contains(&cand) {
                rays.push(cand);
            }
        }
    }
    rays.sort_by(|u, v| angle_cmp(&[q(&u[0]), q(&u[1])], &[q(&v[0]), q(&v[1])]));

    if !vertices.is_empty() {
        let k = Rational::from_integer(BigInt::from(vertices.len()));
        let mut centre = [
            vertices.iter().map(|p| p[0].clone()).sum::<Rational>() / &k,
            vertices.iter().map(|p| p[1].clone()).sum::<Rational>() / &k,
        ];
        for r in &rays {
            centre[0] += q(&r[0]);
            centre[1] += q(&r[1]);
        }
        vertices.sort_by(|p, r| {
            let dp = [&p[0] - &centre[0], &p[1] - &centre[1]];
            let dr = [&r[0] - &centre[0], &r[1] - &centre[1]];
            angle_cmp(&dp, &dr)
        });
        let start = (0..vertices.len())
            .min_by(|&a, &b| vertices[a].cmp(&vertices[b]))
            .unwrap_or(0);
        vertices.rotate_left(start);
    }
    poly.vertices = vertices;
    poly.rays = rays;
    Ok(poly)
}

/// Exact angular order starting from the positive x-axis.
fn angle_cmp(u: &Point2, v: &Point2) -> Ordering {
    let half = |p: &Point2| {
        if p[1].is_positive() || (p[1].is_zero() && !p[0].is_negative()) {
            0
        } else {
            1
        }
    };
    half(u).cmp(&half(v)).then_with(|| {
        let cross = &u[0] * &v[1] - &u[1] * &v[0];
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// `c + Σ_{i=1..n} (-2i) x_i y_i` in variables `x1..xn, y1..yn`.
pub fn toric_potential(n: usize, c: Rational) -> LaurentPolynomial {
    let names: Vec<String> = (1..=n)
        .flat_map(|i| [format!("x{}", i), format!("y{}", i)])
        .collect();
    let mut p = LaurentPolynomial::constant(c).with_vars(&names);
    for i in 1..=n {
        let (xn, yn) = (format!("x{}", i), format!("y{}", i));
        p = &p + &LaurentPolynomial::monomial(rat(-2 * i as i64), &[(&xn, 1), (&yn, 1)]);
    }
    p
}

/// Whether `h` is a solution of the Hamiltonian equation of the weighted
/// `C*`-action on `T*P^n`: `∂h/∂x_i = -2i y_i` and `∂h/∂y_i = -2i x_i`, with `h`
/// depending on no other variable. Any additive constant is allowed.
pub fn verify_hamiltonian_equation(h: &LaurentPolynomial, n: usize) -> bool {
    let names: BTreeSet<String> = (1..=n)
        .flat_map(|i| [format!("x{}", i), format!("y{}", i)])
        .collect();
    if h.used_vars().iter().any(|v| !names.contains(v)) {
        return false;
    }
    (1..=n).all(|i| {
        let (xn, yn) = (format!("x{}", i), format!("y{}", i));
        let w = rat(-2 * i as i64);
        h.derivative(&xn) == LaurentPolynomial::var(&yn).scale(&w)
            && h.derivative(&yn) == LaurentPolynomial::var(&xn).scale(&w)
    })
}

/// `Diag(-n, -n+2, ..., n-2, n)`: eigenvalues spaced by 2, symmetric about 0.
pub fn coincidence_h(n: usize) -> DiagonalElement {
    DiagonalElement::new((0..=n).map(|k| rat(2 * k as i64 - n as i64)).collect())
        .expect("symmetric entries sum to zero")
}

/// Outcome of comparing the Lie and toric potentials for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidenceReport {
    pub n: usize,
    pub h: DiagonalElement,
    pub h0: DiagonalElement,
    pub c: Rational,
    pub lie: LiePotential,
    pub toric: LaurentPolynomial,
    pub equal: bool,
}

/// Builds `H`, `H0 = Diag(n,-1,...,-1)` and `c = -n² - n` and compares the
/// Lie potential with the toric potential `h_c`.
pub fn coincidence_check(n: usize) -> Result<CoincidenceReport> {
    if n == 0 {
        return Err(Error::EmptyDimension);
    }
    let h = coincidence_h(n);
    let h0 = DiagonalElement::minimal_orbit_base(n);
    let nn = n as i64;
    let c = rat(-nn * nn - nn);
    let lie = lie_potential(&h, &h0, n)?;
    let toric = toric_potential(n, c.clone());
    let equal = lie.polynomial() == &toric;
    Ok(CoincidenceReport {
        n,
        h,
        h0,
        c,
        lie,
        toric,
        equal,
    })
}
