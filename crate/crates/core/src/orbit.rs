//! Height functions `f_H(x) = ⟨H, x⟩` on adjoint orbits, written in
//! exp-adjoint charts `(Y, X) ↦ e^{ad Y} e^{ad X} H0`.
//!
//! For the minimal orbit of `H0 = Diag(n, -1, ..., -1)` the raw eigenvalue of
//! `ad(H0)` on the chart directions is `n + 1`, not 1. [`OrbitChart`] therefore
//! feeds `X / (n + 1)` into the exponential while leaving `Y` unscaled. With that
//! normalisation the first factor gives `e^{ad X'} H0 = H0 - X` and the height
//! function is exactly `tr(H H0) + Σ (λ_j - λ_k) x y`, as returned by
//! [`lie_potential`]. Scaling `Y` as well would divide every quadratic
//! coefficient by `n + 1`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{LaurentPolynomial, PolyMatrix, Rational};
use crate::lie::{
    exp_ad_apply, nilpotent_decomposition, weyl_act, DiagonalElement, Normalization,
    TracelessMatrix, WeylPermutation,
};
use crate::{Error, Result};

/// `e^{ad Y} e^{ad X} H0` for `X ∈ n⁺_{H0}`, `Y ∈ n⁻_{H0}`.
pub fn orbit_point(
    y: &TracelessMatrix,
    x: &TracelessMatrix,
    h0: &DiagonalElement,
) -> Result<TracelessMatrix> {
    for m in [x, y] {
        if m.dim() != h0.dim() {
            return Err(Error::DimensionMismatch {
                expected: h0.dim(),
                found: m.dim(),
            });
        }
    }
    let dec = nilpotent_decomposition(h0);
    if !dec.contains(x, true) {
        return Err(Error::WrongSubalgebra { which: "X" });
    }
    if !dec.contains(y, false) {
        return Err(Error::WrongSubalgebra { which: "Y" });
    }
    exp_ad_apply(y, &exp_ad_apply(x, &h0.to_matrix())?)
}

fn x_name(k: usize) -> String {
    format!("x{}", k + 1)
}

fn y_name(k: usize) -> String {
    format!("y{}", k + 1)
}

/// Exp-adjoint coordinate chart around a diagonal point whose `ad`-eigenvalues
/// are `0` and `±e` for a single `e`.
///
/// Coordinate `x_k` sits on the `k`-th positive pair `(i, j)` (row-major) and
/// `y_k` on its transpose `(j, i)`. For a Weyl translate of the minimal base with
/// the entry `n` in row `j`, these are exactly the row-`j` and column-`j` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitChart {
    h0: DiagonalElement,
    pairs: Vec<(usize, usize)>,
    x_vars: Vec<String>,
    y_vars: Vec<String>,
    eigenvalue: Rational,
}

impl OrbitChart {
    pub fn new(h0: &DiagonalElement) -> Result<Self> {
        let distinct = h0.distinct_entries();
        let eigenvalue = match distinct.len() {
            1 => Rational::one(),
            2 => &distinct[1] - &distinct[0],
            _ => return Err(Error::EigenvalueOutOfRange),
        };
        let pairs = nilpotent_decomposition(h0).positive_pairs;
        Ok(Self {
            h0: h0.clone(),
            x_vars: (0..pairs.len()).map(x_name).collect(),
            y_vars: (0..pairs.len()).map(y_name).collect(),
            pairs,
            eigenvalue,
        })
    }

    pub fn h0(&self) -> &DiagonalElement {
        &self.h0
    }

    pub fn x_vars(&self) -> &[String] {
        &self.x_vars
    }

    pub fn y_vars(&self) -> &[String] {
        &self.y_vars
    }

    /// Positive pairs carrying `x_1, x_2, ...`.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The positive `ad(H0)` eigenvalue on chart directions.
    pub fn eigenvalue(&self) -> &Rational {
        &self.eigenvalue
    }

    /// Generic `X = Σ x_k E_{ij}` and `Y = Σ y_k E_{ji}` with symbolic entries.
    pub fn coordinate_matrices(&self) -> (PolyMatrix, PolyMatrix) {
        let n = self.h0.dim();
        let mut x = PolyMatrix::zeros(n);
        let mut y = PolyMatrix::zeros(n);
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            x.set(i, j, LaurentPolynomial::var(&self.x_vars[k]));
            y.set(j, i, LaurentPolynomial::var(&self.y_vars[k]));
        }
        (x, y)
    }

    /// The chart map `e^{ad Y} e^{ad(X/e)} H0` as a matrix of polynomials.
    pub fn point(&self) -> Result<PolyMatrix> {
        let (x, y) = self.coordinate_matrices();
        let x = x.scale(&self.eigenvalue.recip());
        let h0 = PolyMatrix::from_rational(self.h0.to_matrix().matrix())?;
        let bound = self.h0.dim() * self.h0.dim();
        let first = PolyMatrix::exp_ad(&x, &h0, bound)?;
        PolyMatrix::exp_ad(&y, &first, bound)
    }

    /// `⟨H, point⟩` expanded in the chart variables.
    pub fn height(&self, h: &DiagonalElement, norm: Normalization) -> Result<LaurentPolynomial> {
        if h.dim() != self.h0.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.h0.dim(),
                found: h.dim(),
            });
        }
        let p = self.point()?;
        let hm = PolyMatrix::from_rational(h.to_matrix().matrix())?;
        Ok(hm.mul(&p)?.trace().scale(&norm.factor(h.dim())))
    }
}

/// `constant + Σ c_i x_i y_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiePotential {
    constant: Rational,
    coefficients: Vec<Rational>,
    poly: LaurentPolynomial,
}

impl LiePotential {
    pub fn from_parts(constant: Rational, coefficients: Vec<Rational>) -> Self {
        let names: Vec<String> = (0..coefficients.len())
            .flat_map(|k| [x_name(k), y_name(k)])
            .collect();
        let mut poly = LaurentPolynomial::constant(constant.clone()).with_vars(&names);
        for (k, c) in coefficients.iter().enumerate() {
            let xn = x_name(k);
            let yn = y_name(k);
            poly = &poly + &LaurentPolynomial::monomial(c.clone(), &[(&xn, 1), (&yn, 1)]);
        }
        Self {
            constant,
            coefficients,
            poly,
        }
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn polynomial(&self) -> &LaurentPolynomial {
        &self.poly
    }
}

/// Lie potential of regular `H` in the chart around `base`, a Weyl translate of
/// `Diag(n, -1, ..., -1)`: `tr(H base) + Σ_{k≠j} (λ_j - λ_k) x y`, where `j` is the
/// row holding `n`. The trace pairing is used, without the Killing factor.
pub fn lie_potential(
    h: &DiagonalElement,
    base: &DiagonalElement,
    n: usize,
) -> Result<LiePotential> {
    for d in [h, base] {
        if d.dim() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: d.dim(),
            });
        }
    }
    if !h.is_regular() {
        return Err(Error::NotRegular);
    }
    let j = minimal_translate_row(base, n)?;
    let lambda = h.entries();
    let coefficients = (0..=n)
        .filter(|&k| k != j)
        .map(|k| &lambda[j] - &lambda[k])
        .collect();
    Ok(LiePotential::from_parts(h.trace_with(base)?, coefficients))
}

/// Row of the entry `n` if `base` is a permutation of `Diag(n, -1, ..., -1)`.
fn minimal_translate_row(base: &DiagonalElement, n: usize) -> Result<usize> {
    let mut sorted = base.entries().to_vec();
    sorted.sort();
    let mut expected = DiagonalElement::minimal_orbit_base(n).entries().to_vec();
    expected.sort();
    if n == 0 || sorted != expected {
        return Err(Error::NotMinimalOrbitBase);
    }
    let top = Rational::from_integer((n as i64).into());
    Ok(base.entries().iter().position(|x| *x == top).unwrap())
}

/// One critical value `⟨H, w·H0⟩` per distinct Weyl translate of `H0`.
///
/// Translates are listed in decreasing lexicographic order of their diagonals;
/// each comes with a permutation realising it that fixes every position it can.
pub fn critical_values(
    h: &DiagonalElement,
    h0: &DiagonalElement,
    norm: Normalization,
) -> Result<Vec<(WeylPermutation, Rational)>> {
    if h.dim() != h0.dim() {
        return Err(Error::DimensionMismatch {
            expected: h0.dim(),
            found: h.dim(),
        });
    }
    if !h.is_regular() {
        return Err(Error::NotRegular);
    }
    let factor = norm.factor(h.dim());
    let mut out = Vec::new();
    for target in distinct_arrangements(h0.entries()) {
        let w = realising_permutation(h0.entries(), &target);
        let translate = weyl_act(&w, h0)?;
        out.push((w, h.trace_with(&translate)? * &factor));
    }
    Ok(out)
}

/// Distinct rearrangements of a multiset, decreasing lexicographic order.
fn distinct_arrangements(values: &[Rational]) -> Vec<Vec<Rational>> {
    let mut cur = values.to_vec();
    cur.sort_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    loop {
        out.push(cur.clone());
        // previous permutation in lexicographic order
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] > cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] < cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

fn realising_permutation(from: &[Rational], to: &[Rational]) -> WeylPermutation {
    let n = from.len();
    let mut images = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    for i in 0..n {
        if from[i] == to[i] {
            images[i] = i;
            used[i] = true;
        }
    }
    for i in 0..n {
        if images[i] != usize::MAX {
            continue;
        }
        let p = (0..n).find(|&p| !used[p] && to[p] == from[i]).unwrap();
        images[i] = p;
        used[p] = true;
    }
    WeylPermutation::new(images).expect("bijection")
}

/// `tr(H (H0 - [Y, X]))` with `X`, `Y` generic on the positive and negative
/// blocks of `H0`. `H0` may have at most two distinct eigenvalues.
pub fn block_potential(h: &DiagonalElement, h0: &DiagonalElement) -> Result<LaurentPolynomial> {
    if h.dim() != h0.dim() {
        return Err(Error::DimensionMismatch {
            expected: h0.dim(),
            found: h.dim(),
        });
    }
    let chart = OrbitChart::new(h0)?;
    let (x, y) = chart.coordinate_matrices();
    let h0m = PolyMatrix::from_rational(h0.to_matrix().matrix())?;
    let hm = PolyMatrix::from_rational(h.to_matrix().matrix())?;
    let inner = h0m.sub(&y.bracket(&x)?)?;
    let names: Vec<&String> = chart.x_vars().iter().chain(chart.y_vars()).collect();
    Ok(hm.mul(&inner)?.trace().with_vars(&names))
}

/// The quadratic part `Σ c_i x_i y_i` is nondegenerate.
pub fn verify_lefschetz_nondegenerate(p: &LiePotential) -> bool {
    p.coefficients.iter().all(|c| !c.is_zero())
}

/// Exact comparison of characteristic polynomials.
pub fn same_orbit_invariants(a: &TracelessMatrix, b: &TracelessMatrix) -> bool {
    a.dim() == b.dim() && a.char_poly() == b.char_poly()
}

/// Distinct values in a list, preserving first occurrence.
pub fn distinct_values(values: &[Rational]) -> Vec<Rational> {
    let mut seen = BTreeSet::new();
    values
        .iter()
        .filter(|v| seen.insert((*v).clone()))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio, RationalMatrix};
    use crate::lie::bracket;
    use alloc::vec;
    use proptest::prelude::*;

    fn d(v: &[i64]) -> DiagonalElement {
        DiagonalElement::from_i64(v).unwrap()
    }

    fn poly(s: &[(i64, &[(&str, i64)])]) -> LaurentPolynomial {
        s.iter().fold(LaurentPolynomial::zero(), |acc, (c, m)| {
            &acc + &LaurentPolynomial::monomial(rat(*c), m)
        })
    }

    #[test]
    fn orbit_point_at_origin() {
        let h0 = DiagonalElement::minimal_orbit_base(2);
        let z = TracelessMatrix::zero(3);
        assert_eq!(orbit_point(&z, &z, &h0).unwrap(), h0.to_matrix());
    }

    #[test]
    fn orbit_point_unit_eigenvalue_formula() {
        // H0 normalised so ad(H0) = ±1 on n±: the closed form holds verbatim.
        let h0 = DiagonalElement::new(vec![ratio(1, 2), ratio(-1, 2)]).unwrap();
        let x = TracelessMatrix::from_off_diagonal(2, &[((0, 1), rat(3))]);
        let y = TracelessMatrix::from_off_diagonal(2, &[((1, 0), rat(-5))]);
        let got = orbit_point(&y, &x, &h0).unwrap();
        let yx = bracket(&y, &x).unwrap();
        let yyx = bracket(&y, &yx).unwrap();
        let expected = x
            .scale(&rat(-1))
            .add(&h0.to_matrix().sub(&yx).unwrap())
            .unwrap()
            .add(&y.sub(&yyx.scale(&ratio(1, 2))).unwrap())
            .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn orbit_point_rejects_wrong_support() {
        let h0 = DiagonalElement::minimal_orbit_base(2);
        let x = TracelessMatrix::unit(3, 1, 2);
        let z = TracelessMatrix::zero(3);
        assert_eq!(
            orbit_point(&z, &x, &h0).unwrap_err(),
            Error::WrongSubalgebra { which: "X" }
        );
        let y = TracelessMatrix::unit(3, 0, 1);
        assert_eq!(
            orbit_point(&y, &z, &h0).unwrap_err(),
            Error::WrongSubalgebra { which: "Y" }
        );
    }

    #[test]
    fn lie_potential_examples() {
        let p = lie_potential(&d(&[-1, 1]), &d(&[1, -1]), 1).unwrap();
        assert_eq!(
            p.polynomial(),
            &poly(&[(-2, &[]), (-2, &[("x1", 1), ("y1", 1)])])
        );

        let p = lie_potential(&d(&[-3, -1, 1, 3]), &d(&[3, -1, -1, -1]), 3).unwrap();
        let expected = poly(&[
            (-12, &[]),
            (-2, &[("x1", 1), ("y1", 1)]),
            (-4, &[("x2", 1), ("y2", 1)]),
            (-6, &[("x3", 1), ("y3", 1)]),
        ]);
        assert_eq!(p.polynomial(), &expected);
        assert!(verify_lefschetz_nondegenerate(&p));

        let p = lie_potential(&d(&[-2, 0, 2]), &d(&[-1, 2, -1]), 2).unwrap();
        assert_eq!(p.constant(), &rat(0));
        assert_eq!(p.coefficients(), &[rat(2), rat(-2)]);
    }

    #[test]
    fn lie_potential_errors() {
        assert_eq!(
            lie_potential(&d(&[2, -1, -1]), &d(&[2, -1, -1]), 2).unwrap_err(),
            Error::NotRegular
        );
        assert_eq!(
            lie_potential(&d(&[1, 0, -1]), &d(&[1, 1, -2]), 2).unwrap_err(),
            Error::NotMinimalOrbitBase
        );
        assert!(matches!(
            lie_potential(&d(&[1, 0, -1]), &d(&[1, -1]), 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn critical_values_sl3_killing() {
        let vals =
            critical_values(&d(&[1, 0, -1]), &d(&[2, -1, -1]), Normalization::Killing).unwrap();
        let v: Vec<_> = vals.iter().map(|(_, x)| x.clone()).collect();
        assert_eq!(v, vec![rat(18), rat(0), rat(-18)]);
        assert_eq!(vals[0].0, WeylPermutation::identity(3));
        assert_eq!(vals[1].0, WeylPermutation::transposition(3, 0, 1));
    }

    #[test]
    fn critical_values_sl2_trace() {
        let vals = critical_values(&d(&[-1, 1]), &d(&[1, -1]), Normalization::Trace).unwrap();
        let v: Vec<_> = vals.iter().map(|(_, x)| x.clone()).collect();
        assert_eq!(v, vec![rat(-2), rat(2)]);
    }

    #[test]
    fn critical_values_degenerate_orbit() {
        let vals = critical_values(
            &d(&[1, 0, -1]),
            &DiagonalElement::zero(3),
            Normalization::Trace,
        )
        .unwrap();
        assert_eq!(vals.len(), 1);
        assert_eq!(vals[0].1, rat(0));
        assert_eq!(
            critical_values(&d(&[1, 1, -2]), &d(&[2, -1, -1]), Normalization::Trace).unwrap_err(),
            Error::NotRegular
        );
    }

    #[test]
    fn block_potential_projective_case_matches_lie_potential() {
        for n in 1..=4 {
            let h = crate::toric::coincidence_h(n);
            let h0 = DiagonalElement::minimal_orbit_base(n);
            let lie = lie_potential(&h, &h0, n).unwrap();
            assert_eq!(&block_potential(&h, &h0).unwrap(), lie.polynomial());
        }
    }

    #[test]
    fn block_potential_grassmannian() {
        let h = d(&[3, 1, -1, -3]);
        let h0 = d(&[1, 1, -1, -1]);
        let p = block_potential(&h, &h0).unwrap();
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(p.used_vars().len(), 8);
        assert_eq!(p.constant_term(), rat(8));
        // λ_i - λ_j on pair (i, j): (0,2) -> 4, (0,3) -> 6, (1,2) -> 2, (1,3) -> 4
        assert_eq!(p.coefficient_of(&[("x1", 1), ("y1", 1)]), rat(4));
        assert_eq!(p.coefficient_of(&[("x2", 1), ("y2", 1)]), rat(6));
        assert_eq!(p.coefficient_of(&[("x3", 1), ("y3", 1)]), rat(2));
        assert_eq!(p.coefficient_of(&[("x4", 1), ("y4", 1)]), rat(4));
        assert_eq!(p.num_terms(), 5);
    }

    #[test]
    fn block_potential_rejects_three_eigenvalues() {
        assert_eq!(
            block_potential(&d(&[1, 0, -1]), &d(&[1, 0, -1])).unwrap_err(),
            Error::EigenvalueOutOfRange
        );
    }

    #[test]
    fn lefschetz_degenerate() {
        let p = LiePotential::from_parts(rat(1), vec![rat(-2), rat(0)]);
        assert!(!verify_lefschetz_nondegenerate(&p));
    }

    #[test]
    fn chart_expansion_has_no_pure_y_terms() {
        let h0 = DiagonalElement::minimal_orbit_base(2);
        let chart = OrbitChart::new(&h0).unwrap();
        let f = chart.height(&d(&[-2, 0, 2]), Normalization::Trace).unwrap();
        for (e, _) in f.terms() {
            let vars = f.vars();
            let only_y = e
                .iter()
                .zip(vars)
                .all(|(x, v)| *x == 0 || v.starts_with('y'));
            let nonconst = e.iter().any(|x| *x != 0);
            assert!(!(only_y && nonconst));
        }
    }

    fn regular_h(n: usize) -> impl Strategy<Value = DiagonalElement> {
        proptest::collection::btree_set(-20i64..=20, n + 1).prop_filter_map(
            "traceless shift",
            move |s| {
                let v: Vec<i64> = s.into_iter().collect();
                let total: i64 = v.iter().sum();
                // shift by the mean keeps entries distinct
                let dim = v.len() as i64;
                let entries = v
                    .iter()
                    .map(|&x| Rational::new((x * dim - total).into(), dim.into()))
                    .collect();
                DiagonalElement::new(entries).ok()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn chart_expansion_equals_lie_potential(
            (n, h, j) in (1usize..=3).prop_flat_map(|n| (Just(n), regular_h(n), 0..=n))
        ) {
            let base = weyl_act(
                &WeylPermutation::transposition(n + 1, 0, j),
                &DiagonalElement::minimal_orbit_base(n),
            ).unwrap();
            let chart = OrbitChart::new(&base).unwrap();
            let via_chart = chart.height(&h, Normalization::Trace).unwrap();
            let lie = lie_potential(&h, &base, n).unwrap();
            prop_assert_eq!(&via_chart, lie.polynomial());
            prop_assert!(via_chart.total_degree().unwrap() <= 2);
        }

        #[test]
        fn orbit_points_share_the_characteristic_polynomial(
            (n, xs, ys) in (1usize..=3).prop_flat_map(|n| (
                Just(n),
                proptest::collection::vec(-3i64..=3, n),
                proptest::collection::vec(-3i64..=3, n),
            ))
        ) {
            let h0 = DiagonalElement::minimal_orbit_base(n);
            let x = TracelessMatrix::from_off_diagonal(
                n + 1, &xs.iter().enumerate().map(|(k, &c)| ((0, k + 1), rat(c))).collect::<Vec<_>>());
            let y = TracelessMatrix::from_off_diagonal(
                n + 1, &ys.iter().enumerate().map(|(k, &c)| ((k + 1, 0), rat(c))).collect::<Vec<_>>());
            let p = orbit_point(&y, &x, &h0).unwrap();
            // independent route: det(tI - M) at n + 2 sample points
            for t in 0..(n as i64 + 2) {
                let shift = |m: &RationalMatrix| {
                    RationalMatrix::identity(n + 1).scale(&rat(t)).sub(m).unwrap().det().unwrap()
                };
                prop_assert_eq!(shift(p.matrix()), shift(h0.to_matrix().matrix()));
            }
            prop_assert!(same_orbit_invariants(&p, &h0.to_matrix()));
        }

        #[test]
        fn minimal_orbit_critical_values_are_distinct(
            (n, h) in (1usize..=4).prop_flat_map(|n| (Just(n), regular_h(n)))
        ) {
            let vals = critical_values(&h, &DiagonalElement::minimal_orbit_base(n), Normalization::Trace).unwrap();
            prop_assert_eq!(vals.len(), n + 1);
            let v: Vec<_> = vals.into_iter().map(|(_, x)| x).collect();
            prop_assert_eq!(distinct_values(&v).len(), n + 1);
        }
    }
}
