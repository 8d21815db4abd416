//! The Lie algebra `sl(n+1, Q)`.
//!
//! Matrices are indexed from 0. The fixed basis of `sl(n+1)` used by
//! [`ad_matrix`] is the off-diagonal units `E_ij` (`i != j`) in row-major
//! order followed by `E_ii - E_{i+1,i+1}` for `i = 0..n`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::algebra::{rat, Rational, RationalMatrix};
use crate::{Error, Result};

/// Square rational matrix with trace zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TracelessMatrix {
    m: RationalMatrix,
}

impl TracelessMatrix {
    pub fn new(m: RationalMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                expected: m.rows(),
                found: m.cols(),
            });
        }
        let tr = m.trace();
        if !tr.is_zero() {
            return Err(Error::NotTraceless {
                trace: alloc::format!("{}", tr),
            });
        }
        Ok(Self { m })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(RationalMatrix::from_i64_rows(rows)?)
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            m: RationalMatrix::zeros(dim, dim),
        }
    }

    /// The unit matrix `E_ij` for `i != j`.
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        assert!(
            i != j && i < dim && j < dim,
            "off-diagonal unit out of range"
        );
        let mut m = RationalMatrix::zeros(dim, dim);
        m.set(i, j, Rational::one());
        Self { m }
    }

    /// `Σ c_ij E_ij` over off-diagonal positions.
    pub fn from_off_diagonal(dim: usize, entries: &[((usize, usize), Rational)]) -> Self {
        let mut m = RationalMatrix::zeros(dim, dim);
        for ((i, j), c) in entries {
            assert!(i != j, "diagonal position in off-diagonal constructor");
            m.set(*i, *j, c.clone());
        }
        Self { m }
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.m.get(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            m: self.m.add(&other.m)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            m: self.m.sub(&other.m)?,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { m: self.m.scale(c) }
    }

    /// `X^(dim) = 0`, equivalently `ad(X)` nilpotent for traceless `X`.
    pub fn is_nilpotent(&self) -> bool {
        self.m
            .pow(self.dim() as u32)
            .map(|p| p.is_zero())
            .unwrap_or(false)
    }

    pub fn char_poly(&self) -> Vec<Rational> {
        self.m.char_poly().expect("square")
    }

    /// Coordinates in the fixed basis described at module level.
    pub fn coordinates(&self) -> Vec<Rational> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n - 1);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    out.push(self.get(i, j).clone());
                }
            }
        }
        // diag = Σ c_i (E_ii - E_{i+1,i+1})  =>  c_i = d_0 + ... + d_i
        let mut acc = Rational::zero();
        for i in 0..n.saturating_sub(1) {
            acc += self.get(i, i);
            out.push(acc.clone());
        }
        out
    }

    /// Basis of `sl(dim)` in the fixed order.
    pub fn basis(dim: usize) -> Vec<TracelessMatrix> {
        let mut out = Vec::with_capacity(dim * dim - 1);
        for i in 0..dim {
            for j in 0..dim {
                if i != j {
                    out.push(Self::unit(dim, i, j));
                }
            }
        }
        for i in 0..dim.saturating_sub(1) {
            let mut m = RationalMatrix::zeros(dim, dim);
            m.set(i, i, Rational::one());
            m.set(i + 1, i + 1, -Rational::one());
            out.push(Self { m });
        }
        out
    }
}

impl fmt::Display for TracelessMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.m.fmt(f)
    }
}

fn same_dim(a: &TracelessMatrix, b: &TracelessMatrix) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

/// `AB - BA`.
pub fn bracket(a: &TracelessMatrix, b: &TracelessMatrix) -> Result<TracelessMatrix> {
    same_dim(a, b)?;
    let m = a.m.mul(&b.m)?.sub(&b.m.mul(&a.m)?)?;
    Ok(TracelessMatrix { m })
}

/// Matrix of `B ↦ [A, B]` in the fixed basis; size `dim² - 1`.
pub fn ad_matrix(a: &TracelessMatrix) -> RationalMatrix {
    let basis = TracelessMatrix::basis(a.dim());
    let k = basis.len();
    let mut out = RationalMatrix::zeros(k, k);
    for (col, b) in basis.iter().enumerate() {
        let image = bracket(a, b).expect("same dimension");
        for (row, c) in image.coordinates().into_iter().enumerate() {
            out.set(row, col, c);
        }
    }
    out
}

/// `tr(AB)`.
pub fn trace_pairing(a: &TracelessMatrix, b: &TracelessMatrix) -> Result<Rational> {
    same_dim(a, b)?;
    Ok(a.m.mul(&b.m)?.trace())
}

/// Cartan-Killing form of `sl(n+1)`: `2(n+1) tr(AB)`.
pub fn cartan_killing(a: &TracelessMatrix, b: &TracelessMatrix) -> Result<Rational> {
    Ok(trace_pairing(a, b)? * rat(2 * a.dim() as i64))
}

/// Which invariant pairing to report values in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Normalization {
    /// `tr(AB)`.
    #[default]
    Trace,
    /// `2(n+1) tr(AB)`.
    Killing,
}

impl Normalization {
    /// Factor multiplying `tr(AB)` in `sl(dim)`.
    pub fn factor(self, dim: usize) -> Rational {
        match self {
            Normalization::Trace => Rational::one(),
            Normalization::Killing => rat(2 * dim as i64),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Normalization::Trace => "trace",
            Normalization::Killing => "killing",
        }
    }
}

/// `Σ_{k≥0} ad(X)^k(A) / k!`. `X` must be nilpotent.
pub fn exp_ad_apply(x: &TracelessMatrix, a: &TracelessMatrix) -> Result<TracelessMatrix> {
    same_dim(x, a)?;
    if !x.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let bound = x.dim() * x.dim();
    let mut sum = a.clone();
    let mut term = a.clone();
    for k in 1..=bound {
        term = bracket(x, &term)?.scale(&Rational::new(1.into(), (k as i64).into()));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = sum.add(&term)?;
    }
    Err(Error::NotNilpotent)
}

/// Diagonal element of `sl(n+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalElement {
    diag: Vec<Rational>,
}

impl DiagonalElement {
    pub fn new(diag: Vec<Rational>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::EmptyDimension);
        }
        let s: Rational = diag.iter().cloned().sum();
        if !s.is_zero() {
            return Err(Error::NotTraceless {
                trace: alloc::format!("{}", s),
            });
        }
        Ok(Self { diag })
    }

    pub fn from_i64(diag: &[i64]) -> Result<Self> {
        Self::new(diag.iter().map(|&x| rat(x)).collect())
    }

    /// `Diag(n, -1, ..., -1)` in `sl(n+1)`.
    pub fn minimal_orbit_base(n: usize) -> Self {
        let mut d = vec![rat(-1); n + 1];
        d[0] = rat(n as i64);
        Self { diag: d }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            diag: vec![Rational::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.diag
    }

    /// All diagonal entries pairwise distinct.
    pub fn is_regular(&self) -> bool {
        let mut d = self.diag.clone();
        d.sort();
        d.windows(2).all(|w| w[0] != w[1])
    }

    pub fn to_matrix(&self) -> TracelessMatrix {
        let n = self.dim();
        let mut m = RationalMatrix::zeros(n, n);
        for (i, x) in self.diag.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        TracelessMatrix { m }
    }

    /// `tr(self · other)` for diagonal elements.
    pub fn trace_with(&self, other: &Self) -> Result<Rational> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self.diag.iter().zip(&other.diag).map(|(a, b)| a * b).sum())
    }

    /// Distinct entries in increasing order.
    pub fn distinct_entries(&self) -> Vec<Rational> {
        let mut d = self.diag.clone();
        d.sort();
        d.dedup();
        d
    }
}

impl fmt::Display for DiagonalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Diag(")?;
        for (i, x) in self.diag.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        f.write_str(")")
    }
}

/// `sl(n+1) = n⁺ ⊕ z ⊕ n⁻` relative to `ad(H0)`, as index pairs of unit matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentDecomposition {
    pub h0: DiagonalElement,
    /// `(i, j)` with `h0[i] - h0[j] > 0`, row-major.
    pub positive_pairs: Vec<(usize, usize)>,
    pub negative_pairs: Vec<(usize, usize)>,
    /// Off-diagonal pairs in the centraliser.
    pub zero_pairs: Vec<(usize, usize)>,
}

impl NilpotentDecomposition {
    /// Whether `x` lies in `n⁺` (`positive == true`) or `n⁻`.
    pub fn contains(&self, x: &TracelessMatrix, positive: bool) -> bool {
        let allowed = if positive {
            &self.positive_pairs
        } else {
            &self.negative_pairs
        };
        let n = x.dim();
        n == self.h0.dim()
            && (0..n).all(|i| {
                (0..n).all(|j| x.get(i, j).is_zero() || (i != j && allowed.contains(&(i, j))))
            })
    }
}

/// Classifies `E_ij` by the sign of its `ad(H0)`-eigenvalue `h0[i] - h0[j]`.
pub fn nilpotent_decomposition(h0: &DiagonalElement) -> NilpotentDecomposition {
    let n = h0.dim();
    let d = h0.entries();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut zero = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            match d[i].cmp(&d[j]) {
                core::cmp::Ordering::Greater => pos.push((i, j)),
                core::cmp::Ordering::Less => neg.push((i, j)),
                core::cmp::Ordering::Equal => zero.push((i, j)),
            }
        }
    }
    NilpotentDecomposition {
        h0: h0.clone(),
        positive_pairs: pos,
        negative_pairs: neg,
        zero_pairs: zero,
    }
}

pub fn is_regular(h: &DiagonalElement) -> bool {
    h.is_regular()
}

/// Element of the Weyl group `S_{n+1}`, stored as 0-based images `i ↦ w(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylPermutation {
    images: Vec<usize>,
}

impl WeylPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            images: (0..dim).collect(),
        }
    }

    /// Product of cycles written 1-based, e.g. `&[&[1, 2, 3]]` for `(123)`.
    /// Cycles are applied right to left.
    pub fn from_cycles(dim: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut w = Self::identity(dim);
        for cyc in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..dim).collect();
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                if a == 0 || b == 0 || a > dim || b > dim {
                    return Err(Error::InvalidPermutation(dim));
                }
                images[a - 1] = b - 1;
            }
            let c = Self::new(images)?;
            w = c.compose(&w);
        }
        Ok(w)
    }

    /// The transposition `(i j)`, 0-based.
    pub fn transposition(dim: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..dim).collect();
        images.swap(i, j);
        Self { images }
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.dim()), |acc, _| self.compose(&acc))
    }

    /// Cycle notation, 1-based; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for s in 0..n {
            if seen[s] || self.images[s] == s {
                continue;
            }
            out.push('(');
            let mut i = s;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&alloc::format!("{}", i + 1));
                i = self.images[i];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for WeylPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// Moves the entry in position `i` to position `w(i)`.
pub fn weyl_act(w: &WeylPermutation, h: &DiagonalElement) -> Result<DiagonalElement> {
    if w.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: w.dim(),
        });
    }
    let mut out = vec![Rational::zero(); h.dim()];
    for (i, x) in h.entries().iter().enumerate() {
        out[w.images[i]] = x.clone();
    }
    Ok(DiagonalElement { diag: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> TracelessMatrix {
        TracelessMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn trace_is_enforced() {
        assert!(TracelessMatrix::from_i64_rows(&[[1, 0], [0, 0]]).is_err());
        assert!(DiagonalElement::from_i64(&[1, 1]).is_err());
        assert!(DiagonalElement::from_i64(&[]).is_err());
    }

    #[test]
    fn bracket_with_self_vanishes() {
        let a = m(&[&[1, 2, 0], &[3, 0, -1], &[4, 5, -1]]);
        assert!(bracket(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn bracket_sl2() {
        let x = m(&[&[0, 1], &[0, 0]]);
        let h0 = m(&[&[1, 0], &[0, -1]]);
        let b = bracket(&x, &h0).unwrap();
        assert_eq!(b, x.scale(&rat(-2)));
        // ad(H0)X = [H0, X] = 2X
        assert_eq!(bracket(&h0, &x).unwrap(), x.scale(&rat(2)));
    }

    #[test]
    fn bracket_minimal_orbit_sl3() {
        let x = TracelessMatrix::unit(3, 0, 1);
        let h0 = DiagonalElement::minimal_orbit_base(2).to_matrix();
        assert_eq!(bracket(&x, &h0).unwrap(), x.scale(&rat(-3)));
    }

    #[test]
    fn bracket_dimension_mismatch() {
        let err = bracket(&TracelessMatrix::zero(2), &TracelessMatrix::zero(3)).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn ad_of_zero_is_zero() {
        assert!(ad_matrix(&TracelessMatrix::zero(3)).is_zero());
        assert_eq!(ad_matrix(&TracelessMatrix::zero(3)).rows(), 8);
    }

    #[test]
    fn ad_eigenvalues_sl2() {
        // basis order E12, E21, H: ad(H) is diag(2, -2, 0)
        let a = ad_matrix(&DiagonalElement::from_i64(&[1, -1]).unwrap().to_matrix());
        let expected = RationalMatrix::from_i64_rows(&[[2, 0, 0], [0, -2, 0], [0, 0, 0]]).unwrap();
        assert_eq!(a, expected);
        // char poly λ(λ-2)(λ+2) = λ³ - 4λ
        assert_eq!(
            a.char_poly().unwrap(),
            vec![rat(0), rat(-4), rat(0), rat(1)]
        );
    }

    #[test]
    fn killing_constants_sl3() {
        let h = DiagonalElement::from_i64(&[1, 0, -1]).unwrap();
        let h0 = DiagonalElement::from_i64(&[2, -1, -1]).unwrap();
        let w = WeylPermutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let wh0 = weyl_act(&w, &h0).unwrap();
        let w2h0 = weyl_act(&w.pow(2), &h0).unwrap();
        assert_eq!(wh0, DiagonalElement::from_i64(&[-1, 2, -1]).unwrap());
        assert_eq!(w2h0, DiagonalElement::from_i64(&[-1, -1, 2]).unwrap());
        let hm = h.to_matrix();
        assert_eq!(cartan_killing(&hm, &h0.to_matrix()).unwrap(), rat(18));
        assert_eq!(cartan_killing(&hm, &wh0.to_matrix()).unwrap(), rat(0));
        assert_eq!(cartan_killing(&hm, &w2h0.to_matrix()).unwrap(), rat(-18));
    }

    #[test]
    fn trace_pairing_values() {
        let h = DiagonalElement::from_i64(&[1, 0, -1]).unwrap().to_matrix();
        let h0 = DiagonalElement::from_i64(&[2, -1, -1]).unwrap().to_matrix();
        assert_eq!(trace_pairing(&h, &h0).unwrap(), rat(3));
        assert_eq!(
            trace_pairing(&h, &TracelessMatrix::zero(3)).unwrap(),
            rat(0)
        );
        let h = DiagonalElement::from_i64(&[-1, 1]).unwrap().to_matrix();
        let h0 = DiagonalElement::from_i64(&[1, -1]).unwrap().to_matrix();
        assert_eq!(trace_pairing(&h, &h0).unwrap(), rat(-2));
    }

    #[test]
    fn decomposition_minimal_orbit() {
        for n in 1..=4 {
            let d = nilpotent_decomposition(&DiagonalElement::minimal_orbit_base(n));
            let expected: Vec<_> = (1..=n).map(|j| (0, j)).collect();
            assert_eq!(d.positive_pairs, expected);
            assert_eq!(d.negative_pairs.len(), n);
            assert_eq!(d.zero_pairs.len(), n * (n - 1));
        }
    }

    #[test]
    fn decomposition_degenerate_and_block() {
        let d = nilpotent_decomposition(&DiagonalElement::zero(3));
        assert!(d.positive_pairs.is_empty() && d.negative_pairs.is_empty());
        assert_eq!(d.zero_pairs.len(), 6);
        let d = nilpotent_decomposition(&DiagonalElement::from_i64(&[1, 1, -2]).unwrap());
        assert_eq!(d.positive_pairs, vec![(0, 2), (1, 2)]);
        assert_eq!(d.negative_pairs, vec![(2, 0), (2, 1)]);
    }

    #[test]
    fn regularity() {
        assert!(DiagonalElement::from_i64(&[1, 0, -1]).unwrap().is_regular());
        assert!(!DiagonalElement::from_i64(&[2, -1, -1])
            .unwrap()
            .is_regular());
        assert!(DiagonalElement::from_i64(&[-3, -1, 1, 3])
            .unwrap()
            .is_regular());
    }

    #[test]
    fn weyl_identity_and_mismatch() {
        let h0 = DiagonalElement::from_i64(&[2, -1, -1]).unwrap();
        assert_eq!(weyl_act(&WeylPermutation::identity(3), &h0).unwrap(), h0);
        assert!(weyl_act(&WeylPermutation::identity(2), &h0).is_err());
        assert!(WeylPermutation::new(vec![0, 0, 1]).is_err());
        assert_eq!(
            WeylPermutation::from_cycles(3, &[&[1, 2, 3]])
                .unwrap()
                .to_string(),
            "(1 2 3)"
        );
        assert_eq!(WeylPermutation::identity(3).to_string(), "()");
    }

    #[test]
    fn exp_ad_of_zero_is_identity() {
        let a = m(&[&[1, 2], &[3, -1]]);
        assert_eq!(exp_ad_apply(&TracelessMatrix::zero(2), &a).unwrap(), a);
    }

    #[test]
    fn exp_ad_unit_eigenvalue_chart() {
        // With ad(H0) = 1 on n⁺, e^{ad X} H0 = H0 - X.
        let h0 = DiagonalElement::new(vec![
            crate::algebra::ratio(1, 2),
            crate::algebra::ratio(-1, 2),
        ])
        .unwrap()
        .to_matrix();
        let x = TracelessMatrix::from_off_diagonal(2, &[((0, 1), rat(7))]);
        assert_eq!(exp_ad_apply(&x, &h0).unwrap(), h0.sub(&x).unwrap());
    }

    #[test]
    fn exp_ad_terminates_on_upper_triangular() {
        let x = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let a = TracelessMatrix::unit(3, 2, 0);
        let r = exp_ad_apply(&x, &a).unwrap();
        // brute force: e^X A e^{-X} with e^X = I + X + X²/2
        let id = RationalMatrix::identity(3);
        let x2 = x
            .matrix()
            .mul(x.matrix())
            .unwrap()
            .scale(&crate::algebra::ratio(1, 2));
        let ex = id.add(x.matrix()).unwrap().add(&x2).unwrap();
        let emx = id.sub(x.matrix()).unwrap().add(&x2).unwrap();
        let brute = ex.mul(a.matrix()).unwrap().mul(&emx).unwrap();
        assert_eq!(r.matrix(), &brute);
    }

    #[test]
    fn exp_ad_rejects_semisimple() {
        let x = DiagonalElement::from_i64(&[1, -1]).unwrap().to_matrix();
        let a = TracelessMatrix::unit(2, 0, 1);
        assert_eq!(exp_ad_apply(&x, &a).unwrap_err(), Error::NotNilpotent);
    }

    fn traceless(dim: usize) -> impl Strategy<Value = TracelessMatrix> {
        proptest::collection::vec(-4i64..=4, dim * dim).prop_map(move |mut v| {
            let tr: i64 = (0..dim - 1).map(|i| v[i * dim + i]).sum();
            v[dim * dim - 1] = -tr;
            let rows: Vec<Vec<i64>> = v.chunks(dim).map(|c| c.to_vec()).collect();
            TracelessMatrix::from_i64_rows(&rows).unwrap()
        })
    }

    fn strictly_upper(dim: usize) -> impl Strategy<Value = TracelessMatrix> {
        proptest::collection::vec(-3i64..=3, dim * dim).prop_map(move |v| {
            let mut rows = vec![vec![0i64; dim]; dim];
            for i in 0..dim {
                for j in i + 1..dim {
                    rows[i][j] = v[i * dim + j];
                }
            }
            TracelessMatrix::from_i64_rows(&rows).unwrap()
        })
    }

    proptest! {
        #[test]
        fn jacobi_and_antisymmetry(
            (a, b, c) in (2usize..=4).prop_flat_map(|d| (traceless(d), traceless(d), traceless(d)))
        ) {
            let ab = bracket(&a, &b).unwrap();
            let ba = bracket(&b, &a).unwrap();
            prop_assert!(ab.add(&ba).unwrap().is_zero());
            let j = bracket(&a, &bracket(&b, &c).unwrap()).unwrap()
                .add(&bracket(&b, &bracket(&c, &a).unwrap()).unwrap()).unwrap()
                .add(&bracket(&c, &bracket(&a, &b).unwrap()).unwrap()).unwrap();
            prop_assert!(j.is_zero());
        }

        #[test]
        fn killing_form_from_ad(
            (a, b) in (2usize..=4).prop_flat_map(|d| (traceless(d), traceless(d)))
        ) {
            let lhs = ad_matrix(&a).mul(&ad_matrix(&b)).unwrap().trace();
            prop_assert_eq!(lhs, cartan_killing(&a, &b).unwrap());
        }

        #[test]
        fn diagonal_is_orthogonal_to_off_diagonal(
            (h, x) in (2usize..=4).prop_flat_map(|d| (traceless(d), traceless(d)))
        ) {
            let n = h.dim();
            let hd = TracelessMatrix::new({
                let mut m = RationalMatrix::zeros(n, n);
                for i in 0..n { m.set(i, i, h.get(i, i).clone()); }
                m
            }).unwrap();
            let mut xo = x.matrix().clone();
            for i in 0..n { xo.set(i, i, Rational::zero()); }
            let xo = TracelessMatrix::new(xo).unwrap();
            prop_assert_eq!(cartan_killing(&hd, &xo).unwrap(), Rational::zero());
        }

        #[test]
        fn exp_ad_is_an_automorphism(
            (x, a, b) in (2usize..=4).prop_flat_map(|d| (strictly_upper(d), traceless(d), traceless(d)))
        ) {
            let lhs = exp_ad_apply(&x, &bracket(&a, &b).unwrap()).unwrap();
            let rhs = bracket(&exp_ad_apply(&x, &a).unwrap(), &exp_ad_apply(&x, &b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn decomposition_pairs_are_transposes(v in proptest::collection::vec(-3i64..=3, 2..=5)) {
            let mut v = v;
            let s: i64 = v.iter().sum();
            v.push(-s);
            let d = nilpotent_decomposition(&DiagonalElement::from_i64(&v).unwrap());
            let mut t: Vec<_> = d.positive_pairs.iter().map(|&(i, j)| (j, i)).collect();
            t.sort();
            let mut neg = d.negative_pairs.clone();
            neg.sort();
            prop_assert_eq!(t, neg);
            prop_assert_eq!(
                d.positive_pairs.len() + d.negative_pairs.len() + d.zero_pairs.len(),
                v.len() * (v.len() - 1)
            );
        }
    }
}
