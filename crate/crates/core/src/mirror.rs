//! The mirror surface `S = {u·y = v·(αx + γ + βx⁻¹)}` with potential `y`, and
//! the location of its critical points.
//!
//! In the `u = 1` chart the potential is `w(x, v) = v·(αx + γ + βx⁻¹)`. Critical
//! points satisfy `αx² + γx + β = 0` and `v·(α − βx⁻²) = 0`; unless `γ² = 4αβ`
//! the second factor is nonzero on the roots, so `v = 0` and every critical
//! value is exactly 0. Roots are kept as minimal polynomials over the rationals
//! with `Complex64` shadows for display.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{rat, LaurentPolynomial, Pretty, Rational};
use crate::deformation::rational_sqrt;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorSurface {
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
}

impl Default for MirrorSurface {
    fn default() -> Self {
        Self {
            alpha: Rational::one(),
            beta: Rational::one(),
            gamma: Rational::one(),
        }
    }
}

impl MirrorSurface {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Result<Self> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::InvalidCoefficients("alpha and beta must be nonzero"));
        }
        Ok(Self { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    /// `αx + γ + βx⁻¹`.
    pub fn theta_factor(&self) -> LaurentPolynomial {
        &(&LaurentPolynomial::monomial(self.alpha.clone(), &[("x", 1)])
            + &LaurentPolynomial::constant(self.gamma.clone()))
            + &LaurentPolynomial::monomial(self.beta.clone(), &[("x", -1)])
    }

    /// `x·(αx + γ + βx⁻¹) = αx² + γx + β`.
    pub fn numerator(&self) -> LaurentPolynomial {
        &self.theta_factor() * &LaurentPolynomial::var("x")
    }

    /// `γ² − 4αβ`.
    pub fn discriminant(&self) -> Rational {
        &self.gamma * &self.gamma - rat(4) * &self.alpha * &self.beta
    }
}

/// `v·(αx + γ + βx⁻¹)` over `(v, x)`.
pub fn mirror_potential(s: &MirrorSurface) -> LaurentPolynomial {
    &LaurentPolynomial::var("v") * &s.theta_factor()
}

/// A root of a monic irreducible polynomial over the rationals, with a numeric shadow.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicNumber {
    /// Monic, ascending coefficients.
    pub min_poly: Vec<Rational>,
    pub approx: Complex64,
}

impl AlgebraicNumber {
    pub fn rational(r: &Rational) -> Self {
        Self {
            min_poly: vec![-r, Rational::one()],
            approx: Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
        }
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.degree() == 1).then(|| -&self.min_poly[0])
    }

    /// The minimal polynomial in the variable `var`.
    pub fn min_poly_in(&self, var: &str) -> LaurentPolynomial {
        self.min_poly.iter().enumerate().fold(
            LaurentPolynomial::zero().with_vars(&[var]),
            |acc, (k, c)| &acc + &LaurentPolynomial::monomial(c.clone(), &[(var, k as i64)]),
        )
    }

    /// Whether `p(var)` vanishes at this number, by exact division.
    pub fn annihilates(&self, p: &LaurentPolynomial, var: &str) -> Result<bool> {
        Ok(p.divide_rem(&self.min_poly_in(var))?.1.is_zero())
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {}", Pretty(&self.min_poly_in("x")))
    }
}

/// A critical value, exact when available.
#[derive(Clone, Debug, PartialEq)]
pub enum CriticalValue {
    Exact(Rational),
    Approx(Complex64),
}

impl CriticalValue {
    pub fn approx(&self) -> Complex64 {
        match self {
            CriticalValue::Exact(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            CriticalValue::Approx(z) => *z,
        }
    }
}

/// Critical point `(x, v)` of the mirror potential.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalPoint {
    pub x: AlgebraicNumber,
    pub v: Rational,
    pub value: CriticalValue,
}

/// All critical points in the `u = 1` chart, ordered by the imaginary part of
/// `x` (descending), then its real part.
pub fn mirror_critical_points(s: &MirrorSurface) -> Result<Vec<CriticalPoint>> {
    let disc = s.discriminant();
    if disc.is_zero() {
        // double root: both partials vanish along the whole line x = −γ/(2α)
        return Err(Error::DegenerateCoefficients);
    }
    let roots: Vec<AlgebraicNumber> = match rational_sqrt(&disc) {
        Some(r) => {
            let two_a = rat(2) * &s.alpha;
            let mut xs = [(-&s.gamma + &r) / &two_a, (-&s.gamma - &r) / &two_a];
            xs.sort_by(|a, b| b.cmp(a));
            xs.iter().map(AlgebraicNumber::rational).collect()
        }
        None => {
            let min_poly = vec![&s.beta / &s.alpha, &s.gamma / &s.alpha, Rational::one()];
            let to_f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
            let (a, g) = (to_f(&s.alpha), to_f(&s.gamma));
            let sq = Complex64::new(to_f(&disc), 0.0).sqrt();
            let mut zs = [(-g + sq) / (2.0 * a), (-g - sq) / (2.0 * a)];
            zs.sort_by(|p, q| q.im.total_cmp(&p.im).then(q.re.total_cmp(&p.re)));
            zs.iter()
                .map(|&approx| AlgebraicNumber {
                    min_poly: min_poly.clone(),
                    approx,
                })
                .collect()
        }
    };
    Ok(roots
        .into_iter()
        .map(|x| CriticalPoint {
            x,
            v: Rational::zero(),
            value: CriticalValue::Exact(Rational::zero()),
        })
        .collect())
}

/// Exact certificate: the minimal polynomial divides `αx² + γx + β`, the
/// `v`-coordinate is 0, and `α·m − β` is nonzero modulo the minimal polynomial
/// (so `α − βx⁻²` does not vanish and `v = 0` is forced).
pub fn certify(s: &MirrorSurface, p: &CriticalPoint) -> Result<bool> {
    let x = LaurentPolynomial::var("x");
    let x2 = &x * &x;
    let dx_numer = &x2.scale(&s.alpha) - &LaurentPolynomial::constant(s.beta.clone());
    let forced = !p.x.annihilates(&dx_numer, "x")?;
    Ok(p.x.annihilates(&s.numerator(), "x")? && p.v.is_zero() && forced)
}

/// Both partial derivatives of `w` evaluated at a critical point through its
/// numeric shadow. Reporting aid only.
pub fn gradient_residual(s: &MirrorSurface, p: &CriticalPoint) -> f64 {
    let to_f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
    let (a, b, g) = (to_f(&s.alpha), to_f(&s.beta), to_f(&s.gamma));
    let x = p.x.approx;
    let v = to_f(&p.v);
    let dv = a * x + g + b / x;
    let dx = v * (a - b / (x * x));
    dv.norm().max(dx.norm())
}

/// Critical points in the chart `v = 1`, where `w = (αx + γ + βx⁻¹)/u`.
///
/// `∂w/∂u = 0` and `∂w/∂x = 0` with `u ≠ 0` need `αx² + γx + β = 0` and
/// `αx² − β = 0` together; their difference `γx + 2β` forces `x = −2β/γ`,
/// which is a root only when `γ² = 4αβ`. Returns the number of common roots.
pub fn infinity_chart_critical_count(s: &MirrorSurface) -> usize {
    if s.gamma.is_zero() {
        // αx² + β = 0 and αx² − β = 0 give β = 0
        return 0;
    }
    let x = -(rat(2) * &s.beta) / &s.gamma;
    let at = &s.alpha * &x * &x;
    usize::from((&at - &s.beta).is_zero() && (&at + &s.gamma * &x + &s.beta).is_zero())
}

/// True iff all values coincide: exactly if every value is exact, else within `tol`.
pub fn same_fibre(values: &[CriticalValue], tol: &Rational) -> bool {
    let Some(first) = values.first() else {
        return true;
    };
    let exact: Option<Vec<&Rational>> = values
        .iter()
        .map(|v| match v {
            CriticalValue::Exact(r) => Some(r),
            CriticalValue::Approx(_) => None,
        })
        .collect();
    if let Some(xs) = exact {
        return xs.iter().all(|x| *x == xs[0]);
    }
    let tol = tol.abs().to_f64().unwrap_or(0.0);
    let z0 = first.approx();
    values.iter().all(|v| (v.approx() - z0).norm() <= tol)
}

/// `(number of distinct critical values, largest number of critical points
/// sharing one value)`, exact values only.
pub fn fibre_profile(values: &[Rational]) -> (usize, usize) {
    let mut sorted: Vec<&Rational> = values.iter().collect();
    sorted.sort();
    let mut distinct = 0;
    let mut best = 0;
    let mut run = 0;
    for (i, v) in sorted.iter().enumerate() {
        if i == 0 || sorted[i - 1] != *v {
            distinct += 1;
            run = 0;
        }
        run += 1;
        best = best.max(run);
    }
    (distinct, best)
}
