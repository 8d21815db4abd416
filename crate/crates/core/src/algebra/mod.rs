//! Exact arithmetic foundation.

mod matrix;
mod poly;
mod polymatrix;
mod snf;

pub use matrix::{IntegerMatrix, RationalMatrix};
pub use poly::{Exponents, LaurentPolynomial, Pretty};
pub use polymatrix::PolyMatrix;
pub use snf::{cokernel_invariants, smith_normal_form, CokernelInvariants, SmithDecomposition};

use num_bigint::BigInt;

/// Coefficient field for every computation in the crate.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
