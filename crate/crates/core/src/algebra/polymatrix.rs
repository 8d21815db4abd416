use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{LaurentPolynomial, Rational, RationalMatrix};
use crate::{Error, Result};

/// Square matrix with Laurent polynomial entries, for symbolic chart computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPolynomial>,
}

impl PolyMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![LaurentPolynomial::zero(); dim * dim],
        }
    }

    pub fn from_entries(dim: usize, entries: Vec<LaurentPolynomial>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::BadShape {
                rows: dim,
                cols: dim,
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rational(m: &RationalMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                expected: m.rows(),
                found: m.cols(),
            });
        }
        Ok(Self {
            dim: m.rows(),
            entries: m
                .entries()
                .iter()
                .map(|c| LaurentPolynomial::constant(c.clone()))
                .collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPolynomial {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPolynomial) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[LaurentPolynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPolynomial::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[i * n + j] = &out.entries[i * n + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// `AB - BA`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn trace(&self) -> LaurentPolynomial {
        (0..self.dim).fold(LaurentPolynomial::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// `Σ_k ad(X)^k(A) / k!`, stopping at the first vanishing term.
    /// Fails with [`Error::NotNilpotent`] if no term vanishes within `bound` steps.
    pub fn exp_ad(x: &Self, a: &Self, bound: usize) -> Result<Self> {
        let mut sum = a.clone();
        let mut term = a.clone();
        for k in 1..=bound {
            term = x
                .bracket(&term)?
                .scale(&Rational::new(1.into(), (k as i64).into()));
            if term.is_zero() {
                return Ok(sum);
            }
            sum = sum.add(&term)?;
        }
        Err(Error::NotNilpotent)
    }

    /// Substitutes into every entry.
    pub fn map(&self, f: impl Fn(&LaurentPolynomial) -> Result<LaurentPolynomial>) -> Result<Self> {
        Ok(Self {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            f.write_str("[")?;
            for j in 0..self.dim {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", super::Pretty(self.get(i, j)))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
