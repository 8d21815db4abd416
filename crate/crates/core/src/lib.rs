//! Exact arithmetic for Landau-Ginzburg models built from two directions:
//! height functions on adjoint orbits of `sl(n+1)` and toric `Div`/`Mon` data.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact over the
//! rationals except the complex approximations attached to algebraic critical
//! points in [`mirror`], which are reporting shadows only.
//!
//! Module map:
//!
//! * [`algebra`]: rationals, sparse Laurent polynomials, integer and rational
//!   matrices, Smith normal form.
//! * [`lie`]: `sl(n+1)` brackets, adjoint matrices, Killing pairings, Weyl action.
//! * [`orbit`]: exp-adjoint charts on orbits and the quadratic Lie potential.
//! * [`toric`]: toric LG models, duality, Chow groups, moment polygons.
//! * [`deformation`]: potential and surface deformation families.
//! * [`mirror`]: the mirror surface of the `sl(2)` orbit model and its critical points.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod deformation;
mod error;
pub mod lie;
pub mod mirror;
pub mod orbit;
pub mod toric;

pub use algebra::{
    rat, IntegerMatrix, LaurentPolynomial, PolyMatrix, Rational, RationalMatrix, SmithDecomposition,
};
pub use error::{Error, Result};
