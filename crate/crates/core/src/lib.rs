//! Exact computation in the free ring `Q<x1,...,xn>` and in its quotient by the
//! two-sided ideal that forces the noncommutative elementary polynomials to be
//! central.
//!
//! Every congruence the crate asserts is certified by exact rational linear
//! algebra on a homogeneous slice of the free ring, never by floating point.

pub mod atoms;
pub mod commutative;
pub mod cyclic;
mod error;
pub mod freering;
pub mod ideal;
pub mod linalg;
pub mod matmodel;
pub mod n3lab;
pub mod report;
pub mod rewrite;
pub mod sigma;

pub use error::{Error, Result};
pub use freering::{Coefficient, Monomial, Polynomial};
