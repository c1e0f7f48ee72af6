//! Exact sparse polynomials and truncated power series.
//!
//! [`SparsePoly`] is the general-purpose type: a map from exponent vectors to
//! exact coefficients over a [`PolyRing`] that may carry per-variable
//! degree caps. Rational functions only ever appear with a unit constant
//! term in the denominator, so there is no division: `1/(1-f)` is expanded
//! by [`SparsePoly::geom_inverse`] under the ring's caps.
//!
//! [`DenseSeries`] is a box-shaped dense series for the largest expansions,
//! with overflow-checked arithmetic so machine integers can be tried first.

mod dense;
mod det;
mod sparse;
mod symmetric;

pub use dense::DenseSeries;
pub use det::{det, permutations_with_sign};
pub use sparse::{ExponentVector, PolyRing, SparsePoly};
pub use symmetric::{complete_in_vars, elementary_in_vars, h_complete};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("series inverse needs a zero constant term in f")]
    NonzeroConstantTerm,
    #[error("series expansion needs a truncation profile")]
    MissingTruncation,
    #[error("exponent vector {0:?} lies outside the truncation profile")]
    OutOfProfile(Vec<u32>),
    #[error("exponent vector has length {got}, ring has {expected} variables")]
    ExponentLength { expected: usize, got: usize },
    #[error("matrix is not square")]
    NonSquare,
    #[error("determinant of dimension {0} exceeds the supported maximum of 8")]
    DimensionTooLarge(usize),
    #[error("coefficient overflow in fixed-width arithmetic")]
    Overflow,
    #[error("dense series with {0} coefficients is too large")]
    SeriesTooLarge(u128),
}
