//! Sparse multivariate polynomials, term orders, and dense univariate
//! polynomials over a field.

pub(crate) mod display;
mod order;
mod polynomial;
mod univariate;

pub use order::{ExponentVector, OrderKind, TermOrder};
pub use polynomial::{cmp_leading, Monomial, Polynomial};
pub use univariate::{PolyRing, UniPoly};
