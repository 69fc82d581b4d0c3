//! Strong Gröbner bases over the Euclidean domain `K[x1]`, viewing
//! `K[x1, ..., xn]` as `K[x1][x2, ..., xn]`, and their specialization
//! along `x1 -> a`.

mod specialize;
mod strong;
mod view;

pub use specialize::{specialization_locus, specialize_basis};
pub use strong::{g_polynomial, is_strong_basis, s_polynomial, strong_buchberger, strong_reduce};
pub use view::{unshift, view_shift, EDPolynomial};
