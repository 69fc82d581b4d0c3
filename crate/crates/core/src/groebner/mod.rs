//! Gröbner bases over a field: multivariate division, Buchberger's
//! algorithm, membership, triviality, and elimination onto `K[x1]`.

mod basis;
mod buchberger;
mod ideal;
mod reduce;

pub use basis::StrongBasis;
pub use buchberger::{buchberger, buchberger_with_certificate, is_groebner_basis};
pub use ideal::{combine, eliminate_to_x1, is_proper, is_trivial, member, Ideal, Triviality};
pub use reduce::{normal_form, reduce, s_polynomial, Reduction};
