//! The constructive weak Nullstellensatz: ideal intersection via a slack
//! variable, the coprime splitting identity, radical membership, and the
//! recursive point finder over towers of finite fields.

mod intersect;
mod lift;
mod radical;
mod solve;

pub use intersect::{coprime_split_identity, ideal_intersect, SplitProof};
pub use lift::{lift_polynomial, lift_unipoly};
pub use radical::{radical_member, radical_witness};
pub use solve::{
    find_branch_root, good_specialization_point, solve, Branch, BranchStep, BranchTrace, Solution,
    SolveConfig, SolveOutcome,
};
