//! Exact coefficient domains: rationals, prime fields, and growable
//! extension towers inside the algebraic closure of `F_p`.

mod factor;
mod primes;
mod rational;
mod tower;

pub use factor::{
    canonical_sort, distinct_degree, equal_degree, factor_univariate, is_irreducible, roots_in_field,
    squarefree_decomposition, Factorization,
};
pub use primes::is_prime;
pub use rational::Rationals;
pub use tower::{FFElement, FieldTower, FiniteField};
