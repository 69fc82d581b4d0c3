//! An exact computer-algebra kernel built around a constructive weak
//! Nullstellensatz: Gröbner bases over fields and over `K[x1]`,
//! specialization of strong bases, ideal intersection, radical membership,
//! and a solver that finds a common zero of any proper ideal over the
//! algebraic closure of a finite field.

pub mod error;
pub mod ffield;
pub mod groebner;
pub mod groebner_ed;
pub mod nss;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
