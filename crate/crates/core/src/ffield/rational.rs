use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{field_euclidean, CoeffText, Field, Ring};

/// The field of rational numbers; elements are always in lowest terms with a
/// positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn coeff_text(&self, a: &BigRational) -> CoeffText {
        let abs = a.abs();
        let body = if abs.denom().is_one() {
            abs.numer().to_string()
        } else {
            format!("{}/{}", abs.numer(), abs.denom())
        };
        CoeffText { negative: a.is_negative(), body, compound: false }
    }
}

field_euclidean!(Rationals);

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
}
