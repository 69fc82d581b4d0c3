//! Coefficient-domain abstractions.
//!
//! Domains are explicit ring objects: elements are plain values and every
//! operation goes through the ring, which carries whatever context the
//! elements need (the modulus, the extension tower, ...).

use std::fmt::Debug;

use crate::error::Result;

/// Textual rendering of a coefficient, used by the polynomial printer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffText {
    /// The element is a negative scalar; `body` holds its absolute value.
    pub negative: bool,
    pub body: String,
    /// `body` is a sum and needs parentheses when used as a factor.
    pub compound: bool,
}

pub trait Ring: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn coeff_text(&self, a: &Self::Elem) -> CoeffText;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A commutative ring with Euclidean division and a canonical choice of
/// associate (monic polynomials, the unit 1 in a field).
pub trait EuclideanRing: Ring {
    /// Quotient and remainder of `a` by a nonzero `b`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// A unit `u` such that `u * a` is the canonical associate of `a`.
    /// For `a = 0` returns one.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;

    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// Euclidean size: degree for polynomials, zero for nonzero field elements.
    fn size(&self, a: &Self::Elem) -> usize;

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.normalizing_unit(a), a)
    }

    fn divides(&self, d: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(d) {
            return self.is_zero(a);
        }
        self.is_zero(&self.div_rem(a, d).1)
    }

    /// Extended gcd: `(g, u, v)` with `u*a + v*b = g`, `g` normalized.
    fn xgcd(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.div_rem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let u = self.normalizing_unit(&r0);
        (self.mul(&u, &r0), self.mul(&u, &s0), self.mul(&u, &t0))
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.xgcd(a, b).0
    }

    /// Normalized least common multiple; zero if either argument is zero.
    fn lcm(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) || self.is_zero(b) {
            return self.zero();
        }
        let g = self.gcd(a, b);
        let (q, _) = self.div_rem(a, &g);
        self.normalize(&self.mul(&q, b))
    }

    /// Exact quotient `a / b`; caller guarantees `b | a`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (q, r) = self.div_rem(a, b);
        debug_assert!(self.is_zero(&r), "exact_div with nonzero remainder");
        q
    }
}

pub trait Field: EuclideanRing {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Zero for the rationals.
    fn characteristic(&self) -> u64;

    /// Build the element `num / den` from integer literals.
    fn from_ratio(&self, num: &num::BigInt, den: &num::BigInt) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// Implements the Euclidean structure every field has.
macro_rules! field_euclidean {
    ($ty:ty) => {
        impl $crate::ring::EuclideanRing for $ty {
            fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
                let q = $crate::ring::Field::div(self, a, b).expect("division by zero");
                (q, $crate::ring::Ring::zero(self))
            }

            fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem {
                if $crate::ring::Ring::is_zero(self, a) {
                    $crate::ring::Ring::one(self)
                } else {
                    $crate::ring::Field::inv(self, a).expect("nonzero")
                }
            }

            fn is_unit(&self, a: &Self::Elem) -> bool {
                !$crate::ring::Ring::is_zero(self, a)
            }

            fn size(&self, _a: &Self::Elem) -> usize {
                0
            }
        }
    };
}
pub(crate) use field_euclidean;
