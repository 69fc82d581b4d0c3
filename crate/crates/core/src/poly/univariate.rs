use std::fmt;

use num::BigUint;

use crate::error::{Error, Result};
use crate::poly::display::format_terms;
use crate::poly::order::ExponentVector;
use crate::poly::polynomial::Polynomial;
use crate::ring::{CoeffText, EuclideanRing, Field, Ring};

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UniPoly<E> {
    coeffs: Vec<E>,
}

impl<E> UniPoly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// The ring `F[x]` of univariate polynomials over a field.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    var: String,
}

impl<F: Field> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
    }
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, var: impl Into<String>) -> Self {
        PolyRing { field, var: var.into() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn var_name(&self) -> &str {
        &self.var
    }

    pub fn with_var(&self, var: impl Into<String>) -> Self {
        PolyRing { field: self.field.clone(), var: var.into() }
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> UniPoly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(&self, c: F::Elem) -> UniPoly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x(&self) -> UniPoly<F::Elem> {
        self.from_coeffs(vec![self.field.zero(), self.field.one()])
    }

    /// `x - a`.
    pub fn linear(&self, a: &F::Elem) -> UniPoly<F::Elem> {
        self.from_coeffs(vec![self.field.neg(a), self.field.one()])
    }

    pub fn coeff(&self, f: &UniPoly<F::Elem>, i: usize) -> F::Elem {
        f.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self, f: &UniPoly<F::Elem>) -> bool {
        f.leading_coeff().is_some_and(|c| self.field.is_one(c))
    }

    pub fn monic(&self, f: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        match f.leading_coeff() {
            None => f.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(f, &inv)
            }
        }
    }

    pub fn scale(&self, f: &UniPoly<F::Elem>, c: &F::Elem) -> UniPoly<F::Elem> {
        self.from_coeffs(f.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn eval(&self, f: &UniPoly<F::Elem>, a: &F::Elem) -> F::Elem {
        f.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| self.field.add(&self.field.mul(&acc, a), c))
    }

    pub fn derivative(&self, f: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        self.from_coeffs(
            f.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.field.mul(c, &self.field.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn rem(&self, a: &UniPoly<F::Elem>, b: &UniPoly<F::Elem>) -> UniPoly<F::Elem> {
        self.div_rem(a, b).1
    }

    /// `base^exp mod modulus`.
    pub fn pow_mod(
        &self,
        base: &UniPoly<F::Elem>,
        exp: &BigUint,
        modulus: &UniPoly<F::Elem>,
    ) -> UniPoly<F::Elem> {
        let mut acc = self.rem(&self.one(), modulus);
        let base = self.rem(base, modulus);
        for i in (0..exp.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), modulus);
            if exp.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), modulus);
            }
        }
        acc
    }

    /// Checked extended gcd; both arguments zero is an error.
    pub fn extended_gcd(
        &self,
        f: &UniPoly<F::Elem>,
        g: &UniPoly<F::Elem>,
    ) -> Result<(UniPoly<F::Elem>, UniPoly<F::Elem>, UniPoly<F::Elem>)> {
        if f.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        Ok(self.xgcd(f, g))
    }

    /// Embeds as a multivariate polynomial in variable `var` of `nvars`.
    pub fn to_polynomial(&self, f: &UniPoly<F::Elem>, nvars: usize, var: usize) -> Polynomial<F> {
        Polynomial::from_terms(
            &self.field,
            nvars,
            f.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (ExponentVector::unit(nvars, var, i as u32), c.clone())),
        )
    }

    /// Inverse of [`Self::to_polynomial`]; fails if another variable occurs.
    pub fn from_polynomial(&self, p: &Polynomial<F>, var: usize) -> Result<UniPoly<F::Elem>> {
        if !p.involves_only(var) {
            return Err(Error::Usage("polynomial is not univariate".into()));
        }
        let deg = p.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![self.field.zero(); if p.is_zero() { 0 } else { deg + 1 }];
        for (t, c) in p.terms() {
            coeffs[t.get(var) as usize] = c.clone();
        }
        Ok(self.from_coeffs(coeffs))
    }

    pub fn display(&self, f: &UniPoly<F::Elem>) -> String {
        let terms: Vec<(ExponentVector, F::Elem)> = f
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| (ExponentVector::new([i as u32]), c.clone()))
            .collect();
        format_terms(&self.field, std::slice::from_ref(&self.var), terms.iter().map(|(t, c)| (t, c)))
    }
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = UniPoly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        UniPoly { coeffs: Vec::new() }
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.field.one())
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.constant(self.field.from_int(n))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        self.from_coeffs((0..n).map(|i| self.field.add(&self.coeff(a, i), &self.coeff(b, i))).collect())
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        self.from_coeffs((0..n).map(|i| self.field.sub(&self.coeff(a, i), &self.coeff(b, i))).collect())
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        UniPoly { coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut out = vec![self.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.field.add(&out[i + j], &self.field.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }

    fn coeff_text(&self, a: &Self::Elem) -> CoeffText {
        let body = self.display(a);
        let nonzero = a.coeffs.iter().filter(|c| !self.field.is_zero(c)).count();
        if nonzero == 1 {
            if let Some(stripped) = body.strip_prefix('-') {
                return CoeffText { negative: true, body: stripped.to_string(), compound: false };
            }
        }
        CoeffText { negative: false, body, compound: nonzero > 1 }
    }
}

impl<F: Field> EuclideanRing for PolyRing<F> {
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        let db = b.degree().expect("division by the zero polynomial");
        let inv_lc = self.field.inv(b.leading_coeff().unwrap()).expect("nonzero");
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return (self.zero(), a.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - db];
        for i in (db..r.len()).rev() {
            let c = self.field.mul(&r[i], &inv_lc);
            if self.field.is_zero(&c) {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                let k = i - db + j;
                r[k] = self.field.sub(&r[k], &self.field.mul(&c, bc));
            }
            q[i - db] = c;
        }
        r.truncate(db);
        (self.from_coeffs(q), self.from_coeffs(r))
    }

    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem {
        match a.leading_coeff() {
            None => self.one(),
            Some(lc) => self.constant(self.field.inv(lc).expect("nonzero")),
        }
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        a.coeffs.len() == 1
    }

    fn size(&self, a: &Self::Elem) -> usize {
        a.degree().unwrap_or(0)
    }
}

impl<F: Field> fmt::Display for PolyRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.field, self.var)
    }
}
