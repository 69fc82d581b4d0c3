use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::order::{ExponentVector, TermOrder};
use crate::ring::Ring;

/// A nonzero coefficient times a term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial<R: Ring> {
    pub coeff: R::Elem,
    pub term: ExponentVector,
}

/// Sparse multivariate polynomial over the ring `R`.
///
/// Stored as a map from exponent vector to nonzero coefficient; the zero
/// polynomial is the empty map.
#[derive(Clone)]
pub struct Polynomial<R: Ring> {
    ring: R,
    nvars: usize,
    terms: BTreeMap<ExponentVector, R::Elem>,
}

impl<R: Ring> PartialEq for Polynomial<R> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms && self.ring == other.ring
    }
}

impl<R: Ring> Eq for Polynomial<R> {}

impl<R: Ring> Polynomial<R> {
    pub fn zero(ring: &R, nvars: usize) -> Self {
        Polynomial { ring: ring.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn one(ring: &R, nvars: usize) -> Self {
        Self::constant(ring, nvars, ring.one())
    }

    pub fn constant(ring: &R, nvars: usize, c: R::Elem) -> Self {
        Self::monomial(ring, ExponentVector::zero(nvars), c)
    }

    /// The variable `x_{var+1}`.
    pub fn var(ring: &R, nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index out of range");
        Self::monomial(ring, ExponentVector::unit(nvars, var, 1), ring.one())
    }

    pub fn monomial(ring: &R, term: ExponentVector, c: R::Elem) -> Self {
        let nvars = term.len();
        let mut terms = BTreeMap::new();
        if !ring.is_zero(&c) {
            terms.insert(term, c);
        }
        Polynomial { ring: ring.clone(), nvars, terms }
    }

    /// Builds a polynomial from terms, combining duplicates and dropping zeros.
    pub fn from_terms(
        ring: &R,
        nvars: usize,
        terms: impl IntoIterator<Item = (ExponentVector, R::Elem)>,
    ) -> Self {
        let mut p = Self::zero(ring, nvars);
        for (t, c) in terms {
            assert_eq!(t.len(), nvars, "exponent vector length");
            p.add_term(t, &c);
        }
        p
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Support in descending default (lex `x1 > ... > xn`) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &R::Elem)> + '_ {
        self.terms.iter().rev()
    }

    /// Support sorted descending by `order`.
    pub fn terms_sorted(&self, order: &TermOrder) -> Vec<(&ExponentVector, &R::Elem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        if order.is_default_lex() {
            v.reverse();
        } else {
            v.sort_by(|a, b| order.cmp(b.0, a.0));
        }
        v
    }

    pub fn coeff(&self, term: &ExponentVector) -> R::Elem {
        self.terms.get(term).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|t| t.is_constant())
    }

    /// The constant coefficient.
    pub fn constant_coeff(&self) -> R::Elem {
        self.coeff(&ExponentVector::zero(self.nvars))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|t| t.total_degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|t| t.get(var)).max()
    }

    /// True if every term involves at most the variable `var`.
    pub fn involves_only(&self, var: usize) -> bool {
        self.terms
            .keys()
            .all(|t| t.as_slice().iter().enumerate().all(|(i, &e)| i == var || e == 0))
    }

    pub fn leading_term(&self, order: &TermOrder) -> Result<ExponentVector> {
        self.leading_entry(order).map(|(t, _)| t.clone())
    }

    pub fn leading_coeff(&self, order: &TermOrder) -> Result<R::Elem> {
        self.leading_entry(order).map(|(_, c)| c.clone())
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Result<Monomial<R>> {
        self.leading_entry(order)
            .map(|(t, c)| Monomial { coeff: c.clone(), term: t.clone() })
    }

    pub(crate) fn leading_entry(&self, order: &TermOrder) -> Result<(&ExponentVector, &R::Elem)> {
        if order.is_default_lex() {
            return self.terms.iter().next_back().ok_or(Error::ZeroPolynomial);
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .ok_or(Error::ZeroPolynomial)
    }

    fn add_term(&mut self, t: ExponentVector, c: &R::Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let s = self.ring.add(e.get(), c);
                if self.ring.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self -= c * x^shift * g`, in place.
    pub fn sub_scaled(&mut self, c: &R::Elem, shift: &ExponentVector, g: &Self) {
        for (t, gc) in &g.terms {
            let prod = self.ring.mul(c, gc);
            let neg = self.ring.neg(&prod);
            self.add_term(t.add(shift), &neg);
        }
    }

    /// `self += c * x^shift * g`, in place.
    pub fn add_scaled(&mut self, c: &R::Elem, shift: &ExponentVector, g: &Self) {
        for (t, gc) in &g.terms {
            let prod = self.ring.mul(c, gc);
            self.add_term(t.add(shift), &prod);
        }
    }

    /// Removes and returns the coefficient of `t`.
    pub(crate) fn take_term(&mut self, t: &ExponentVector) -> Option<R::Elem> {
        self.terms.remove(t)
    }

    pub(crate) fn insert_term(&mut self, t: ExponentVector, c: R::Elem) {
        self.add_term(t, &c);
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(t, a)| {
                let p = self.ring.mul(a, c);
                (!self.ring.is_zero(&p)).then(|| (t.clone(), p))
            })
            .collect();
        Polynomial { ring: self.ring.clone(), nvars: self.nvars, terms }
    }

    /// `c * x^t * self`.
    pub fn mul_monomial(&self, c: &R::Elem, t: &ExponentVector) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(s, a)| {
                let p = self.ring.mul(a, c);
                (!self.ring.is_zero(&p)).then(|| (s.add(t), p))
            })
            .collect();
        Polynomial { ring: self.ring.clone(), nvars: self.nvars, terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring, self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn compatible(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.ring == other.ring
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !self.compatible(other) {
            return Err(Error::DomainMismatch);
        }
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        if !self.compatible(other) {
            return Err(Error::DomainMismatch);
        }
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), &self.ring.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !self.compatible(other) {
            return Err(Error::DomainMismatch);
        }
        let mut out = Self::zero(&self.ring, self.nvars);
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                out.add_term(s.add(t), &self.ring.mul(a, b));
            }
        }
        Ok(out)
    }

    /// Maps every coefficient into another ring, dropping those sent to zero.
    pub fn map_coeffs<S: Ring>(&self, target: &S, mut f: impl FnMut(&R::Elem) -> S::Elem) -> Polynomial<S> {
        Polynomial::from_terms(
            target,
            self.nvars,
            self.terms.iter().map(|(t, c)| (t.clone(), f(c))),
        )
    }

    /// Maps every term through `f` into an ambient ring with `nvars` variables.
    pub fn map_terms(&self, nvars: usize, mut f: impl FnMut(&ExponentVector) -> ExponentVector) -> Self {
        Polynomial::from_terms(
            &self.ring,
            nvars,
            self.terms.iter().map(|(t, c)| (f(t), c.clone())),
        )
    }

    /// Embeds into a ring with `extra` additional variables appended.
    pub fn append_vars(&self, extra: usize) -> Self {
        let n = self.nvars + extra;
        self.map_terms(n, |t| ExponentVector::new(t.as_slice().iter().copied().chain(std::iter::repeat_n(0, extra))))
    }

    /// Drops variable `var`, which must not occur.
    pub fn drop_var(&self, var: usize) -> Result<Self> {
        if self.degree_in(var).unwrap_or(0) > 0 {
            return Err(Error::Usage(format!("variable x{} still occurs", var + 1)));
        }
        Ok(self.map_terms(self.nvars - 1, |t| t.remove(var)))
    }

    /// The evaluation homomorphism `x1 -> a`; the result has one fewer variable.
    pub fn evaluate_x1(&self, a: &R::Elem) -> Result<Self> {
        if self.nvars == 0 {
            return Err(Error::Usage("no variable to evaluate".into()));
        }
        let mut out = Self::zero(&self.ring, self.nvars - 1);
        let mut powers: Vec<R::Elem> = vec![self.ring.one()];
        for (t, c) in &self.terms {
            let e = t.get(0) as usize;
            while powers.len() <= e {
                let next = self.ring.mul(powers.last().unwrap(), a);
                powers.push(next);
            }
            out.add_term(t.remove(0), &self.ring.mul(c, &powers[e]));
        }
        Ok(out)
    }

    /// Evaluates at a full point.
    pub fn evaluate(&self, point: &[R::Elem]) -> Result<R::Elem> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch(point.len(), self.nvars));
        }
        let mut acc = self.ring.zero();
        for (t, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(t.as_slice()) {
                if e > 0 {
                    v = self.ring.mul(&v, &self.ring.pow(x, e as u64));
                }
            }
            acc = self.ring.add(&acc, &v);
        }
        Ok(acc)
    }

    /// Canonical text using the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        crate::poly::display::format_terms(&self.ring, names, self.terms())
    }

    /// Like [`Polynomial::to_string_with`], listing terms in descending `order`.
    pub fn to_string_ordered(&self, names: &[String], order: &TermOrder) -> String {
        crate::poly::display::format_terms(&self.ring, names, self.terms_sorted(order).into_iter())
    }

    pub fn default_names(nvars: usize) -> Vec<String> {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }
}

impl<R: Ring> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&Self::default_names(self.nvars)))
    }
}

impl<R: Ring> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<R: Ring> Add for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn add(self, rhs: Self) -> Polynomial<R> {
        self.checked_add(rhs).expect("polynomial domain mismatch")
    }
}

impl<R: Ring> Sub for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn sub(self, rhs: Self) -> Polynomial<R> {
        self.checked_sub(rhs).expect("polynomial domain mismatch")
    }
}

impl<R: Ring> Mul for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn mul(self, rhs: Self) -> Polynomial<R> {
        self.checked_mul(rhs).expect("polynomial domain mismatch")
    }
}

impl<R: Ring> Neg for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn neg(self) -> Polynomial<R> {
        let terms = self.terms.iter().map(|(t, c)| (t.clone(), self.ring.neg(c))).collect();
        Polynomial { ring: self.ring.clone(), nvars: self.nvars, terms }
    }
}

/// Compares leading terms of two nonzero polynomials.
pub fn cmp_leading<R: Ring>(order: &TermOrder, a: &Polynomial<R>, b: &Polynomial<R>) -> Ordering {
    match (a.leading_term(order), b.leading_term(order)) {
        (Ok(s), Ok(t)) => order.cmp(&s, &t),
        (Err(_), Err(_)) => Ordering::Equal,
        (Err(_), _) => Ordering::Less,
        (_, Err(_)) => Ordering::Greater,
    }
}
