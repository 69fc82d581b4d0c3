use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::basis::StrongBasis;
use crate::groebner::buchberger::{buchberger, buchberger_with_certificate};
use crate::groebner::reduce::normal_form;
use crate::poly::{PolyRing, Polynomial, TermOrder, UniPoly};
use crate::ring::{EuclideanRing, Field, Ring};

/// A polynomial ideal given by generators, with a lazily computed reduced
/// basis under the default lex order.
#[derive(Debug)]
pub struct Ideal<F: Field> {
    ring: F,
    nvars: usize,
    generators: Vec<Polynomial<F>>,
    basis: OnceLock<Result<StrongBasis<F>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            nvars: self.nvars,
            generators: self.generators.clone(),
            basis: self.basis.clone(),
        }
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &F, nvars: usize, generators: Vec<Polynomial<F>>) -> Result<Self> {
        if generators.iter().any(|g| g.nvars() != nvars || g.ring() != ring) {
            return Err(Error::DomainMismatch);
        }
        Ok(Ideal { ring: ring.clone(), nvars, generators, basis: OnceLock::new() })
    }

    pub fn ring(&self) -> &F {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    /// Reduced basis under lex `x1 > ... > xn`, computed once.
    pub fn basis(&self) -> Result<&StrongBasis<F>> {
        self.basis
            .get_or_init(|| buchberger(&self.ring, self.nvars, &self.generators, &TermOrder::lex(self.nvars)))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn basis_with_order(&self, order: &TermOrder) -> Result<StrongBasis<F>> {
        if order.is_default_lex() {
            return self.basis().cloned();
        }
        buchberger(&self.ring, self.nvars, &self.generators, order)
    }

    /// True iff every generator of `other` lies in `self`.
    pub fn contains(&self, other: &Ideal<F>) -> Result<bool> {
        for g in &other.generators {
            if !member(g, self)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality by mutual generator membership.
    pub fn same_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }
}

/// Outcome of a triviality test; a trivial ideal comes with cofactors
/// expressing 1 in terms of the generators.
#[derive(Debug, Clone, PartialEq)]
pub struct Triviality<F: Field> {
    pub trivial: bool,
    pub certificate: Option<Vec<Polynomial<F>>>,
}

/// Decides whether `I` is the whole ring, i.e. whether its reduced basis is
/// `{1}`.
pub fn is_trivial<F: Field>(ideal: &Ideal<F>) -> Result<Triviality<F>> {
    let order = TermOrder::lex(ideal.nvars);
    let (basis, cert) = buchberger_with_certificate(&ideal.ring, ideal.nvars, &ideal.generators, &order)?;
    if !basis.has_constant() {
        return Ok(Triviality { trivial: false, certificate: None });
    }
    let cert = cert.ok_or_else(|| Error::InvariantViolation("missing triviality certificate".into()))?;
    let check = combine(&ideal.ring, ideal.nvars, &cert, &ideal.generators);
    if check != Polynomial::one(&ideal.ring, ideal.nvars) {
        return Err(Error::InvariantViolation("triviality certificate does not sum to 1".into()));
    }
    Ok(Triviality { trivial: true, certificate: Some(cert) })
}

/// Cheap triviality test without certificate.
pub fn is_proper<F: Field>(ring: &F, nvars: usize, gens: &[Polynomial<F>]) -> Result<bool> {
    let basis = buchberger(ring, nvars, gens, &TermOrder::lex(nvars))?;
    Ok(!basis.has_constant())
}

/// `Σ cofactors[i]·gens[i]`.
pub fn combine<F: Field>(
    ring: &F,
    nvars: usize,
    cofactors: &[Polynomial<F>],
    gens: &[Polynomial<F>],
) -> Polynomial<F> {
    cofactors
        .iter()
        .zip(gens)
        .fold(Polynomial::zero(ring, nvars), |acc, (c, g)| &acc + &(c * g))
}

pub fn member<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>) -> Result<bool> {
    if f.nvars() != ideal.nvars || f.ring() != &ideal.ring {
        return Err(Error::DomainMismatch);
    }
    let basis = ideal.basis()?;
    Ok(normal_form(f, basis.elements(), basis.order())?.is_zero())
}

/// Monic generator of `I ∩ K[x1]`, or zero when the intersection is `{0}`.
pub fn eliminate_to_x1<F: Field>(ideal: &Ideal<F>) -> Result<UniPoly<F::Elem>> {
    let uni = PolyRing::new(ideal.ring.clone(), "x1");
    if ideal.nvars == 0 {
        return Err(Error::Usage("no variable to eliminate onto".into()));
    }
    let order = TermOrder::elimination_x1_last(ideal.nvars);
    let basis = ideal.basis_with_order(&order)?;
    let mut p = uni.zero();
    for g in basis.elements().iter().filter(|g| g.involves_only(0)) {
        p = uni.gcd(&p, &uni.from_polynomial(g, 0)?);
    }
    Ok(p)
}
