use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, PolyRing, Polynomial};
use crate::ring::Field;

/// A polynomial in `x2..xn` with coefficients in `K[x1]`.
pub type EDPolynomial<F> = Polynomial<PolyRing<F>>;

/// Regroups `p ∈ K[x1..xn]` as an element of `K[x1][x2..xn]`.
pub fn view_shift<F: Field>(p: &Polynomial<F>) -> Result<EDPolynomial<F>> {
    let n = p.nvars();
    if n == 0 {
        return Err(Error::Usage("cannot split off x1 from a ring without variables".into()));
    }
    let field = p.ring();
    let ring = PolyRing::new(field.clone(), "x1");
    let mut grouped: BTreeMap<ExponentVector, Vec<F::Elem>> = BTreeMap::new();
    for (t, c) in p.terms() {
        let e = t.get(0) as usize;
        let slot = grouped.entry(t.remove(0)).or_default();
        if slot.len() <= e {
            slot.resize(e + 1, field.zero());
        }
        slot[e] = c.clone();
    }
    Ok(Polynomial::from_terms(
        &ring,
        n - 1,
        grouped.into_iter().map(|(t, cs)| (t, ring.from_coeffs(cs))),
    ))
}

/// Inverse of [`view_shift`].
pub fn unshift<F: Field>(p: &EDPolynomial<F>) -> Polynomial<F> {
    let field = p.ring().field();
    let n = p.nvars() + 1;
    let mut terms = Vec::new();
    for (t, c) in p.terms() {
        for (e, a) in c.coeffs().iter().enumerate() {
            terms.push((t.insert(0, e as u32), a.clone()));
        }
    }
    Polynomial::from_terms(field, n, terms)
}
