use crate::error::{Error, Result};
use crate::groebner::StrongBasis;
use crate::poly::{PolyRing, UniPoly};
use crate::ring::{Field, Ring};

/// Product of the leading coefficients of a strong basis over `K[x1]`,
/// made monic. Points `a` with `q(a) ≠ 0` keep every leading coefficient
/// alive under `x1 -> a`.
pub fn specialization_locus<F: Field>(basis: &StrongBasis<PolyRing<F>>) -> Result<UniPoly<F::Elem>> {
    let ring = basis.ring();
    let mut q = ring.one();
    for g in basis.elements() {
        q = ring.mul(&q, &g.leading_coeff(basis.order())?);
    }
    Ok(ring.monic(&q))
}

/// Applies `x1 -> a` to every element of a certified strong basis.
///
/// When `q(a) ≠ 0` the image is a Gröbner basis of the specialized ideal
/// with the same leading terms, so it is returned certified without
/// rerunning Buchberger.
pub fn specialize_basis<F: Field>(basis: &StrongBasis<PolyRing<F>>, a: &F::Elem) -> Result<StrongBasis<F>> {
    if !basis.is_certified() {
        return Err(Error::Usage("specialization needs a certified strong basis".into()));
    }
    let ring = basis.ring();
    let q = specialization_locus(basis)?;
    if ring.field().is_zero(&ring.eval(&q, a)) {
        return Err(Error::LocusRoot);
    }
    let field = ring.field();
    let elements = basis
        .elements()
        .iter()
        .map(|g| g.map_coeffs(field, |c| ring.eval(c, a)))
        .collect();
    let mut out = StrongBasis::uncertified(field, basis.nvars(), basis.order(), elements);
    out.certified = true;
    Ok(out)
}
