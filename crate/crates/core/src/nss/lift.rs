use crate::error::Result;
use crate::ffield::{FFElement, FiniteField};
use crate::poly::{PolyRing, Polynomial, UniPoly};
use crate::ring::Ring;

/// Embeds the coefficients of `p` into an extension field.
pub fn lift_polynomial(p: &Polynomial<FiniteField>, target: &FiniteField) -> Result<Polynomial<FiniteField>> {
    if p.ring() == target {
        return Ok(p.clone());
    }
    let source = p.ring();
    let mut err = None;
    let out = p.map_coeffs(target, |c| {
        source.embed(c, target).unwrap_or_else(|e| {
            err = Some(e);
            target.zero()
        })
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

pub fn lift_unipoly(
    source: &FiniteField,
    f: &UniPoly<FFElement>,
    target: &FiniteField,
) -> Result<UniPoly<FFElement>> {
    let coeffs = f.coeffs().iter().map(|c| source.embed(c, target)).collect::<Result<Vec<_>>>()?;
    Ok(PolyRing::new(target.clone(), "x").from_coeffs(coeffs))
}
