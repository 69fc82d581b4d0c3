use crate::error::{Error, Result};
use crate::groebner::{is_proper, member, Ideal};
use crate::poly::Polynomial;
use crate::ring::Field;

/// Decides `f ∈ √I` with the Rabinowitz trick: `f ∈ √I` iff
/// `⟨I, 1 − y·f⟩` is the whole ring, `y` a fresh variable.
pub fn radical_member<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>) -> Result<bool> {
    if f.nvars() != ideal.nvars() || f.ring() != ideal.ring() {
        return Err(Error::DomainMismatch);
    }
    let (ring, n) = (ideal.ring(), ideal.nvars());
    let y = Polynomial::var(ring, n + 1, n);
    let mut gens: Vec<Polynomial<F>> = ideal.generators().iter().map(|g| g.append_vars(1)).collect();
    gens.push(&Polynomial::one(ring, n + 1) - &(&y * &f.append_vars(1)));
    Ok(!is_proper(ring, n + 1, &gens)?)
}

/// Smallest `k ≤ max_exponent` with `f^k ∈ I`, if any.
pub fn radical_witness<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>, max_exponent: u32) -> Result<Option<u32>> {
    let mut power = f.clone();
    for k in 1..=max_exponent {
        if member(&power, ideal)? {
            return Ok(Some(k));
        }
        power = &power * f;
    }
    Ok(None)
}
