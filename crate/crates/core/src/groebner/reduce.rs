use crate::error::{Error, Result};
use crate::poly::{ExponentVector, Polynomial, TermOrder};
use crate::ring::{Field, Ring};

/// Output of multivariate division: `f = Σ cofactors[i]·basis[i] + remainder`.
#[derive(Debug, Clone, PartialEq)]
pub struct Reduction<R: Ring> {
    pub remainder: Polynomial<R>,
    pub cofactors: Vec<Polynomial<R>>,
}

/// Full reduction of `f` by `basis` over a field.
///
/// Every term of the remainder is divisible by no leading term of the
/// basis, and each `cofactors[i]·basis[i]` has leading term at most `lt(f)`.
/// The first basis element (in slice order) whose leading term divides is
/// used at each step.
pub fn reduce<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: &TermOrder,
) -> Result<Reduction<F>> {
    reduce_impl(f, basis, order, true)
}

/// Remainder only; skips cofactor bookkeeping.
pub fn normal_form<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: &TermOrder,
) -> Result<Polynomial<F>> {
    Ok(reduce_impl(f, basis, order, false)?.remainder)
}

fn reduce_impl<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: &TermOrder,
    track: bool,
) -> Result<Reduction<F>> {
    let ring = f.ring().clone();
    let n = f.nvars();
    let mut heads = Vec::with_capacity(basis.len());
    for g in basis {
        if g.nvars() != n || g.ring() != &ring {
            return Err(Error::DomainMismatch);
        }
        let (t, c) = g.leading_entry(order)?;
        heads.push((t.clone(), ring.inv(c)?));
    }
    let mut p = f.clone();
    let mut remainder = Polynomial::zero(&ring, n);
    let mut cofactors = if track { vec![Polynomial::zero(&ring, n); basis.len()] } else { Vec::new() };
    while let Ok((t, c)) = p.leading_entry(order) {
        let (t, c) = (t.clone(), c.clone());
        let hit = heads.iter().position(|(lt, _)| lt.divides(&t));
        match hit {
            Some(i) => {
                let shift = t.checked_sub(&heads[i].0).unwrap();
                let q = ring.mul(&c, &heads[i].1);
                p.sub_scaled(&q, &shift, &basis[i]);
                if track {
                    cofactors[i].insert_term(shift, q);
                }
            }
            None => {
                p.take_term(&t);
                remainder.insert_term(t, c);
            }
        }
    }
    Ok(Reduction { remainder, cofactors })
}

/// The S-polynomial `(T/lm f)·f − (T/lm g)·g` with `T = lcm(lt f, lt g)`.
pub fn s_polynomial<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    order: &TermOrder,
) -> Result<Polynomial<F>> {
    let (mf, sf, mg, sg) = s_multipliers(f, g, order)?;
    let mut s = f.mul_monomial(&mf, &sf);
    s.sub_scaled(&mg, &sg, g);
    Ok(s)
}

/// Coefficient and shift multipliers of the S-polynomial of `f` and `g`.
pub(crate) fn s_multipliers<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    order: &TermOrder,
) -> Result<(F::Elem, ExponentVector, F::Elem, ExponentVector)> {
    let ring = f.ring();
    let (s, a) = f.leading_entry(order)?;
    let (t, b) = g.leading_entry(order)?;
    let lcm = s.lcm(t);
    Ok((
        ring.inv(a)?,
        lcm.checked_sub(s).unwrap(),
        ring.inv(b)?,
        lcm.checked_sub(t).unwrap(),
    ))
}
