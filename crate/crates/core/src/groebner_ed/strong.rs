use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::groebner::{Reduction, StrongBasis};
use crate::poly::{cmp_leading, ExponentVector, Polynomial, TermOrder};
use crate::ring::EuclideanRing;

/// Strong (Euclidean) reduction of `f` by `basis`.
///
/// A monomial `c·t` is reduced by `g` when `lt(g) | t` and the Euclidean
/// quotient of `c` by `lc(g)` is nonzero; `c` is then replaced by its
/// remainder. On exit no remainder monomial is divisible, coefficient and
/// term both, by any leading monomial of the basis.
pub fn strong_reduce<R: EuclideanRing>(
    f: &Polynomial<R>,
    basis: &[Polynomial<R>],
    order: &TermOrder,
) -> Result<Reduction<R>> {
    strong_reduce_impl(f, basis, order, true)
}

fn strong_reduce_impl<R: EuclideanRing>(
    f: &Polynomial<R>,
    basis: &[Polynomial<R>],
    order: &TermOrder,
    track: bool,
) -> Result<Reduction<R>> {
    let ring = f.ring().clone();
    let n = f.nvars();
    let mut heads = Vec::with_capacity(basis.len());
    for g in basis {
        if g.nvars() != n || g.ring() != &ring {
            return Err(Error::DomainMismatch);
        }
        let (t, c) = g.leading_entry(order)?;
        heads.push((t.clone(), c.clone()));
    }
    let mut p = f.clone();
    let mut remainder = Polynomial::zero(&ring, n);
    let mut cofactors = if track { vec![Polynomial::zero(&ring, n); basis.len()] } else { Vec::new() };
    'outer: while let Ok((t, c)) = p.leading_entry(order) {
        let (t, c) = (t.clone(), c.clone());
        for (i, (lt, lc)) in heads.iter().enumerate() {
            if !lt.divides(&t) {
                continue;
            }
            let (q, _) = ring.div_rem(&c, lc);
            if ring.is_zero(&q) {
                continue;
            }
            let shift = t.checked_sub(lt).unwrap();
            p.sub_scaled(&q, &shift, &basis[i]);
            if track {
                cofactors[i].insert_term(shift, q);
            }
            continue 'outer;
        }
        p.take_term(&t);
        remainder.insert_term(t, c);
    }
    Ok(Reduction { remainder, cofactors })
}

struct Lead<R: EuclideanRing> {
    coeff: R::Elem,
    term: ExponentVector,
}

fn lead<R: EuclideanRing>(f: &Polynomial<R>, order: &TermOrder) -> Result<Lead<R>> {
    let (t, c) = f.leading_entry(order)?;
    Ok(Lead { coeff: c.clone(), term: t.clone() })
}

/// `S = (l/a)(T/s)·f − (l/b)(T/t)·g` where `lm f = a·s`, `lm g = b·t`,
/// `T = lcm(s, t)` and `l = lcm(a, b)`. The leading terms cancel.
pub fn s_polynomial<R: EuclideanRing>(
    f: &Polynomial<R>,
    g: &Polynomial<R>,
    order: &TermOrder,
) -> Result<Polynomial<R>> {
    let ring = f.ring();
    let (lf, lg) = (lead(f, order)?, lead(g, order)?);
    let big_t = lf.term.lcm(&lg.term);
    let l = ring.lcm(&lf.coeff, &lg.coeff);
    let mut s = f.mul_monomial(&ring.exact_div(&l, &lf.coeff), &big_t.checked_sub(&lf.term).unwrap());
    s.sub_scaled(&ring.exact_div(&l, &lg.coeff), &big_t.checked_sub(&lg.term).unwrap(), g);
    Ok(s)
}

/// `G = u(T/s)·f + v(T/t)·g` with `u·a + v·b = gcd(a, b)`; its leading
/// monomial is `gcd(a, b)·T`.
pub fn g_polynomial<R: EuclideanRing>(
    f: &Polynomial<R>,
    g: &Polynomial<R>,
    order: &TermOrder,
) -> Result<Polynomial<R>> {
    let ring = f.ring();
    let (lf, lg) = (lead(f, order)?, lead(g, order)?);
    let big_t = lf.term.lcm(&lg.term);
    let (_, u, v) = ring.xgcd(&lf.coeff, &lg.coeff);
    let mut out = f.mul_monomial(&u, &big_t.checked_sub(&lf.term).unwrap());
    out.add_scaled(&v, &big_t.checked_sub(&lg.term).unwrap(), g);
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum PairKind {
    S,
    G,
}

struct Pair {
    lcm: ExponentVector,
    kind: PairKind,
    i: usize,
    j: usize,
}

fn normalize<R: EuclideanRing>(g: &Polynomial<R>, order: &TermOrder) -> Result<Polynomial<R>> {
    let lc = g.leading_coeff(order)?;
    Ok(g.scale(&g.ring().normalizing_unit(&lc)))
}

fn needs_g_pair<R: EuclideanRing>(ring: &R, a: &R::Elem, b: &R::Elem) -> bool {
    !ring.divides(a, b) && !ring.divides(b, a)
}

/// Buchberger's algorithm over a Euclidean coefficient domain, with S- and
/// G-pairs and strong reduction. The result is certified by re-checking all
/// pairs of the final basis.
pub fn strong_buchberger<R: EuclideanRing>(
    ring: &R,
    nvars: usize,
    gens: &[Polynomial<R>],
    order: &TermOrder,
) -> Result<StrongBasis<R>> {
    if order.nvars() != nvars {
        return Err(Error::LengthMismatch(order.nvars(), nvars));
    }
    if gens.iter().any(|g| g.nvars() != nvars || g.ring() != ring) {
        return Err(Error::DomainMismatch);
    }
    let mut basis: Vec<Polynomial<R>> = Vec::new();
    let mut leads: Vec<Lead<R>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let insert = |g: Polynomial<R>, basis: &mut Vec<Polynomial<R>>, leads: &mut Vec<Lead<R>>, pairs: &mut Vec<Pair>| -> Result<()> {
        let g = normalize(&g, order)?;
        let lg = lead(&g, order)?;
        let j = basis.len();
        for (i, li) in leads.iter().enumerate() {
            let lcm = li.term.lcm(&lg.term);
            pairs.push(Pair { lcm: lcm.clone(), kind: PairKind::S, i, j });
            if needs_g_pair(ring, &li.coeff, &lg.coeff) {
                pairs.push(Pair { lcm, kind: PairKind::G, i, j });
            }
        }
        basis.push(g);
        leads.push(lg);
        Ok(())
    };

    for g in gens.iter().filter(|g| !g.is_zero()) {
        insert(g.clone(), &mut basis, &mut leads, &mut pairs)?;
    }
    loop {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                order
                    .cmp(&a.lcm, &b.lcm)
                    .then(a.kind.cmp(&b.kind))
                    .then(a.i.cmp(&b.i))
                    .then(a.j.cmp(&b.j))
            })
            .map(|(k, _)| k);
        let Some(best) = best else { break };
        let pair = pairs.swap_remove(best);
        let (f, g) = (&basis[pair.i], &basis[pair.j]);
        let candidate = match pair.kind {
            PairKind::S => {
                let (lf, lg) = (&leads[pair.i], &leads[pair.j]);
                if lf.term.is_coprime(&lg.term) && ring.is_unit(&lf.coeff) && ring.is_unit(&lg.coeff) {
                    continue;
                }
                s_polynomial(f, g, order)?
            }
            PairKind::G => g_polynomial(f, g, order)?,
        };
        let r = strong_reduce_impl(&candidate, &basis, order, false)?.remainder;
        if !r.is_zero() {
            insert(r, &mut basis, &mut leads, &mut pairs)?;
        }
    }

    let elements = minimalize(ring, basis, order)?;
    let mut out = StrongBasis::uncertified(ring, nvars, order, elements);
    if !is_strong_basis(&out.elements, order)? {
        return Err(Error::InvariantViolation("strong basis failed S/G-polynomial certification".into()));
    }
    out.certified = true;
    Ok(out)
}

/// True if `lm(h)` divides `lm(g)`: term and coefficient both.
fn lm_divides<R: EuclideanRing>(ring: &R, h: &Lead<R>, g: &Lead<R>) -> bool {
    h.term.divides(&g.term) && ring.divides(&h.coeff, &g.coeff)
}

/// Drops elements whose leading monomial is divisible by another's, tail
/// reduces by unit-leading elements, normalizes, and sorts descending.
fn minimalize<R: EuclideanRing>(
    ring: &R,
    basis: Vec<Polynomial<R>>,
    order: &TermOrder,
) -> Result<Vec<Polynomial<R>>> {
    let mut sorted = basis;
    sorted.sort_by(|a, b| {
        cmp_leading(order, a, b).then_with(|| {
            let (ca, cb) = (a.leading_coeff(order).unwrap(), b.leading_coeff(order).unwrap());
            ring.size(&ca).cmp(&ring.size(&cb))
        })
    });
    let mut kept: Vec<(Polynomial<R>, Lead<R>)> = Vec::new();
    for g in sorted {
        let lg = lead(&g, order)?;
        if kept.iter().any(|(_, lh)| lm_divides(ring, lh, &lg)) {
            continue;
        }
        // a later element may divide earlier ones only when terms coincide
        kept.retain(|(_, lh)| !(lh.term == lg.term && lm_divides(ring, &lg, lh)));
        kept.push((g, lg));
    }
    let mut out = Vec::with_capacity(kept.len());
    for (k, (g, lg)) in kept.iter().enumerate() {
        let units: Vec<Polynomial<R>> = kept
            .iter()
            .enumerate()
            .filter(|(i, (_, lh))| *i != k && ring.is_unit(&lh.coeff))
            .map(|(_, (h, _))| h.clone())
            .collect();
        let mut tail = g.clone();
        tail.take_term(&lg.term);
        let reduced = strong_reduce_impl(&tail, &units, order, false)?.remainder;
        let mut h = reduced;
        h.insert_term(lg.term.clone(), lg.coeff.clone());
        out.push(normalize(&h, order)?);
    }
    out.sort_by(|a, b| match cmp_leading(order, b, a) {
        Ordering::Equal => {
            let (ca, cb) = (a.leading_coeff(order).unwrap(), b.leading_coeff(order).unwrap());
            ring.size(&ca).cmp(&ring.size(&cb))
        }
        other => other,
    });
    Ok(out)
}

/// Certification: every S- and G-polynomial strong-reduces to zero.
pub fn is_strong_basis<R: EuclideanRing>(basis: &[Polynomial<R>], order: &TermOrder) -> Result<bool> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order)?;
            if !strong_reduce_impl(&s, basis, order, false)?.remainder.is_zero() {
                return Ok(false);
            }
            let g = g_polynomial(&basis[i], &basis[j], order)?;
            if !strong_reduce_impl(&g, basis, order, false)?.remainder.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
