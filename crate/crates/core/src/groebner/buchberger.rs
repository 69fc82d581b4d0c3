use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::groebner::basis::StrongBasis;
use crate::groebner::reduce::{normal_form, reduce, s_multipliers, s_polynomial};
use crate::poly::{cmp_leading, ExponentVector, Polynomial, TermOrder};
use crate::ring::Field;

struct Pair {
    sugar: u64,
    lcm: ExponentVector,
    i: usize,
    j: usize,
}

/// Buchberger state. With `reps` enabled every basis element carries its
/// expression in terms of the input generators.
struct Engine<'a, F: Field> {
    ring: F,
    order: &'a TermOrder,
    basis: Vec<Polynomial<F>>,
    heads: Vec<ExponentVector>,
    sugars: Vec<u64>,
    reps: Option<Vec<Vec<Polynomial<F>>>>,
    pairs: Vec<Pair>,
    pending: HashSet<(usize, usize)>,
}

impl<'a, F: Field> Engine<'a, F> {
    fn new(ring: &F, order: &'a TermOrder, track: bool) -> Self {
        Engine {
            ring: ring.clone(),
            order,
            basis: Vec::new(),
            heads: Vec::new(),
            sugars: Vec::new(),
            reps: track.then(Vec::new),
            pairs: Vec::new(),
            pending: HashSet::new(),
        }
    }

    /// Adds a nonzero element, made monic, with its representation and
    /// sugar degree.
    fn insert(&mut self, g: Polynomial<F>, rep: Option<Vec<Polynomial<F>>>, sugar: u64) -> Result<()> {
        let (t, c) = g.leading_entry(self.order)?;
        let t = t.clone();
        let inv = self.ring.inv(c)?;
        let g = g.scale(&inv);
        if let (Some(reps), Some(rep)) = (self.reps.as_mut(), rep) {
            reps.push(rep.iter().map(|r| r.scale(&inv)).collect());
        }
        let j = self.basis.len();
        for i in 0..j {
            let lcm = self.heads[i].lcm(&t);
            let lift = |h: &ExponentVector| lcm.total_degree() - h.total_degree();
            let sugar = (self.sugars[i] + lift(&self.heads[i])).max(sugar + lift(&t));
            self.pairs.push(Pair { sugar, lcm, i, j });
            self.pending.insert((i, j));
        }
        self.basis.push(g);
        self.heads.push(t);
        self.sugars.push(sugar);
        Ok(())
    }

    /// Sugar selection: smallest sugar degree, then the normal strategy
    /// (smallest lcm), then indices.
    fn pop_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then(a.i.cmp(&b.i))
                    .then(a.j.cmp(&b.j))
            })
            .map(|(k, _)| k)?;
        let pair = self.pairs.swap_remove(best);
        self.pending.remove(&(pair.i, pair.j));
        Some(pair)
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }

    /// Buchberger's criteria: coprime leading terms, or a chain through a
    /// third element whose pairs are already handled.
    fn skippable(&self, pair: &Pair) -> bool {
        if self.heads[pair.i].is_coprime(&self.heads[pair.j]) {
            return true;
        }
        (0..self.basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && self.heads[k].divides(&pair.lcm)
                && !self.is_pending(pair.i, k)
                && !self.is_pending(pair.j, k)
        })
    }

    /// Runs to completion; returns the index of a constant element if one
    /// appears (the ideal is then the whole ring).
    fn run(&mut self) -> Result<Option<usize>> {
        if let Some(k) = self.basis.iter().position(|g| g.is_constant()) {
            return Ok(Some(k));
        }
        while let Some(pair) = self.pop_pair() {
            if self.skippable(&pair) {
                continue;
            }
            let (f, g) = (&self.basis[pair.i], &self.basis[pair.j]);
            let (mf, sf, mg, sg) = s_multipliers(f, g, self.order)?;
            let mut s = f.mul_monomial(&mf, &sf);
            s.sub_scaled(&mg, &sg, g);
            let red = if self.reps.is_some() {
                reduce(&s, &self.basis, self.order)?
            } else {
                crate::groebner::reduce::Reduction {
                    remainder: normal_form(&s, &self.basis, self.order)?,
                    cofactors: Vec::new(),
                }
            };
            if red.remainder.is_zero() {
                continue;
            }
            let rep = self.reps.as_ref().map(|reps| {
                let mut rep: Vec<Polynomial<F>> = reps[pair.i]
                    .iter()
                    .zip(&reps[pair.j])
                    .map(|(a, b)| {
                        let mut r = a.mul_monomial(&mf, &sf);
                        r.sub_scaled(&mg, &sg, b);
                        r
                    })
                    .collect();
                for (q, brep) in red.cofactors.iter().zip(reps) {
                    if q.is_zero() {
                        continue;
                    }
                    for (slot, b) in rep.iter_mut().zip(brep) {
                        *slot = &*slot - &(q * b);
                    }
                }
                rep
            });
            let constant = red.remainder.is_constant();
            self.insert(red.remainder, rep, pair.sugar)?;
            if constant {
                return Ok(Some(self.basis.len() - 1));
            }
        }
        Ok(None)
    }
}

fn check_inputs<F: Field>(ring: &F, nvars: usize, gens: &[Polynomial<F>], order: &TermOrder) -> Result<()> {
    if order.nvars() != nvars {
        return Err(Error::LengthMismatch(order.nvars(), nvars));
    }
    if gens.iter().any(|g| g.nvars() != nvars || g.ring() != ring) {
        return Err(Error::DomainMismatch);
    }
    Ok(())
}

/// Computes the reduced Gröbner basis of `⟨gens⟩` under `order`.
///
/// The output is monic, inter-reduced, sorted by leading term descending,
/// and certified by an independent S-polynomial check.
pub fn buchberger<F: Field>(
    ring: &F,
    nvars: usize,
    gens: &[Polynomial<F>],
    order: &TermOrder,
) -> Result<StrongBasis<F>> {
    Ok(buchberger_impl(ring, nvars, gens, order, false)?.0)
}

/// Like [`buchberger`]; when the ideal is the whole ring also returns
/// cofactors `c` with `Σ c[i]·gens[i] = 1`.
pub fn buchberger_with_certificate<F: Field>(
    ring: &F,
    nvars: usize,
    gens: &[Polynomial<F>],
    order: &TermOrder,
) -> Result<(StrongBasis<F>, Option<Vec<Polynomial<F>>>)> {
    buchberger_impl(ring, nvars, gens, order, true)
}

fn buchberger_impl<F: Field>(
    ring: &F,
    nvars: usize,
    gens: &[Polynomial<F>],
    order: &TermOrder,
    track: bool,
) -> Result<(StrongBasis<F>, Option<Vec<Polynomial<F>>>)> {
    check_inputs(ring, nvars, gens, order)?;
    let mut engine = Engine::new(ring, order, track);
    for (k, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let rep = track.then(|| {
            let mut e = vec![Polynomial::zero(ring, nvars); gens.len()];
            e[k] = Polynomial::one(ring, nvars);
            e
        });
        engine.insert(g.clone(), rep, g.total_degree().unwrap_or(0))?;
    }
    if let Some(k) = engine.run()? {
        let cert = engine.reps.as_ref().map(|reps| reps[k].clone());
        let basis = StrongBasis {
            ring: ring.clone(),
            nvars,
            order: order.clone(),
            elements: vec![Polynomial::one(ring, nvars)],
            certified: true,
        };
        return Ok((basis, cert));
    }
    let elements = reduce_basis(engine.basis, order)?;
    let mut basis = StrongBasis { ring: ring.clone(), nvars, order: order.clone(), elements, certified: false };
    if !is_groebner_basis(&basis.elements, order)? {
        return Err(Error::InvariantViolation("Buchberger output failed S-polynomial certification".into()));
    }
    basis.certified = true;
    Ok((basis, None))
}

/// Minimalizes, inter-reduces, normalizes to monic, and sorts descending.
fn reduce_basis<F: Field>(basis: Vec<Polynomial<F>>, order: &TermOrder) -> Result<Vec<Polynomial<F>>> {
    let mut sorted = basis;
    sorted.sort_by(|a, b| cmp_leading(order, a, b));
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for g in sorted {
        let lt = g.leading_term(order)?;
        let redundant = minimal
            .iter()
            .any(|h| h.leading_term(order).map(|s| s.divides(&lt)).unwrap_or(false));
        if !redundant {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<Polynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, h)| h.clone())
            .collect();
        let r = normal_form(g, &others, order)?;
        let inv = r.ring().inv(&r.leading_coeff(order)?)?;
        out.push(r.scale(&inv));
    }
    out.sort_by(|a, b| cmp_leading(order, b, a));
    Ok(out)
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>], order: &TermOrder) -> Result<bool> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order)?;
            if !normal_form(&s, basis, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
