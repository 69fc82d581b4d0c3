//! Univariate factorization over a tower level: squarefree decomposition,
//! distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting.

use num::BigUint;

use crate::error::{Error, Result};
use crate::ffield::primes::prime_divisors;
use crate::ffield::tower::{FFElement, FiniteField};
use crate::poly::{PolyRing, UniPoly};
use crate::ring::{EuclideanRing, Ring};

pub type Factorization = Vec<(UniPoly<FFElement>, u32)>;

fn ring(field: &FiniteField) -> PolyRing<FiniteField> {
    PolyRing::new(field.clone(), "x")
}

/// `x^(|K|^k) mod f`, by `k` repeated `|K|`-th powers starting from `h`.
fn frobenius(
    r: &PolyRing<FiniteField>,
    h: &UniPoly<FFElement>,
    f: &UniPoly<FFElement>,
    k: usize,
) -> UniPoly<FFElement> {
    let q = r.field().order();
    let mut out = r.rem(h, f);
    for _ in 0..k {
        out = r.pow_mod(&out, &q, f);
    }
    out
}

/// Rabin's irreducibility test.
pub fn is_irreducible(field: &FiniteField, f: &UniPoly<FFElement>) -> bool {
    let r = ring(field);
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = r.monic(f);
    let x = r.x();
    for d in prime_divisors(n) {
        let h = frobenius(&r, &x, &f, n / d);
        if !r.is_one(&r.gcd(&r.sub(&h, &x), &f)) {
            return false;
        }
    }
    frobenius(&r, &x, &f, n) == r.rem(&x, &f)
}

/// Replaces every coefficient `c` of `x^(jp)` by `c^(1/p)` at `x^j`.
fn pth_root_poly(r: &PolyRing<FiniteField>, f: &UniPoly<FFElement>) -> UniPoly<FFElement> {
    let p = r.field().characteristic() as usize;
    r.from_coeffs(f.coeffs().iter().step_by(p).map(|c| r.field().pth_root(c)).collect())
}

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree parts with their multiplicities.
pub fn squarefree_decomposition(field: &FiniteField, f: &UniPoly<FFElement>) -> Factorization {
    let r = ring(field);
    let f = r.monic(f);
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = r.gcd(&f, &r.derivative(&f));
    let mut w = r.exact_div(&f, &c);
    let mut i = 1u32;
    while !r.is_one(&w) {
        let y = r.gcd(&w, &c);
        let z = r.exact_div(&w, &y);
        if !r.is_one(&z) {
            out.push((z, i));
        }
        i += 1;
        c = r.exact_div(&c, &y);
        w = y;
    }
    if !r.is_one(&c) {
        let p = field.characteristic() as u32;
        for (g, m) in squarefree_decomposition(field, &pth_root_poly(&r, &c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a squarefree monic polynomial into products of irreducible
/// factors of equal degree; returns `(product, degree)` pairs.
pub fn distinct_degree(field: &FiniteField, f: &UniPoly<FFElement>) -> Vec<(UniPoly<FFElement>, usize)> {
    let r = ring(field);
    let q = field.order();
    let mut rest = r.monic(f);
    let x = r.x();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut i = 0;
    while rest.degree().unwrap_or(0) >= 2 * (i + 1) {
        i += 1;
        h = r.pow_mod(&h, &q, &rest);
        let g = r.gcd(&r.sub(&h, &x), &rest);
        if !r.is_one(&g) {
            rest = r.exact_div(&rest, &g);
            h = r.rem(&h, &rest);
            out.push((g, i));
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    out
}

/// Cantor-Zassenhaus splitting of a monic product of distinct irreducible
/// factors, all of degree `d`.
pub fn equal_degree(
    field: &FiniteField,
    f: &UniPoly<FFElement>,
    d: usize,
    rng: &mut impl rand::Rng,
) -> Vec<UniPoly<FFElement>> {
    let r = ring(field);
    let n = f.degree().unwrap_or(0);
    if n <= d {
        return vec![r.monic(f)];
    }
    let q = field.order();
    let p = field.characteristic();
    loop {
        let a = r.from_coeffs((0..n).map(|_| field.random_element(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace of F_{q^d} over F_2 applied to a
            let k = field.degree() * d;
            let mut t = r.rem(&a, f);
            let mut acc = t.clone();
            for _ in 1..k {
                t = r.rem(&r.mul(&t, &t), f);
                acc = r.add(&acc, &t);
            }
            acc
        } else {
            let e: BigUint = (num::pow(q.clone(), d) - 1u32) / 2u32;
            r.sub(&r.pow_mod(&a, &e, f), &r.one())
        };
        let g = r.gcd(&b, f);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(field, &g, d, rng);
            out.extend(equal_degree(field, &r.exact_div(f, &g), d, rng));
            return out;
        }
    }
}

/// Canonical order of factors: by degree, then by the negated coefficient
/// vector from the constant term up. Linear factors `x - a` therefore come
/// out in enumeration order of their roots `a`.
pub fn canonical_sort(field: &FiniteField, factors: &mut Factorization) {
    factors.sort_by(|(f, m), (g, n)| {
        let key = |h: &UniPoly<FFElement>| -> Vec<FFElement> {
            h.coeffs().iter().map(|c| field.neg(c)).collect()
        };
        f.degree().cmp(&g.degree()).then_with(|| key(f).cmp(&key(g))).then(m.cmp(n))
    });
}

/// Complete factorization of `f` into monic irreducible factors with
/// multiplicities, in canonical order.
pub fn factor_univariate(
    field: &FiniteField,
    f: &UniPoly<FFElement>,
    rng: &mut impl rand::Rng,
) -> Result<Factorization> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(field, f) {
        for (prod, d) in distinct_degree(field, &part) {
            for g in equal_degree(field, &prod, d, rng) {
                out.push((g, mult));
            }
        }
    }
    canonical_sort(field, &mut out);
    Ok(out)
}

/// Roots of `f` in the field itself, ascending in enumeration order.
pub fn roots_in_field(
    field: &FiniteField,
    f: &UniPoly<FFElement>,
    rng: &mut impl rand::Rng,
) -> Result<Vec<FFElement>> {
    Ok(factor_univariate(field, f, rng)?
        .into_iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| field.neg(&g.coeffs()[0]))
        .collect())
}
