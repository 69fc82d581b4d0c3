#![allow(dead_code)]

use nullstellensatz::ffield::{FFElement, FiniteField, Rationals};
use nullstellensatz::poly::{ExponentVector, PolyRing, Polynomial, UniPoly};
use nullstellensatz::ring::Ring;
use rand::Rng;

/// Polynomial over `F_p` from `(coefficient, exponents)` pairs.
pub fn fp_poly(field: &FiniteField, terms: &[(i64, &[u32])]) -> Polynomial<FiniteField> {
    let n = terms.first().map(|(_, e)| e.len()).unwrap_or(0);
    Polynomial::from_terms(
        field,
        n,
        terms.iter().map(|(c, e)| (ExponentVector::new(e.iter().copied()), field.from_int(*c))),
    )
}

pub fn q_poly(terms: &[(i64, &[u32])]) -> Polynomial<Rationals> {
    let n = terms.first().map(|(_, e)| e.len()).unwrap_or(0);
    Polynomial::from_terms(
        &Rationals,
        n,
        terms.iter().map(|(c, e)| (ExponentVector::new(e.iter().copied()), Rationals.from_int(*c))),
    )
}

/// Univariate polynomial from ascending integer coefficients.
pub fn uni(field: &FiniteField, coeffs: &[i64]) -> UniPoly<FFElement> {
    PolyRing::new(field.clone(), "x").from_coeffs(coeffs.iter().map(|&c| field.from_int(c)).collect())
}

pub fn random_poly(
    field: &FiniteField,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
    rng: &mut impl Rng,
) -> Polynomial<FiniteField> {
    let nterms = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..nterms)
        .map(|_| {
            let mut e = vec![0u32; nvars];
            let mut budget = rng.gen_range(0..=max_degree);
            while budget > 0 && nvars > 0 {
                let v = rng.gen_range(0..nvars);
                e[v] += 1;
                budget -= 1;
            }
            (ExponentVector::new(e), field.random_element(rng))
        })
        .collect();
    Polynomial::from_terms(field, nvars, terms)
}

pub fn random_uni(field: &FiniteField, max_degree: usize, rng: &mut impl Rng) -> UniPoly<FFElement> {
    let d = rng.gen_range(0..=max_degree);
    PolyRing::new(field.clone(), "x").from_coeffs((0..=d).map(|_| field.random_element(rng)).collect())
}
