mod common;

use common::{random_uni, uni};
use nullstellensatz::ffield::{
    factor_univariate, is_irreducible, roots_in_field, squarefree_decomposition, FFElement,
    FieldTower, FiniteField,
};
use nullstellensatz::poly::{PolyRing, UniPoly};
use nullstellensatz::ring::{EuclideanRing, Field, Ring};
use nullstellensatz::Error;
use num::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn f9() -> (FieldTower, FFElement) {
    let f3 = FiniteField::prime(3).unwrap();
    FieldTower::new(3).unwrap().adjoin_root(&uni(&f3, &[1, 0, 1])).unwrap()
}

fn sample_fields() -> Vec<FiniteField> {
    let mut out: Vec<FiniteField> = [2u64, 3, 5, 7].iter().map(|&p| FiniteField::prime(p).unwrap()).collect();
    out.push(f9().0.top());
    let (t4, _) = FieldTower::new(2).unwrap().quadratic_extension().unwrap();
    let (t16, _) = t4.quadratic_extension().unwrap();
    out.push(t16.top());
    out
}

#[test]
fn prime_field_examples() {
    let f5 = FiniteField::prime(5).unwrap();
    assert_eq!(f5.inv(&f5.from_int(2)).unwrap(), f5.from_int(3));
    assert_eq!(f5.inv(&f5.zero()), Err(Error::DivisionByZero));
    assert!(matches!(FieldTower::new(4), Err(Error::Usage(_))));
}

#[test]
fn extension_arithmetic() {
    let (tower, t) = f9();
    let f = tower.top();
    assert_eq!(f.mul(&t, &t), f.from_int(2));
    assert_eq!(f.order(), BigUint::from(9u32));
    assert_eq!(f.format_element(&f.add(&t, &f.one())), "t1 + 1");
    assert_eq!(tower.describe(), vec!["ext t1: t1^2 + 1".to_string()]);
}

#[test]
fn adjoin_root_examples() {
    let f3 = FiniteField::prime(3).unwrap();
    let base = FieldTower::new(3).unwrap();
    assert!(matches!(base.adjoin_root(&uni(&f3, &[2, 0, 1])), Err(Error::Reducible(_))));
    let (same, root) = base.adjoin_root(&uni(&f3, &[1, 1])).unwrap();
    assert_eq!(same, base);
    assert_eq!(root, f3.from_int(2));

    let (t9, _) = f9();
    let f9 = t9.top();
    // x^3 + 2x + 2 stays irreducible over F_9 since 3 and 2 are coprime
    let cubic = PolyRing::new(f9.clone(), "x")
        .from_coeffs(vec![f9.from_int(2), f9.from_int(2), f9.zero(), f9.one()]);
    let (t729, r) = t9.adjoin_root(&cubic).unwrap();
    assert_eq!(t729.total_degree(), 6);
    assert_eq!(t729.depth(), 2);
    let top = t729.top();
    let lifted: Vec<_> = cubic.coeffs().iter().map(|c| f9.embed(c, &top).unwrap()).collect();
    let g = PolyRing::new(top.clone(), "x").from_coeffs(lifted);
    assert!(PolyRing::new(top.clone(), "x").eval(&g, &r).is_zero_elem(&top));
}

trait ZeroCheck {
    fn is_zero_elem(&self, f: &FiniteField) -> bool;
}

impl ZeroCheck for FFElement {
    fn is_zero_elem(&self, f: &FiniteField) -> bool {
        f.is_zero(self)
    }
}

#[test]
fn enumeration_order_is_base_p_digits() {
    let (tower, _) = f9();
    let f = tower.top();
    let all: Vec<_> = f.elements().collect();
    assert_eq!(all.len(), 9);
    assert_eq!(all[0], f.zero());
    assert_eq!(all[1], f.one());
    assert_eq!(all[3], f.generator());
    assert_eq!(all[5], f.element(&[2, 1]).unwrap());
    assert!(all.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn field_axioms_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for field in sample_fields() {
        for _ in 0..500 {
            let a = field.random_element(&mut rng);
            let b = field.random_element(&mut rng);
            let c = field.random_element(&mut rng);
            assert_eq!(field.mul(&field.mul(&a, &b), &c), field.mul(&a, &field.mul(&b, &c)));
            assert_eq!(
                field.mul(&a, &field.add(&b, &c)),
                field.add(&field.mul(&a, &b), &field.mul(&a, &c))
            );
            assert_eq!(field.add(&a, &b), field.add(&b, &a));
            assert_eq!(field.mul(&a, &b), field.mul(&b, &a));
            assert!(field.is_zero(&field.add(&a, &field.neg(&a))));
            if !field.is_zero(&a) {
                assert_eq!(field.mul(&a, &field.inv(&a).unwrap()), field.one());
            }
        }
    }
}

#[test]
fn frobenius_fixes_prime_field() {
    let (tower, t) = f9();
    let f = tower.top();
    let p = BigUint::from(3u32);
    assert_eq!(f.pow_big(&f.from_int(2), &p), f.from_int(2));
    assert_ne!(f.pow_big(&t, &p), t);
    assert_eq!(f.pow_big(&t, &f.order()), t);
    for a in f.elements() {
        assert_eq!(f.pow_big(&f.pth_root(&a), &p), a);
    }
}

#[test]
fn xgcd_bezout_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for field in sample_fields() {
        let r = PolyRing::new(field.clone(), "x");
        for _ in 0..500 {
            let f = random_uni(&field, 6, &mut rng);
            let g = random_uni(&field, 6, &mut rng);
            if f.is_zero() && g.is_zero() {
                assert_eq!(r.extended_gcd(&f, &g), Err(Error::BothZero));
                continue;
            }
            let (d, u, v) = r.extended_gcd(&f, &g).unwrap();
            assert!(r.is_monic(&d));
            assert_eq!(r.add(&r.mul(&u, &f), &r.mul(&v, &g)), d);
            assert!(r.divides(&d, &f) && r.divides(&d, &g));
        }
    }
}

#[test]
fn factorization_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f2 = FiniteField::prime(2).unwrap();
    let fac = factor_univariate(&f2, &uni(&f2, &[0, 1, 1]), &mut rng).unwrap();
    assert_eq!(fac, vec![(uni(&f2, &[0, 1]), 1), (uni(&f2, &[1, 1]), 1)]);

    let f3 = FiniteField::prime(3).unwrap();
    let fac = factor_univariate(&f3, &uni(&f3, &[1, 0, 1]), &mut rng).unwrap();
    assert_eq!(fac, vec![(uni(&f3, &[1, 0, 1]), 1)]);
    let fac = factor_univariate(&f3, &uni(&f3, &[-1, 0, 1]), &mut rng).unwrap();
    assert_eq!(fac, vec![(uni(&f3, &[-1, 1]), 1), (uni(&f3, &[1, 1]), 1)]);
    assert_eq!(roots_in_field(&f3, &uni(&f3, &[-1, 0, 1]), &mut rng).unwrap(), vec![f3.one(), f3.from_int(2)]);

    let f5 = FiniteField::prime(5).unwrap();
    assert_eq!(factor_univariate(&f5, &uni(&f5, &[3]), &mut rng), Err(Error::ConstantPolynomial));

    // (x + 1)^3 (x^2 + 1) over F_3: multiplicity from the p-th power part
    let f = PolyRing::new(f3.clone(), "x").mul(&uni(&f3, &[1, 3, 3, 1]), &uni(&f3, &[1, 0, 1]));
    let fac = factor_univariate(&f3, &f, &mut rng).unwrap();
    assert_eq!(fac, vec![(uni(&f3, &[1, 1]), 3), (uni(&f3, &[1, 0, 1]), 1)]);
    let sqf = squarefree_decomposition(&f3, &f);
    assert!(sqf.iter().any(|(g, m)| *m == 3 && *g == uni(&f3, &[1, 1])));
}

fn check_factorization(field: &FiniteField, f: &UniPoly<FFElement>, rng: &mut ChaCha8Rng) {
    let r = PolyRing::new(field.clone(), "x");
    let fac = factor_univariate(field, f, rng).unwrap();
    let mut prod = r.constant(f.leading_coeff().unwrap().clone());
    for (g, m) in &fac {
        assert!(r.is_monic(g));
        assert!(is_irreducible(field, g), "{} reducible", r.display(g));
        prod = r.mul(&prod, &r.pow(g, *m as u64));
    }
    assert_eq!(&prod, f);
    let again = factor_univariate(field, f, &mut ChaCha8Rng::seed_from_u64(rng.gen())).unwrap();
    assert_eq!(again, fac, "factorization must not depend on randomness");
}

#[test]
fn factorization_product_property() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for p in [2u64, 3, 5, 7] {
        let field = FiniteField::prime(p).unwrap();
        let mut done = 0;
        while done < 100 {
            let f = random_uni(&field, 8, &mut rng);
            if f.degree().unwrap_or(0) == 0 {
                continue;
            }
            check_factorization(&field, &f, &mut rng);
            done += 1;
        }
    }
    let f9 = f9().0.top();
    for _ in 0..50 {
        let f = random_uni(&f9, 6, &mut rng);
        if f.degree().unwrap_or(0) > 0 {
            check_factorization(&f9, &f, &mut rng);
        }
    }
}

#[test]
fn irreducibility_matches_root_count_for_small_degrees() {
    let f5 = FiniteField::prime(5).unwrap();
    let r = PolyRing::new(f5.clone(), "x");
    for c0 in 0..5 {
        for c1 in 0..5 {
            for c2 in 0..5 {
                let g = uni(&f5, &[c0, c1, c2, 1]);
                let has_root = f5.elements().any(|a| f5.is_zero(&r.eval(&g, &a)));
                assert_eq!(is_irreducible(&f5, &g), !has_root);
            }
        }
    }
}
