use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigUint, Integer, ToPrimitive, Zero};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::ffield::factor;
use crate::ffield::primes::{is_prime, mul_mod, pow_mod};
use crate::poly::{PolyRing, UniPoly};
use crate::ring::{field_euclidean, CoeffText, EuclideanRing, Field, Ring};

type Coords = SmallVec<[u64; 4]>;

/// An element of a finite field in a tower, as coordinates over `F_p`.
///
/// Coordinate `i + d1*(j + d2*(...))` multiplies `t1^i * t2^j * ...`; a level
/// element is thus its coefficient chunks over the level below, and
/// embedding into a higher level pads with zeros. The ordering is the
/// enumeration order: the constant coordinate is the least significant digit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FFElement {
    coords: Coords,
}

impl FFElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl Ord for FFElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords
            .len()
            .cmp(&other.coords.len())
            .then_with(|| self.coords.iter().rev().cmp(other.coords.iter().rev()))
    }
}

impl PartialOrd for FFElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FF{:?}", self.coords.as_slice())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct Level {
    name: String,
    degree: usize,
    /// Monic, ascending, over the level below.
    min_poly: Vec<FFElement>,
}

#[derive(Debug, PartialEq, Eq)]
struct TowerData {
    p: u64,
    levels: Vec<Level>,
    /// `sizes[k]` is the degree of level `k` over `F_p`.
    sizes: Vec<usize>,
}

/// A chain of extensions `F_p ⊂ F_p(t1) ⊂ F_p(t1, t2) ⊂ ...`.
///
/// Towers are immutable; adjoining a root yields a new tower sharing the
/// old levels, so elements of the old top level embed unchanged.
#[derive(Clone)]
pub struct FieldTower {
    data: Arc<TowerData>,
}

impl FieldTower {
    /// The prime field `F_p`; `p` must be a prime below `2^63`.
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 || !is_prime(p) {
            return Err(Error::Usage(format!("{p} is not a supported prime")));
        }
        Ok(FieldTower { data: Arc::new(TowerData { p, levels: Vec::new(), sizes: vec![1] }) })
    }

    pub fn characteristic(&self) -> u64 {
        self.data.p
    }

    /// Number of extensions above `F_p`.
    pub fn depth(&self) -> usize {
        self.data.levels.len()
    }

    /// Degree of the top level over `F_p`.
    pub fn total_degree(&self) -> usize {
        *self.data.sizes.last().unwrap()
    }

    pub fn top(&self) -> FiniteField {
        self.level(self.depth())
    }

    pub fn level(&self, level: usize) -> FiniteField {
        assert!(level <= self.depth());
        FiniteField { tower: self.clone(), level }
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.data.levels.iter().map(|l| l.name.clone()).collect()
    }

    /// Minimal polynomial of generator `k` (1-based) over level `k - 1`.
    pub fn min_poly(&self, k: usize) -> UniPoly<FFElement> {
        let level = &self.data.levels[k - 1];
        PolyRing::new(self.level(k - 1), level.name.clone()).from_coeffs(level.min_poly.clone())
    }

    /// One line per level: `ext <name>: <minimal polynomial>`.
    pub fn describe(&self) -> Vec<String> {
        (1..=self.depth())
            .map(|k| {
                let ring = PolyRing::new(self.level(k - 1), self.data.levels[k - 1].name.clone());
                format!("ext {}: {}", self.data.levels[k - 1].name, ring.display(&self.min_poly(k)))
            })
            .collect()
    }

    /// True if `self` is `other` or an extension of it.
    pub fn extends(&self, other: &FieldTower) -> bool {
        self.data.p == other.data.p
            && other.depth() <= self.depth()
            && (Arc::ptr_eq(&self.data, &other.data)
                || self.data.levels[..other.depth()] == other.data.levels[..])
    }

    /// Adjoins a root of `g`, an irreducible polynomial over the top level.
    ///
    /// Linear `g` needs no extension and returns the tower unchanged.
    pub fn adjoin_root(&self, g: &UniPoly<FFElement>) -> Result<(FieldTower, FFElement)> {
        let top = self.top();
        let ring = PolyRing::new(top.clone(), "x");
        match g.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(1) => {
                let root = top.neg(&top.div(&g.coeffs()[0], &g.coeffs()[1])?);
                return Ok((self.clone(), root));
            }
            _ => {}
        }
        if g.coeffs().iter().any(|c| c.coords.len() != top.degree()) {
            return Err(Error::DomainMismatch);
        }
        let g = ring.monic(g);
        if !factor::is_irreducible(&top, &g) {
            return Err(Error::Reducible(ring.display(&g)));
        }
        let degree = g.degree().unwrap();
        let mut levels = self.data.levels.clone();
        levels.push(Level {
            name: format!("t{}", self.depth() + 1),
            degree,
            min_poly: g.coeffs().to_vec(),
        });
        let mut sizes = self.data.sizes.clone();
        sizes.push(self.total_degree() * degree);
        let tower = FieldTower { data: Arc::new(TowerData { p: self.data.p, levels, sizes }) };
        let root = tower.top().generator();
        Ok((tower, root))
    }

    /// Adjoins a root of the first monic irreducible quadratic over the top
    /// level, in enumeration order of its coefficients.
    pub fn quadratic_extension(&self) -> Result<(FieldTower, FFElement)> {
        let top = self.top();
        let ring = PolyRing::new(top.clone(), "x");
        for c1 in top.elements() {
            for c0 in top.elements() {
                let g = ring.from_coeffs(vec![c0.clone(), c1.clone(), top.one()]);
                if factor::is_irreducible(&top, &g) {
                    return self.adjoin_root(&g);
                }
            }
        }
        Err(Error::InvariantViolation("no irreducible quadratic found".into()))
    }
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}

impl Eq for FieldTower {}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldTower(p={}, {:?})", self.data.p, self.describe())
    }
}

/// One level of a [`FieldTower`], viewed as a field in its own right.
#[derive(Clone)]
pub struct FiniteField {
    tower: FieldTower,
    level: usize,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level
            && self.tower.data.p == other.tower.data.p
            && (Arc::ptr_eq(&self.tower.data, &other.tower.data)
                || self.tower.data.levels[..self.level] == other.tower.data.levels[..self.level])
    }
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.tower.data.p, self.degree())
    }
}

impl FiniteField {
    /// The prime field `F_p` as a one-level tower.
    pub fn prime(p: u64) -> Result<Self> {
        Ok(FieldTower::new(p)?.top())
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    /// Number of extensions above `F_p` included in this field.
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn characteristic(&self) -> u64 {
        self.tower.data.p
    }

    /// Degree over `F_p`.
    pub fn degree(&self) -> usize {
        self.tower.data.sizes[self.level]
    }

    /// Number of elements.
    pub fn order(&self) -> BigUint {
        num::pow(BigUint::from(self.characteristic()), self.degree())
    }

    /// The tower cut off at this level, so that this field is its top.
    pub fn truncated_tower(&self) -> FieldTower {
        self.tower.level_prefix(self.level)
    }

    /// The subfield one level down.
    pub fn base_field(&self) -> Option<FiniteField> {
        self.level.checked_sub(1).map(|l| self.tower.level(l))
    }

    /// The generator of this level (`t_k`); the element 1 at level 0.
    pub fn generator(&self) -> FFElement {
        if self.level == 0 {
            return self.one();
        }
        let mut c: Coords = smallvec![0; self.degree()];
        c[self.tower.data.sizes[self.level - 1]] = 1;
        FFElement { coords: c }
    }

    /// Element from `F_p` coordinates; missing coordinates are zero.
    pub fn element(&self, coords: &[u64]) -> Result<FFElement> {
        if coords.len() > self.degree() {
            return Err(Error::LengthMismatch(coords.len(), self.degree()));
        }
        let p = self.characteristic();
        let mut c: Coords = coords.iter().map(|x| x % p).collect();
        c.resize(self.degree(), 0);
        Ok(FFElement { coords: c })
    }

    /// True if `a` is a well-formed element of this field.
    pub fn contains(&self, a: &FFElement) -> bool {
        a.coords.len() == self.degree() && a.coords.iter().all(|&c| c < self.characteristic())
    }

    /// Embeds an element of `self` into `target`, which must extend `self`.
    pub fn embed(&self, a: &FFElement, target: &FiniteField) -> Result<FFElement> {
        if target.level < self.level || !target.tower.extends(&self.tower.level_prefix(self.level)) {
            return Err(Error::DomainMismatch);
        }
        let mut c = a.coords.clone();
        c.resize(target.degree(), 0);
        Ok(FFElement { coords: c })
    }

    /// The element with enumeration index `idx`: base-`p` digits of `idx`
    /// as coordinates, least significant first.
    pub fn element_from_index(&self, idx: &BigUint) -> FFElement {
        let p = BigUint::from(self.characteristic());
        let mut rest = idx.clone();
        let mut c: Coords = smallvec![0; self.degree()];
        for slot in c.iter_mut() {
            let (q, r) = rest.div_rem(&p);
            *slot = r.to_u64().unwrap();
            rest = q;
        }
        FFElement { coords: c }
    }

    /// All elements in enumeration order: `0, 1, ..., p-1, t, t+1, ...`.
    pub fn elements(&self) -> impl Iterator<Item = FFElement> + '_ {
        let total = self.order();
        let mut idx = BigUint::zero();
        std::iter::from_fn(move || {
            if idx >= total {
                return None;
            }
            let e = self.element_from_index(&idx);
            idx += 1u32;
            Some(e)
        })
    }

    pub fn random_element(&self, rng: &mut impl rand::Rng) -> FFElement {
        let p = self.characteristic();
        FFElement { coords: (0..self.degree()).map(|_| rng.gen_range(0..p)).collect() }
    }

    pub fn pow_big(&self, a: &FFElement, e: &BigUint) -> FFElement {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// The unique `p`-th root (inverse Frobenius).
    pub fn pth_root(&self, a: &FFElement) -> FFElement {
        let e = num::pow(BigUint::from(self.characteristic()), self.degree() - 1);
        self.pow_big(a, &e)
    }

    /// Text of an element as a polynomial in the generator names.
    pub fn format_element(&self, a: &FFElement) -> String {
        let names = self.tower.generator_names();
        let degrees: Vec<usize> = self.tower.data.levels[..self.level].iter().map(|l| l.degree).collect();
        let mut parts = Vec::new();
        for (idx, &c) in a.coords.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mut rest = idx;
            let mut factors = Vec::new();
            for (name, &d) in names.iter().zip(&degrees) {
                let e = rest % d;
                rest /= d;
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            let term = factors.join("*");
            parts.push(match (c, term.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => term,
                (_, false) => format!("{c}*{term}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    fn add_slices(&self, a: &[u64], b: &[u64]) -> Coords {
        let p = self.characteristic();
        a.iter()
            .zip(b)
            .map(|(x, y)| {
                let s = x + y;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect()
    }

    fn sub_slices(&self, a: &[u64], b: &[u64]) -> Coords {
        let p = self.characteristic();
        a.iter().zip(b).map(|(x, y)| if x >= y { x - y } else { x + p - y }).collect()
    }

    fn mul_at(&self, level: usize, a: &[u64], b: &[u64]) -> Coords {
        let p = self.characteristic();
        if level == 0 {
            return smallvec![mul_mod(a[0], b[0], p)];
        }
        let data = &self.tower.data;
        let lv = &data.levels[level - 1];
        let d = lv.degree;
        let s = data.sizes[level - 1];
        if level == 1 {
            let mut prod = vec![0u64; 2 * d - 1];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = ((prod[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
                }
            }
            for m in (d..2 * d - 1).rev() {
                let c = prod[m];
                if c == 0 {
                    continue;
                }
                for i in 0..d {
                    let sub = mul_mod(c, lv.min_poly[i].coords[0], p);
                    let k = m - d + i;
                    prod[k] = if prod[k] >= sub { prod[k] - sub } else { prod[k] + p - sub };
                }
            }
            prod.truncate(d);
            return prod.into_iter().collect();
        }
        let lower = data.sizes[level - 1];
        let zero: Coords = smallvec![0; lower];
        let mut prod: Vec<Coords> = vec![zero; 2 * d - 1];
        for i in 0..d {
            let ai = &a[i * s..(i + 1) * s];
            if ai.iter().all(|&x| x == 0) {
                continue;
            }
            for j in 0..d {
                let bj = &b[j * s..(j + 1) * s];
                if bj.iter().all(|&x| x == 0) {
                    continue;
                }
                let m = self.mul_at(level - 1, ai, bj);
                prod[i + j] = self.add_slices(&prod[i + j], &m);
            }
        }
        for m in (d..2 * d - 1).rev() {
            let c = std::mem::replace(&mut prod[m], smallvec![0; lower]);
            if c.iter().all(|&x| x == 0) {
                continue;
            }
            for i in 0..d {
                let t = self.mul_at(level - 1, &c, &lv.min_poly[i].coords);
                prod[m - d + i] = self.sub_slices(&prod[m - d + i], &t);
            }
        }
        prod.truncate(d);
        prod.into_iter().flatten().collect()
    }

    fn inv_at(&self, a: &FFElement) -> Result<FFElement> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let p = self.characteristic();
        if self.level == 0 {
            return Ok(FFElement { coords: smallvec![pow_mod(a.coords[0], p - 2, p)] });
        }
        let base = self.base_field().unwrap();
        let s = base.degree();
        let ring = PolyRing::new(base.clone(), "t");
        let a_poly = ring.from_coeffs(
            a.coords.chunks(s).map(|c| FFElement { coords: c.iter().copied().collect() }).collect(),
        );
        let m = self.tower.min_poly(self.level);
        let (g, u, _) = ring.xgcd(&a_poly, &m);
        if !ring.is_one(&g) {
            return Err(Error::InvariantViolation("minimal polynomial is not irreducible".into()));
        }
        let mut coords: Coords = u.coeffs().iter().flat_map(|c| c.coords.iter().copied()).collect();
        coords.resize(self.degree(), 0);
        Ok(FFElement { coords })
    }
}

impl FieldTower {
    /// The tower truncated to its first `level` extensions.
    fn level_prefix(&self, level: usize) -> FieldTower {
        if level == self.depth() {
            return self.clone();
        }
        FieldTower {
            data: Arc::new(TowerData {
                p: self.data.p,
                levels: self.data.levels[..level].to_vec(),
                sizes: self.data.sizes[..=level].to_vec(),
            }),
        }
    }
}

impl Ring for FiniteField {
    type Elem = FFElement;

    fn zero(&self) -> FFElement {
        FFElement { coords: smallvec![0; self.degree()] }
    }

    fn one(&self) -> FFElement {
        let mut c: Coords = smallvec![0; self.degree()];
        c[0] = 1;
        FFElement { coords: c }
    }

    fn from_int(&self, n: i64) -> FFElement {
        let p = self.characteristic() as i128;
        let mut c: Coords = smallvec![0; self.degree()];
        c[0] = (n as i128).rem_euclid(p) as u64;
        FFElement { coords: c }
    }

    fn is_zero(&self, a: &FFElement) -> bool {
        a.coords.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &FFElement, b: &FFElement) -> FFElement {
        debug_assert_eq!(a.coords.len(), b.coords.len());
        FFElement { coords: self.add_slices(&a.coords, &b.coords) }
    }

    fn sub(&self, a: &FFElement, b: &FFElement) -> FFElement {
        debug_assert_eq!(a.coords.len(), b.coords.len());
        FFElement { coords: self.sub_slices(&a.coords, &b.coords) }
    }

    fn neg(&self, a: &FFElement) -> FFElement {
        let p = self.characteristic();
        FFElement { coords: a.coords.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect() }
    }

    fn mul(&self, a: &FFElement, b: &FFElement) -> FFElement {
        debug_assert_eq!(a.coords.len(), b.coords.len());
        FFElement { coords: self.mul_at(self.level, &a.coords, &b.coords) }
    }

    fn coeff_text(&self, a: &FFElement) -> CoeffText {
        let nonzero = a.coords.iter().filter(|&&c| c != 0).count();
        CoeffText { negative: false, body: self.format_element(a), compound: nonzero > 1 }
    }
}

field_euclidean!(FiniteField);

impl Field for FiniteField {
    fn inv(&self, a: &FFElement) -> Result<FFElement> {
        self.inv_at(a)
    }

    fn characteristic(&self) -> u64 {
        self.tower.data.p
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FFElement> {
        let p = BigInt::from(self.characteristic());
        let reduce = |x: &BigInt| x.mod_floor(&p).to_i64().unwrap();
        let d = self.from_int(reduce(den));
        if self.is_zero(&d) {
            return Err(Error::DivisionByZero);
        }
        self.div(&self.from_int(reduce(num)), &d)
    }
}
