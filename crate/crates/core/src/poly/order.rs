use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponents of a term `x1^e1 * ... * xn^en`.
///
/// The derived `Ord` is plain lexicographic with `x1` most significant; the
/// polynomial map is keyed by it, so iterating a polynomial backwards visits
/// its support in descending default order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(SmallVec<[u32; 4]>);

impl ExponentVector {
    pub fn new(exponents: impl IntoIterator<Item = u32>) -> Self {
        ExponentVector(exponents.into_iter().collect())
    }

    /// The term `1` in `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, nvars))
    }

    /// The term `x_{var+1}^exp`.
    pub fn unit(nvars: usize, var: usize, exp: u32) -> Self {
        let mut e = Self::zero(nvars);
        e.0[var] = exp;
        e
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = SmallVec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(ExponentVector(out))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drop the variable at `var`.
    pub fn remove(&self, var: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(var);
        ExponentVector(v)
    }

    /// Insert a variable with exponent `exp` at position `var`.
    pub fn insert(&self, var: usize, exp: u32) -> Self {
        let mut v = self.0.clone();
        v.insert(var, exp);
        ExponentVector(v)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    /// Compare weighted degree first, then lex by priority.
    WeightedLex(Vec<u64>),
}

/// A term order: lex or weighted lex over an explicit variable priority.
///
/// `priority[0]` is the most significant variable. Weights are indexed by
/// variable, not by priority position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl TermOrder {
    /// Lex with `x1 > x2 > ... > xn`.
    pub fn lex(nvars: usize) -> Self {
        TermOrder { kind: OrderKind::Lex, priority: (0..nvars).collect() }
    }

    /// Lex with the given priority (a permutation of `0..nvars`).
    pub fn lex_with_priority(priority: Vec<usize>) -> Result<Self> {
        check_permutation(&priority)?;
        Ok(TermOrder { kind: OrderKind::Lex, priority })
    }

    pub fn weighted_lex(weights: Vec<u64>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::Usage("term-order weights must be positive".into()));
        }
        let n = weights.len();
        Ok(TermOrder { kind: OrderKind::WeightedLex(weights), priority: (0..n).collect() })
    }

    pub fn weighted_lex_with_priority(weights: Vec<u64>, priority: Vec<usize>) -> Result<Self> {
        check_permutation(&priority)?;
        if weights.len() != priority.len() {
            return Err(Error::LengthMismatch(weights.len(), priority.len()));
        }
        let mut order = Self::weighted_lex(weights)?;
        order.priority = priority;
        Ok(order)
    }

    /// Lex with `x1` least significant: `x2 > x3 > ... > xn > x1`.
    pub fn elimination_x1_last(nvars: usize) -> Self {
        let priority = (1..nvars).chain(std::iter::once(0).take(nvars.min(1))).collect();
        TermOrder { kind: OrderKind::Lex, priority }
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn is_default_lex(&self) -> bool {
        self.kind == OrderKind::Lex && self.priority.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Checked comparison.
    pub fn compare(&self, s: &ExponentVector, t: &ExponentVector) -> Result<Ordering> {
        if s.len() != t.len() {
            return Err(Error::LengthMismatch(s.len(), t.len()));
        }
        if s.len() != self.priority.len() {
            return Err(Error::LengthMismatch(s.len(), self.priority.len()));
        }
        Ok(self.cmp(s, t))
    }

    /// Unchecked comparison; lengths must agree.
    pub fn cmp(&self, s: &ExponentVector, t: &ExponentVector) -> Ordering {
        if let OrderKind::WeightedLex(w) = &self.kind {
            let ws: u64 = s.as_slice().iter().zip(w).map(|(&e, &w)| e as u64 * w).sum();
            let wt: u64 = t.as_slice().iter().zip(w).map(|(&e, &w)| e as u64 * w).sum();
            match ws.cmp(&wt) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        for &v in &self.priority {
            match s.get(v).cmp(&t.get(v)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }
}

fn check_permutation(p: &[usize]) -> Result<()> {
    let mut seen = vec![false; p.len()];
    for &v in p {
        if v >= p.len() || seen[v] {
            return Err(Error::Usage(format!("{p:?} is not a variable permutation")));
        }
        seen[v] = true;
    }
    Ok(())
}
