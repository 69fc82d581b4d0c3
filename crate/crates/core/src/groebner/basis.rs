use crate::poly::{Polynomial, TermOrder};
use crate::ring::Ring;

/// A finite generating set certified as a (strong) Gröbner basis under
/// `order`.
#[derive(Debug, Clone, PartialEq)]
pub struct StrongBasis<R: Ring> {
    pub(crate) ring: R,
    pub(crate) nvars: usize,
    pub(crate) order: TermOrder,
    pub(crate) elements: Vec<Polynomial<R>>,
    pub(crate) certified: bool,
}

impl<R: Ring> StrongBasis<R> {
    /// Wraps elements without certification. Zero elements are dropped.
    pub fn uncertified(ring: &R, nvars: usize, order: &TermOrder, elements: Vec<Polynomial<R>>) -> Self {
        StrongBasis {
            ring: ring.clone(),
            nvars,
            order: order.clone(),
            elements: elements.into_iter().filter(|g| !g.is_zero()).collect(),
            certified: false,
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial<R>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial<R>> {
        self.elements
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True if some element is a nonzero constant.
    pub fn has_constant(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }
}
