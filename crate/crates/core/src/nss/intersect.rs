use crate::error::{Error, Result};
use crate::groebner::{buchberger, Ideal};
use crate::poly::{PolyRing, Polynomial, TermOrder, UniPoly};
use crate::ring::{Field, Ring};

/// Generators of `I ∩ J`, obtained as `⟨z·I, (1 − z)·J⟩ ∩ K[x1..xn]` with a
/// slack variable `z` eliminated under a lex order putting `z` first.
pub fn ideal_intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    if i.nvars() != j.nvars() || i.ring() != j.ring() {
        return Err(Error::DomainMismatch);
    }
    let (ring, n) = (i.ring(), i.nvars());
    let z = Polynomial::var(ring, n + 1, n);
    let one_minus_z = &Polynomial::one(ring, n + 1) - &z;
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(&z * &g.append_vars(1));
    }
    for g in j.generators() {
        gens.push(&one_minus_z * &g.append_vars(1));
    }
    Ideal::new(ring, n, eliminate_last(ring, n + 1, &gens)?)
}

/// Basis elements free of the last variable, under lex with that variable
/// most significant, with the variable dropped.
fn eliminate_last<F: Field>(ring: &F, nvars: usize, gens: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
    let last = nvars - 1;
    let priority = std::iter::once(last).chain(0..last).collect();
    let order = TermOrder::lex_with_priority(priority)?;
    let basis = buchberger(ring, nvars, gens, &order)?;
    basis
        .elements()
        .iter()
        .filter(|g| g.degree_in(last) == Some(0))
        .map(|g| g.drop_var(last))
        .collect()
}

/// Record of the checks behind `⟨f1·f2, G⟩ = ⟨f1, G⟩ ∩ ⟨f2, G⟩` for coprime
/// univariate `f1, f2` in `x1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitProof<F: Field> {
    /// Bézout cofactors with `q1·f1 + q2·f2 = 1`.
    pub q1: UniPoly<F::Elem>,
    pub q2: UniPoly<F::Elem>,
    /// Every generator of `⟨f1f2, G⟩` lies in `⟨f1, G⟩` and in `⟨f2, G⟩`.
    pub product_in_both: bool,
    /// Every generator of the computed intersection lies in `⟨f1f2, G⟩`.
    pub intersection_in_product: bool,
    /// The four cofactor identities, in the `z`-extended ring:
    /// `z·f1 = [f1f2]·q2 − [q2f2 − z]·f1`,
    /// `(1 − z)·f2 = [f1f2]·q1 + [q2f2 − z]·f2`,
    /// `f1f2 = [z·f1]·f2 + [(1 − z)·f2]·f1`,
    /// `q2f2 − z = [(1 − z)·f2]·q2 − [z·f1]·q1`.
    pub identities: [bool; 4],
    /// `⟨z·f1, (z − 1)·f2, z·G, (z − 1)·G⟩ = ⟨z·f1, (z − 1)·f2, G⟩`.
    pub slack_absorbs_g: bool,
    /// `⟨z·f1, (z − 1)·f2, G⟩ = ⟨f1f2, q2f2 − z, G⟩`.
    pub bezout_rewrite: bool,
    /// `⟨f1f2, q2f2 − z, G⟩ ∩ K[x1..xn] = ⟨f1f2, G⟩`.
    pub elimination: bool,
}

impl<F: Field> SplitProof<F> {
    pub fn all_pass(&self) -> bool {
        self.product_in_both
            && self.intersection_in_product
            && self.identities.iter().all(|&b| b)
            && self.slack_absorbs_g
            && self.bezout_rewrite
            && self.elimination
    }
}

/// Verifies the coprime splitting identity and its supporting equalities
/// for `f1, f2 ∈ K[x1]` and `G ⊂ K[x1..xn]`.
pub fn coprime_split_identity<F: Field>(
    ring: &F,
    nvars: usize,
    f1: &UniPoly<F::Elem>,
    f2: &UniPoly<F::Elem>,
    g: &[Polynomial<F>],
) -> Result<SplitProof<F>> {
    if nvars == 0 {
        return Err(Error::Usage("need at least the variable x1".into()));
    }
    let uni = PolyRing::new(ring.clone(), "x1");
    let (d, q1, q2) = uni.extended_gcd(f1, f2)?;
    if !uni.is_one(&d) {
        return Err(Error::NotCoprime);
    }
    let n = nvars;
    let lift = |u: &UniPoly<F::Elem>| uni.to_polynomial(u, n, 0);
    let (p1, p2) = (lift(f1), lift(f2));
    let prod = &p1 * &p2;
    let with = |head: Polynomial<F>| -> Result<Ideal<F>> {
        let mut gens = vec![head];
        gens.extend(g.iter().cloned());
        Ideal::new(ring, n, gens)
    };
    let ideal_prod = with(prod.clone())?;
    let ideal_1 = with(p1.clone())?;
    let ideal_2 = with(p2.clone())?;
    let product_in_both = ideal_1.contains(&ideal_prod)? && ideal_2.contains(&ideal_prod)?;
    let meet = ideal_intersect(&ideal_1, &ideal_2)?;
    let intersection_in_product = ideal_prod.contains(&meet)?;

    // z-extended ring: z is variable n
    let m = n + 1;
    let up = |p: &Polynomial<F>| p.append_vars(1);
    let z = Polynomial::var(ring, m, n);
    let one = Polynomial::one(ring, m);
    let (e1, e2, eq1, eq2, eprod) = (up(&p1), up(&p2), up(&lift(&q1)), up(&lift(&q2)), up(&prod));
    let z_f1 = &z * &e1;
    let one_minus_z_f2 = &(&one - &z) * &e2;
    let z_minus_one_f2 = &(&z - &one) * &e2;
    let bez = &(&eq2 * &e2) - &z;
    let identities = [
        z_f1 == &(&eprod * &eq2) - &(&bez * &e1),
        one_minus_z_f2 == &(&eprod * &eq1) + &(&bez * &e2),
        eprod == &(&z_f1 * &e2) + &(&one_minus_z_f2 * &e1),
        bez == &(&one_minus_z_f2 * &eq2) - &(&z_f1 * &eq1),
    ];

    let g_up: Vec<Polynomial<F>> = g.iter().map(up).collect();
    let mut left = vec![z_f1.clone(), z_minus_one_f2.clone()];
    left.extend(g_up.iter().map(|h| &z * h));
    left.extend(g_up.iter().map(|h| &(&z - &one) * h));
    let mut middle = vec![z_f1.clone(), z_minus_one_f2.clone()];
    middle.extend(g_up.iter().cloned());
    let mut right = vec![eprod.clone(), bez.clone()];
    right.extend(g_up.iter().cloned());
    let (left, middle, right) = (Ideal::new(ring, m, left)?, Ideal::new(ring, m, middle)?, Ideal::new(ring, m, right)?);
    let slack_absorbs_g = left.same_ideal(&middle)?;
    let bezout_rewrite = middle.same_ideal(&right)?;
    let eliminated = Ideal::new(ring, n, eliminate_last(ring, m, right.generators())?)?;
    let elimination = eliminated.same_ideal(&ideal_prod)?;

    Ok(SplitProof {
        q1,
        q2,
        product_in_both,
        intersection_in_product,
        identities,
        slack_absorbs_g,
        bezout_rewrite,
        elimination,
    })
}
