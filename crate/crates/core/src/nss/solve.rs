use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ffield::{factor_univariate, FFElement, FieldTower, FiniteField};
use crate::groebner::{eliminate_to_x1, is_proper, is_trivial, Ideal};
use crate::groebner_ed::{specialization_locus, specialize_basis, strong_buchberger, view_shift};
use crate::nss::lift::{lift_polynomial, lift_unipoly};
use crate::poly::{PolyRing, Polynomial, TermOrder, UniPoly};
use crate::ring::{EuclideanRing, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveConfig {
    /// Seed for the randomized equal-degree factorization.
    pub seed: u64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig { seed: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `I ∩ K[x1] = ⟨p⟩` with `p` non-constant: `x1` is a root of `p`.
    Lemma1,
    /// `I ∩ K[x1] = {0}`: `x1` avoids the roots of the locus `q`.
    Lemma2,
    /// Last variable: `x1` is a root of the gcd of the generators.
    Base,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Lemma1 => "lemma1",
            Branch::Lemma2 => "lemma2",
            Branch::Base => "base",
        })
    }
}

/// One recursion level of the solver, rendered as text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchStep {
    /// 1-based index of the variable fixed at this level.
    pub variable: usize,
    /// Generator of the elimination ideal, `0` when it is `{0}`.
    pub eliminated: String,
    pub branch: Branch,
    pub value: String,
    /// `ext <name>: <min poly>` lines adjoined at this level.
    pub extensions: Vec<String>,
    /// Specialization locus, on the `Lemma2` branch only.
    pub locus: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BranchTrace {
    pub steps: Vec<BranchStep>,
}

impl BranchTrace {
    pub fn lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .map(|s| {
                let mut line = format!(
                    "trace x{}: branch={} p={} value={}",
                    s.variable, s.branch, s.eliminated, s.value
                );
                if let Some(q) = &s.locus {
                    line.push_str(&format!(" q={q}"));
                }
                for e in &s.extensions {
                    line.push_str(&format!(" [{e}]"));
                }
                line
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    /// The ideal is the whole ring; `Σ certificate[i]·gens[i] = 1`.
    Trivial { certificate: Vec<Polynomial<FiniteField>> },
    /// A common zero in the top level of `tower`.
    Point { tower: FieldTower, coords: Vec<FFElement>, verified: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub outcome: SolveOutcome,
    pub trace: BranchTrace,
}

/// Finds a root `a` of `p` (adjoining an extension if the chosen factor is
/// not linear) such that `I` specialized at `x1 = a` is still proper.
///
/// Irreducible factors are tried in canonical order; one root per factor
/// suffices since conjugate roots behave alike. Failure on a proper ideal
/// is an invariant violation.
pub fn find_branch_root(
    p: &UniPoly<FFElement>,
    ideal: &Ideal<FiniteField>,
    config: &SolveConfig,
) -> Result<(FieldTower, FFElement)> {
    if is_trivial(ideal)?.trivial {
        return Err(Error::TrivialIdeal);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let tower = ideal.ring().truncated_tower();
    branch_root(&tower, p, ideal.nvars(), ideal.generators(), &mut rng).map(|(t, a, _)| (t, a))
}

fn branch_root(
    tower: &FieldTower,
    p: &UniPoly<FFElement>,
    nvars: usize,
    gens: &[Polynomial<FiniteField>],
    rng: &mut ChaCha8Rng,
) -> Result<(FieldTower, FFElement, Vec<Polynomial<FiniteField>>)> {
    let field = tower.top();
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    for (factor, _) in factor_univariate(&field, p, rng)? {
        let (ext, a) = tower.adjoin_root(&factor)?;
        let top = ext.top();
        let lifted = gens
            .iter()
            .map(|g| lift_polynomial(g, &top)?.evaluate_x1(&a))
            .collect::<Result<Vec<_>>>()?;
        if is_proper(&top, nvars - 1, &lifted)? {
            return Ok((ext, a, lifted));
        }
    }
    Err(Error::InvariantViolation(
        "no root of the elimination polynomial gives a proper specialization".into(),
    ))
}

/// First element `a`, in enumeration order, with `q(a) ≠ 0`; adjoins
/// quadratic extensions while the current top level has no such element.
pub fn good_specialization_point(
    tower: &FieldTower,
    q: &UniPoly<FFElement>,
) -> Result<(FieldTower, FFElement)> {
    if q.is_zero() {
        return Err(Error::Usage("the locus polynomial must be nonzero".into()));
    }
    let mut tower = tower.clone();
    let mut q = q.clone();
    loop {
        let top = tower.top();
        let ring = PolyRing::new(top.clone(), "x1");
        // among any deg(q) + 1 elements one is not a root
        let budget = q.degree().unwrap() + 1;
        if let Some(a) = top.elements().take(budget).find(|a| !top.is_zero(&ring.eval(&q, a))) {
            return Ok((tower, a));
        }
        let (ext, _) = tower.quadratic_extension()?;
        q = lift_unipoly(&top, &q, &ext.top())?;
        tower = ext;
    }
}

struct Solver {
    rng: ChaCha8Rng,
    trace: BranchTrace,
}

impl Solver {
    /// Finds a common zero of the proper ideal `⟨gens⟩`; returns the final
    /// tower and coordinates in its top level.
    fn solve_proper(
        &mut self,
        tower: FieldTower,
        nvars: usize,
        gens: Vec<Polynomial<FiniteField>>,
        offset: usize,
    ) -> Result<(FieldTower, Vec<FFElement>)> {
        let field = tower.top();
        if nvars == 0 {
            if gens.iter().any(|g| !g.is_zero()) {
                return Err(Error::InvariantViolation("nonzero constant in a proper ideal".into()));
            }
            return Ok((tower, Vec::new()));
        }
        let ideal = Ideal::new(&field, nvars, gens.clone())?;
        let p = eliminate_to_x1(&ideal)?;
        let uni = PolyRing::new(field.clone(), format!("x{}", offset + 1));
        let depth_before = tower.depth();
        let eliminated = uni.display(&p);
        let (tower, a, rest, branch, locus) = if nvars == 1 || !p.is_zero() {
            let branch = if nvars == 1 { Branch::Base } else { Branch::Lemma1 };
            if p.is_zero() {
                // every generator vanishes identically
                let rest = gens.iter().map(|g| g.evaluate_x1(&field.zero())).collect::<Result<Vec<_>>>()?;
                (tower, field.zero(), rest, branch, None)
            } else if uni.is_unit(&p) {
                return Err(Error::InvariantViolation("elimination ideal contains a unit".into()));
            } else {
                let (t, a, rest) = branch_root(&tower, &p, nvars, &gens, &mut self.rng)?;
                (t, a, rest, branch, None)
            }
        } else {
            let ed: Vec<_> = gens.iter().map(view_shift).collect::<Result<_>>()?;
            let ed_ring = PolyRing::new(field.clone(), "x1");
            let order = TermOrder::lex(nvars - 1);
            let gamma = strong_buchberger(&ed_ring, nvars - 1, &ed, &order)?;
            let q = specialization_locus(&gamma)?;
            let (t, a) = good_specialization_point(&tower, &q)?;
            let top = t.top();
            let gamma = if top == field {
                gamma
            } else {
                let lifted_ring = PolyRing::new(top.clone(), "x1");
                let elements = gamma
                    .elements()
                    .iter()
                    .map(|g| {
                        let mut err = None;
                        let out = g.map_coeffs(&lifted_ring, |c| {
                            lift_unipoly(&field, c, &top).unwrap_or_else(|e| {
                                err = Some(e);
                                lifted_ring.zero()
                            })
                        });
                        err.map_or(Ok(out), Err)
                    })
                    .collect::<Result<Vec<_>>>()?;
                strong_buchberger(&lifted_ring, nvars - 1, &elements, &order)?
            };
            let special = specialize_basis(&gamma, &a)?;
            if special.has_constant() {
                return Err(Error::InvariantViolation("specialized basis contains a constant".into()));
            }
            (t, a, special.into_elements(), Branch::Lemma2, Some(uni.display(&q)))
        };
        let top = tower.top();
        self.trace.steps.push(BranchStep {
            variable: offset + 1,
            eliminated,
            branch,
            value: top.format_element(&a),
            extensions: tower.describe()[depth_before..].to_vec(),
            locus,
        });
        let (final_tower, mut coords) = self.solve_proper(tower.clone(), nvars - 1, rest, offset + 1)?;
        let a = top.embed(&a, &final_tower.top())?;
        coords.insert(0, a);
        Ok((final_tower, coords))
    }
}

/// Decides whether `I` is proper and, if so, exhibits a common zero over a
/// tower of extensions of its coefficient field.
///
/// Variables are fixed in order `x1, x2, ...`. At each level the
/// elimination ideal `I ∩ K[x1]` picks the branch: a non-constant generator
/// `p` means `x1` is a root of `p` keeping the specialization proper; `{0}`
/// means `x1` avoids the roots of the product of leading coefficients of a
/// strong basis over `K[x1]`, whose specialization is then a basis of the
/// specialized ideal.
pub fn solve(ideal: &Ideal<FiniteField>, config: &SolveConfig) -> Result<Solution> {
    let triviality = is_trivial(ideal)?;
    if triviality.trivial {
        let certificate = triviality.certificate.expect("trivial ideals carry a certificate");
        return Ok(Solution { outcome: SolveOutcome::Trivial { certificate }, trace: BranchTrace::default() });
    }
    let mut solver = Solver { rng: ChaCha8Rng::seed_from_u64(config.seed), trace: BranchTrace::default() };
    let tower = ideal.ring().truncated_tower();
    let (tower, coords) = solver.solve_proper(tower, ideal.nvars(), ideal.generators().to_vec(), 0)?;
    let top = tower.top();
    for g in ideal.generators() {
        let value = lift_polynomial(g, &top)?.evaluate(&coords)?;
        if !top.is_zero(&value) {
            return Err(Error::InvariantViolation(format!("generator {g} does not vanish at the point")));
        }
    }
    Ok(Solution { outcome: SolveOutcome::Point { tower, coords, verified: true }, trace: solver.trace })
}
