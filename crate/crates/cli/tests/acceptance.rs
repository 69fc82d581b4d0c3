//! Acceptance suite. Runs every criterion once, then again from the same
//! seeds to check that the transcripts are byte-identical, and prints one
//! PASS/FAIL line per criterion.
//!
//! Built with `harness = false`, so the report is always printed by
//! `cargo test`.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use nullstellensatz::ffield::{FFElement, FiniteField};
use nullstellensatz::groebner::{combine, is_trivial, normal_form, s_polynomial, Ideal};
use nullstellensatz::groebner_ed::{specialization_locus, specialize_basis, strong_buchberger, view_shift};
use nullstellensatz::nss::{
    coprime_split_identity, ideal_intersect, lift_polynomial, radical_member, solve, SolveConfig, SolveOutcome,
};
use nullstellensatz::poly::{ExponentVector, PolyRing, Polynomial, TermOrder, UniPoly};
use nullstellensatz::ring::{EuclideanRing, Ring};
use nullstellensatz::Error;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;
const PER_INSTANCE_LIMIT: Duration = Duration::from_secs(5);
const SUITE_LIMIT: Duration = Duration::from_secs(600);

type Poly = Polynomial<FiniteField>;

/// Result of one criterion: pass flag, summary, and a transcript that must
/// be reproducible from the seed.
struct Report {
    pass: bool,
    summary: String,
    transcript: String,
}

// ---------------------------------------------------------------------------
// Instance generation

fn monomials_up_to(n: usize, degree: u32) -> Vec<ExponentVector> {
    let mut out = vec![vec![0u32; n]];
    for _ in 0..degree {
        let mut next = out.clone();
        for e in &out {
            for v in 0..n {
                let mut f = e.clone();
                f[v] += 1;
                if !next.contains(&f) {
                    next.push(f);
                }
            }
        }
        out = next;
    }
    out.sort();
    out.into_iter().map(ExponentVector::new).collect()
}

fn nonzero(field: &FiniteField, rng: &mut ChaCha8Rng) -> FFElement {
    loop {
        let c = field.random_element(rng);
        if !field.is_zero(&c) {
            return c;
        }
    }
}

/// Dense-ish random polynomial of total degree at most `degree`.
fn random_poly(field: &FiniteField, n: usize, degree: u32, density: f64, rng: &mut ChaCha8Rng) -> Poly {
    let mut terms = Vec::new();
    for t in monomials_up_to(n, degree) {
        if rng.gen_bool(density) {
            terms.push((t, nonzero(field, rng)));
        }
    }
    Polynomial::from_terms(field, n, terms)
}

struct Instance {
    field: FiniteField,
    nvars: usize,
    gens: Vec<Poly>,
}

fn random_ideals(p: u64, count: usize, rng: &mut ChaCha8Rng) -> Vec<Instance> {
    let field = FiniteField::prime(p).unwrap();
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=3);
            let k = rng.gen_range(1..=3);
            let gens = (0..k).map(|_| random_poly(&field, n, 2, 0.35, rng)).collect();
            Instance { field: field.clone(), nvars: n, gens }
        })
        .collect()
}

fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn problem_text(inst: &Instance) -> String {
    let mut s = format!("field p {}\nvars {}\n", inst.field.characteristic(), var_names(inst.nvars).join(" "));
    for g in &inst.gens {
        writeln!(s, "{g}").unwrap();
    }
    s
}

fn scratch_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

// ---------------------------------------------------------------------------
// Independent GF(p) and GF(p^2) arithmetic for the brute-force oracles

#[derive(Clone, Copy)]
struct Gfp2 {
    p: u64,
    /// `t^2 = -c1*t - c0`
    c0: u64,
    c1: u64,
}

type E2 = (u64, u64);

impl Gfp2 {
    fn new(p: u64) -> Self {
        for c1 in 0..p {
            for c0 in 0..p {
                if (0..p).all(|x| (x * x + c1 * x + c0) % p != 0) {
                    return Gfp2 { p, c0, c1 };
                }
            }
        }
        unreachable!("every prime field has an irreducible quadratic")
    }

    fn add(&self, a: E2, b: E2) -> E2 {
        ((a.0 + b.0) % self.p, (a.1 + b.1) % self.p)
    }

    fn mul(&self, a: E2, b: E2) -> E2 {
        let p = self.p;
        let lo = a.0 * b.0 % p;
        let mid = (a.0 * b.1 + a.1 * b.0) % p;
        let hi = a.1 * b.1 % p;
        ((lo + (p - self.c0) * hi) % p, (mid + (p - self.c1) * hi) % p)
    }

    fn elements(&self) -> Vec<E2> {
        (0..self.p).flat_map(|b| (0..self.p).map(move |a| (a, b))).collect()
    }

    fn pow(&self, a: E2, e: u32) -> E2 {
        (0..e).fold((1, 0), |acc, _| self.mul(acc, a))
    }

    /// Evaluates a polynomial with prime-field coefficients.
    fn eval(&self, f: &Poly, point: &[E2]) -> E2 {
        let mut acc = (0, 0);
        for (t, c) in f.terms() {
            let mut term = (c.coords()[0], 0);
            for (i, &x) in point.iter().enumerate() {
                term = self.mul(term, self.pow(x, t.get(i)));
            }
            acc = self.add(acc, term);
        }
        acc
    }

    /// All points of `GF(p^2)^n`, or of `GF(p)^n` when `prime_only`.
    fn points(&self, n: usize, prime_only: bool) -> Vec<Vec<E2>> {
        let base: Vec<E2> = if prime_only { (0..self.p).map(|a| (a, 0)).collect() } else { self.elements() };
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|pt| {
                    base.iter().map(move |&x| {
                        let mut q = pt.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out
    }

    fn common_zeros(&self, gens: &[Poly], n: usize) -> Vec<Vec<E2>> {
        self.points(n, false)
            .into_iter()
            .filter(|pt| gens.iter().all(|g| self.eval(g, pt) == (0, 0)))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Criteria

/// 1: solver soundness on 200 random ideals per prime, through the kernel
/// and through the CLI.
fn criterion_soundness(instances: &[(u64, Vec<Instance>)]) -> Report {
    let mut transcript = String::new();
    let mut failures = Vec::new();
    let (mut points, mut trivial, mut extended) = (0, 0, 0);
    let mut slowest = Duration::ZERO;
    let dir = scratch_dir();
    for (p, list) in instances {
        for (i, inst) in list.iter().enumerate() {
            let ideal = Ideal::new(&inst.field, inst.nvars, inst.gens.clone()).unwrap();
            let seed = i as u64;
            if verbose() {
                eprintln!("solve p={p} #{i}: {:?}", inst.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>());
            }
            let start = Instant::now();
            let result = solve(&ideal, &SolveConfig { seed });
            let elapsed = start.elapsed();
            slowest = slowest.max(elapsed);
            let tag = format!("p={p} #{i}");
            if elapsed > PER_INSTANCE_LIMIT {
                failures.push(format!("{tag}: took {elapsed:?}"));
            }
            match result {
                Err(e) => failures.push(format!("{tag}: solver error {e}")),
                Ok(sol) => match &sol.outcome {
                    SolveOutcome::Trivial { certificate } => {
                        trivial += 1;
                        let sum = combine(&inst.field, inst.nvars, certificate, &inst.gens);
                        if sum != Polynomial::one(&inst.field, inst.nvars) {
                            failures.push(format!("{tag}: certificate sums to {sum}"));
                        }
                    }
                    SolveOutcome::Point { tower, coords, verified } => {
                        points += 1;
                        if tower.depth() > 0 {
                            extended += 1;
                        }
                        let top = tower.top();
                        let vanish = inst.gens.iter().all(|g| {
                            let g = lift_polynomial(g, &top).unwrap();
                            top.is_zero(&g.evaluate(coords).unwrap())
                        });
                        if !vanish || !verified || coords.len() != inst.nvars {
                            failures.push(format!("{tag}: point does not vanish"));
                        }
                    }
                },
            }
            let path = dir.join(format!("sound_{p}_{i}.nss"));
            std::fs::write(&path, problem_text(inst)).unwrap();
            let out = nss_cli::run_args([
                "nss".to_string(),
                "solve".into(),
                "--trace".into(),
                "--seed".into(),
                seed.to_string(),
                path.display().to_string(),
            ]);
            if out.code != 0 && out.code != 1 {
                failures.push(format!("{tag}: CLI exit {} ({})", out.code, out.stderr.trim()));
            }
            writeln!(transcript, "## {tag} exit={}\n{}", out.code, out.stdout).unwrap();
        }
    }
    let total: usize = instances.iter().map(|(_, l)| l.len()).sum();
    Report {
        pass: failures.is_empty(),
        summary: format!(
            "{total} ideals: {points} points ({extended} over extensions), {trivial} trivial; slowest {:.3} s (limit 5 s){}",
            slowest.as_secs_f64(),
            first_failure(&failures)
        ),
        transcript,
    }
}

fn verbose() -> bool {
    std::env::var_os("ACCEPTANCE_VERBOSE").is_some()
}

fn first_failure(failures: &[String]) -> String {
    match failures.first() {
        Some(f) => format!("; {} failures, first: {f}", failures.len()),
        None => String::new(),
    }
}

/// 2: exhaustive search over `F_p^n` and `F_{p^2}^n` against `is_trivial`
/// and `solve` for 100 ideals with `p ∈ {2,3}`, `n ≤ 2`.
fn criterion_brute_force(instances: &[(u64, Vec<Instance>)]) -> Report {
    let mut transcript = String::new();
    let mut failures = Vec::new();
    let (mut with_zero, mut trivial_checked, mut checked) = (0, 0, 0);
    let mut in_prime_field = 0;
    let pool: Vec<&Instance> = instances
        .iter()
        .filter(|(p, _)| *p == 2 || *p == 3)
        .flat_map(|(_, l)| l.iter())
        .filter(|inst| inst.nvars <= 2)
        .collect();
    // alternate between the two primes
    let (twos, threes): (Vec<&Instance>, Vec<&Instance>) = pool.into_iter().partition(|i| i.field.characteristic() == 2);
    let chosen: Vec<&Instance> = twos.iter().zip(&threes).flat_map(|(a, b)| [*a, *b]).take(100).collect();
    for (i, inst) in chosen.iter().enumerate() {
        checked += 1;
        let gf = Gfp2::new(inst.field.characteristic());
        let zeros = gf.common_zeros(&inst.gens, inst.nvars);
        let prime_zeros = zeros.iter().filter(|z| z.iter().all(|x| x.1 == 0)).count();
        let ideal = Ideal::new(&inst.field, inst.nvars, inst.gens.clone()).unwrap();
        let trivial = is_trivial(&ideal).unwrap().trivial;
        let solved_trivial =
            matches!(solve(&ideal, &SolveConfig::default()).unwrap().outcome, SolveOutcome::Trivial { .. });
        if !zeros.is_empty() {
            with_zero += 1;
            if trivial {
                failures.push(format!("#{i}: zero found but is_trivial holds"));
            }
        }
        if prime_zeros > 0 {
            in_prime_field += 1;
        }
        if solved_trivial {
            trivial_checked += 1;
            if !zeros.is_empty() {
                failures.push(format!("#{i}: solve reports trivial but {} zeros exist", zeros.len()));
            }
        }
        if trivial != solved_trivial {
            failures.push(format!("#{i}: is_trivial and solve disagree"));
        }
        writeln!(
            transcript,
            "#{i} p={} n={} zeros={} prime_zeros={prime_zeros} trivial={trivial}",
            inst.field.characteristic(),
            inst.nvars,
            zeros.len()
        )
        .unwrap();
    }
    if checked < 100 {
        failures.push(format!("only {checked} eligible ideals"));
    }
    Report {
        pass: failures.is_empty(),
        summary: format!(
            "{checked} ideals: {with_zero} with zeros in F_p^2-points ({in_prime_field} in F_p), {trivial_checked} trivial with no zero found{}",
            first_failure(&failures)
        ),
        transcript,
    }
}

fn random_uni(field: &FiniteField, min_deg: usize, max_deg: usize, rng: &mut ChaCha8Rng) -> UniPoly<FFElement> {
    let r = PolyRing::new(field.clone(), "x1");
    let d = rng.gen_range(min_deg..=max_deg);
    let mut c: Vec<_> = (0..d).map(|_| field.random_element(rng)).collect();
    c.push(nonzero(field, rng));
    r.from_coeffs(c)
}

/// 3: the coprime splitting identity on 100 random pairs over `F_5`.
fn criterion_split(rng: &mut ChaCha8Rng) -> Report {
    let f5 = FiniteField::prime(5).unwrap();
    let r = PolyRing::new(f5.clone(), "x1");
    let mut transcript = String::new();
    let mut failures = Vec::new();
    let mut done = 0;
    while done < 100 {
        let f1 = random_uni(&f5, 1, 3, rng);
        let f2 = random_uni(&f5, 1, 3, rng);
        if !r.is_one(&r.gcd(&f1, &f2)) {
            continue;
        }
        let n = rng.gen_range(1..=3);
        let g: Vec<_> = (0..rng.gen_range(0..=2)).map(|_| random_poly(&f5, n, 2, 0.35, rng)).collect();
        if verbose() {
            eprintln!("split #{done}: f1={} f2={} n={n} G={:?}", r.display(&f1), r.display(&f2), g.iter().map(|p| p.to_string()).collect::<Vec<_>>());
        }
        match coprime_split_identity(&f5, n, &f1, &f2, &g) {
            Ok(proof) if proof.all_pass() => {}
            Ok(proof) => failures.push(format!("#{done}: {proof:?}")),
            Err(e) => failures.push(format!("#{done}: {e}")),
        }
        writeln!(transcript, "#{done} f1={} f2={} |G|={}", r.display(&f1), r.display(&f2), g.len()).unwrap();
        done += 1;
    }
    Report {
        pass: failures.is_empty(),
        summary: format!("{done} coprime pairs, inclusions and four cofactor identities{}", first_failure(&failures)),
        transcript,
    }
}

/// 4: `⟨∏(x1 − a_j)^c_j, G⟩ = ⋂_j ⟨(x1 − a_j)^c_j, G⟩` on 50 instances.
fn criterion_product_decomposition(rng: &mut ChaCha8Rng) -> Report {
    let f5 = FiniteField::prime(5).unwrap();
    let mut transcript = String::new();
    let mut failures = Vec::new();
    for i in 0..50 {
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=3);
        let mut roots: Vec<u64> = (0..5).collect();
        roots.shuffle(rng);
        let factors: Vec<(u64, u32)> = roots[..k].iter().map(|&a| (a, rng.gen_range(1..=2))).collect();
        let g: Vec<_> = (0..rng.gen_range(0..=2)).map(|_| random_poly(&f5, n, 2, 0.35, rng)).collect();
        let x1 = Polynomial::var(&f5, n, 0);
        let power = |a: u64, c: u32| (&x1 - &Polynomial::constant(&f5, n, f5.from_int(a as i64))).pow(c);
        let with = |head: Poly| {
            let mut gens = vec![head];
            gens.extend(g.iter().cloned());
            Ideal::new(&f5, n, gens).unwrap()
        };
        let product = factors.iter().fold(Polynomial::one(&f5, n), |acc, &(a, c)| &acc * &power(a, c));
        let whole = with(product);
        let mut meet = with(power(factors[0].0, factors[0].1));
        for &(a, c) in &factors[1..] {
            meet = ideal_intersect(&meet, &with(power(a, c))).unwrap();
        }
        let equal = whole.same_ideal(&meet).unwrap();
        if !equal {
            failures.push(format!("#{i}: roots {factors:?}"));
        }
        writeln!(transcript, "#{i} n={n} factors={factors:?} |G|={} equal={equal}", g.len()).unwrap();
    }
    Report {
        pass: failures.is_empty(),
        summary: format!("50 instances, equality by mutual membership{}", first_failure(&failures)),
        transcript,
    }
}

/// 5: specialization of 100 strong bases over `F_5[x1]`.
fn criterion_specialization(rng: &mut ChaCha8Rng) -> Report {
    let f5 = FiniteField::prime(5).unwrap();
    let ring = PolyRing::new(f5.clone(), "x1");
    let mut transcript = String::new();
    let mut failures = Vec::new();
    let (mut done, mut skipped) = (0, 0);
    while done < 100 {
        let n = rng.gen_range(2..=3);
        let gens: Vec<_> = (0..rng.gen_range(1..=3)).map(|_| random_poly(&f5, n, 2, 0.35, rng)).collect();
        if gens.iter().all(|g| g.is_zero()) {
            continue;
        }
        let shifted: Vec<_> = gens.iter().map(|g| view_shift(g).unwrap()).collect();
        let order = TermOrder::lex(n - 1);
        let basis = strong_buchberger(&ring, n - 1, &shifted, &order).unwrap();
        let q = specialization_locus(&basis).unwrap();
        let roots: Vec<_> = f5.elements().filter(|a| f5.is_zero(&ring.eval(&q, a))).collect();
        let good = f5.elements().find(|a| !f5.is_zero(&ring.eval(&q, a)));
        // both a good point and a root in F_5 are needed to exercise both halves
        let (Some(good), Some(root)) = (good, roots.first().cloned()) else {
            skipped += 1;
            continue;
        };
        let tag = format!("#{done}");
        match specialize_basis(&basis, &good) {
            Ok(s) => {
                let elems = s.elements();
                for (i, f) in elems.iter().enumerate() {
                    for g in &elems[i + 1..] {
                        let sp = s_polynomial(f, g, &order).unwrap();
                        if !normal_form(&sp, elems, &order).unwrap().is_zero() {
                            failures.push(format!("{tag}: S-polynomial does not reduce to 0"));
                        }
                    }
                }
                let image: Vec<_> = gens.iter().map(|g| g.evaluate_x1(&good).unwrap()).collect();
                let same = Ideal::new(&f5, n - 1, image)
                    .unwrap()
                    .same_ideal(&Ideal::new(&f5, n - 1, elems.to_vec()).unwrap())
                    .unwrap();
                if !same {
                    failures.push(format!("{tag}: specialized basis generates a different ideal"));
                }
                writeln!(
                    transcript,
                    "{tag} q={} a={} basis=[{}]",
                    ring.display(&q),
                    f5.format_element(&good),
                    elems.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
                )
                .unwrap();
            }
            Err(e) => failures.push(format!("{tag}: specialize_basis failed: {e}")),
        }
        match specialize_basis(&basis, &root) {
            Err(Error::LocusRoot) => {}
            other => failures.push(format!("{tag}: root of q accepted: {other:?}")),
        }
        done += 1;
    }
    Report {
        pass: failures.is_empty(),
        summary: format!(
            "{done} strong bases re-certified at the first good point, root of q rejected on each ({skipped} bases without an F_5 root of q resampled){}",
            first_failure(&failures)
        ),
        transcript,
    }
}

/// 6: `⟨x1 − a, G⟩` trivial iff `⟨ev_a(G)⟩` trivial, 100 cases over `F_3`.
fn criterion_quotient(rng: &mut ChaCha8Rng) -> Report {
    let f3 = FiniteField::prime(3).unwrap();
    let mut transcript = String::new();
    let mut failures = Vec::new();
    let mut trivial_count = 0;
    for i in 0..100 {
        let n = rng.gen_range(2..=3);
        let a = f3.random_element(rng);
        let g: Vec<_> = (0..rng.gen_range(1..=3)).map(|_| random_poly(&f3, n, 2, 0.4, rng)).collect();
        let mut lhs = vec![&Polynomial::var(&f3, n, 0) - &Polynomial::constant(&f3, n, a.clone())];
        lhs.extend(g.iter().cloned());
        let left = is_trivial(&Ideal::new(&f3, n, lhs).unwrap()).unwrap().trivial;
        let image: Vec<_> = g.iter().map(|p| p.evaluate_x1(&a).unwrap()).collect();
        let right = is_trivial(&Ideal::new(&f3, n - 1, image).unwrap()).unwrap().trivial;
        if left != right {
            failures.push(format!("#{i}: {left} vs {right}"));
        }
        trivial_count += usize::from(left);
        writeln!(transcript, "#{i} a={} trivial={left}", f3.format_element(&a)).unwrap();
    }
    Report {
        pass: failures.is_empty(),
        summary: format!("100 cases, {trivial_count} trivial, all agree{}", first_failure(&failures)),
        transcript,
    }
}

/// 7: radical membership against vanishing on all zeros in `F_9^n`.
///
/// Each ideal contains a nonzero univariate polynomial of degree ≤ 2 in every
/// variable, so all its zeros over the algebraic closure lie in `F_9^n` and
/// the exhaustive oracle is exact.
fn criterion_rabinowitz(rng: &mut ChaCha8Rng) -> Report {
    let f3 = FiniteField::prime(3).unwrap();
    let gf9 = Gfp2::new(3);
    let mut transcript = String::new();
    let mut failures = Vec::new();
    let (mut members, mut empty_varieties) = (0, 0);
    for i in 0..50 {
        let n = rng.gen_range(1..=2);
        let mut gens = Vec::new();
        for v in 0..n {
            let u = random_uni(&f3, 1, 2, rng);
            gens.push(PolyRing::new(f3.clone(), "x").to_polynomial(&u, n, v));
        }
        for _ in 0..rng.gen_range(0..=1) {
            gens.push(random_poly(&f3, n, 2, 0.4, rng));
        }
        // bias half the queries towards members: products with a generator
        let mut f = random_poly(&f3, n, 2, 0.4, rng);
        if i % 2 == 0 {
            let k = rng.gen_range(0..gens.len());
            f = &f + &(&random_poly(&f3, n, 1, 0.5, rng) * &gens[k]);
            if rng.gen_bool(0.5) {
                f = Polynomial::from_terms(&f3, n, f.terms().map(|(t, c)| (t.clone(), c.clone())));
            }
        }
        let zeros = gf9.common_zeros(&gens, n);
        if zeros.is_empty() {
            empty_varieties += 1;
        }
        let oracle = zeros.iter().all(|z| gf9.eval(&f, z) == (0, 0));
        let ideal = Ideal::new(&f3, n, gens.clone()).unwrap();
        let kernel = radical_member(&f, &ideal).unwrap();
        if kernel != oracle {
            failures.push(format!("#{i}: radical_member={kernel} oracle={oracle}"));
        }
        members += usize::from(kernel);
        writeln!(transcript, "#{i} n={n} zeros={} f={f} member={kernel}", zeros.len()).unwrap();
    }
    Report {
        pass: failures.is_empty(),
        summary: format!(
            "50 ideals, {members} radical members, {empty_varieties} with no zeros, all agree with the F_9 oracle{}",
            first_failure(&failures)
        ),
        transcript,
    }
}

struct SuiteRun {
    reports: Vec<Report>,
}

fn run_suites() -> SuiteRun {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let instances: Vec<(u64, Vec<Instance>)> =
        [2u64, 3, 5].iter().map(|&p| (p, random_ideals(p, 200, &mut rng))).collect();
    let timed = |name: &str, f: &mut dyn FnMut() -> Report| {
        let start = Instant::now();
        let r = f();
        if verbose() {
            eprintln!("{name}: {:.2} s", start.elapsed().as_secs_f64());
        }
        r
    };
    let reports = vec![
        timed("soundness", &mut || criterion_soundness(&instances)),
        timed("brute force", &mut || criterion_brute_force(&instances)),
        timed("split", &mut || criterion_split(&mut ChaCha8Rng::seed_from_u64(SEED + 3))),
        timed("product", &mut || criterion_product_decomposition(&mut ChaCha8Rng::seed_from_u64(SEED + 4))),
        timed("specialization", &mut || criterion_specialization(&mut ChaCha8Rng::seed_from_u64(SEED + 5))),
        timed("quotient", &mut || criterion_quotient(&mut ChaCha8Rng::seed_from_u64(SEED + 6))),
        timed("radical", &mut || criterion_rabinowitz(&mut ChaCha8Rng::seed_from_u64(SEED + 7))),
    ];
    SuiteRun { reports }
}

/// 8: same seed, same bytes: every suite transcript, plus the real binary
/// run twice on a sample of problem files and compared with the library.
fn criterion_determinism(first: &SuiteRun, second: &SuiteRun) -> Report {
    let mut failures = Vec::new();
    for (i, (a, b)) in first.reports.iter().zip(&second.reports).enumerate() {
        if a.transcript != b.transcript {
            failures.push(format!("suite {} transcript differs", i + 1));
        }
    }
    let dir = scratch_dir();
    let mut binary_runs = 0;
    let bin = env!("CARGO_BIN_EXE_nss");
    for p in [2u64, 3, 5] {
        for i in (0..200).step_by(10) {
            let path = dir.join(format!("sound_{p}_{i}.nss"));
            let args = ["solve", "--trace", "--seed", &i.to_string(), path.to_str().unwrap()].map(String::from);
            let run = || Command::new(bin).args(&args).output().unwrap();
            let (x, y) = (run(), run());
            let lib = nss_cli::run_args(std::iter::once("nss".to_string()).chain(args.iter().cloned()));
            if x.stdout != y.stdout || x.status.code() != y.status.code() {
                failures.push(format!("binary output differs between runs on {}", path.display()));
            }
            if x.stdout != lib.stdout.as_bytes() || x.status.code() != Some(lib.code) {
                failures.push(format!("binary and library differ on {}", path.display()));
            }
            binary_runs += 1;
        }
    }
    let bytes: usize = first.reports.iter().map(|r| r.transcript.len()).sum();
    Report {
        pass: failures.is_empty(),
        summary: format!(
            "7 suites rerun from the same seed, {bytes} transcript bytes identical; {binary_runs} binary runs repeated and matched{}",
            first_failure(&failures)
        ),
        transcript: String::new(),
    }
}

fn main() {
    let start = Instant::now();
    let first = run_suites();
    let second = run_suites();
    let determinism = criterion_determinism(&first, &second);
    let names = [
        "solver soundness",
        "brute-force triviality oracle",
        "coprime splitting identity",
        "product decomposition",
        "specialization",
        "quotient isomorphism",
        "radical membership oracle",
        "determinism",
    ];
    let mut all = true;
    let reports = first.reports.iter().chain(std::iter::once(&determinism));
    for (i, (name, report)) in names.iter().zip(reports).enumerate() {
        all &= report.pass;
        println!(
            "criterion {} [{name}]: {} -- {}",
            i + 1,
            if report.pass { "PASS" } else { "FAIL" },
            report.summary
        );
    }
    let elapsed = start.elapsed();
    let in_time = elapsed < SUITE_LIMIT;
    println!(
        "wall clock: {:.1} s for two full passes (target {} s): {}",
        elapsed.as_secs_f64(),
        SUITE_LIMIT.as_secs(),
        if in_time { "PASS" } else { "FAIL" }
    );
    if !(all && in_time) {
        std::process::exit(1);
    }
}
