//! Runners for the acceptance criteria, shared by the test suite and the CLI.

use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::atoms::{eval_expr, gen_atoms, normalize, AtomSet, Sign};
use crate::error::Result;
use crate::expr::Expr;
use crate::gsbasis::{
    complete, is_gs_basis, parse_presentation, r1_comp, unreduced, Presentation, Rewriter,
    DEFAULT_MAX_ROUNDS,
};
use crate::imeasure::{
    atom_measures, atom_measures_dense, joint_entropies, measure_of, random_distribution,
    random_markov_distribution, verify_markov_vanishing,
};
use crate::markov::{check_reversal, k_set, markov_normalize};

pub const R1_COMP_2: &str = include_str!("../data/r1_comp.pres");
pub const MARKOV_3: &str = include_str!("../data/markov_3.pres");
pub const MARKOV_4: &str = include_str!("../data/markov_4.pres");
pub const MARKOV_5: &str = include_str!("../data/markov_5.pres");

/// The bundled Markov presentation for `n` in `3..=5`.
pub fn bundled_markov(n: usize) -> Option<&'static str> {
    match n {
        3 => Some(MARKOV_3),
        4 => Some(MARKOV_4),
        5 => Some(MARKOV_5),
        _ => None,
    }
}

/// The normal form `1` of the five-variable Markov quotient as listed for it.
pub const MARKOV_5_UNIVERSE: [usize; 16] = [0, 1, 2, 3, 4, 6, 7, 8, 12, 14, 15, 16, 24, 28, 30, 31];

const MEASURE_TOL: f64 = 1e-8;
const SOLVE_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}. {}: {} ({:.2}s, limit {}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )
    }
}

pub const CRITERIA: usize = 8;

/// A random expression of depth at most `depth` over `n` variables.
pub fn random_expr(rng: &mut impl Rng, n: usize, depth: usize, atoms: bool) -> Expr {
    if depth == 0 || rng.random_bool(0.25) {
        return match rng.random_range(0..if atoms { 6 } else { 5 }) {
            0 => Expr::Zero,
            1 => Expr::One,
            2 => Expr::Var(rng.random_range(1..=n)).complement(),
            5 => Expr::AtomVar(rng.random_range(0..1usize << n)),
            _ => Expr::Var(rng.random_range(1..=n)),
        };
    }
    match rng.random_range(0..5) {
        0 => random_expr(rng, n, depth - 1, atoms).complement(),
        k => {
            let children = (0..rng.random_range(2..=3))
                .map(|_| random_expr(rng, n, depth - 1, atoms))
                .collect::<Vec<_>>();
            if k % 2 == 0 {
                Expr::join(children)
            } else {
                Expr::meet(children)
            }
        }
    }
}

fn finish(
    id: usize,
    name: &'static str,
    limit: u64,
    start: Instant,
    outcome: Result<(bool, String)>,
) -> CriterionResult {
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit);
    let (ok, mut detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    let passed = ok && elapsed < limit;
    if ok && !passed {
        detail.push_str("; over the time limit");
    }
    CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed,
        limit,
    }
}

/// Runs one criterion by number.
pub fn run_criterion(id: usize) -> Option<CriterionResult> {
    let start = Instant::now();
    Some(match id {
        1 => finish(id, "oracle equivalence", 10, start, oracle_equivalence()),
        2 => finish(id, "free basis verification", 60, start, free_basis()),
        3 => finish(id, "Markov completion", 120, start, markov_completion()),
        4 => finish(id, "K_n closed form", 1, start, k_closed_form()),
        5 => finish(id, "complement semiring laws", 60, start, semiring_laws()),
        6 => finish(id, "measure correspondences", 60, start, measure_laws()),
        7 => finish(
            id,
            "Markov numeric vanishing",
            60,
            start,
            markov_vanishing(),
        ),
        8 => finish(
            id,
            "quotient atom universes",
            5,
            start,
            quotient_universes(),
        ),
        _ => return None,
    })
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA).filter_map(run_criterion).collect()
}

fn oracle_equivalence() -> Result<(bool, String)> {
    const PER_N: usize = 10_000;
    // literal rewriting is also checked on every fourth expression
    const REWRITE_EVERY: usize = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut mismatches = 0;
    let mut rewrite_mismatches = 0;
    for n in 1..=4 {
        let pres = r1_comp(n)?;
        let one = AtomSet::full(n)?;
        let rewriter = Rewriter::new(&pres, &one);
        for idx in 0..PER_N {
            let e = random_expr(&mut rng, n, 6, true);
            let oracle = eval_expr(&e, n)?;
            if normalize(&e, n)? != oracle {
                mismatches += 1;
            }
            if idx % REWRITE_EVERY == 0 && rewriter.normalize(&e)? != oracle {
                rewrite_mismatches += 1;
            }
        }
    }
    Ok((
        mismatches == 0 && rewrite_mismatches == 0,
        format!(
            "n=1..4, {} expressions of depth <= 6: {mismatches} normalize mismatches, \
             {rewrite_mismatches} literal-rewriting mismatches on {}",
            4 * PER_N,
            4 * PER_N / REWRITE_EVERY
        ),
    ))
}

fn free_basis() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 1..=2 {
        let p = if n == 2 {
            parse_presentation(R1_COMP_2, 2)?
        } else {
            r1_comp(1)?
        };
        let report = is_gs_basis(&p)?;
        let closed = report.is_gs_basis && report.bound_violations == 0;
        ok &= closed;
        let mut still_closed = Vec::new();
        let mut still_generating = 0;
        for i in 0..p.len() {
            let q = p.without(i);
            if is_gs_basis(&q)?.is_gs_basis {
                still_closed.push(p.relations()[i].to_string());
            }
            if unreduced(&q, p.relations())?.is_empty() {
                still_generating += 1;
            }
        }
        ok &= still_closed.is_empty();
        parts.push(format!(
            "n={n}: closed={closed} ({} compositions, {} nonzero); {} of {} single removals \
             stay closed [{}]; {still_generating} removals still reduce the full set to zero",
            report.compositions,
            report.failures.len(),
            still_closed.len(),
            p.len(),
            still_closed.join("; ")
        ));
    }
    Ok((ok, parts.join(" | ")))
}

fn markov_completion() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 3..=5 {
        let p = parse_presentation(bundled_markov(n).expect("bundled"), n)?;
        let c = complete(&p, DEFAULT_MAX_ROUNDS)?;
        let eliminated = c.presentation.eliminated_atoms();
        let expected = k_set(n)?.eliminated;
        let closed = is_gs_basis(&c.presentation)?.is_gs_basis;
        let mut good = c.complete && closed && eliminated == expected;
        if n == 5 {
            let kept: Vec<usize> = (0..32).filter(|k| !eliminated.contains(k)).collect();
            good &= kept == MARKOV_5_UNIVERSE;
            parts.push(format!(
                "n=5 kept atoms {kept:?} (27 eliminated: {}, 24 eliminated: {})",
                eliminated.contains(&27),
                eliminated.contains(&24)
            ));
        }
        ok &= good;
        parts.push(format!(
            "n={n}: fixpoint={} after {} rounds, {} relations, closed={closed}, eliminated {eliminated:?}",
            c.complete,
            c.rounds,
            c.presentation.len()
        ));
    }
    Ok((ok, parts.join(" | ")))
}

/// `K_n` from generator atom sets, for comparison with the bit-test closed form.
fn k_by_set_algebra(n: usize) -> Result<AtomSet> {
    let mut k = AtomSet::empty(n)?;
    for i in 1..=n - 2 {
        let mut head = AtomSet::empty(n)?;
        for j in 1..=i {
            head = head.join(&gen_atoms(j, Sign::Present, n)?)?;
        }
        let term = head
            .meet(&gen_atoms(i + 1, Sign::Absent, n)?)?
            .meet(&gen_atoms(i + 2, Sign::Present, n)?)?;
        k = k.join(&term)?;
    }
    Ok(k)
}

fn k_closed_form() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for n in 3..=12 {
        let k = k_set(n)?;
        let union_ok = k.eliminated == k_by_set_algebra(n)?.to_vec();
        let terms_ok = k.terms.iter().all(|t| {
            t.atoms
                .iter()
                .all(|&a| k.eliminated.binary_search(&a).is_ok())
        });
        if !(union_ok && terms_ok && check_reversal(n)?) {
            bad.push(n);
        }
    }
    Ok((
        bad.is_empty(),
        format!("n=3..12 closed form vs set algebra and reversal; failing n: {bad:?}"),
    ))
}

/// Checks the laws for `s` against its bitwise complement and, for uniqueness, against
/// `candidates`.
fn laws_hold(s: &AtomSet, candidates: &mut dyn Iterator<Item = AtomSet>) -> Result<bool> {
    let n = s.n();
    let zero = AtomSet::empty(n)?;
    let one = AtomSet::full(n)?;
    let t = s.complement();
    let is_complement =
        |c: &AtomSet| -> Result<bool> { Ok(s.meet(c)? == zero && s.join(c)? == one) };
    if !is_complement(&t)? || s.meet(s)? != *s || s.join(s)? != *s {
        return Ok(false);
    }
    for c in candidates {
        if c != t && is_complement(&c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn semiring_laws() -> Result<(bool, String)> {
    let mut failures = 0;
    let mut checked = 0;
    for n in 1..=3 {
        let m = 1usize << n;
        let all: Vec<AtomSet> = (0..1u64 << m)
            .map(|bits| AtomSet::from_predicate(n, |k| bits >> k & 1 == 1))
            .collect::<Result<_>>()?;
        for s in &all {
            checked += 1;
            if !laws_hold(s, &mut all.iter().cloned())? {
                failures += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 4..=5 {
        for _ in 0..10_000 {
            let s = AtomSet::from_predicate(n, |_| rng.random_bool(0.5))?;
            let t = s.complement();
            // every element differing from the complement in a single atom
            let mut near = (0..1usize << n).map(|k| {
                let mut c = t.clone();
                if c.contains(k) {
                    c.remove(k);
                } else {
                    c.insert(k).expect("index in range");
                }
                c
            });
            checked += 1;
            if !laws_hold(&s, &mut near)? {
                failures += 1;
            }
        }
    }
    Ok((
        failures == 0,
        format!("{checked} elements (exhaustive n<=3, 10^4 random at n=4,5): {failures} failures"),
    ))
}

fn pick_alphabets(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    (0..n)
        .map(|_| *[2usize, 3].choose(rng).expect("nonempty"))
        .collect()
}

fn measure_laws() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    let mut worst_solve: f64 = 0.0;
    let mut cases = 0;
    for n in 2..=4 {
        let m = 1usize << n;
        for trial in 0..100u64 {
            let alphabets = pick_alphabets(&mut rng, n);
            let d = random_distribution(&alphabets, 1000 * n as u64 + trial)?;
            let h = joint_entropies(&d);
            let mu = atom_measures(&h);
            let dense = atom_measures_dense(&h)?;
            for k in 0..m {
                worst_solve = worst_solve.max((mu.get(k) - dense.get(k)).abs());
            }
            let var = |i: usize| gen_atoms(i, Sign::Present, n);
            let bit = |i: usize| 1usize << (i - 1);
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let (xi, xj) = (var(i)?, var(j)?);
                    let f = measure_of(&xi.join(&xj)?, &mu)?;
                    worst = worst.max((f - h.get(bit(i) | bit(j))).abs());
                    let f = measure_of(&xi.meet(&xj.complement())?, &mu)?;
                    let cond = h.get(bit(i) | bit(j)) - h.get(bit(j));
                    worst = worst.max((f - cond).abs());
                    cases += 2;
                    for k in 1..=n {
                        if k == i || k == j {
                            continue;
                        }
                        let xk = var(k)?;
                        let f = measure_of(&xi.meet(&xj.complement())?.meet(&xk)?, &mu)?;
                        let cmi = h.get(bit(i) | bit(j)) + h.get(bit(j) | bit(k))
                            - h.get(bit(j))
                            - h.get(bit(i) | bit(j) | bit(k));
                        worst = worst.max((f - cmi).abs());
                        cases += 1;
                    }
                }
            }
            for _ in 0..10 {
                let a = AtomSet::from_predicate(n, |_| rng.random_bool(0.5))?;
                let b = AtomSet::from_predicate(n, |_| rng.random_bool(0.5))?;
                let lhs = measure_of(&a.meet(&b)?, &mu)?;
                let rhs =
                    measure_of(&a, &mu)? + measure_of(&b, &mu)? - measure_of(&a.join(&b)?, &mu)?;
                worst = worst.max((lhs - rhs).abs());
                cases += 1;
            }
        }
    }
    Ok((
        worst <= MEASURE_TOL && worst_solve <= SOLVE_TOL,
        format!(
            "{cases} identities over 300 distributions: max error {worst:.2e} (tol 1e-8); \
             Möbius vs dense solve max {worst_solve:.2e} (tol 1e-9)"
        ),
    ))
}

fn markov_vanishing() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    let mut worst_atom: f64 = 0.0;
    let mut ok = true;
    for n in 3..=5 {
        for trial in 0..100u64 {
            let alphabets = pick_alphabets(&mut rng, n);
            let d = random_markov_distribution(&alphabets, 100 * n as u64 + trial)?;
            let r = verify_markov_vanishing(&d)?;
            ok &= r.all_ok;
            for c in &r.constraints {
                worst = worst.max(c.value.abs());
            }
            for &(_, v) in &r.k_atoms {
                worst_atom = worst_atom.max(v.abs());
            }
        }
    }
    Ok((
        ok,
        format!(
            "300 chains at n=3,4,5: max |constraint measure| {worst:.2e} (tol 1e-8); \
             informational max |μ(k)| over K_n atoms {worst_atom:.2e}"
        ),
    ))
}

fn quotient_universes() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 3..=4 {
        let universe = markov_normalize(&Expr::One, n)?;
        // eliminate, atom by atom, whatever some chain constraint covers
        let constraints: Vec<AtomSet> = (1..=n - 2)
            .map(|i| eval_expr(&crate::gsbasis::chain_constraint(i), n))
            .collect::<Result<_>>()?;
        let brute: Vec<usize> = (0..1usize << n)
            .filter(|&k| constraints.iter().all(|c| !c.contains(k)))
            .collect();
        ok &= universe.to_vec() == brute;
        parts.push(format!("n={n}: {:?}", universe.to_vec()));
    }
    Ok((ok, parts.join(" | ")))
}

/// Compares a bundled presentation file with its builder.
pub fn bundled_matches(text: &str, built: &Presentation) -> Result<bool> {
    Ok(parse_presentation(text, built.n())?.same_relations(built))
}
