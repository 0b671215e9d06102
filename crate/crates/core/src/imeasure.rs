//! The entropy measure on atoms.
//!
//! A joint distribution of `x_1..x_n` determines `H(X_T)` for every nonempty
//! `T ⊆ {1..n}`. There is a unique signed measure `μ` on atoms with `μ(y_0) = 0` and
//! `Σ_{k ∧ T ≠ 0} μ(k) = H(X_T)`; the measure of an element is the sum over its atoms.
//! Variable subsets are encoded as bit masks with bit `i-1` for `x_i`.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::atoms::{check_n, AtomSet};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::markov::{ci_atoms, k_set, markov_normalize, CIConstraint};

/// Tolerance on total probability mass.
pub const PMF_TOLERANCE: f64 = 1e-12;
/// Tolerance for comparisons of measures.
pub const MEASURE_TOLERANCE: f64 = 1e-8;
/// Minimum separation reported as a numeric counterexample.
pub const SEPARATION: f64 = 1e-6;
pub const DEFAULT_TRIALS: usize = 1000;
/// Largest `n` for which random distributions are searched.
pub const NUMERIC_MAX_N: usize = 10;
/// Largest product alphabet accepted for a dense probability table.
pub const MAX_OUTCOMES: usize = 1 << 24;

/// A probability table over a product alphabet, indexed in mixed radix with `x_1` the
/// fastest-varying digit.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    alphabets: Vec<usize>,
    pmf: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct PmfEntry {
    outcome: Vec<usize>,
    p: f64,
}

#[derive(Serialize, Deserialize)]
struct DistFile {
    n: usize,
    alphabets: Vec<usize>,
    pmf: Vec<PmfEntry>,
}

fn table_size(alphabets: &[usize]) -> Result<usize> {
    if alphabets.contains(&0) {
        return Err(Error::Distribution(
            "alphabet sizes must be positive".into(),
        ));
    }
    alphabets
        .iter()
        .try_fold(1usize, |acc, &a| acc.checked_mul(a))
        .filter(|&s| s <= MAX_OUTCOMES)
        .ok_or_else(|| Error::Distribution("product alphabet is too large".into()))
}

impl JointDistribution {
    pub fn new(alphabets: Vec<usize>, pmf: Vec<f64>) -> Result<JointDistribution> {
        check_n(alphabets.len())?;
        let size = table_size(&alphabets)?;
        if pmf.len() != size {
            return Err(Error::Distribution(format!(
                "expected {size} masses, got {}",
                pmf.len()
            )));
        }
        if let Some(p) = pmf.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(Error::Distribution(format!("invalid mass {p}")));
        }
        let total: f64 = pmf.iter().sum();
        if (total - 1.0).abs() > PMF_TOLERANCE {
            return Err(Error::Distribution(format!("total mass {total} is not 1")));
        }
        Ok(JointDistribution { alphabets, pmf })
    }

    /// Reads the JSON file format; unlisted outcomes have mass zero.
    pub fn from_json(text: &str) -> Result<JointDistribution> {
        let file: DistFile =
            serde_json::from_str(text).map_err(|e| Error::Distribution(e.to_string()))?;
        if file.alphabets.len() != file.n {
            return Err(Error::Distribution(format!(
                "n = {} but {} alphabet sizes given",
                file.n,
                file.alphabets.len()
            )));
        }
        check_n(file.n)?;
        let size = table_size(&file.alphabets)?;
        let mut pmf = vec![0.0; size];
        for entry in file.pmf {
            let idx = encode(&file.alphabets, &entry.outcome).ok_or_else(|| {
                Error::Distribution(format!("outcome {:?} outside the alphabets", entry.outcome))
            })?;
            pmf[idx] += entry.p;
        }
        JointDistribution::new(file.alphabets, pmf)
    }

    /// JSON with only the outcomes of positive mass.
    pub fn to_json(&self) -> String {
        let pmf = self
            .pmf
            .iter()
            .enumerate()
            .filter(|(_, p)| **p > 0.0)
            .map(|(i, &p)| PmfEntry {
                outcome: decode(&self.alphabets, i),
                p,
            })
            .collect();
        let file = DistFile {
            n: self.n(),
            alphabets: self.alphabets.clone(),
            pmf,
        };
        serde_json::to_string(&file).expect("plain data serializes")
    }

    pub fn n(&self) -> usize {
        self.alphabets.len()
    }

    pub fn alphabets(&self) -> &[usize] {
        &self.alphabets
    }

    pub fn pmf(&self) -> &[f64] {
        &self.pmf
    }

    /// Mass of one outcome.
    pub fn p(&self, outcome: &[usize]) -> f64 {
        encode(&self.alphabets, outcome).map_or(0.0, |i| self.pmf[i])
    }
}

fn encode(alphabets: &[usize], outcome: &[usize]) -> Option<usize> {
    if outcome.len() != alphabets.len() {
        return None;
    }
    let mut idx = 0;
    for (&v, &a) in outcome.iter().zip(alphabets).rev() {
        if v >= a {
            return None;
        }
        idx = idx * a + v;
    }
    Some(idx)
}

fn decode(alphabets: &[usize], mut idx: usize) -> Vec<usize> {
    alphabets
        .iter()
        .map(|&a| {
            let v = idx % a;
            idx /= a;
            v
        })
        .collect()
}

fn entropy_bits(masses: impl IntoIterator<Item = f64>) -> f64 {
    masses
        .into_iter()
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.log2())
        .sum()
}

/// `H(X_T)` in bits for every variable mask `T`; entry 0 is `H(∅) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyVector {
    n: usize,
    h: Vec<f64>,
}

impl EntropyVector {
    /// From values indexed by mask, with `values[0]` ignored and set to zero.
    pub fn new(n: usize, mut values: Vec<f64>) -> Result<EntropyVector> {
        check_n(n)?;
        if values.len() != 1 << n {
            return Err(Error::Mismatch(values.len(), 1 << n));
        }
        values[0] = 0.0;
        Ok(EntropyVector { n, h: values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, mask: usize) -> f64 {
        self.h[mask]
    }

    pub fn values(&self) -> &[f64] {
        &self.h
    }
}

/// Shannon entropies of every marginal of `d`.
pub fn joint_entropies(d: &JointDistribution) -> EntropyVector {
    let n = d.n();
    let outcomes: Vec<Vec<usize>> = (0..d.pmf.len()).map(|i| decode(&d.alphabets, i)).collect();
    let h = (0..1usize << n)
        .into_par_iter()
        .map(|mask| {
            if mask == 0 {
                return 0.0;
            }
            let vars: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let size: usize = vars.iter().map(|&i| d.alphabets[i]).product();
            let mut marginal = vec![0.0; size];
            for (o, &p) in outcomes.iter().zip(&d.pmf) {
                let idx = vars
                    .iter()
                    .rev()
                    .fold(0, |acc, &i| acc * d.alphabets[i] + o[i]);
                marginal[idx] += p;
            }
            entropy_bits(marginal)
        })
        .collect();
    EntropyVector { n, h }
}

/// The measure `μ(k)` of each atom.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomMeasures {
    n: usize,
    mu: Vec<f64>,
}

impl AtomMeasures {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize) -> f64 {
        self.mu[k]
    }

    pub fn values(&self) -> &[f64] {
        &self.mu
    }
}

/// Atom measures by Möbius inversion over the subset lattice.
///
/// With `F(S) = H(N) − H(N∖S)` the measure of all nonzero atoms inside `S`,
/// `μ(S) = Σ_{T ⊆ S} (−1)^{|S∖T|} F(T)`.
pub fn atom_measures(h: &EntropyVector) -> AtomMeasures {
    let full = (1usize << h.n) - 1;
    let mut mu: Vec<f64> = (0..=full).map(|s| h.h[full] - h.h[full & !s]).collect();
    for i in 0..h.n {
        let bit = 1 << i;
        for s in 0..=full {
            if s & bit != 0 {
                mu[s] -= mu[s ^ bit];
            }
        }
    }
    mu[0] = 0.0;
    AtomMeasures { n: h.n, mu }
}

/// Atom measures by solving the incidence system `Σ_{k ∧ T ≠ 0} μ(k) = H(T)` densely.
pub fn atom_measures_dense(h: &EntropyVector) -> Result<AtomMeasures> {
    let m = (1usize << h.n) - 1;
    let a = DMatrix::from_fn(m, m, |t, k| if (t + 1) & (k + 1) != 0 { 1.0 } else { 0.0 });
    let b = DVector::from_fn(m, |t, _| h.h[t + 1]);
    let x = a
        .lu()
        .solve(&b)
        .ok_or_else(|| Error::Unsupported("singular incidence system".into()))?;
    let mut mu = vec![0.0];
    mu.extend(x.iter());
    Ok(AtomMeasures { n: h.n, mu })
}

/// `Σ_{k ∈ s} μ(k)`.
pub fn measure_of(s: &AtomSet, m: &AtomMeasures) -> Result<f64> {
    if s.n() != m.n {
        return Err(Error::Mismatch(s.n(), m.n));
    }
    Ok(s.iter().map(|k| m.mu[k]).sum())
}

/// A rational combination `Σ c_T H(X_T)` over nonempty masks `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntropyCombo {
    n: usize,
    coeffs: BTreeMap<usize, Rational64>,
}

#[derive(Serialize)]
struct ComboTerm {
    vars: Vec<usize>,
    coeff: String,
}

impl EntropyCombo {
    pub fn zero(n: usize) -> EntropyCombo {
        EntropyCombo {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, mask: usize, c: Rational64) {
        if mask == 0 || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(mask).or_insert_with(Rational64::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    pub fn coeff(&self, mask: usize) -> Rational64 {
        self.coeffs
            .get(&mask)
            .copied()
            .unwrap_or_else(Rational64::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in display order: positive coefficients first, then by subset size and
    /// lexicographically by variable list.
    pub fn terms(&self) -> Vec<(Vec<usize>, Rational64)> {
        let mut out: Vec<(Vec<usize>, Rational64)> = self
            .coeffs
            .iter()
            .map(|(&m, &c)| ((1..=self.n).filter(|i| m >> (i - 1) & 1 == 1).collect(), c))
            .collect();
        out.sort_by(|a, b| {
            b.1.is_positive()
                .cmp(&a.1.is_positive())
                .then(a.0.len().cmp(&b.0.len()))
                .then(a.0.cmp(&b.0))
        });
        out
    }

    pub fn evaluate(&self, h: &EntropyVector) -> f64 {
        self.coeffs
            .iter()
            .map(|(&m, c)| *c.numer() as f64 / *c.denom() as f64 * h.h[m])
            .sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<ComboTerm> = self
            .terms()
            .into_iter()
            .map(|(vars, c)| ComboTerm {
                vars,
                coeff: c.to_string(),
            })
            .collect();
        serde_json::json!({ "n": self.n, "terms": terms })
    }
}

impl fmt::Display for EntropyCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (vars, c)) in self.terms().into_iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            f.write_str(if c.is_positive() { "+" } else { "\u{2212}" })?;
            let a = c.abs();
            if a != Rational64::from_integer(1) {
                write!(f, "{a}")?;
            }
            let names: Vec<String> = vars.iter().map(|i| format!("x{i}")).collect();
            write!(f, "H({})", names.join(","))?;
        }
        Ok(())
    }
}

/// Measure of `s` as an exact combination of joint entropies.
///
/// Summing the Möbius formula over the atoms of `s` gives a coefficient
/// `c(T) = Σ_{k ∈ s, k ⊇ T} (−1)^{|k∖T|}` on each `F(T) = H(N) − H(N∖T)`.
pub fn symbolic_measure(s: &AtomSet) -> EntropyCombo {
    let n = s.n();
    let full = (1usize << n) - 1;
    let mut c: Vec<i64> = (0..=full)
        .map(|k| (k != 0 && s.contains(k)) as i64)
        .collect();
    for i in 0..n {
        let bit = 1 << i;
        for t in 0..=full {
            if t & bit == 0 {
                c[t] -= c[t | bit];
            }
        }
    }
    let mut combo = EntropyCombo::zero(n);
    for (t, &ct) in c.iter().enumerate().skip(1) {
        if ct != 0 {
            combo.add(full, Rational64::from_integer(ct));
            combo.add(full & !t, Rational64::from_integer(-ct));
        }
    }
    combo
}

fn dirichlet(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..len).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = w.iter().sum();
    w.into_iter().map(|x| x / total).collect()
}

fn renormalized(alphabets: Vec<usize>, mut pmf: Vec<f64>) -> Result<JointDistribution> {
    let total: f64 = pmf.iter().sum();
    pmf.iter_mut().for_each(|p| *p /= total);
    JointDistribution::new(alphabets, pmf)
}

/// A distribution drawn uniformly from the simplex over the product alphabet.
pub fn random_distribution(alphabets: &[usize], seed: u64) -> Result<JointDistribution> {
    check_n(alphabets.len())?;
    let size = table_size(alphabets)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    renormalized(alphabets.to_vec(), dirichlet(&mut rng, size))
}

/// A Markov chain `x_1 → x_2 → … → x_n` with a uniformly drawn initial marginal and
/// uniformly drawn transition rows.
pub fn random_markov_distribution(alphabets: &[usize], seed: u64) -> Result<JointDistribution> {
    check_n(alphabets.len())?;
    let size = table_size(alphabets)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = dirichlet(&mut rng, alphabets[0]);
    let kernels: Vec<Vec<Vec<f64>>> = alphabets
        .windows(2)
        .map(|w| (0..w[0]).map(|_| dirichlet(&mut rng, w[1])).collect())
        .collect();
    let pmf = (0..size)
        .map(|idx| {
            let o = decode(alphabets, idx);
            let mut p = first[o[0]];
            for (i, k) in kernels.iter().enumerate() {
                p *= k[o[i]][o[i + 1]];
            }
            p
        })
        .collect();
    renormalized(alphabets.to_vec(), pmf)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Free,
    Markov,
}

/// A distribution on which two expressions measure differently.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub seed: u64,
    pub distribution: JointDistribution,
    pub f1: f64,
    pub f2: f64,
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Equal,
    NotEqual(Option<Counterexample>),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

/// Canonical form of `e` in the given mode.
pub fn canonical(e: &Expr, n: usize, mode: Mode) -> Result<AtomSet> {
    match mode {
        Mode::Free => crate::atoms::normalize(e, n),
        Mode::Markov => markov_normalize(e, n),
    }
}

fn search_alphabets(n: usize) -> Vec<usize> {
    vec![if n <= 6 { 3 } else { 2 }; n]
}

/// Decides `e1 = e2` by canonical forms. For unequal forms, seeds `seed..seed+trials`
/// are tried in order for a distribution separating the two measures by more than
/// [`SEPARATION`]; the first hit is reported. No search runs above [`NUMERIC_MAX_N`].
pub fn check_identity(
    e1: &Expr,
    e2: &Expr,
    n: usize,
    mode: Mode,
    trials: usize,
    seed: u64,
) -> Result<Verdict> {
    let s1 = canonical(e1, n, mode)?;
    let s2 = canonical(e2, n, mode)?;
    if s1 == s2 {
        return Ok(Verdict::Equal);
    }
    if n > NUMERIC_MAX_N {
        return Ok(Verdict::NotEqual(None));
    }
    let alphabets = search_alphabets(n);
    let hits: Vec<Option<Counterexample>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| -> Result<Option<Counterexample>> {
            let s = seed.wrapping_add(t);
            let d = match mode {
                Mode::Free => random_distribution(&alphabets, s)?,
                Mode::Markov => random_markov_distribution(&alphabets, s)?,
            };
            let m = atom_measures(&joint_entropies(&d));
            let (f1, f2) = (measure_of(&s1, &m)?, measure_of(&s2, &m)?);
            Ok(((f1 - f2).abs() > SEPARATION).then_some(Counterexample {
                seed: s,
                distribution: d,
                f1,
                f2,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(Verdict::NotEqual(hits.into_iter().flatten().next()))
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstraintCheck {
    pub i: usize,
    pub value: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MarkovReport {
    pub n: usize,
    pub constraints: Vec<ConstraintCheck>,
    /// `(k, μ(k))` for each atom of `K_n`; informational.
    pub k_atoms: Vec<(usize, f64)>,
    pub all_ok: bool,
}

/// Measures every chain constraint `I(x_1..x_i ; x_{i+2} | x_{i+1})` on `d`.
pub fn verify_markov_vanishing(d: &JointDistribution) -> Result<MarkovReport> {
    let n = d.n();
    let m = atom_measures(&joint_entropies(d));
    let mut constraints = Vec::new();
    for i in 1..=n.saturating_sub(2) {
        let value = measure_of(&ci_atoms(&CIConstraint::chain(i), n)?, &m)?;
        constraints.push(ConstraintCheck {
            i,
            value,
            ok: value.abs() <= MEASURE_TOLERANCE,
        });
    }
    let k_atoms = if n >= 3 {
        k_set(n)?
            .eliminated
            .iter()
            .map(|&k| (k, m.get(k)))
            .collect()
    } else {
        Vec::new()
    };
    Ok(MarkovReport {
        n,
        all_ok: constraints.iter().all(|c| c.ok),
        constraints,
        k_atoms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::eval_expr;
    use crate::expr::parse;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    fn copy_bit() -> JointDistribution {
        JointDistribution::new(vec![2, 2], vec![0.5, 0.0, 0.0, 0.5]).unwrap()
    }

    #[test]
    fn entropy_examples() {
        let coin = JointDistribution::new(vec![2], vec![0.5, 0.5]).unwrap();
        assert!(close(joint_entropies(&coin).get(1), 1.0));
        let indep = JointDistribution::new(vec![2, 2], vec![0.25; 4]).unwrap();
        let h = joint_entropies(&indep);
        assert!(close(h.get(1), 1.0) && close(h.get(2), 1.0) && close(h.get(3), 2.0));
        let h = joint_entropies(&copy_bit());
        assert!(close(h.get(1), 1.0) && close(h.get(2), 1.0) && close(h.get(3), 1.0));
    }

    #[test]
    fn measures_of_copy_and_independent_bits() {
        let m = atom_measures(&joint_entropies(&copy_bit()));
        assert!(close(m.get(1), 0.0) && close(m.get(2), 0.0) && close(m.get(3), 1.0));
        assert_eq!(m.get(0), 0.0);
        let indep = JointDistribution::new(vec![2, 2], vec![0.25; 4]).unwrap();
        let m = atom_measures(&joint_entropies(&indep));
        assert!(close(m.get(1), 1.0) && close(m.get(2), 1.0) && close(m.get(3), 0.0));
        let m = atom_measures(&joint_entropies(&copy_bit()));
        let f = |s: &str| measure_of(&eval_expr(&parse(s, 2).unwrap(), 2).unwrap(), &m).unwrap();
        assert!(close(f("x1 + x2"), 1.0));
        assert!(close(f("x1 * x2'"), 0.0));
        assert!(close(f("0"), 0.0));
    }

    #[test]
    fn dense_solve_matches() {
        let d = random_distribution(&[2, 3, 2], 11).unwrap();
        let h = joint_entropies(&d);
        let a = atom_measures(&h);
        let b = atom_measures_dense(&h).unwrap();
        for k in 0..8 {
            assert!((a.get(k) - b.get(k)).abs() < 1e-9);
        }
    }

    #[test]
    fn symbolic_examples() {
        let combo = |s: &str, n| symbolic_measure(&eval_expr(&parse(s, n).unwrap(), n).unwrap());
        assert_eq!(combo("x1 * x2'", 3).to_string(), "+H(x1,x2) \u{2212}H(x2)");
        assert_eq!(combo("x1 + x2", 2).to_string(), "+H(x1,x2)");
        assert_eq!(
            combo("x1 * x2' * x3", 3).to_string(),
            "+H(x1,x2) +H(x2,x3) \u{2212}H(x2) \u{2212}H(x1,x2,x3)"
        );
        assert_eq!(combo("0", 2).to_string(), "0");
        assert_eq!(combo("x1' * x2'", 2).to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"n":2,"alphabets":[2,2],"pmf":[{"outcome":[0,0],"p":0.5},{"outcome":[1,1],"p":0.5}]}"#;
        let d = JointDistribution::from_json(text).unwrap();
        assert_eq!(d, copy_bit());
        assert_eq!(JointDistribution::from_json(&d.to_json()).unwrap(), d);
        assert_eq!(d.p(&[1, 1]), 0.5);
        let bad = r#"{"n":1,"alphabets":[2],"pmf":[{"outcome":[0],"p":0.7}]}"#;
        assert!(JointDistribution::from_json(bad).is_err());
        let bad = r#"{"n":1,"alphabets":[2],"pmf":[{"outcome":[2],"p":1.0}]}"#;
        assert!(JointDistribution::from_json(bad).is_err());
    }

    #[test]
    fn seeded_sampling_is_deterministic() {
        let a = random_markov_distribution(&[2, 2, 2], 7).unwrap();
        let b = random_markov_distribution(&[2, 2, 2], 7).unwrap();
        assert_eq!(a, b);
        let r = verify_markov_vanishing(&a).unwrap();
        assert!(r.all_ok, "{r:?}");
        let single = random_markov_distribution(&[4], 3).unwrap();
        assert_eq!(single.n(), 1);
    }

    #[test]
    fn identity_verdicts() {
        let p = |s: &str, n| parse(s, n).unwrap();
        assert!(check_identity(
            &p("x1 + x2", 2),
            &p("x1 + (x2 * x1')", 2),
            2,
            Mode::Free,
            10,
            0
        )
        .unwrap()
        .is_equal());
        assert!(
            check_identity(&p("x1 * x2' * x3", 3), &p("0", 3), 3, Mode::Markov, 10, 0)
                .unwrap()
                .is_equal()
        );
        match check_identity(&p("x1", 2), &p("x2", 2), 2, Mode::Free, 10, 0).unwrap() {
            Verdict::NotEqual(Some(c)) => assert!((c.f1 - c.f2).abs() > SEPARATION),
            other => panic!("{other:?}"),
        }
    }
}
