//! The Markov quotient: chain conditional-independence constraints eliminate atoms.
//!
//! For a chain `x_1 → x_2 → … → x_n` the relations
//! `(x_1 + … + x_i) * x_{i+1}' * x_{i+2} = 0`, `i = 1..=n-2`, force every atom in
//! `K_n = ⋃_i (A_1 ∪ … ∪ A_i) ∩ A_{i+1}' ∩ A_{i+2}` to vanish. Normal forms of the
//! quotient are sums of the remaining atoms.

use serde::{Deserialize, Serialize};

use crate::atoms::{check_n, gen_atoms, normalize, AtomSet, Sign};
use crate::error::{Error, Result};
use crate::expr::Expr;

/// One term of the union defining `K_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTerm {
    pub i: usize,
    pub atoms: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KSet {
    pub n: usize,
    pub eliminated: Vec<usize>,
    pub terms: Vec<KTerm>,
}

impl KSet {
    pub fn atoms(&self) -> AtomSet {
        AtomSet::from_indices(self.n, self.eliminated.iter().copied())
            .expect("indices produced for this n")
    }
}

fn check_chain_n(n: usize) -> Result<()> {
    check_n(n)?;
    if n < 3 {
        return Err(Error::VariableCount {
            n,
            min: 3,
            max: crate::atoms::HARD_MAX_N,
        });
    }
    Ok(())
}

/// Whether atom `k` lies in the `i`-th term: some bit below `i` set, bit `i` clear and
/// bit `i+1` set.
fn in_term(k: usize, i: usize) -> bool {
    k & ((1 << i) - 1) != 0 && k >> i & 1 == 0 && k >> (i + 1) & 1 == 1
}

/// `K_n` with its per-constraint breakdown.
pub fn k_set(n: usize) -> Result<KSet> {
    check_chain_n(n)?;
    let m = 1usize << n;
    let terms: Vec<KTerm> = (1..=n - 2)
        .map(|i| KTerm {
            i,
            atoms: (0..m).filter(|&k| in_term(k, i)).collect(),
        })
        .collect();
    let eliminated = (0..m)
        .filter(|&k| (1..=n - 2).any(|i| in_term(k, i)))
        .collect();
    Ok(KSet {
        n,
        eliminated,
        terms,
    })
}

/// A conditional-independence constraint `A ⊥ B | C` on variable indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CIConstraint {
    a: Vec<usize>,
    b: Vec<usize>,
    c: Vec<usize>,
}

impl CIConstraint {
    /// Validates that `a`, `b` are nonempty, all three are disjoint and indices are
    /// positive.
    pub fn new(a: Vec<usize>, b: Vec<usize>, c: Vec<usize>) -> Result<CIConstraint> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::Constraint("A and B must be nonempty".into()));
        }
        let all: Vec<usize> = a.iter().chain(&b).chain(&c).copied().collect();
        if all.contains(&0) {
            return Err(Error::Constraint("variable indices start at 1".into()));
        }
        let mut sorted = all.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != all.len() {
            return Err(Error::Constraint("A, B and C must be disjoint".into()));
        }
        Ok(CIConstraint { a, b, c })
    }

    /// The `i`-th chain constraint `{1..i} ⊥ {i+2} | {i+1}`.
    pub fn chain(i: usize) -> CIConstraint {
        CIConstraint {
            a: (1..=i).collect(),
            b: vec![i + 2],
            c: vec![i + 1],
        }
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn c(&self) -> &[usize] {
        &self.c
    }

    /// `(Σ_A x) * (Σ_B x) * Π_C x'`, the expression the constraint sets to zero.
    pub fn to_expr(&self) -> Expr {
        let mut parts = vec![
            Expr::join(self.a.iter().map(|&i| Expr::Var(i))),
            Expr::join(self.b.iter().map(|&i| Expr::Var(i))),
        ];
        parts.extend(self.c.iter().map(|&i| Expr::Var(i).complement()));
        Expr::meet(parts)
    }
}

fn mask(vars: &[usize]) -> usize {
    vars.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

/// Atoms forced to zero by `c`: those meeting both `A` and `B` while avoiding `C`.
pub fn ci_atoms(c: &CIConstraint, n: usize) -> Result<AtomSet> {
    check_n(n)?;
    if let Some(&i) = c.a.iter().chain(&c.b).chain(&c.c).find(|&&i| i > n) {
        return Err(Error::VarOutOfRange { index: i as u64, n });
    }
    let (ma, mb, mc) = (mask(&c.a), mask(&c.b), mask(&c.c));
    AtomSet::from_predicate(n, |k| k & ma != 0 && k & mb != 0 && k & mc == 0)
}

/// The element `1` of the quotient: every atom outside `K_n`.
pub fn markov_universe(n: usize) -> Result<AtomSet> {
    Ok(k_set(n)?.atoms().complement())
}

/// Normal form in the Markov quotient: the free normal form with `K_n` cleared.
pub fn markov_normalize(e: &Expr, n: usize) -> Result<AtomSet> {
    normalize(e, n)?.meet(&markov_universe(n)?)
}

/// Complement inside the quotient, relative to its universe.
pub fn markov_complement(s: &AtomSet) -> Result<AtomSet> {
    markov_universe(s.n())?.difference(s)
}

/// Whether reading the chain backwards eliminates the same atoms.
///
/// The reversed union `⋃_i (A_n ∪ … ∪ A_{n-i+1}) ∩ A_{n-i}' ∩ A_{n-i-1}` is built from
/// generator atom sets and compared with `K_n`.
pub fn check_reversal(n: usize) -> Result<bool> {
    let k = k_set(n)?.atoms();
    let mut reversed = AtomSet::empty(n)?;
    for i in 1..=n - 2 {
        let mut head = AtomSet::empty(n)?;
        for j in n - i + 1..=n {
            head = head.join(&gen_atoms(j, Sign::Present, n)?)?;
        }
        let term = head
            .meet(&gen_atoms(n - i, Sign::Absent, n)?)?
            .meet(&gen_atoms(n - i - 1, Sign::Present, n)?)?;
        reversed = reversed.join(&term)?;
    }
    Ok(reversed == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn small_k_sets() {
        assert_eq!(k_set(3).unwrap().eliminated, vec![5]);
        assert_eq!(k_set(4).unwrap().eliminated, vec![5, 9, 10, 11, 13]);
        let k4 = k_set(4).unwrap();
        assert_eq!(k4.terms[1].atoms, vec![9, 10, 11]);
        assert!(k_set(2).is_err());
    }

    #[test]
    fn five_variable_universe() {
        let u = markov_universe(5).unwrap();
        assert_eq!(
            u.to_vec(),
            vec![0, 1, 2, 3, 4, 6, 7, 8, 12, 14, 15, 16, 24, 28, 30, 31]
        );
        let k = k_set(5).unwrap();
        assert!(k.eliminated.contains(&27));
        assert!(!k.eliminated.contains(&24));
    }

    #[test]
    fn ci_examples() {
        let c = CIConstraint::new(vec![1], vec![3], vec![2]).unwrap();
        assert_eq!(ci_atoms(&c, 3).unwrap().to_vec(), vec![5]);
        let c = CIConstraint::new(vec![1, 2], vec![4], vec![3]).unwrap();
        assert_eq!(ci_atoms(&c, 4).unwrap().to_vec(), vec![9, 10, 11]);
        let c = CIConstraint::new(vec![1], vec![2], vec![]).unwrap();
        assert_eq!(ci_atoms(&c, 2).unwrap().to_vec(), vec![3]);
        assert!(CIConstraint::new(vec![1], vec![1], vec![]).is_err());
        assert!(CIConstraint::new(vec![], vec![1], vec![]).is_err());
        let c = CIConstraint::new(vec![1], vec![4], vec![]).unwrap();
        assert!(ci_atoms(&c, 3).is_err());
    }

    #[test]
    fn quotient_normal_forms() {
        let e = parse("x1 * x2' * x3", 3).unwrap();
        assert!(markov_normalize(&e, 3).unwrap().is_empty());
        let e = parse("x1 * x2'", 3).unwrap();
        assert_eq!(markov_normalize(&e, 3).unwrap().to_vec(), vec![1]);
        let one = markov_normalize(&Expr::One, 5).unwrap();
        assert_eq!(one, markov_universe(5).unwrap());
        for i in 1..=3 {
            let r = CIConstraint::chain(i).to_expr();
            assert!(markov_normalize(&r, 5).unwrap().is_empty());
        }
    }

    #[test]
    fn quotient_complement() {
        let s = AtomSet::from_indices(3, [0, 1]).unwrap();
        let t = markov_complement(&s).unwrap();
        assert_eq!(t.to_vec(), vec![2, 3, 4, 6, 7]);
    }

    #[test]
    fn reversal_small() {
        for n in 3..=6 {
            assert!(check_reversal(n).unwrap());
        }
    }
}
