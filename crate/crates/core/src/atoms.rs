//! Canonical atom-set representation of the free idempotent complement semiring.
//!
//! Every element over `n` generators is a join of atoms `y_k`, `k in 0..2^n`, where bit
//! `l-1` of `k` records whether `x_l` (bit set) or its complement (bit clear) occurs in
//! the atom. The element `1` is the join of all atoms and `0` the empty join.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::Expr;

/// Default cap on the number of variables (2^16-bit atom sets).
pub const DEFAULT_MAX_N: usize = 16;

/// Hard ceiling for atom-set sizes regardless of configuration.
pub const HARD_MAX_N: usize = 24;

const WORD: usize = 64;

/// Checks `1 <= n <= HARD_MAX_N`.
pub fn check_n(n: usize) -> Result<()> {
    if (1..=HARD_MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::VariableCount {
            n,
            min: 1,
            max: HARD_MAX_N,
        })
    }
}

/// Whether a generator appears plainly or complemented in an atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Present,
    Absent,
}

/// A set of atom indices over `n` variables, stored as a bit vector of length `2^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AtomSet {
    n: usize,
    words: Vec<u64>,
}

impl AtomSet {
    /// The empty join, i.e. `0`.
    pub fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        let len = (1usize << n).div_ceil(WORD);
        Ok(AtomSet {
            n,
            words: vec![0; len],
        })
    }

    /// The join of all atoms, i.e. `1`.
    pub fn full(n: usize) -> Result<Self> {
        let mut s = Self::empty(n)?;
        s.words.iter_mut().for_each(|w| *w = !0);
        s.trim();
        Ok(s)
    }

    pub fn singleton(n: usize, k: usize) -> Result<Self> {
        let mut s = Self::empty(n)?;
        s.insert(k)?;
        Ok(s)
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for k in indices {
            s.insert(k)?;
        }
        Ok(s)
    }

    /// Atoms whose index satisfies `pred`.
    pub fn from_predicate(n: usize, mut pred: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for k in 0..s.universe_len() {
            if pred(k) {
                s.set(k);
            }
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of atoms in the universe, `2^n`.
    pub fn universe_len(&self) -> usize {
        1 << self.n
    }

    pub fn insert(&mut self, k: usize) -> Result<()> {
        if k >= self.universe_len() {
            return Err(Error::AtomOutOfRange {
                index: k as u64,
                m: self.universe_len(),
            });
        }
        self.set(k);
        Ok(())
    }

    fn set(&mut self, k: usize) {
        self.words[k / WORD] |= 1 << (k % WORD);
    }

    pub fn remove(&mut self, k: usize) {
        if k < self.universe_len() {
            self.words[k / WORD] &= !(1 << (k % WORD));
        }
    }

    pub fn contains(&self, k: usize) -> bool {
        k < self.universe_len() && self.words[k / WORD] >> (k % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe_len()
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn same_n(&self, other: &AtomSet) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Mismatch(self.n, other.n))
        }
    }

    /// Semiring addition: set union.
    pub fn join(&self, other: &AtomSet) -> Result<AtomSet> {
        self.same_n(other)?;
        Ok(self.zip_with(other, |a, b| a | b))
    }

    /// Semiring multiplication: set intersection.
    pub fn meet(&self, other: &AtomSet) -> Result<AtomSet> {
        self.same_n(other)?;
        Ok(self.zip_with(other, |a, b| a & b))
    }

    /// Atoms of `self` not in `other`.
    pub fn difference(&self, other: &AtomSet) -> Result<AtomSet> {
        self.same_n(other)?;
        Ok(self.zip_with(other, |a, b| a & !b))
    }

    pub fn is_subset(&self, other: &AtomSet) -> bool {
        self.n == other.n
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    /// The unique `t` with `self * t = 0` and `self + t = 1`.
    pub fn complement(&self) -> AtomSet {
        let mut s = AtomSet {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    fn zip_with(&self, other: &AtomSet, f: impl Fn(u64, u64) -> u64) -> AtomSet {
        AtomSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn trim(&mut self) {
        let m = self.universe_len();
        if !m.is_multiple_of(WORD) {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << (m % WORD)) - 1;
        }
    }

    /// Renders the set as a canonical atom sum, printing `one` as `1`.
    pub fn render_relative(&self, one: &AtomSet) -> String {
        if self.is_empty() {
            "0".to_string()
        } else if self == one {
            "1".to_string()
        } else {
            self.iter()
                .map(|k| format!("y{k}"))
                .collect::<Vec<_>>()
                .join(" + ")
        }
    }
}

impl fmt::Display for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("0")
        } else if self.is_full() {
            f.write_str("1")
        } else {
            for (i, k) in self.iter().enumerate() {
                if i > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "y{k}")?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AtomSet(n={}, {:?})", self.n, self.to_vec())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum AtomsField {
    Word(String),
    List(Vec<usize>),
}

#[derive(Serialize, Deserialize)]
struct AtomSetJson {
    n: usize,
    atoms: AtomsField,
}

impl Serialize for AtomSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let atoms = if self.is_full() {
            AtomsField::Word("one".to_string())
        } else {
            AtomsField::List(self.to_vec())
        };
        AtomSetJson { n: self.n, atoms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AtomSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = AtomSetJson::deserialize(deserializer)?;
        match raw.atoms {
            AtomsField::Word(w) if w == "one" => AtomSet::full(raw.n).map_err(de::Error::custom),
            AtomsField::Word(w) => Err(de::Error::custom(format!(
                "expected \"one\" or a list of atoms, got {w:?}"
            ))),
            AtomsField::List(ks) => AtomSet::from_indices(raw.n, ks).map_err(de::Error::custom),
        }
    }
}

/// `A_i` (present) or its complement (absent): atoms whose bit `i-1` is set or clear.
pub fn gen_atoms(i: usize, sign: Sign, n: usize) -> Result<AtomSet> {
    check_n(n)?;
    if i == 0 || i > n {
        return Err(Error::VarOutOfRange { index: i as u64, n });
    }
    let bit = 1usize << (i - 1);
    AtomSet::from_predicate(n, |k| (k & bit != 0) == (sign == Sign::Present))
}

/// Set-theoretic interpretation, evaluated atom by atom.
///
/// This is the reference semantics: each atom is tested for membership in the
/// expression directly, independent of any rewriting.
pub fn eval_expr(e: &Expr, n: usize) -> Result<AtomSet> {
    check_n(n)?;
    e.validate(n)?;
    AtomSet::from_predicate(n, |k| member(e, k))
}

fn member(e: &Expr, k: usize) -> bool {
    match e {
        Expr::Zero => false,
        Expr::One => true,
        Expr::Var(i) => k >> (i - 1) & 1 == 1,
        Expr::AtomVar(j) => k == *j,
        Expr::Join(cs) => cs.iter().any(|c| member(c, k)),
        Expr::Meet(cs) => cs.iter().all(|c| member(c, k)),
        Expr::Complement(c) => !member(c, k),
    }
}

/// Normal form of `e`: the atom sum obtained by rewriting with the reduced basis.
///
/// Each node is rewritten bottom-up: `x_i` and `x_i'` expand to their atom sums, a
/// product of atom sums collapses by `y_k y_k = y_k` and `y_k y_j = 0` to the common
/// atoms, repeated summands merge by `y_k + y_k = y_k`, and a sum covering every atom
/// becomes `1`. Complements of compound terms take the unique complement of the
/// normalized operand.
pub fn normalize(e: &Expr, n: usize) -> Result<AtomSet> {
    check_n(n)?;
    e.validate(n)?;
    normalize_node(e, n)
}

fn normalize_node(e: &Expr, n: usize) -> Result<AtomSet> {
    match e {
        Expr::Zero => AtomSet::empty(n),
        Expr::One => AtomSet::full(n),
        Expr::Var(i) => gen_atoms(*i, Sign::Present, n),
        Expr::AtomVar(k) => AtomSet::singleton(n, *k),
        Expr::Join(cs) => {
            let mut acc = AtomSet::empty(n)?;
            for c in cs {
                acc = acc.join(&normalize_node(c, n)?)?;
            }
            Ok(acc)
        }
        Expr::Meet(cs) => {
            let mut acc = AtomSet::full(n)?;
            for c in cs {
                acc = acc.meet(&normalize_node(c, n)?)?;
            }
            Ok(acc)
        }
        Expr::Complement(c) => match c.as_ref() {
            Expr::Var(i) => gen_atoms(*i, Sign::Absent, n),
            other => Ok(normalize_node(other, n)?.complement()),
        },
    }
}
