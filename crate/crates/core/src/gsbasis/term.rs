//! Generators, monomials and Rig-terms of the free commutative semiring on `X ∪ X' ∪ Y`.
//!
//! Orderings: generators satisfy `x_1 > … > x_n > x_1' > … > x_n' > y_0 > … > y_{m-1}`.
//! A monomial is kept as its generator sequence sorted from largest to smallest and
//! monomials compare lexicographically on that sequence, a proper prefix being the
//! smaller one. A Rig-term (a `+`-sum of monomials) is kept as its summands sorted from
//! largest to smallest and compares the same way. Both orders are the derived `Ord`
//! of the underlying vectors.

use std::cmp::Ordering;
use std::fmt;

const XC_BASE: u32 = 1 << 8;
const Y_BASE: u32 = 1 << 9;

/// A generator. Smaller codes are larger generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gen(u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// `x_i`, 1-based.
    X(usize),
    /// `x_i'`, 1-based.
    Xc(usize),
    /// `y_k`, 0-based.
    Y(usize),
}

impl Gen {
    pub fn x(i: usize) -> Gen {
        debug_assert!((1..=XC_BASE as usize).contains(&i));
        Gen(i as u32 - 1)
    }

    pub fn xc(i: usize) -> Gen {
        debug_assert!((1..=XC_BASE as usize).contains(&i));
        Gen(XC_BASE + i as u32 - 1)
    }

    pub fn y(k: usize) -> Gen {
        Gen(Y_BASE + k as u32)
    }

    pub fn kind(self) -> GenKind {
        if self.0 < XC_BASE {
            GenKind::X(self.0 as usize + 1)
        } else if self.0 < Y_BASE {
            GenKind::Xc((self.0 - XC_BASE) as usize + 1)
        } else {
            GenKind::Y((self.0 - Y_BASE) as usize)
        }
    }

    /// All generators of `X ∪ X' ∪ Y` for `n` variables, largest first.
    pub fn universe(n: usize) -> Vec<Gen> {
        (1..=n)
            .map(Gen::x)
            .chain((1..=n).map(Gen::xc))
            .chain((0..1usize << n).map(Gen::y))
            .collect()
    }
}

impl Ord for Gen {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            GenKind::X(i) => write!(f, "x{i}"),
            GenKind::Xc(i) => write!(f, "x{i}'"),
            GenKind::Y(k) => write!(f, "y{k}"),
        }
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A commutative monomial; the empty monomial is the unit `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<Gen>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn new(mut gens: Vec<Gen>) -> Monomial {
        gens.sort_unstable_by(|a, b| b.cmp(a));
        Monomial(gens)
    }

    pub fn gen(g: Gen) -> Monomial {
        Monomial(vec![g])
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Whether `self` divides `other` (multiset inclusion).
    pub fn divides(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.0, &other.0);
        if a.len() > b.len() {
            return false;
        }
        let mut j = 0;
        for g in a {
            while j < b.len() && b[j] > *g {
                j += 1;
            }
            if j == b.len() || b[j] != *g {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(other.0.len() - self.0.len());
        let mut i = 0;
        for g in &other.0 {
            if i < self.0.len() && self.0[i] == *g {
                i += 1;
            } else {
                out.push(*g);
            }
        }
        debug_assert_eq!(i, self.0.len(), "quotient_of called on a non-divisor");
        Monomial(out)
    }

    /// Exponent-wise maximum.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len().max(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Every divisor of the monomial, including `1` and itself.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut runs: Vec<(Gen, usize)> = Vec::new();
        for g in &self.0 {
            match runs.last_mut() {
                Some((h, c)) if h == g => *c += 1,
                _ => runs.push((*g, 1)),
            }
        }
        let mut out = vec![Vec::new()];
        for (g, c) in runs {
            let mut next = Vec::with_capacity(out.len() * (c + 1));
            for base in &out {
                for e in 0..=c {
                    let mut m: Vec<Gen> = base.clone();
                    m.extend(std::iter::repeat_n(g, e));
                    next.push(m);
                }
            }
            out = next;
        }
        out.into_iter().map(Monomial).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// A finite multiset of monomials joined by `+`; the empty multiset is `0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RigTerm(Vec<Monomial>);

impl RigTerm {
    pub fn zero() -> RigTerm {
        RigTerm(Vec::new())
    }

    pub fn one() -> RigTerm {
        RigTerm(vec![Monomial::one()])
    }

    pub fn new(mut summands: Vec<Monomial>) -> RigTerm {
        summands.sort_unstable_by(|a, b| b.cmp(a));
        RigTerm(summands)
    }

    pub fn monomial(m: Monomial) -> RigTerm {
        RigTerm(vec![m])
    }

    pub fn gen(g: Gen) -> RigTerm {
        RigTerm(vec![Monomial::gen(g)])
    }

    pub fn summands(&self) -> &[Monomial] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `a · self`. Multiplication by a monomial preserves the summand order.
    pub fn mul_monomial(&self, a: &Monomial) -> RigTerm {
        if a.is_one() {
            return self.clone();
        }
        RigTerm(self.0.iter().map(|u| u.mul(a)).collect())
    }

    /// `self + other` as a multiset union.
    pub fn join(&self, other: &RigTerm) -> RigTerm {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                out.push(a[i].clone());
                i += 1;
            } else {
                out.push(b[j].clone());
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        RigTerm(out)
    }

    /// Semiring product, distributing over both sums.
    pub fn product(&self, other: &RigTerm) -> RigTerm {
        let mut out = Vec::with_capacity(self.0.len() * other.0.len());
        for u in &self.0 {
            for v in &other.0 {
                out.push(u.mul(v));
            }
        }
        RigTerm::new(out)
    }

    /// Multiset inclusion of `sub` in `self`.
    pub fn contains(&self, sub: &RigTerm) -> bool {
        let (a, b) = (&sub.0, &self.0);
        if a.len() > b.len() {
            return false;
        }
        let mut j = 0;
        for m in a {
            while j < b.len() && b[j] > *m {
                j += 1;
            }
            if j == b.len() || b[j] != *m {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `self − sub` as multisets, assuming `sub` is contained in `self`.
    pub fn without(&self, sub: &RigTerm) -> RigTerm {
        let mut out = Vec::with_capacity(self.0.len() - sub.0.len());
        let mut i = 0;
        for m in &self.0 {
            if i < sub.0.len() && sub.0[i] == *m {
                i += 1;
            } else {
                out.push(m.clone());
            }
        }
        debug_assert_eq!(i, sub.0.len(), "without called on a non-submultiset");
        RigTerm(out)
    }

    /// Removes one copy of the summand at `idx`.
    pub fn without_index(&self, idx: usize) -> RigTerm {
        let mut v = self.0.clone();
        v.remove(idx);
        RigTerm(v)
    }

    /// Entry-wise maximum of multiplicities.
    pub fn lcm_join(&self, other: &RigTerm) -> RigTerm {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len().max(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(a[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        RigTerm(out)
    }
}

impl fmt::Display for RigTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RigTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(gs: &[Gen]) -> Monomial {
        Monomial::new(gs.to_vec())
    }

    fn y(k: usize) -> Gen {
        Gen::y(k)
    }

    #[test]
    fn generator_order() {
        assert!(Gen::x(1) > Gen::x(2));
        assert!(Gen::x(5) > Gen::xc(1));
        assert!(Gen::xc(5) > y(0));
        assert!(y(0) > y(1));
        assert_eq!(Gen::xc(3).kind(), GenKind::Xc(3));
        assert_eq!(Gen::universe(2).len(), 8);
    }

    #[test]
    fn monomial_order() {
        assert!(m(&[Gen::x(1)]) > m(&[Gen::x(2)]));
        assert!(m(&[y(0)]) < m(&[y(0), y(1)]));
        assert!(Monomial::one() < m(&[y(7)]));
        // lexicographic on the largest generator first
        assert!(m(&[Gen::x(1)]) > m(&[Gen::x(2), Gen::x(2), Gen::x(2)]));
    }

    #[test]
    fn rigterm_order() {
        let t = |ms: Vec<Monomial>| RigTerm::new(ms);
        assert!(t(vec![m(&[y(1)])]) < t(vec![m(&[y(0)]), m(&[y(1)])]));
        assert!(RigTerm::zero() < t(vec![m(&[y(0)])]));
        assert!(t(vec![m(&[Gen::x(1)])]) > t(vec![m(&[y(0)]), m(&[y(0)])]));
        assert!(RigTerm::one() < t(vec![m(&[y(3)])]));
        assert!(RigTerm::one() < t(vec![Monomial::one(), Monomial::one()]));
    }

    #[test]
    fn monomial_arithmetic() {
        let a = m(&[y(1), y(1), Gen::x(2)]);
        let b = m(&[y(1), y(3)]);
        assert_eq!(a.lcm(&b), m(&[Gen::x(2), y(1), y(1), y(3)]));
        assert!(m(&[y(1), Gen::x(2)]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(m(&[y(1)]).quotient_of(&a), m(&[Gen::x(2), y(1)]));
        assert_eq!(a.divisors().len(), 6);
        assert_eq!(a.mul(&b), m(&[Gen::x(2), y(1), y(1), y(1), y(3)]));
    }

    #[test]
    fn rigterm_multiset_ops() {
        let a = RigTerm::new(vec![m(&[y(0)]), m(&[y(1)]), m(&[y(1)])]);
        let b = RigTerm::new(vec![m(&[y(1)]), m(&[y(2)])]);
        let l = a.lcm_join(&b);
        assert_eq!(l.len(), 4);
        assert!(l.contains(&a) && l.contains(&b));
        assert_eq!(l.without(&a), RigTerm::new(vec![m(&[y(2)])]));
        assert_eq!(a.join(&b).len(), 5);
        assert_eq!(a.product(&b).len(), 6);
        assert_eq!(RigTerm::zero().product(&a), RigTerm::zero());
    }
}
