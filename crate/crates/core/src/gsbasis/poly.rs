//! Exact-coefficient linear combinations of Rig-terms.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::term::{Monomial, RigTerm};

pub type Coeff = BigRational;

pub fn coeff(v: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(v))
}

/// A finite combination `Σ c_i w_i` of Rig-terms with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<RigTerm, Coeff>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn term(t: RigTerm) -> Poly {
        let mut p = Poly::zero();
        p.add_term(t, Coeff::one());
        p
    }

    /// `lhs − rhs`.
    pub fn binomial(lhs: RigTerm, rhs: RigTerm) -> Poly {
        let mut p = Poly::term(lhs);
        p.add_term(rhs, -Coeff::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff_of(&self, t: &RigTerm) -> Option<&Coeff> {
        self.terms.get(t)
    }

    /// Terms in increasing order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&RigTerm, &Coeff)> {
        self.terms.iter()
    }

    pub(crate) fn map(&self) -> &BTreeMap<RigTerm, Coeff> {
        &self.terms
    }

    /// The largest Rig-term and its coefficient.
    pub fn leading(&self) -> Option<(&RigTerm, &Coeff)> {
        self.terms.last_key_value()
    }

    pub fn add_term(&mut self, t: RigTerm, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &Poly) {
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c.clone());
        }
    }

    pub fn sub(&mut self, other: &Poly) {
        for (t, c) in &other.terms {
            self.add_term(t.clone(), -c.clone());
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(t, v)| (t.clone(), v * c)).collect(),
        }
    }

    /// `a · self`; injective on Rig-terms, so no coefficients merge.
    pub fn mul_monomial(&self, a: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul_monomial(a), c.clone()))
                .collect(),
        }
    }

    /// `self + u` applied to every term.
    pub fn join_term(&self, u: &RigTerm) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.join(u), c.clone()))
                .collect(),
        }
    }

    /// Bilinear extension of the semiring product.
    pub fn product(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (t, c) in &self.terms {
            for (s, d) in &other.terms {
                out.add_term(t.product(s), c * d);
            }
        }
        out
    }

    /// Bilinear extension of the semiring sum.
    pub fn join(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (t, c) in &self.terms {
            for (s, d) in &other.terms {
                out.add_term(t.join(s), c * d);
            }
        }
        out
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => {
                let inv = c.recip();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// The single Rig-term of a one-term polynomial with coefficient 1.
    pub fn as_unit_term(&self) -> Option<&RigTerm> {
        match self.terms.iter().next() {
            Some((t, c)) if self.terms.len() == 1 && c.is_one() => Some(t),
            _ => None,
        }
    }

    /// `lhs = rhs` when the polynomial is `lhs − rhs` with unit coefficients.
    pub fn as_relation(&self) -> Option<(&RigTerm, &RigTerm)> {
        if self.terms.len() != 2 {
            return None;
        }
        let mut pos = None;
        let mut neg = None;
        for (t, c) in &self.terms {
            if c.is_one() {
                pos = Some(t);
            } else if (-c).is_one() {
                neg = Some(t);
            }
        }
        Some((pos?, neg?))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("(zero)");
        }
        for (i, (t, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 || c.is_negative() {
                write!(f, "{}{} ", if i > 0 { " " } else { "" }, sign)?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "[{t}]")?;
            } else {
                write!(f, "{a}·[{t}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
