//! Presentations: generator universe plus monic defining relations.
//!
//! Text format: one relation per line written `lhs = rhs` in the expression syntax,
//! with `#` starting a comment. A comment line of the form `# (r3) ...` names the
//! family of the relations that follow it.

use std::fmt;

use num_traits::One;

use super::poly::Poly;
use super::term::{Gen, Monomial, RigTerm};
use crate::atoms::{check_n, gen_atoms, Sign};
use crate::error::{Error, Result};
use crate::expr::{self, Expr};

/// A monic relation `lead − tail`.
#[derive(Clone)]
pub struct Relation {
    poly: Poly,
    lead: RigTerm,
    /// Family tag such as `r2`, or empty when unknown.
    pub family: String,
}

impl Relation {
    /// Normalizes `poly` to monic form. Returns `None` for the zero polynomial.
    pub fn new(poly: Poly, family: impl Into<String>) -> Option<Relation> {
        let poly = poly.monic();
        let lead = poly.leading()?.0.clone();
        Some(Relation {
            poly,
            lead,
            family: family.into(),
        })
    }

    pub fn from_sides(lhs: RigTerm, rhs: RigTerm, family: impl Into<String>) -> Option<Relation> {
        Relation::new(Poly::binomial(lhs, rhs), family)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn lead(&self) -> &RigTerm {
        &self.lead
    }

    /// Terms below the leading one, with their coefficients.
    pub fn tail(&self) -> impl Iterator<Item = (&RigTerm, &super::poly::Coeff)> {
        self.poly.terms().rev().skip(1)
    }
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.poly.as_relation() {
            Some((lhs, rhs)) => write!(f, "{lhs} = {rhs}"),
            None => write!(f, "{} = 0 (as a linear combination)", self.poly),
        }
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.family, self)
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    n: usize,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(n: usize, relations: Vec<Relation>) -> Result<Presentation> {
        check_n(n)?;
        Ok(Presentation { n, relations })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> Vec<Gen> {
        Gen::universe(self.n)
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Copy without the relation at `idx`.
    pub fn without(&self, idx: usize) -> Presentation {
        let mut relations = self.relations.clone();
        relations.remove(idx);
        Presentation {
            n: self.n,
            relations,
        }
    }

    /// Copy without every relation of the given family.
    pub fn without_family(&self, family: &str) -> Presentation {
        Presentation {
            n: self.n,
            relations: self
                .relations
                .iter()
                .filter(|r| r.family != family)
                .cloned()
                .collect(),
        }
    }

    /// Same relations regardless of order.
    pub fn same_relations(&self, other: &Presentation) -> bool {
        self.n == other.n
            && self.relations.len() == other.relations.len()
            && self.relations.iter().all(|r| other.relations.contains(r))
    }

    /// Indices `p` of relations `y_p = 0`.
    pub fn eliminated_atoms(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .relations
            .iter()
            .filter_map(|r| {
                let (lhs, rhs) = r.poly.as_relation()?;
                if !rhs.is_zero() {
                    return None;
                }
                match lhs.summands() {
                    [m] => match m.gens() {
                        [g] => match g.kind() {
                            super::term::GenKind::Y(k) => Some(k),
                            _ => None,
                        },
                        _ => None,
                    },
                    _ => None,
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Serializes to the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("# n = {}\n", self.n);
        let mut family = None;
        for r in &self.relations {
            if !r.family.is_empty() && family != Some(&r.family) {
                out.push_str(&format!("# ({})\n", r.family));
                family = Some(&r.family);
            }
            match r.poly.as_relation() {
                Some((lhs, rhs)) => out.push_str(&format!("{lhs} = {rhs}\n")),
                None => out.push_str(&format!("# not binomial: {}\n", r.poly)),
            }
        }
        out
    }
}

/// Parses the text format for `n` variables.
pub fn parse_presentation(text: &str, n: usize) -> Result<Presentation> {
    check_n(n)?;
    let mut relations = Vec::new();
    let mut family = String::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(raw[p + 1..].trim())),
            None => (raw, None),
        };
        if body.trim().is_empty() {
            if let Some(c) = comment {
                if let Some(rest) = c.strip_prefix('(') {
                    if let Some(end) = rest.find(')') {
                        family = rest[..end].to_string();
                    }
                }
            }
            continue;
        }
        let err = |message: String| Error::Presentation {
            line: line_no,
            message,
        };
        let mut sides = body.split('=');
        let (lhs, rhs) = match (sides.next(), sides.next(), sides.next()) {
            (Some(l), Some(r), None) => (l, r),
            _ => return Err(err("expected exactly one '='".into())),
        };
        let lhs = expr::parse(lhs, n).map_err(|e| err(format!("left side: {e}")))?;
        let rhs = expr::parse(rhs, n).map_err(|e| err(format!("right side: {e}")))?;
        let lhs = to_rigterm(&lhs).map_err(|e| err(e.to_string()))?;
        let rhs = to_rigterm(&rhs).map_err(|e| err(e.to_string()))?;
        let rel = Relation::from_sides(lhs, rhs, family.clone())
            .ok_or_else(|| err("relation is trivially satisfied".into()))?;
        relations.push(rel);
    }
    Presentation::new(n, relations)
}

/// Reads an expression as an element of the free commutative semiring.
///
/// `+` becomes the multiset sum and `*` the distributed product. Complements are only
/// meaningful on generators here (`x_i'`), since the free semiring has no complement.
pub fn to_rigterm(e: &Expr) -> Result<RigTerm> {
    Ok(match e {
        Expr::Zero => RigTerm::zero(),
        Expr::One => RigTerm::one(),
        Expr::Var(i) => RigTerm::gen(Gen::x(*i)),
        Expr::AtomVar(k) => RigTerm::gen(Gen::y(*k)),
        Expr::Complement(c) => match c.as_ref() {
            Expr::Var(i) => RigTerm::gen(Gen::xc(*i)),
            other => {
                return Err(Error::Unsupported(format!(
                    "complement of `{other}` has no free-semiring reading; only x_i' is allowed"
                )))
            }
        },
        Expr::Join(cs) => {
            let mut acc = RigTerm::zero();
            for c in cs {
                acc = acc.join(&to_rigterm(c)?);
            }
            acc
        }
        Expr::Meet(cs) => {
            let mut acc = RigTerm::one();
            for c in cs {
                acc = acc.product(&to_rigterm(c)?);
            }
            acc
        }
    })
}

fn y_sum(indices: impl IntoIterator<Item = usize>) -> RigTerm {
    RigTerm::new(
        indices
            .into_iter()
            .map(|k| Monomial::gen(Gen::y(k)))
            .collect(),
    )
}

fn y_mono(ks: &[usize]) -> RigTerm {
    RigTerm::monomial(Monomial::new(ks.iter().map(|&k| Gen::y(k)).collect()))
}

fn rel(lhs: RigTerm, rhs: RigTerm, family: &str) -> Relation {
    Relation::from_sides(lhs, rhs, family).expect("bundled relations are nontrivial")
}

/// The reduced basis of the free idempotent complement semiring on `n` generators:
///
/// * (r1) `y_k y_k = y_k`
/// * (r2) `y_k y_j = 0`, `k < j`
/// * (r3) `x_i = Σ_{A_i} y_j`
/// * (r4) `x_i' = Σ_{A_i'} y_j`
/// * (r5) `Σ_k y_k = 1`
/// * (r6) `1 + y_k = 1`
/// * (r7) `1 + 1 = 1`
pub fn r1_comp(n: usize) -> Result<Presentation> {
    check_n(n)?;
    let m = 1usize << n;
    let mut rels = Vec::new();
    for k in 0..m {
        rels.push(rel(y_mono(&[k, k]), y_mono(&[k]), "r1"));
    }
    for k in 0..m {
        for j in k + 1..m {
            rels.push(rel(y_mono(&[k, j]), RigTerm::zero(), "r2"));
        }
    }
    for i in 1..=n {
        let a = gen_atoms(i, Sign::Present, n)?;
        rels.push(rel(RigTerm::gen(Gen::x(i)), y_sum(a.iter()), "r3"));
    }
    for i in 1..=n {
        let a = gen_atoms(i, Sign::Absent, n)?;
        rels.push(rel(RigTerm::gen(Gen::xc(i)), y_sum(a.iter()), "r4"));
    }
    rels.push(rel(y_sum(0..m), RigTerm::one(), "r5"));
    for k in 0..m {
        rels.push(rel(
            RigTerm::one().join(&RigTerm::gen(Gen::y(k))),
            RigTerm::one(),
            "r6",
        ));
    }
    rels.push(rel(
        RigTerm::one().join(&RigTerm::one()),
        RigTerm::one(),
        "r7",
    ));
    Presentation::new(n, rels)
}

/// The chain constraint `(x_1 + … + x_i) * x_{i+1}' * x_{i+2} = 0` as an expression.
pub fn chain_constraint(i: usize) -> Expr {
    Expr::meet([
        Expr::join((1..=i).map(Expr::Var)),
        Expr::Var(i + 1).complement(),
        Expr::Var(i + 2),
    ])
}

/// The presentation of the Markov semiring before completion: the reduced free basis
/// plus one chain constraint per `i = 1..=n-2`, tagged `r8`, `r9`, ….
pub fn markov_initial(n: usize) -> Result<Presentation> {
    let mut p = r1_comp(n)?;
    for i in 1..=n.saturating_sub(2) {
        let lhs = to_rigterm(&chain_constraint(i))?;
        p.relations
            .push(rel(lhs, RigTerm::zero(), &format!("r{}", 7 + i)));
    }
    Ok(p)
}

/// Whether every coefficient of every relation is ±1; holds for all bundled files.
pub fn is_binomial(p: &Presentation) -> bool {
    p.relations.iter().all(|r| {
        r.poly.as_relation().is_some()
            || (r.poly.len() == 1 && r.poly.leading().unwrap().1.is_one())
    })
}
