//! Normalization of expressions by literal rewriting with a presentation.

use std::cell::RefCell;
use std::collections::HashMap;

use super::poly::Poly;
use super::presentation::Presentation;
use super::reduce::Reducer;
use super::term::{Gen, GenKind, Monomial, RigTerm};
use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::expr::Expr;

/// Rewrites expressions to normal form, innermost first.
///
/// A sum reduces summand by summand before the sum itself is reduced, so normal forms
/// of single monomials are cached.
pub struct Rewriter<'a> {
    reducer: Reducer<'a>,
    one: &'a AtomSet,
    monomials: RefCell<HashMap<Monomial, RigTerm>>,
}

impl<'a> Rewriter<'a> {
    /// `one` is the atom set read off for the normal form `1`.
    pub fn new(pres: &'a Presentation, one: &'a AtomSet) -> Rewriter<'a> {
        Rewriter {
            reducer: Reducer::new(pres.relations()),
            one,
            monomials: RefCell::new(HashMap::new()),
        }
    }

    fn nf(&self, t: RigTerm) -> Result<RigTerm> {
        let p = self.reducer.reduce(Poly::term(t))?;
        p.as_unit_term().cloned().ok_or_else(|| {
            Error::Unsupported(format!("rewriting left the non-monomial combination {p}"))
        })
    }

    /// Normal form of `e` as a Rig-term.
    pub fn term(&self, e: &Expr) -> Result<RigTerm> {
        match e {
            Expr::Zero => Ok(RigTerm::zero()),
            Expr::One => self.nf(RigTerm::one()),
            Expr::Var(i) => self.nf(RigTerm::gen(Gen::x(*i))),
            Expr::AtomVar(k) => self.nf(RigTerm::gen(Gen::y(*k))),
            Expr::Complement(c) => match c.as_ref() {
                Expr::Var(i) => self.nf(RigTerm::gen(Gen::xc(*i))),
                other => {
                    let s = self.read_off(&self.term(other)?)?;
                    self.nf(self.embed(&self.one.difference(&s)?))
                }
            },
            Expr::Join(cs) => {
                let mut acc = RigTerm::zero();
                for c in cs {
                    acc = self.nf(acc.join(&self.term(c)?))?;
                }
                Ok(acc)
            }
            Expr::Meet(cs) => {
                let mut acc = RigTerm::one();
                for c in cs {
                    let rhs = self.term(c)?;
                    let mut sum = RigTerm::zero();
                    for u in acc.summands() {
                        for v in rhs.summands() {
                            sum = sum.join(&self.monomial_nf(u.mul(v))?);
                        }
                    }
                    acc = self.nf(sum)?;
                }
                Ok(acc)
            }
        }
    }

    fn monomial_nf(&self, m: Monomial) -> Result<RigTerm> {
        if let Some(t) = self.monomials.borrow().get(&m) {
            return Ok(t.clone());
        }
        let t = self.nf(RigTerm::monomial(m.clone()))?;
        self.monomials.borrow_mut().insert(m, t.clone());
        Ok(t)
    }

    fn embed(&self, s: &AtomSet) -> RigTerm {
        if s == self.one {
            return RigTerm::one();
        }
        RigTerm::new(s.iter().map(|k| Monomial::gen(Gen::y(k))).collect())
    }

    /// Atom set of a normal form: `θ`, `1`, or a sum of distinct atoms.
    pub fn read_off(&self, t: &RigTerm) -> Result<AtomSet> {
        if *t == RigTerm::one() {
            return Ok(self.one.clone());
        }
        let mut s = AtomSet::empty(self.one.n())?;
        for m in t.summands() {
            let k = match m.gens() {
                [g] => match g.kind() {
                    GenKind::Y(k) => Some(k),
                    _ => None,
                },
                _ => None,
            };
            match k {
                Some(k) if !s.contains(k) => s.insert(k)?,
                _ => {
                    return Err(Error::Unsupported(format!(
                        "`{t}` is not a sum of distinct atoms"
                    )))
                }
            }
        }
        Ok(s)
    }

    pub fn normalize(&self, e: &Expr) -> Result<AtomSet> {
        self.read_off(&self.term(e)?)
    }
}

/// Normalizes `e` by rewriting with `pres` and reads off its atom set.
pub fn rewrite_normalize(e: &Expr, pres: &Presentation, one: &AtomSet) -> Result<AtomSet> {
    Rewriter::new(pres, one).normalize(e)
}
