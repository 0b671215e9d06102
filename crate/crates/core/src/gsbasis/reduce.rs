//! Reduction of polynomials modulo a set of monic relations.
//!
//! A Rig-term `T` is reducible by relation `r` when `T = a·lead(r) + u` for a monomial
//! `a` and a Rig-term `u`; the step replaces `T` by `a·tail(r) + u`. Every step
//! produces only terms smaller than `T`, so reduction terminates.

use std::collections::HashMap;

use super::poly::Poly;
use super::presentation::Relation;
use super::term::{Monomial, RigTerm};
use crate::error::{Error, Result};

/// Default cap on the number of rewriting steps in a single reduction.
pub const DEFAULT_STEP_BUDGET: usize = 5_000_000;

/// A witness `T = factor · lead(relation) + rest`.
#[derive(Debug, Clone)]
pub struct Division {
    pub relation: usize,
    pub factor: Monomial,
    pub rest: RigTerm,
}

/// Leading-term index over a relation list.
pub struct Reducer<'a> {
    rels: &'a [Relation],
    /// Relations with a single-summand lead, keyed by that monomial.
    single: HashMap<&'a Monomial, Vec<usize>>,
    multi: Vec<usize>,
    budget: usize,
}

impl<'a> Reducer<'a> {
    pub fn new(rels: &'a [Relation]) -> Reducer<'a> {
        let mut single: HashMap<&Monomial, Vec<usize>> = HashMap::new();
        let mut multi = Vec::new();
        for (i, r) in rels.iter().enumerate() {
            match r.lead().summands() {
                [m] => single.entry(m).or_default().push(i),
                _ => multi.push(i),
            }
        }
        Reducer {
            rels,
            single,
            multi,
            budget: DEFAULT_STEP_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn relations(&self) -> &'a [Relation] {
        self.rels
    }

    /// Finds a relation whose leading term divides `t`, ignoring relation `skip`.
    pub fn find(&self, t: &RigTerm, skip: Option<usize>) -> Option<Division> {
        let summands = t.summands();
        if !self.single.is_empty() {
            for (idx, s) in summands.iter().enumerate() {
                if idx > 0 && summands[idx - 1] == *s {
                    continue;
                }
                for d in s.divisors() {
                    if let Some(rs) = self.single.get(&d) {
                        if let Some(&ri) = rs.iter().find(|&&ri| Some(ri) != skip) {
                            return Some(Division {
                                relation: ri,
                                factor: d.quotient_of(s),
                                rest: t.without_index(idx),
                            });
                        }
                    }
                }
            }
        }
        for &ri in &self.multi {
            if Some(ri) == skip {
                continue;
            }
            let lead = self.rels[ri].lead();
            if lead.len() > summands.len() {
                continue;
            }
            let first = &lead.summands()[0];
            for (idx, s) in summands.iter().enumerate() {
                if idx > 0 && summands[idx - 1] == *s {
                    continue;
                }
                if !first.divides(s) {
                    continue;
                }
                let a = first.quotient_of(s);
                let scaled = lead.mul_monomial(&a);
                if t.contains(&scaled) {
                    return Some(Division {
                        relation: ri,
                        rest: t.without(&scaled),
                        factor: a,
                    });
                }
            }
        }
        None
    }

    pub fn is_reducible(&self, t: &RigTerm) -> bool {
        self.find(t, None).is_some()
    }

    /// Fully reduces `h`: no term of the result is divisible by a leading term.
    pub fn reduce(&self, h: Poly) -> Result<Poly> {
        self.reduce_skipping(h, None)
    }

    /// As [`Reducer::reduce`], never using relation `skip`.
    pub fn reduce_skipping(&self, mut h: Poly, skip: Option<usize>) -> Result<Poly> {
        let mut steps = 0usize;
        // Terms >= bound are known to be irreducible.
        let mut bound: Option<RigTerm> = None;
        loop {
            let next = match &bound {
                None => h.map().last_key_value(),
                Some(b) => h.map().range(..b.clone()).next_back(),
            };
            let Some((t, c)) = next else { break };
            let (t, c) = (t.clone(), c.clone());
            if let Some(div) = self.find(&t, skip) {
                steps += 1;
                if steps > self.budget {
                    return Err(Error::BudgetExhausted(self.budget));
                }
                let r = &self.rels[div.relation];
                h.add_term(t.clone(), -c.clone());
                for (w, beta) in r.tail() {
                    let term = w.mul_monomial(&div.factor).join(&div.rest);
                    h.add_term(term, -(&c * beta));
                }
            }
            bound = Some(t);
        }
        Ok(h)
    }
}

/// Outcome of reducing a composition modulo a presentation.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub remainder: Poly,
    pub trivial: bool,
}

/// Reduces `h` by `rels` and reports whether it vanishes.
///
/// Every term of `h` must lie below the ambiguity `w`; each rewriting step then
/// involves only terms below `w`.
pub fn try_reduce(h: &Poly, rels: &[Relation], w: &RigTerm) -> Result<Reduction> {
    if let Some((lead, _)) = h.leading() {
        if lead >= w {
            return Err(Error::Unsupported(format!(
                "polynomial with leading term {lead} is not below the ambiguity {w}"
            )));
        }
    }
    let remainder = Reducer::new(rels).reduce(h.clone())?;
    Ok(Reduction {
        trivial: remainder.is_zero(),
        remainder,
    })
}

#[cfg(test)]
mod tests {
    use super::super::presentation::{markov_initial, r1_comp, to_rigterm};
    use super::super::term::Gen;
    use super::*;
    use crate::expr::parse;

    fn term(s: &str, n: usize) -> RigTerm {
        to_rigterm(&parse(s, n).unwrap()).unwrap()
    }

    #[test]
    fn product_of_distinct_atoms_vanishes() {
        let r = r1_comp(2).unwrap();
        let h = Poly::term(term("y1 * y2", 2));
        let w = term("y1 * y1 * y2", 2);
        let red = try_reduce(&h, r.relations(), &w).unwrap();
        assert!(!red.trivial);
        assert_eq!(red.remainder, Poly::term(RigTerm::zero()));
        // y_k y_j against its own rewrite to 0 is trivial
        let h = Poly::binomial(term("y1 * y2", 2), RigTerm::zero());
        assert!(try_reduce(&h, r.relations(), &w).unwrap().trivial);
    }

    #[test]
    fn y5_is_irreducible_before_completion() {
        let r = markov_initial(5).unwrap();
        let y5 = RigTerm::gen(Gen::y(5));
        let w = term("x1 * x2' * x3 * y5 * y5", 5);
        let red = try_reduce(
            &Poly::binomial(y5.clone(), RigTerm::zero()),
            r.relations(),
            &w,
        )
        .unwrap();
        assert!(!red.trivial);
        assert_eq!(red.remainder.leading().unwrap().0, &y5);
    }

    #[test]
    fn zero_is_trivial() {
        let r = r1_comp(1).unwrap();
        let red = try_reduce(&Poly::zero(), r.relations(), &RigTerm::one()).unwrap();
        assert!(red.trivial);
    }

    #[test]
    fn generators_reduce_to_atom_sums() {
        let r = r1_comp(3).unwrap();
        let red = Reducer::new(r.relations());
        let nf = red.reduce(Poly::term(term("x1 * x2'", 3))).unwrap();
        assert_eq!(nf, Poly::term(term("y1 + y5", 3)));
        let nf = red.reduce(Poly::term(term("x1 + x1'", 3))).unwrap();
        assert_eq!(nf, Poly::term(RigTerm::one()));
        let nf = red.reduce(Poly::term(term("y3 + y3 + 1 + 1", 3))).unwrap();
        assert_eq!(nf, Poly::term(RigTerm::one()));
    }

    #[test]
    fn budget_is_enforced() {
        let r = r1_comp(3).unwrap();
        let red = Reducer::new(r.relations()).with_budget(2);
        assert_eq!(
            red.reduce(Poly::term(term("x1 * x2 * x3", 3))).unwrap_err(),
            Error::BudgetExhausted(2)
        );
    }

    #[test]
    fn rejects_terms_above_the_ambiguity() {
        let r = r1_comp(1).unwrap();
        let h = Poly::term(term("x1", 1));
        assert!(try_reduce(&h, r.relations(), &term("y0", 1)).is_err());
    }
}
