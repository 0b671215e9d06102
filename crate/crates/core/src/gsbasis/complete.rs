//! Bounded Shirshov completion with inter-reduction.

use rayon::prelude::*;

use super::compose::{compose, pairs};
use super::poly::Poly;
use super::presentation::{Presentation, Relation};
use super::reduce::Reducer;
use crate::error::Result;

pub const DEFAULT_MAX_ROUNDS: usize = 8;

/// Family tag given to relations introduced by completion.
pub const ADDED_FAMILY: &str = "added";

#[derive(Debug, Clone)]
pub struct Completion {
    pub presentation: Presentation,
    /// Composition rounds that were run.
    pub rounds: usize,
    /// Whether the last round found every composition trivial.
    pub complete: bool,
    /// Number of relations adjoined across all rounds, before inter-reduction.
    pub adjoined: usize,
}

/// Makes the relation set reduced.
///
/// Relations whose leading term is reducible by another relation are taken out,
/// reduced by the rest and put back when nonzero, largest leading term first, until no
/// leading term is reducible. Then every tail is reduced.
pub fn inter_reduce(rels: Vec<Relation>) -> Result<Vec<Relation>> {
    let mut rels = rels;
    loop {
        let victim = {
            let reducer = Reducer::new(&rels);
            rels.iter()
                .enumerate()
                .filter(|(i, r)| reducer.find(r.lead(), Some(*i)).is_some())
                .max_by(|a, b| a.1.lead().cmp(b.1.lead()))
                .map(|(i, _)| i)
        };
        let Some(i) = victim else { break };
        let r = rels.remove(i);
        let rest = Reducer::new(&rels).reduce(r.poly().clone())?;
        if let Some(nr) = Relation::new(rest, r.family) {
            rels.push(nr);
        }
    }
    let reducer = Reducer::new(&rels);
    let tails: Vec<Poly> = rels
        .par_iter()
        .enumerate()
        .map(|(i, r)| reducer.reduce_skipping(r.poly().clone(), Some(i)))
        .collect::<Result<_>>()?;
    Ok(rels
        .iter()
        .zip(tails)
        .map(|(r, p)| Relation::new(p, r.family.clone()).expect("leading term is irreducible"))
        .collect())
}

/// Nonzero remainders of all compositions among `rels`, in pair order.
fn remainders(rels: &[Relation]) -> Result<Vec<Poly>> {
    let reducer = Reducer::new(rels);
    let per_pair: Vec<Result<Vec<Poly>>> = pairs(rels.len())
        .into_par_iter()
        .map(|(p, q)| {
            let mut out = Vec::new();
            for c in compose(&rels[p], &rels[q]) {
                if let Some((lead, _)) = c.poly.leading() {
                    debug_assert!(*lead < c.ambiguity);
                }
                let r = reducer.reduce(c.poly)?;
                if !r.is_zero() {
                    out.push(r.monic());
                }
            }
            Ok(out)
        })
        .collect();
    let mut out = Vec::new();
    for r in per_pair {
        for p in r? {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Runs the Shirshov algorithm for at most `max_rounds` rounds.
///
/// The input is first inter-reduced. Each round reduces every composition of the
/// relations present at its start, adjoins the nonzero remainders and inter-reduces.
/// A round without nonzero remainders ends the run with `complete = true`.
pub fn complete(pres: &Presentation, max_rounds: usize) -> Result<Completion> {
    let mut rels = inter_reduce(pres.relations().to_vec())?;
    let mut adjoined = 0;
    for round in 1..=max_rounds {
        let new = remainders(&rels)?;
        if new.is_empty() {
            return Ok(Completion {
                presentation: Presentation::new(pres.n(), rels)?,
                rounds: round,
                complete: true,
                adjoined,
            });
        }
        adjoined += new.len();
        rels.extend(
            new.into_iter()
                .filter_map(|p| Relation::new(p, ADDED_FAMILY)),
        );
        rels = inter_reduce(rels)?;
    }
    Ok(Completion {
        presentation: Presentation::new(pres.n(), rels)?,
        rounds: max_rounds,
        complete: false,
        adjoined,
    })
}
