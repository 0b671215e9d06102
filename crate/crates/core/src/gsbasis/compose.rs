//! Compositions of relations and the composition-triviality test.

use rayon::prelude::*;

use super::poly::Poly;
use super::presentation::{Presentation, Relation};
use super::reduce::Reducer;
use super::term::RigTerm;
use crate::error::Result;

/// A composition `(f, g)_w` with its ambiguity.
#[derive(Debug, Clone)]
pub struct Composition {
    pub ambiguity: RigTerm,
    pub poly: Poly,
}

/// All compositions of `f` and `g`.
///
/// For every pair of summands `u` of `lead(f)` and `v` of `lead(g)`, with
/// `lcm(u, v) = a·u = b·v`, the ambiguity is `w = lcm(a·lead(f), b·lead(g))` taken as
/// a multiset maximum, and the composition is `(a·f + u') − (b·g + v')` where `u'`,
/// `v'` are the multiset complements completing both leading terms to `w`.
pub fn compose(f: &Relation, g: &Relation) -> Vec<Composition> {
    let fs = f.lead().summands();
    let gs = g.lead().summands();
    let mut out = Vec::new();
    for (i, u) in fs.iter().enumerate() {
        if i > 0 && fs[i - 1] == *u {
            continue;
        }
        for (j, v) in gs.iter().enumerate() {
            if j > 0 && gs[j - 1] == *v {
                continue;
            }
            let l = u.lcm(v);
            let a = u.quotient_of(&l);
            let b = v.quotient_of(&l);
            let af = f.lead().mul_monomial(&a);
            let bg = g.lead().mul_monomial(&b);
            let w = af.lcm_join(&bg);
            let fill_f = w.without(&af);
            let fill_g = w.without(&bg);
            let mut poly = f.poly().mul_monomial(&a).join_term(&fill_f);
            poly.sub(&g.poly().mul_monomial(&b).join_term(&fill_g));
            out.push(Composition { ambiguity: w, poly });
        }
    }
    out
}

/// A composition that did not reduce to zero.
#[derive(Debug, Clone)]
pub struct Failure {
    pub pair: (usize, usize),
    pub ambiguity: RigTerm,
    pub remainder: Poly,
}

#[derive(Debug, Clone)]
pub struct GsReport {
    pub is_gs_basis: bool,
    pub compositions: usize,
    /// Compositions whose leading term was not below their ambiguity; always empty for
    /// monic input.
    pub bound_violations: usize,
    pub failures: Vec<Failure>,
}

/// Index pairs `(p, q)` with `p <= q`, in lexicographic order.
pub(crate) fn pairs(len: usize) -> Vec<(usize, usize)> {
    (0..len)
        .flat_map(|p| (p..len).map(move |q| (p, q)))
        .collect()
}

/// Checks that every composition of every pair of relations reduces to zero.
///
/// Pairs are evaluated in parallel and reported in pair order.
pub fn is_gs_basis(pres: &Presentation) -> Result<GsReport> {
    let rels = pres.relations();
    let reducer = Reducer::new(rels);
    let results: Vec<Result<(usize, usize, Vec<Failure>)>> = pairs(rels.len())
        .into_par_iter()
        .map(|(p, q)| {
            let mut failures = Vec::new();
            let mut count = 0;
            let mut violations = 0;
            for c in compose(&rels[p], &rels[q]) {
                count += 1;
                if let Some((lead, _)) = c.poly.leading() {
                    if *lead >= c.ambiguity {
                        violations += 1;
                    }
                }
                let remainder = reducer.reduce(c.poly)?;
                if !remainder.is_zero() {
                    failures.push(Failure {
                        pair: (p, q),
                        ambiguity: c.ambiguity,
                        remainder,
                    });
                }
            }
            Ok((count, violations, failures))
        })
        .collect();
    let mut report = GsReport {
        is_gs_basis: true,
        compositions: 0,
        bound_violations: 0,
        failures: Vec::new(),
    };
    for r in results {
        let (count, violations, failures) = r?;
        report.compositions += count;
        report.bound_violations += violations;
        report.failures.extend(failures);
    }
    report.is_gs_basis = report.failures.is_empty();
    Ok(report)
}

/// Indices of the relations in `rels` that do not reduce to zero modulo `basis`.
///
/// Empty exactly when `basis` generates every relation of `rels` by reduction; with a
/// closed `basis` this decides whether it is a Gröbner-Shirshov basis of the ideal of
/// `rels` and not only of its own.
pub fn unreduced(basis: &Presentation, rels: &[Relation]) -> Result<Vec<usize>> {
    let reducer = Reducer::new(basis.relations());
    let mut out = Vec::new();
    for (i, r) in rels.iter().enumerate() {
        if !reducer.reduce(r.poly().clone())?.is_zero() {
            out.push(i);
        }
    }
    Ok(out)
}
