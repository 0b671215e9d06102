//! Enumeration of irreducible Rig-terms within a size bound.

use super::presentation::Presentation;
use super::reduce::Reducer;
use super::term::{Gen, Monomial, RigTerm};

#[derive(Debug, Clone, Copy)]
pub struct IrrBound {
    /// Maximum degree of each summand.
    pub max_degree: usize,
    /// Maximum number of summands, counted with multiplicity.
    pub max_summands: usize,
}

fn monomials(gens: &[Gen], max_degree: usize) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut frontier = vec![(Vec::<Gen>::new(), 0usize)];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for (gs, start) in &frontier {
            for (j, g) in gens.iter().enumerate().skip(*start) {
                let mut v = gs.clone();
                v.push(*g);
                out.push(Monomial::new(v.clone()));
                next.push((v, j));
            }
        }
        frontier = next;
    }
    out
}

/// All Rig-terms within `bound` containing no leading term of `pres`, in increasing
/// order. `θ` is included.
pub fn irr_enumerate(pres: &Presentation, bound: IrrBound) -> Vec<RigTerm> {
    let reducer = Reducer::new(pres.relations());
    // A term with a reducible summand is reducible, so summands are drawn from the
    // irreducible monomials only.
    let basis: Vec<Monomial> = monomials(&pres.generators(), bound.max_degree)
        .into_iter()
        .filter(|m| !reducer.is_reducible(&RigTerm::monomial(m.clone())))
        .collect();
    let mut out = vec![RigTerm::zero()];
    let mut frontier = vec![(Vec::<Monomial>::new(), 0usize)];
    for _ in 0..bound.max_summands {
        let mut next = Vec::new();
        for (ms, start) in &frontier {
            for (j, m) in basis.iter().enumerate().skip(*start) {
                let mut v = ms.clone();
                v.push(m.clone());
                let t = RigTerm::new(v.clone());
                // Extensions of a reducible term stay reducible.
                if !reducer.is_reducible(&t) {
                    out.push(t);
                    next.push((v, j));
                }
            }
        }
        frontier = next;
    }
    out.sort();
    out
}
