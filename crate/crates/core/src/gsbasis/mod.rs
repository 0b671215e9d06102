//! Gröbner-Shirshov machinery over the free commutative semiring.

mod complete;
mod compose;
mod irr;
mod poly;
mod presentation;
mod reduce;
mod rewrite;
mod term;

pub use complete::{complete, inter_reduce, Completion, ADDED_FAMILY, DEFAULT_MAX_ROUNDS};
pub use compose::{compose, is_gs_basis, unreduced, Composition, Failure, GsReport};
pub use irr::{irr_enumerate, IrrBound};
pub use poly::{coeff, Coeff, Poly};
pub use presentation::{
    chain_constraint, is_binomial, markov_initial, parse_presentation, r1_comp, to_rigterm,
    Presentation, Relation,
};
pub use reduce::{try_reduce, Division, Reducer, Reduction, DEFAULT_STEP_BUDGET};
pub use rewrite::{rewrite_normalize, Rewriter};
pub use term::{Gen, GenKind, Monomial, RigTerm};
