//! Canonical forms and Gröbner-Shirshov bases for the free idempotent complement
//! semiring and its Markov quotient, with the entropy measure on atoms.

pub mod atoms;
pub mod error;
pub mod expr;
pub mod gsbasis;
pub mod imeasure;
pub mod markov;
pub mod selftest;

pub use error::{Error, Result};
