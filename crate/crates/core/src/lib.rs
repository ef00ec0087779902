//! Finite rings given by operation tables, with exhaustive predicates for
//! annihilator-symmetry and related ring classes, bounded polynomial
//! checks, and a harness that evaluates implications over a corpus.

pub mod config;
pub mod constructions;
pub mod harness;
pub mod poly;
pub mod predicates;
pub mod ring;

pub use config::Limits;
pub use ring::{Elem, FiniteRing};
