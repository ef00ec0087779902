//! Corpus generation, the implication registry, counterexample search,
//! ring files and reports.

pub mod corpus;
pub mod io;
mod report;
mod search;
mod suite;

use thiserror::Error;

use crate::constructions::ConstructionError;
use crate::poly::PolyError;
use crate::predicates::PredicateError;
use crate::ring::RingError;

pub use corpus::{build_corpus, builtin_algebras, Corpus, CorpusEntry, CorpusSpec, Recipe, RngRecipe};
pub use io::{load_ring, parse_ring, ring_to_text, save_ring};
pub use report::{emit_report, Format};
pub use search::{search_counterexample, SearchHit, SearchQuery, SearchResult};
pub use suite::{
    reduction_notes, registry, run_theorem_suite, ChainLink, Exhibit, Failure, LabelledRole, ReductionNote,
    RunReport, Scope, SkipRecord, SuiteOptions, TheoremCheck, TheoremOutcome, Totals, WitnessRecord,
    SCHEMA_VERSION,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("line {line}, token `{token}`: {message}")]
    Parse {
        line: usize,
        token: String,
        message: String,
    },
    #[error("{0}")]
    Io(String),
    #[error("bad recipe: {0}")]
    Recipe(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Predicate(#[from] PredicateError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl HarnessError {
    /// Whether the error is a cap or budget breach rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            HarnessError::Construction(ConstructionError::OrderCapExceeded { .. })
                | HarnessError::Ring(RingError::OracleCapExceeded { .. })
                | HarnessError::Predicate(PredicateError::BudgetExceeded { .. })
                | HarnessError::Poly(PolyError::Predicate(PredicateError::BudgetExceeded { .. }))
                | HarnessError::Poly(PolyError::ExponentCapExceeded { .. })
        )
    }
}
