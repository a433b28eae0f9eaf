//! Truth tables, designated regions and bounded countermodel search.
//!
//! Entailment is checked by exhaustive enumeration of finite models up to a
//! size bound. Four-valued search is exact; fuzzy search ranges over the grid
//! `{0, 1/g, ..., 1}²` with exact rational arithmetic, so a positive verdict
//! only means that no countermodel exists on that grid.

mod entail;
mod space;
mod table;

use thiserror::Error;

pub use entail::{
    entails, entails_with, tautology_check, EntailmentQuery, Outcome, Verdict, Witness,
};
pub use space::{enumerate_models, ModelSpace};
pub use table::{designated_set, truth_table, truth_table_with, TableRow, TruthTable};

use crate::semantics::SemanticsError;
use crate::syntax::SyntaxError;

/// Default cap on the number of models (or table rows) one run may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "BILOGIC_BUDGET";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("truth tables need a quantifier-free formula")]
    Quantified,
    #[error("`{0}` has arguments; truth tables need zero-ary atoms")]
    NotPropositional(String),
    #[error("expected exactly one atom, found {0}")]
    AtomCount(usize),
    #[error("{0} must be at least 1")]
    InvalidBound(&'static str),
    #[error("refusing to enumerate {} models: the budget is {budget} (set {BUDGET_ENV} to raise it)", required.map_or("more than 2^128".to_string(), |r| r.to_string()))]
    Budget { required: Option<u128>, budget: u64 },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// Run-time knobs that do not change verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub workers: usize,
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            workers: 1,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl SearchOptions {
    /// Defaults, with the budget taken from `BILOGIC_BUDGET` when it is set
    /// to a valid number.
    pub fn from_env() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Self { workers: 1, budget }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}
