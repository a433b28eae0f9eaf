//! Models, evaluation and the axiom schemas of the free logics.

mod axioms;
mod eval;
mod file;
mod model;

use thiserror::Error;

pub use axioms::{
    check_existence_axiom, check_noncontradiction_axiom, check_normality_axiom, existence_body,
    existence_failures, existence_failures_weak, schema_failures, schema_sentence, AxiomFailure,
    ProfileChecker, Schema, TheoryProfile,
};
pub use eval::{eval, eval_all_environments, CompiledFormula};
pub use file::{AnyModel, ModelFile, PredicateEntry, ValidationOptions, ValueRepr, Violation};
pub use model::{tuple_at, tuple_index, Environment, FourModel, FuzzyModel, Model, PredicateTable};

use crate::syntax::SyntaxError;
use crate::values::Logic;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SemanticsError {
    #[error("the domain must be non-empty")]
    EmptyDomain,
    #[error("domain element `{0}` appears twice")]
    DuplicateElement(String),
    #[error("interpretation of `{0}` is too large to store")]
    TooLarge(String),
    #[error("unknown domain element `{0}`")]
    UnknownElement(String),
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("predicate `{name}` has arity {expected}, got {found} argument(s)")]
    ArityMismatch {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("the model does not interpret E!")]
    NoExistencePredicate,
    #[error("variable `{0}` is not assigned")]
    UnassignedVariable(String),
    #[error("fuzzy-only connective in a bd4 formula")]
    FuzzyInFourValued,
    #[error("formula compiled for {formula} but model is {model}")]
    LogicMismatch { formula: Logic, model: Logic },
    #[error("malformed model file: {0}")]
    Format(String),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}
