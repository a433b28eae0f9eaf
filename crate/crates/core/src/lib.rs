pub mod cli;
pub mod grid;
pub mod search;
pub mod semantics;
pub mod syntax;
pub mod values;

pub use values::{Logic, TruthValue};
