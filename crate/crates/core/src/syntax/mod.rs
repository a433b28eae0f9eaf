//! Concrete syntax of the first-order language: tokenizer, parser,
//! pretty-printer, and expansion of the derived connectives and inner
//! quantifiers.
//!
//! Precedence, tightest first: the unary operators `~ # @ ! %`, then
//! `&&` > `&` > `||` > `|` > `=>` (right-associative). Quantifiers
//! (`forall`, `exists`, `Pi`, `Sigma`) extend as far right as possible.

mod ast;
mod desugar;
mod lexer;
mod parser;
mod printer;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

pub use ast::{BinaryOp, Formula, Quantifier, Term, UnaryOp, EXISTENCE};
pub use desugar::desugar;
pub use parser::looks_like_variable;
pub use printer::pretty_print;

use crate::values::Logic;

/// The logic together with the free-logic switch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mode {
    pub logic: Logic,
    /// When on, `E!` is auto-declared and inner quantifiers are available.
    pub free_logic: bool,
}

impl Mode {
    pub const fn new(logic: Logic, free_logic: bool) -> Self {
        Self { logic, free_logic }
    }
}

impl Default for Mode {
    fn default() -> Self {
        Mode::new(Logic::Bd4, true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical(char),
    Unbalanced,
    Unexpected {
        found: String,
        expected: String,
    },
    ArityMismatch {
        name: String,
        expected: usize,
        found: usize,
    },
    UnknownSymbol(String),
    FuzzyOnly(&'static str),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Lexical(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::Unbalanced => write!(f, "unbalanced parentheses"),
            ParseErrorKind::Unexpected { found, expected } => {
                write!(f, "expected {expected}, found {found}")
            }
            ParseErrorKind::ArityMismatch {
                name,
                expected,
                found,
            } => write!(
                f,
                "predicate `{name}` has arity {expected}, used with {found} argument(s)"
            ),
            ParseErrorKind::UnknownSymbol(s) => write!(f, "unknown symbol `{s}`"),
            ParseErrorKind::FuzzyOnly(op) => {
                write!(
                    f,
                    "connective `{op}` is only available in the fuzzy logic (lbd)"
                )
            }
        }
    }
}

/// A parse failure at a 1-based character column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {pos}: {kind}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(pos: usize, kind: ParseErrorKind) -> Self {
        Self { pos, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("predicate `{name}` used with arities {first} and {second}")]
    InconsistentArity {
        name: String,
        first: usize,
        second: usize,
    },
    #[error("symbol `{0}` used both as a predicate and as a constant")]
    SymbolClash(String),
    #[error("inner quantifier `{0}` requires free-logic mode (E! is not declared)")]
    InnerWithoutExistence(&'static str),
}

/// Predicate symbols with arities, and constant symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    predicates: BTreeMap<String, usize>,
    constants: BTreeSet<String>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_predicate(mut self, name: &str, arity: usize) -> Result<Self, SyntaxError> {
        self.add_predicate(name, arity)?;
        Ok(self)
    }

    pub fn with_constant(mut self, name: &str) -> Result<Self, SyntaxError> {
        self.add_constant(name)?;
        Ok(self)
    }

    pub fn add_predicate(&mut self, name: &str, arity: usize) -> Result<(), SyntaxError> {
        if self.constants.contains(name) {
            return Err(SyntaxError::SymbolClash(name.to_string()));
        }
        match self.predicates.get(name) {
            Some(&a) if a != arity => Err(SyntaxError::InconsistentArity {
                name: name.to_string(),
                first: a,
                second: arity,
            }),
            _ => {
                self.predicates.insert(name.to_string(), arity);
                Ok(())
            }
        }
    }

    pub fn add_constant(&mut self, name: &str) -> Result<(), SyntaxError> {
        if self.predicates.contains_key(name) {
            return Err(SyntaxError::SymbolClash(name.to_string()));
        }
        self.constants.insert(name.to_string());
        Ok(())
    }

    /// Declares `E!/1`.
    pub fn add_existence(&mut self) -> Result<(), SyntaxError> {
        self.add_predicate(EXISTENCE, 1)
    }

    pub fn has_existence(&self) -> bool {
        self.predicates.get(EXISTENCE) == Some(&1)
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.predicates.get(name).copied()
    }

    pub fn has_constant(&self, name: &str) -> bool {
        self.constants.contains(name)
    }

    /// Predicates in canonical (sorted) order.
    pub fn predicates(&self) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.predicates.iter().map(|(k, &v)| (k.as_str(), v))
    }

    /// Constants in canonical (sorted) order.
    pub fn constants(&self) -> impl Iterator<Item = &str> + '_ {
        self.constants.iter().map(String::as_str)
    }

    pub fn merge(&mut self, other: &Signature) -> Result<(), SyntaxError> {
        for (p, a) in other.predicates() {
            self.add_predicate(p, a)?;
        }
        for c in other.constants() {
            self.add_constant(c)?;
        }
        Ok(())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let preds: Vec<String> = self.predicates().map(|(p, a)| format!("{p}/{a}")).collect();
        let consts: Vec<&str> = self.constants().collect();
        write!(
            f,
            "predicates {{{}}}, constants {{{}}}",
            preds.join(", "),
            consts.join(", ")
        )
    }
}

/// How to parse: the logic, plus an optional declared signature.
///
/// Without a signature, symbols are inferred: arities must be consistent
/// within the text, and unbound term identifiers are variables when they look
/// like one (see [`looks_like_variable`]) and constants otherwise. With a
/// signature, declared constants are always constants; in `strict` mode any
/// undeclared predicate or constant is an error.
#[derive(Debug, Clone, Copy)]
pub struct ParseOptions<'a> {
    pub mode: Mode,
    pub signature: Option<&'a Signature>,
    pub strict: bool,
}

impl<'a> ParseOptions<'a> {
    pub fn new(mode: Mode) -> Self {
        Self {
            mode,
            signature: None,
            strict: false,
        }
    }

    pub fn with_signature(mut self, sig: &'a Signature) -> Self {
        self.signature = Some(sig);
        self
    }

    pub fn strict(mut self) -> Self {
        self.strict = true;
        self
    }
}

/// Parses one formula. Sugar nodes are kept in the tree.
pub fn parse(text: &str, opts: &ParseOptions<'_>) -> Result<Formula, ParseError> {
    parser::Parser::new(text, opts)?.parse_complete()
}

/// Parses a formula file: one formula per line; blank lines and lines
/// starting with `#` in the first column are skipped. Error positions are
/// reported as `(line, error)` with 1-based line numbers.
pub fn parse_formula_lines(
    text: &str,
    opts: &ParseOptions<'_>,
) -> Result<Vec<Formula>, (usize, ParseError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| parse(l, opts).map_err(|e| (i + 1, e)))
        .collect()
}

/// All predicates (with arities) and constants occurring in `f`. Inner
/// quantifiers contribute `E!/1`, which their expansion introduces.
pub fn collect_signature(f: &Formula) -> Result<Signature, SyntaxError> {
    let mut sig = Signature::new();
    let mut err = None;
    f.visit_atoms(&mut |pred, args| {
        if err.is_some() {
            return;
        }
        let mut step = || -> Result<(), SyntaxError> {
            sig.add_predicate(pred, args.len())?;
            for t in args {
                if let Term::Const(c) = t {
                    sig.add_constant(c)?;
                }
            }
            Ok(())
        };
        if let Err(e) = step() {
            err = Some(e);
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    if f.has_inner_quantifier() {
        sig.add_existence()?;
    }
    Ok(sig)
}
