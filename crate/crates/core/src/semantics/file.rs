//! The JSON model file format.
//!
//! ```json
//! { "mode": "bd4",
//!   "domain": ["a", "b"],
//!   "constants": {"c": "a"},
//!   "predicates": {
//!     "P":  {"arity": 1, "map": {"a": "T", "b": "B"}, "default": "N"},
//!     "E!": {"arity": 1, "map": {"a": "T"}, "default": "F"} } }
//! ```
//!
//! Tuple keys join element names with commas; a zero-ary predicate uses the
//! empty key. Values are corner glyphs or, in `lbd` files, `[pos, neg]`
//! arrays. Every predicate needs an explicit `default`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::axioms::{existence_failures_weak, schema_failures, Schema, TheoryProfile};
use super::model::{tuple_at, tuple_index, Environment, Model};
use super::SemanticsError;
use crate::grid::GridDegree as GridValueDegree;
use crate::syntax::{Signature, EXISTENCE};
use crate::values::{Corner, Degree, FourValue, FuzzyValue, Logic, Truth};

/// A value as written in a model file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueRepr {
    Glyph(String),
    Pair([f64; 2]),
}

impl ValueRepr {
    pub fn from_value<D: Degree>(v: Truth<D>) -> Self {
        match v.corner() {
            Some(c) => ValueRepr::Glyph(c.glyph().to_string()),
            None => ValueRepr::Pair([v.pos.to_f64(), v.neg.to_f64()]),
        }
    }

    fn decode(&self, logic: Logic) -> Result<FuzzyValue, String> {
        match self {
            ValueRepr::Glyph(g) => {
                let mut cs = g.chars();
                match (cs.next().and_then(Corner::from_glyph), cs.next()) {
                    (Some(c), None) => Ok(FuzzyValue::from_corner(c)),
                    _ => Err(format!("`{g}` is not one of T, F, N, B")),
                }
            }
            ValueRepr::Pair([p, n]) => {
                let v = Truth::<f64>::checked(*p, *n).map_err(|e| e.to_string())?;
                if logic == Logic::Bd4 && v.corner().is_none() {
                    return Err(format!("fuzzy value [{p}, {n}] in a bd4 model"));
                }
                Ok(v)
            }
        }
    }
}

impl fmt::Display for ValueRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueRepr::Glyph(g) => f.write_str(g),
            ValueRepr::Pair([p, n]) => write!(f, "<{p},{n}>"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredicateEntry {
    pub arity: usize,
    #[serde(default)]
    pub map: BTreeMap<String, ValueRepr>,
    pub default: ValueRepr,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    pub mode: Logic,
    pub domain: Vec<String>,
    #[serde(default)]
    pub constants: BTreeMap<String, String>,
    #[serde(default)]
    pub predicates: BTreeMap<String, PredicateEntry>,
    /// Optional variable assignment, used by witness files.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub environment: Option<BTreeMap<String, String>>,
}

/// A problem found while validating a model file.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// The file is not a well-formed model file at all.
    Malformed(String),
    EmptyDomain,
    DuplicateElement(String),
    ConstantOutsideDomain {
        constant: String,
        element: String,
    },
    MissingConstant(String),
    MissingPredicate(String),
    ArityMismatch {
        predicate: String,
        expected: usize,
        found: usize,
    },
    SymbolClash(String),
    BadTupleKey {
        predicate: String,
        key: String,
        reason: String,
    },
    BadValue {
        predicate: String,
        key: String,
        reason: String,
    },
    ModeMismatch {
        expected: Logic,
        found: Logic,
    },
    EnvironmentOutsideDomain {
        variable: String,
        element: String,
    },
    MissingExistencePredicate,
    Axiom {
        schema: Schema,
        predicate: String,
        tuple: Vec<String>,
        value: String,
    },
    /// `∘E!x` holds but the bivalence of `E!` does not: the inner domain is graded.
    GradedInnerDomain {
        element: String,
        value: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Malformed(e) => write!(f, "{e}"),
            Violation::EmptyDomain => write!(f, "domain is empty"),
            Violation::DuplicateElement(e) => write!(f, "domain element `{e}` listed twice"),
            Violation::ConstantOutsideDomain { constant, element } => {
                write!(
                    f,
                    "constant `{constant}` mapped to `{element}`, which is not in the domain"
                )
            }
            Violation::MissingConstant(c) => write!(f, "constant `{c}` has no denotation"),
            Violation::MissingPredicate(p) => write!(f, "predicate `{p}` is not interpreted"),
            Violation::ArityMismatch {
                predicate,
                expected,
                found,
            } => write!(
                f,
                "predicate `{predicate}` has arity {found} in the model but {expected} is required"
            ),
            Violation::SymbolClash(s) => write!(f, "`{s}` is both a predicate and a constant"),
            Violation::BadTupleKey {
                predicate,
                key,
                reason,
            } => {
                write!(f, "predicate `{predicate}`, key `{key}`: {reason}")
            }
            Violation::BadValue {
                predicate,
                key,
                reason,
            } => {
                write!(f, "predicate `{predicate}`, key `{key}`: {reason}")
            }
            Violation::ModeMismatch { expected, found } => {
                write!(f, "model is {found} but {expected} was requested")
            }
            Violation::EnvironmentOutsideDomain { variable, element } => {
                write!(
                    f,
                    "variable `{variable}` assigned to `{element}`, which is not in the domain"
                )
            }
            Violation::MissingExistencePredicate => write!(f, "E! is not interpreted"),
            Violation::Axiom {
                schema,
                predicate,
                tuple,
                value,
            } => write!(
                f,
                "{schema} schema fails for {predicate}({}) = {value}",
                tuple.join(",")
            ),
            Violation::GradedInnerDomain { element, value } => write!(
                f,
                "E!({element}) = {value} is normal but not bivalent: the inner domain is graded"
            ),
        }
    }
}

/// What [`ModelFile::validate`] should check beyond well-formedness.
#[derive(Debug, Clone, Default)]
pub struct ValidationOptions {
    /// Required logic of the model.
    pub logic: Option<Logic>,
    /// Symbols the model must interpret.
    pub signature: Option<Signature>,
    /// Axiom schemas the model must satisfy.
    pub profile: TheoryProfile,
}

/// A model loaded from a file, in the carrier its mode selects.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyModel {
    Four(Model<bool>),
    Fuzzy(Model<f64>),
}

impl AnyModel {
    pub fn logic(&self) -> Logic {
        match self {
            AnyModel::Four(_) => Logic::Bd4,
            AnyModel::Fuzzy(_) => Logic::Lbd,
        }
    }

    pub fn signature(&self) -> &Signature {
        match self {
            AnyModel::Four(m) => m.signature(),
            AnyModel::Fuzzy(m) => m.signature(),
        }
    }
}

fn split_key(key: &str, arity: usize) -> Vec<&str> {
    if arity == 0 && key.is_empty() {
        Vec::new()
    } else {
        key.split(',').map(str::trim).collect()
    }
}

impl ModelFile {
    pub fn from_json(text: &str) -> Result<Self, SemanticsError> {
        serde_json::from_str(text).map_err(|e| SemanticsError::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model files always serialize")
    }

    /// The signature the file interprets.
    pub fn signature(&self) -> Result<Signature, SemanticsError> {
        let mut sig = Signature::new();
        for (p, e) in &self.predicates {
            sig.add_predicate(p, e.arity)?;
        }
        for c in self.constants.keys() {
            sig.add_constant(c)?;
        }
        Ok(sig)
    }

    /// All violations; an empty list means the model is usable under `opts`.
    pub fn validate(&self, opts: &ValidationOptions) -> Vec<Violation> {
        let mut out = self.structural_violations();
        if let Some(expected) = opts.logic {
            if expected != self.mode {
                out.push(Violation::ModeMismatch {
                    expected,
                    found: self.mode,
                });
            }
        }
        if let Some(sig) = &opts.signature {
            for c in sig.constants() {
                if !self.constants.contains_key(c) {
                    out.push(Violation::MissingConstant(c.to_string()));
                }
            }
            for (p, arity) in sig.predicates() {
                match self.predicates.get(p) {
                    None => out.push(Violation::MissingPredicate(p.to_string())),
                    Some(e) if e.arity != arity => out.push(Violation::ArityMismatch {
                        predicate: p.to_string(),
                        expected: arity,
                        found: e.arity,
                    }),
                    Some(_) => {}
                }
            }
        }
        if !out.is_empty() || opts.profile.is_empty() {
            return out;
        }
        if !self.predicates.contains_key(EXISTENCE) {
            out.push(Violation::MissingExistencePredicate);
            return out;
        }
        match self.build() {
            Ok(AnyModel::Four(m)) => out.extend(axiom_violations(&m, &opts.profile)),
            Ok(AnyModel::Fuzzy(m)) => out.extend(axiom_violations(&m, &opts.profile)),
            Err(vs) => out.extend(vs),
        }
        out
    }

    fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.domain.is_empty() {
            out.push(Violation::EmptyDomain);
        }
        let mut seen = BTreeSet::new();
        for e in &self.domain {
            if !seen.insert(e.as_str()) {
                out.push(Violation::DuplicateElement(e.clone()));
            }
        }
        for (c, e) in &self.constants {
            if !seen.contains(e.as_str()) {
                out.push(Violation::ConstantOutsideDomain {
                    constant: c.clone(),
                    element: e.clone(),
                });
            }
            if self.predicates.contains_key(c) {
                out.push(Violation::SymbolClash(c.clone()));
            }
        }
        for (p, entry) in &self.predicates {
            if p == EXISTENCE && entry.arity != 1 {
                out.push(Violation::ArityMismatch {
                    predicate: p.clone(),
                    expected: 1,
                    found: entry.arity,
                });
            }
            if let Err(reason) = entry.default.decode(self.mode) {
                out.push(Violation::BadValue {
                    predicate: p.clone(),
                    key: "default".into(),
                    reason,
                });
            }
            for (key, v) in &entry.map {
                let parts = split_key(key, entry.arity);
                if parts.len() != entry.arity {
                    out.push(Violation::BadTupleKey {
                        predicate: p.clone(),
                        key: key.clone(),
                        reason: format!(
                            "expected {} element(s), found {}",
                            entry.arity,
                            parts.len()
                        ),
                    });
                } else if let Some(bad) = parts.iter().find(|e| !seen.contains(*e)) {
                    out.push(Violation::BadTupleKey {
                        predicate: p.clone(),
                        key: key.clone(),
                        reason: format!("`{bad}` is not in the domain"),
                    });
                }
                if let Err(reason) = v.decode(self.mode) {
                    out.push(Violation::BadValue {
                        predicate: p.clone(),
                        key: key.clone(),
                        reason,
                    });
                }
            }
        }
        if let Some(env) = &self.environment {
            for (v, e) in env {
                if !seen.contains(e.as_str()) {
                    out.push(Violation::EnvironmentOutsideDomain {
                        variable: v.clone(),
                        element: e.clone(),
                    });
                }
            }
        }
        out
    }

    /// Builds the model, or returns the structural violations preventing it.
    pub fn build(&self) -> Result<AnyModel, Vec<Violation>> {
        let vs = self.structural_violations();
        if !vs.is_empty() {
            return Err(vs);
        }
        let fuzzy = self.build_fuzzy().map_err(|e| {
            vec![Violation::BadValue {
                predicate: String::new(),
                key: String::new(),
                reason: e.to_string(),
            }]
        })?;
        Ok(match self.mode {
            Logic::Bd4 => AnyModel::Four(fuzzy.map_values(|v| {
                let c = v.corner().expect("bd4 values validated as corners");
                FourValue::from_corner(c)
            })),
            Logic::Lbd => AnyModel::Fuzzy(fuzzy),
        })
    }

    fn build_fuzzy(&self) -> Result<Model<f64>, SemanticsError> {
        let sig = self.signature()?;
        let mut m = Model::new(self.domain.clone(), sig, FuzzyValue::from_corner(Corner::F))?;
        for (c, e) in &self.constants {
            m.set_constant(c, e)?;
        }
        let n = m.size();
        for (p, entry) in &self.predicates {
            let default = entry
                .default
                .decode(self.mode)
                .map_err(SemanticsError::Format)?;
            let idx = m.predicate_index(p).expect("predicate from signature");
            m.tables_mut()[idx].values_mut().fill(default);
            for (key, v) in &entry.map {
                let tuple: Vec<usize> = split_key(key, entry.arity)
                    .iter()
                    .map(|e| {
                        m.element(e)
                            .ok_or_else(|| SemanticsError::UnknownElement(e.to_string()))
                    })
                    .collect::<Result<_, _>>()?;
                let value = v.decode(self.mode).map_err(SemanticsError::Format)?;
                m.tables_mut()[idx].values_mut()[tuple_index(&tuple, n)] = value;
            }
        }
        Ok(m)
    }

    /// Builds an `lbd` model on the grid with denominator `den`, snapping
    /// values that lie within rounding distance of a grid point.
    pub fn build_grid(&self, den: u32) -> Result<Model<GridValueDegree>, SemanticsError> {
        if let Some(v) = self.structural_violations().first() {
            return Err(SemanticsError::Format(v.to_string()));
        }
        let fuzzy = self.build_fuzzy()?;
        let snap = |x: f64| {
            GridValueDegree::from_f64(x, den).ok_or_else(|| {
                SemanticsError::Format(format!("{x} is not on the grid with denominator {den}"))
            })
        };
        let bad = std::cell::RefCell::new(None);
        let grid = fuzzy.map_values(|v| match (snap(v.pos), snap(v.neg)) {
            (Ok(p), Ok(n)) => Truth::new(p, n),
            (Err(e), _) | (_, Err(e)) => {
                bad.borrow_mut().get_or_insert(e);
                Truth::new(GridValueDegree::zero(den), GridValueDegree::zero(den))
            }
        });
        match bad.into_inner() {
            Some(e) => Err(e),
            None => Ok(grid),
        }
    }

    /// Serializes a model. Each predicate's most frequent value becomes its
    /// default (ties go to the earliest tuple); the others are listed.
    pub fn from_model<D: Degree>(m: &Model<D>, env: Option<&Environment>) -> Self {
        let n = m.size();
        let constants = m
            .constant_names()
            .iter()
            .zip(m.constant_values())
            .map(|(c, &e)| (c.clone(), m.domain()[e].clone()))
            .collect();
        let mut predicates = BTreeMap::new();
        for t in m.tables() {
            let values = t.values();
            let mut best = (0usize, values[0]);
            for &v in values {
                let count = values.iter().filter(|&&w| w == v).count();
                if count > best.0 {
                    best = (count, v);
                }
            }
            let default = best.1;
            let map = values
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != default)
                .map(|(i, &v)| {
                    (
                        m.element_names(&tuple_at(i, t.arity(), n)).join(","),
                        ValueRepr::from_value(v),
                    )
                })
                .collect();
            predicates.insert(
                t.name().to_string(),
                PredicateEntry {
                    arity: t.arity(),
                    map,
                    default: ValueRepr::from_value(default),
                },
            );
        }
        ModelFile {
            mode: D::LOGIC,
            domain: m.domain().to_vec(),
            constants,
            predicates,
            environment: env.map(|e| e.to_names(m)),
        }
    }
}

/// One line per symbol, listing every tuple explicitly.
impl fmt::Display for ModelFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "domain: {{{}}}", self.domain.join(", "))?;
        for (c, e) in &self.constants {
            writeln!(f, "{c} = {e}")?;
        }
        let n = self.domain.len();
        for (p, entry) in &self.predicates {
            if entry.arity == 0 {
                writeln!(f, "{p} = {}", entry.map.get("").unwrap_or(&entry.default))?;
                continue;
            }
            let cells: Vec<String> = (0..n.pow(entry.arity as u32))
                .map(|i| {
                    let names: Vec<&str> = tuple_at(i, entry.arity, n)
                        .into_iter()
                        .map(|e| self.domain[e].as_str())
                        .collect();
                    let key = names.join(",");
                    let v = entry.map.get(&key).unwrap_or(&entry.default);
                    if entry.arity == 1 {
                        format!("{key} {v}")
                    } else {
                        format!("({key}) {v}")
                    }
                })
                .collect();
            writeln!(f, "{p}: {}", cells.join(", "))?;
        }
        if let Some(env) = self.environment.as_ref().filter(|e| !e.is_empty()) {
            let binds: Vec<String> = env.iter().map(|(v, e)| format!("{v} = {e}")).collect();
            writeln!(f, "environment: {}", binds.join(", "))?;
        }
        Ok(())
    }
}

fn axiom_violations<D: Degree>(m: &Model<D>, profile: &TheoryProfile) -> Vec<Violation> {
    let mut out = Vec::new();
    for schema in profile.schemas() {
        let fails = match schema_failures(m, schema) {
            Ok(f) => f,
            Err(_) => {
                out.push(Violation::MissingExistencePredicate);
                return out;
            }
        };
        for f in fails {
            let value = m
                .value(&f.predicate, &f.tuple)
                .expect("failure tuples are in range");
            if schema == Schema::Existence && D::LOGIC == Logic::Lbd {
                let weak_ok = existence_failures_weak(m)
                    .map(|w| !w.contains(&f.tuple[0]))
                    .unwrap_or(false);
                if weak_ok {
                    out.push(Violation::GradedInnerDomain {
                        element: m.domain()[f.tuple[0]].clone(),
                        value: value.to_string(),
                    });
                    continue;
                }
            }
            out.push(Violation::Axiom {
                schema,
                predicate: f.predicate,
                tuple: m.element_names(&f.tuple),
                value: value.to_string(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{ "mode": "bd4",
      "domain": ["a","b"],
      "constants": {"c": "a"},
      "predicates": {
        "P":  {"arity": 1, "map": {"a": "T", "b": "B"}, "default": "N"},
        "E!": {"arity": 1, "map": {"a": "T"}, "default": "F"} } }"#;

    #[test]
    fn loads_the_documented_example() {
        let f = ModelFile::from_json(SAMPLE).unwrap();
        assert!(f.validate(&ValidationOptions::default()).is_empty());
        let AnyModel::Four(m) = f.build().unwrap() else {
            panic!("bd4 model")
        };
        assert_eq!(m.value("P", &[1]).unwrap(), FourValue::B);
        assert_eq!(m.value("E!", &[1]).unwrap(), FourValue::F);
        assert_eq!(m.denotation("c"), Some(0));
    }

    #[test]
    fn constant_outside_domain() {
        let mut f = ModelFile::from_json(SAMPLE).unwrap();
        f.constants.insert("c".into(), "z".into());
        let vs = f.validate(&ValidationOptions::default());
        assert_eq!(
            vs,
            vec![Violation::ConstantOutsideDomain {
                constant: "c".into(),
                element: "z".into()
            }]
        );
    }

    #[test]
    fn carrier_and_signature_violations() {
        let mut f = ModelFile::from_json(SAMPLE).unwrap();
        f.predicates
            .get_mut("P")
            .unwrap()
            .map
            .insert("a".into(), ValueRepr::Pair([0.5, 0.5]));
        assert!(matches!(
            f.validate(&ValidationOptions::default())[..],
            [Violation::BadValue { .. }]
        ));
        f.mode = Logic::Lbd;
        assert!(f.validate(&ValidationOptions::default()).is_empty());

        let sig = Signature::new()
            .with_predicate("Q", 2)
            .unwrap()
            .with_predicate("P", 2)
            .unwrap()
            .with_constant("d")
            .unwrap();
        let vs = f.validate(&ValidationOptions {
            logic: Some(Logic::Bd4),
            signature: Some(sig),
            ..Default::default()
        });
        assert_eq!(vs.len(), 4, "{vs:?}");
    }

    #[test]
    fn bad_keys() {
        let mut f = ModelFile::from_json(SAMPLE).unwrap();
        f.predicates
            .get_mut("P")
            .unwrap()
            .map
            .insert("a,b".into(), ValueRepr::Glyph("T".into()));
        f.predicates
            .get_mut("P")
            .unwrap()
            .map
            .insert("q".into(), ValueRepr::Glyph("X".into()));
        assert_eq!(f.validate(&ValidationOptions::default()).len(), 3);
    }

    #[test]
    fn existence_axiom_violation_names_element() {
        let mut f = ModelFile::from_json(SAMPLE).unwrap();
        f.predicates
            .get_mut("E!")
            .unwrap()
            .map
            .insert("b".into(), ValueRepr::Glyph("N".into()));
        let opts = ValidationOptions {
            profile: TheoryProfile::empty().with(Schema::Existence),
            ..Default::default()
        };
        let vs = f.validate(&opts);
        assert_eq!(
            vs,
            vec![Violation::Axiom {
                schema: Schema::Existence,
                predicate: "E!".into(),
                tuple: vec!["b".into()],
                value: "N".into()
            }]
        );
    }

    #[test]
    fn graded_inner_domain_reported_separately() {
        let mut f = ModelFile::from_json(SAMPLE).unwrap();
        f.mode = Logic::Lbd;
        f.predicates
            .get_mut("E!")
            .unwrap()
            .map
            .insert("b".into(), ValueRepr::Pair([0.6, 0.4]));
        let opts = ValidationOptions {
            profile: TheoryProfile::empty().with(Schema::Existence),
            ..Default::default()
        };
        assert!(matches!(
            &f.validate(&opts)[..],
            [Violation::GradedInnerDomain { element, .. }] if element == "b"
        ));
    }

    #[test]
    fn display_lists_every_tuple() {
        let f = ModelFile::from_json(SAMPLE).unwrap();
        assert_eq!(
            f.to_string(),
            "domain: {a, b}\nc = a\nE!: a T, b F\nP: a T, b B\n"
        );
    }

    #[test]
    fn default_is_mandatory() {
        let text = r#"{"mode":"bd4","domain":["a"],"predicates":{"P":{"arity":1,"map":{}}}}"#;
        assert!(ModelFile::from_json(text).is_err());
    }

    #[test]
    fn zero_ary_predicates_use_empty_key() {
        let text = r#"{"mode":"bd4","domain":["a"],"predicates":{"p":{"arity":0,"map":{"":"B"},"default":"F"}}}"#;
        let f = ModelFile::from_json(text).unwrap();
        let AnyModel::Four(m) = f.build().unwrap() else {
            panic!()
        };
        assert_eq!(m.value("p", &[]).unwrap(), FourValue::B);
    }

    #[test]
    fn serialization_round_trip() {
        let f = ModelFile::from_json(SAMPLE).unwrap();
        let AnyModel::Four(m) = f.build().unwrap() else {
            panic!()
        };
        let back = ModelFile::from_model(&m, None);
        let AnyModel::Four(m2) = ModelFile::from_json(&back.to_json())
            .unwrap()
            .build()
            .unwrap()
        else {
            panic!()
        };
        assert_eq!(m, m2);
    }
}
