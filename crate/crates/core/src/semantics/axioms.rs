//! Axiom schemas of the free logic: bivalence of `E!`, and the optional
//! normality and non-contradiction of predicates on the inner domain.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::eval::CompiledFormula;
use super::model::{tuple_at, Model};
use super::SemanticsError;
use crate::syntax::{Formula, Quantifier, Signature, Term, EXISTENCE};
use crate::values::{Degree, Logic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Schema {
    /// `∘E!x` in the four-valued logic, `∘E!x ∧ (E!x ∨ ~E!x)` in the fuzzy one.
    Existence,
    /// `∀x₁…∀xₙ ∘P(x₁,…,xₙ)` for every predicate.
    Normality,
    /// `∀x₁…∀xₙ ¬(P(x₁,…,xₙ) ∧ ~P(x₁,…,xₙ))` for every predicate.
    Noncontradiction,
}

impl Schema {
    pub const ALL: [Schema; 3] = [
        Schema::Existence,
        Schema::Normality,
        Schema::Noncontradiction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Schema::Existence => "existence",
            Schema::Normality => "normality",
            Schema::Noncontradiction => "noncontradiction",
        }
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Schema {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "existence" => Ok(Schema::Existence),
            "normality" => Ok(Schema::Normality),
            "noncontradiction" => Ok(Schema::Noncontradiction),
            other => Err(format!(
                "unknown schema `{other}` (expected existence, normality or noncontradiction)"
            )),
        }
    }
}

/// The axiom schemas restricting a class of models.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TheoryProfile(BTreeSet<Schema>);

impl TheoryProfile {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn all() -> Self {
        Self(Schema::ALL.into_iter().collect())
    }

    pub fn with(mut self, s: Schema) -> Self {
        self.0.insert(s);
        self
    }

    pub fn contains(&self, s: Schema) -> bool {
        self.0.contains(&s)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn schemas(&self) -> impl Iterator<Item = Schema> + '_ {
        self.0.iter().copied()
    }
}

impl FromStr for TheoryProfile {
    type Err = String;

    /// Comma-separated schema names; the empty string is the empty profile.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .filter(|p| !p.trim().is_empty())
            .map(Schema::from_str)
            .collect::<Result<BTreeSet<_>, _>>()
            .map(TheoryProfile)
    }
}

impl fmt::Display for TheoryProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|s| s.name()).collect();
        f.write_str(&names.join(","))
    }
}

fn var_terms(n: usize) -> Vec<Term> {
    (1..=n).map(|i| Term::Var(format!("x{i}"))).collect()
}

/// Body of the existence schema at the free variable `x1`. `strong` selects
/// the fuzzy variant that also demands `E!x ∨ ~E!x`.
pub fn existence_body(strong: bool) -> Formula {
    let e = Formula::exists_pred(Term::var("x1"));
    let circ = Formula::circ(e.clone());
    if strong {
        Formula::and(circ, Formula::or(e.clone(), Formula::neg(e)))
    } else {
        circ
    }
}

fn schema_body(schema: Schema, pred: &str, arity: usize) -> Formula {
    let atom = Formula::atom(pred, var_terms(arity));
    match schema {
        Schema::Normality => Formula::circ(atom),
        Schema::Noncontradiction => {
            Formula::bivalent_neg(Formula::and(atom.clone(), Formula::neg(atom)))
        }
        Schema::Existence => unreachable!("existence is not a per-predicate schema"),
    }
}

/// The closed instance `(∀x₁)…(∀xₙ) body` of a per-predicate schema.
pub fn schema_sentence(schema: Schema, pred: &str, arity: usize) -> Formula {
    var_terms(arity)
        .into_iter()
        .rev()
        .fold(schema_body(schema, pred, arity), |acc, t| {
            Formula::quant(Quantifier::InnerForall, t.name(), acc)
        })
}

/// `E!(x₁) → (… → (E!(xₙ) → body))`: the matrix of the closed schema
/// instance once the inner quantifiers are relativized.
fn relativized_body(schema: Schema, pred: &str, arity: usize) -> Formula {
    var_terms(arity)
        .into_iter()
        .rev()
        .fold(schema_body(schema, pred, arity), |acc, t| {
            Formula::implies(Formula::exists_pred(t), acc)
        })
}

/// A schema instance that is not designated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub schema: Schema,
    pub predicate: String,
    /// Element indices; for the existence schema, the single element.
    pub tuple: Vec<usize>,
}

fn require_existence(sig: &Signature) -> Result<(), SemanticsError> {
    if sig.has_existence() {
        Ok(())
    } else {
        Err(SemanticsError::NoExistencePredicate)
    }
}

/// Elements where the existence schema for `D`'s logic fails.
pub fn existence_failures<D: Degree>(m: &Model<D>) -> Result<Vec<usize>, SemanticsError> {
    existence_failures_with(m, D::LOGIC == Logic::Lbd)
}

/// Elements where only the weak schema `∘E!x` fails; in the fuzzy logic this
/// admits a graded inner domain.
pub fn existence_failures_weak<D: Degree>(m: &Model<D>) -> Result<Vec<usize>, SemanticsError> {
    existence_failures_with(m, false)
}

fn existence_failures_with<D: Degree>(
    m: &Model<D>,
    strong: bool,
) -> Result<Vec<usize>, SemanticsError> {
    require_existence(m.signature())?;
    let c = CompiledFormula::compile(&existence_body(strong), m.signature(), D::LOGIC)?;
    Ok((0..m.size())
        .filter(|&a| !c.eval_slots(m, &[a]).is_designated())
        .collect())
}

pub fn check_existence_axiom<D: Degree>(m: &Model<D>) -> Result<bool, SemanticsError> {
    Ok(existence_failures(m)?.is_empty())
}

/// Instances of a per-predicate schema that fail, with the offending tuples.
pub fn schema_failures<D: Degree>(
    m: &Model<D>,
    schema: Schema,
) -> Result<Vec<AxiomFailure>, SemanticsError> {
    if schema == Schema::Existence {
        return Ok(existence_failures(m)?
            .into_iter()
            .map(|a| AxiomFailure {
                schema,
                predicate: EXISTENCE.to_string(),
                tuple: vec![a],
            })
            .collect());
    }
    require_existence(m.signature())?;
    let n = m.size();
    let mut out = Vec::new();
    for (pred, arity) in m.signature().predicates() {
        let c = CompiledFormula::compile(
            &relativized_body(schema, pred, arity),
            m.signature(),
            D::LOGIC,
        )?;
        for i in 0..n.pow(arity as u32) {
            let tuple = tuple_at(i, arity, n);
            if !c.eval_slots(m, &tuple).is_designated() {
                out.push(AxiomFailure {
                    schema,
                    predicate: pred.to_string(),
                    tuple,
                });
            }
        }
    }
    Ok(out)
}

fn check_sentences<D: Degree>(m: &Model<D>, schema: Schema) -> Result<bool, SemanticsError> {
    require_existence(m.signature())?;
    for (pred, arity) in m.signature().predicates() {
        let c = CompiledFormula::compile(
            &schema_sentence(schema, pred, arity),
            m.signature(),
            D::LOGIC,
        )?;
        if !c.eval_slots(m, &[]).is_designated() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every predicate is fully normal on the inner domain.
pub fn check_normality_axiom<D: Degree>(m: &Model<D>) -> Result<bool, SemanticsError> {
    check_sentences(m, Schema::Normality)
}

/// True iff no predicate is contradictory on the inner domain.
pub fn check_noncontradiction_axiom<D: Degree>(m: &Model<D>) -> Result<bool, SemanticsError> {
    check_sentences(m, Schema::Noncontradiction)
}

/// Precompiled schema instances for repeatedly testing models of one
/// signature against a profile.
#[derive(Debug, Clone)]
pub struct ProfileChecker {
    existence: Option<CompiledFormula>,
    sentences: Vec<CompiledFormula>,
}

impl ProfileChecker {
    pub fn new(
        sig: &Signature,
        logic: Logic,
        profile: &TheoryProfile,
    ) -> Result<Self, SemanticsError> {
        if !profile.is_empty() {
            require_existence(sig)?;
        }
        let existence = if profile.contains(Schema::Existence) {
            Some(CompiledFormula::compile(
                &existence_body(logic == Logic::Lbd),
                sig,
                logic,
            )?)
        } else {
            None
        };
        let mut sentences = Vec::new();
        for schema in [Schema::Normality, Schema::Noncontradiction] {
            if profile.contains(schema) {
                for (pred, arity) in sig.predicates() {
                    sentences.push(CompiledFormula::compile(
                        &schema_sentence(schema, pred, arity),
                        sig,
                        logic,
                    )?);
                }
            }
        }
        Ok(Self {
            existence,
            sentences,
        })
    }

    pub fn admits<D: Degree>(&self, m: &Model<D>) -> bool {
        if let Some(e) = &self.existence {
            if (0..m.size()).any(|a| !e.eval_slots(m, &[a]).is_designated()) {
                return false;
            }
        }
        self.sentences
            .iter()
            .all(|s| s.eval_slots(m, &[]).is_designated())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::values::{FourValue, FuzzyValue, Truth};

    fn sig() -> Signature {
        Signature::new()
            .with_predicate("P", 1)
            .unwrap()
            .with_predicate("E!", 1)
            .unwrap()
    }

    fn model(e: [FourValue; 2], p: [FourValue; 2]) -> Model<bool> {
        let mut m = Model::new(vec!["a".into(), "b".into()], sig(), FourValue::F).unwrap();
        for (i, el) in ["a", "b"].iter().enumerate() {
            m.set("E!", &[el], e[i]).unwrap();
            m.set("P", &[el], p[i]).unwrap();
        }
        m
    }

    const T: FourValue = Truth::<bool>::T;
    const F: FourValue = Truth::<bool>::F;
    const N: FourValue = Truth::<bool>::N;
    const B: FourValue = Truth::<bool>::B;

    #[test]
    fn existence_axiom_four_valued() {
        assert!(check_existence_axiom(&model([T, F], [T, T])).unwrap());
        let bad = model([B, F], [T, T]);
        assert!(!check_existence_axiom(&bad).unwrap());
        assert_eq!(existence_failures(&bad).unwrap(), vec![0]);
        let gap = model([T, N], [T, T]);
        assert_eq!(existence_failures(&gap).unwrap(), vec![1]);
    }

    #[test]
    fn existence_axiom_fuzzy_needs_bivalence() {
        let mut m = model([T, F], [T, T]).map_values(|v| v.to_fuzzy());
        m.set("E!", &["a"], FuzzyValue::new(0.6, 0.4)).unwrap();
        assert!(existence_failures_weak(&m).unwrap().is_empty());
        assert!(!check_existence_axiom(&m).unwrap());
        assert_eq!(existence_failures(&m).unwrap(), vec![0]);
    }

    #[test]
    fn normality_axiom() {
        assert!(check_normality_axiom(&model([T, F], [F, N])).unwrap());
        assert!(!check_normality_axiom(&model([T, F], [B, T])).unwrap());
        let m = model([T, T], [T, B]);
        let fails = schema_failures(&m, Schema::Normality).unwrap();
        assert_eq!(
            fails,
            vec![AxiomFailure {
                schema: Schema::Normality,
                predicate: "P".into(),
                tuple: vec![1]
            }]
        );
    }

    #[test]
    fn noncontradiction_axiom() {
        for v in [T, F, N] {
            assert!(check_noncontradiction_axiom(&model([T, T], [v, v])).unwrap());
        }
        assert!(!check_noncontradiction_axiom(&model([T, F], [B, T])).unwrap());
        assert!(check_noncontradiction_axiom(&model([F, F], [B, B])).unwrap());
    }

    #[test]
    fn failures_agree_with_sentences() {
        for e0 in [T, F] {
            for e1 in [T, F] {
                for p0 in FourValue::all() {
                    for p1 in FourValue::all() {
                        let m = model([e0, e1], [p0, p1]);
                        for s in [Schema::Normality, Schema::Noncontradiction] {
                            assert_eq!(
                                schema_failures(&m, s).unwrap().is_empty(),
                                check_sentences(&m, s).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn profile_parsing() {
        let p: TheoryProfile = "existence,noncontradiction".parse().unwrap();
        assert!(p.contains(Schema::Existence) && !p.contains(Schema::Normality));
        assert_eq!(p.to_string(), "existence,noncontradiction");
        assert!("".parse::<TheoryProfile>().unwrap().is_empty());
        assert!("bogus".parse::<TheoryProfile>().is_err());
    }

    #[test]
    fn requires_existence_predicate() {
        let m = Model::<bool>::with_size(1, Signature::new().with_predicate("P", 1).unwrap(), F)
            .unwrap();
        assert!(matches!(
            check_normality_axiom(&m),
            Err(SemanticsError::NoExistencePredicate)
        ));
        assert!(matches!(
            check_existence_axiom(&m),
            Err(SemanticsError::NoExistencePredicate)
        ));
    }
}
