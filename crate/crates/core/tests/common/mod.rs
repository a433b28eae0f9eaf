//! Helpers shared by the integration tests: seeded formula generators and an
//! independent brute-force entailment checker.
#![allow(dead_code)]

use std::collections::BTreeMap;

use bilogic::grid::GridDegree;
use bilogic::semantics::{CompiledFormula, Environment, Model, ProfileChecker, TheoryProfile};
use bilogic::syntax::{BinaryOp, Formula, Quantifier, Signature, Term, UnaryOp, EXISTENCE};
use bilogic::values::{Degree, FourValue, GridValue, Logic, Truth};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random formulas over a fixed vocabulary.
pub struct FormulaGen {
    pub logic: Logic,
    pub predicates: Vec<(String, usize)>,
    pub constants: Vec<String>,
    /// Variables that may occur free.
    pub free_vars: Vec<String>,
    pub quantifiers: bool,
}

const BOUND: [&str; 3] = ["x", "y", "z"];

impl FormulaGen {
    pub fn new(logic: Logic) -> Self {
        Self {
            logic,
            predicates: vec![("P".into(), 1), ("Q".into(), 1)],
            constants: vec!["c".into()],
            free_vars: Vec::new(),
            quantifiers: true,
        }
    }

    fn term(&self, rng: &mut impl Rng, scope: &[String]) -> Term {
        let mut pool: Vec<Term> = scope.iter().map(Term::var).collect();
        pool.extend(self.free_vars.iter().map(Term::var));
        pool.extend(self.constants.iter().map(Term::constant));
        pool.choose(rng)
            .cloned()
            .expect("vocabulary has at least one term")
    }

    fn atom(&self, rng: &mut impl Rng, scope: &[String]) -> Formula {
        let use_existence = rng.gen_bool(0.2);
        let (pred, arity) = if use_existence {
            (EXISTENCE.to_string(), 1)
        } else {
            self.predicates
                .choose(rng)
                .cloned()
                .expect("at least one predicate")
        };
        let args = (0..arity).map(|_| self.term(rng, scope)).collect();
        Formula::atom(pred, args)
    }

    pub fn formula(&self, rng: &mut impl Rng, depth: usize) -> Formula {
        self.gen(rng, depth, &mut Vec::new())
    }

    fn gen(&self, rng: &mut impl Rng, depth: usize, scope: &mut Vec<String>) -> Formula {
        if depth == 0 || rng.gen_bool(0.25) {
            return self.atom(rng, scope);
        }
        let fuzzy = self.logic == Logic::Lbd;
        let mut roll = rng.gen_range(0..10);
        if !self.quantifiers && roll >= 8 {
            roll -= 5;
        }
        match roll {
            0..=2 => {
                let mut ops = vec![
                    UnaryOp::Neg,
                    UnaryOp::BdDelta,
                    UnaryOp::BivalentNeg,
                    UnaryOp::Circ,
                ];
                if fuzzy {
                    ops.push(UnaryOp::BaazDelta);
                }
                let op = *ops.choose(rng).unwrap();
                Formula::unary(op, self.gen(rng, depth - 1, scope))
            }
            3..=7 => {
                let mut ops = vec![BinaryOp::WeakAnd, BinaryOp::WeakOr, BinaryOp::Implies];
                if fuzzy {
                    ops.extend([BinaryOp::StrongAnd, BinaryOp::StrongOr]);
                }
                let op = *ops.choose(rng).unwrap();
                let l = self.gen(rng, depth - 1, scope);
                let r = self.gen(rng, depth - 1, scope);
                Formula::binary(op, l, r)
            }
            _ => {
                let q = *[
                    Quantifier::OuterForall,
                    Quantifier::OuterExists,
                    Quantifier::InnerForall,
                    Quantifier::InnerExists,
                ]
                .choose(rng)
                .unwrap();
                let var = BOUND[scope.len() % BOUND.len()].to_string();
                scope.push(var.clone());
                let body = self.gen(rng, depth - 1, scope);
                scope.pop();
                Formula::quant(q, var, body)
            }
        }
    }
}

/// Random bd4 model with bivalent `E!`.
pub fn random_four_model(rng: &mut impl Rng, sig: &Signature, n: usize) -> Model<bool> {
    let mut m = Model::with_size(n, sig.clone(), FourValue::F).unwrap();
    fill_random(rng, &mut m, &FourValue::all());
    m
}

/// Random model on the grid with denominator `g`, with bivalent `E!`.
pub fn random_grid_model(
    rng: &mut impl Rng,
    sig: &Signature,
    n: usize,
    g: u32,
) -> Model<GridDegree> {
    let values = GridValue::all_on_grid(g);
    let mut m = Model::with_size(n, sig.clone(), values[0]).unwrap();
    fill_random(rng, &mut m, &values);
    m
}

fn fill_random<D: Degree>(rng: &mut impl Rng, m: &mut Model<D>, values: &[Truth<D>]) {
    let n = m.size();
    for c in m.constant_values_mut() {
        *c = rng.gen_range(0..n);
    }
    let (t, f) = bivalent(values);
    for table in m.tables_mut() {
        let existence = table.name() == EXISTENCE;
        for v in table.values_mut() {
            *v = if existence {
                if rng.gen_bool(0.5) {
                    t
                } else {
                    f
                }
            } else {
                *values.choose(rng).unwrap()
            };
        }
    }
}

fn bivalent<D: Degree>(values: &[Truth<D>]) -> (Truth<D>, Truth<D>) {
    let one = values[0].pos.one_like();
    let zero = values[0].pos.zero_like();
    (Truth::new(one, zero), Truth::new(zero, one))
}

/// Every assignment of `vars` to elements of an `n`-element domain.
pub fn environments(vars: &[String], n: usize) -> Vec<Environment> {
    let mut out = vec![Environment::new()];
    for v in vars {
        out = out
            .into_iter()
            .flat_map(|env| (0..n).map(move |e| env.clone().bind(v, e)))
            .collect();
    }
    out
}

pub fn designated_everywhere<D: Degree>(f: &CompiledFormula, m: &Model<D>) -> bool {
    environments(f.free_vars(), m.size())
        .iter()
        .all(|env| f.eval(m, env).unwrap().is_designated())
}

/// Every model of `sig` over `n` elements, built tuple by tuple rather than
/// through the search module's index decoding.
pub fn all_models<D: Degree>(
    sig: &Signature,
    n: usize,
    values: &[Truth<D>],
    free_logic: bool,
) -> Vec<Model<D>> {
    let (t, f) = bivalent(values);
    let mut models = vec![Model::with_size(n, sig.clone(), values[0]).unwrap()];
    let constants: Vec<String> = sig.constants().map(str::to_string).collect();
    for c in &constants {
        models = models
            .into_iter()
            .flat_map(|m| {
                (0..n).map(move |e| {
                    let mut m = m.clone();
                    m.set_constant(c, &format!("e{}", e + 1)).unwrap();
                    m
                })
            })
            .collect();
    }
    for (pred, arity) in sig.predicates() {
        let choices: Vec<Truth<D>> = if free_logic && pred == EXISTENCE {
            vec![t, f]
        } else {
            values.to_vec()
        };
        for tuple in tuples(n, arity) {
            models = models
                .into_iter()
                .flat_map(|m| {
                    let tuple = tuple.clone();
                    choices.clone().into_iter().map(move |v| {
                        let mut m = m.clone();
                        m.set_value(pred, &tuple, v).unwrap();
                        m
                    })
                })
                .collect();
        }
    }
    models
}

fn tuples(n: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |e| {
                    let mut t = t.clone();
                    t.push(e);
                    t
                })
            })
            .collect();
    }
    out
}

/// Brute-force answer to "is there a countermodel with at most `bound`
/// elements?", independent of the search module.
pub fn brute_force_has_countermodel<D: Degree>(
    premises: &[Formula],
    conclusion: &Formula,
    sig: &Signature,
    logic: Logic,
    values: &[Truth<D>],
    bound: usize,
    profile: &TheoryProfile,
) -> bool {
    let premises: Vec<CompiledFormula> = premises
        .iter()
        .map(|p| CompiledFormula::compile(p, sig, logic).unwrap())
        .collect();
    let conclusion = CompiledFormula::compile(conclusion, sig, logic).unwrap();
    let checker = ProfileChecker::new(sig, logic, profile).unwrap();
    (1..=bound).any(|n| {
        all_models(sig, n, values, true).iter().any(|m| {
            checker.admits(m)
                && premises.iter().all(|p| designated_everywhere(p, m))
                && !designated_everywhere(&conclusion, m)
        })
    })
}

/// The environment map of a witness as an [`Environment`].
pub fn witness_env<D: Degree>(m: &Model<D>, names: &BTreeMap<String, String>) -> Environment {
    Environment::from_names(m, names).unwrap()
}
