use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use serde::Serialize;

use super::space::ModelSpace;
use super::{SearchError, SearchOptions};
use crate::semantics::{CompiledFormula, Model, ModelFile, ProfileChecker, TheoryProfile};
use crate::syntax::{collect_signature, desugar, Formula, Mode, Signature};
use crate::values::{Degree, Logic};

/// Models handed to a worker at a time.
const BLOCK: u64 = 256;

/// Does `Γ ⊨ φ` hold in all models with at most `max_size` elements?
#[derive(Debug, Clone, PartialEq)]
pub struct EntailmentQuery {
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
    pub logic: Logic,
    pub free_logic: bool,
    pub max_size: usize,
    /// Grid denominator; only used in `lbd`.
    pub grid: u32,
    /// Axiom schemas every model must satisfy.
    pub profile: TheoryProfile,
    /// Symbols to interpret beyond those occurring in the formulas.
    pub extra_symbols: Signature,
}

impl EntailmentQuery {
    /// A `bd4` free-logic query with bound 3 and no extra axioms.
    pub fn new(premises: Vec<Formula>, conclusion: Formula) -> Self {
        Self {
            premises,
            conclusion,
            logic: Logic::Bd4,
            free_logic: true,
            max_size: 3,
            grid: 10,
            profile: TheoryProfile::empty(),
            extra_symbols: Signature::new(),
        }
    }

    pub fn logic(mut self, logic: Logic) -> Self {
        self.logic = logic;
        self
    }

    pub fn free_logic(mut self, on: bool) -> Self {
        self.free_logic = on;
        self
    }

    pub fn max_size(mut self, n: usize) -> Self {
        self.max_size = n;
        self
    }

    pub fn grid(mut self, g: u32) -> Self {
        self.grid = g;
        self
    }

    pub fn profile(mut self, profile: TheoryProfile) -> Self {
        self.profile = profile;
        self
    }

    pub fn extra_symbols(mut self, sig: Signature) -> Self {
        self.extra_symbols = sig;
        self
    }

    /// The signature the enumerated models interpret.
    pub fn signature(&self) -> Result<Signature, SearchError> {
        let mut sig = self.extra_symbols.clone();
        for f in self.premises.iter().chain([&self.conclusion]) {
            if !self.free_logic {
                desugar(f, Mode::new(self.logic, false))?;
            }
            sig.merge(&collect_signature(f)?)?;
        }
        if self.free_logic {
            sig.add_existence()?;
        }
        Ok(sig)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    HoldsUpToBound,
    Countermodel,
}

/// A countermodel together with the assignment falsifying the conclusion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub model: ModelFile,
    pub environment: BTreeMap<String, String>,
}

impl Witness {
    /// The model file with the environment embedded, as written by
    /// `entail --witness-out`.
    pub fn to_model_file(&self) -> ModelFile {
        ModelFile {
            environment: Some(self.environment.clone()),
            ..self.model.clone()
        }
    }

    pub fn size(&self) -> usize {
        self.model.domain.len()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub bound: usize,
    pub grid: Option<u32>,
    pub witness: Option<Witness>,
    /// Models enumerated in canonical order up to and including the witness
    /// (all of them when none is found). Independent of the worker count.
    pub models_examined: u64,
    pub elapsed_ms: u64,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::HoldsUpToBound
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdicts always serialize")
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        match (&self.witness, self.grid) {
            (Some(w), _) => format!(
                "countermodel with {} element(s) ({} models examined)",
                w.size(),
                self.models_examined
            ),
            (None, None) => format!(
                "holds up to bound {}: no countermodel with at most {} element(s) ({} models examined)",
                self.bound, self.bound, self.models_examined
            ),
            (None, Some(g)) => format!(
                "holds up to bound {}: no countermodel on grid {g} with at most {} element(s) ({} models examined)",
                self.bound, self.bound, self.models_examined
            ),
        }
    }
}

struct Prepared {
    premises: Vec<CompiledFormula>,
    conclusion: CompiledFormula,
    checker: ProfileChecker,
}

impl Prepared {
    /// The first environment falsifying the conclusion, if `m` is admitted
    /// and satisfies every premise under every environment.
    fn countermodel_env<D: Degree>(
        &self,
        m: &Model<D>,
        buf: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if !self.checker.admits(m) {
            return None;
        }
        for p in &self.premises {
            if first_undesignated(p, m, buf).is_some() {
                return None;
            }
        }
        first_undesignated(&self.conclusion, m, buf)
    }
}

// Assignments run in lexicographic order, last variable fastest.
fn first_undesignated<D: Degree>(
    f: &CompiledFormula,
    m: &Model<D>,
    buf: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = f.free_vars().len();
    let n = m.size();
    buf.clear();
    buf.resize(k, 0);
    loop {
        if !f.eval_slots(m, buf).is_designated() {
            return Some(buf.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            buf[i] += 1;
            if buf[i] < n {
                break;
            }
            buf[i] = 0;
        }
    }
}

/// Index of the canonically first countermodel in `space`, with its
/// environment.
fn scan<D: Degree>(
    p: &Prepared,
    space: &ModelSpace<D>,
    count: u64,
    workers: usize,
) -> Option<(u64, Vec<usize>)> {
    if workers <= 1 || count <= BLOCK {
        let mut m = space.blank();
        let mut buf = Vec::new();
        return (0..count).find_map(|i| {
            space.fill(i, &mut m);
            p.countermodel_env(&m, &mut buf).map(|env| (i, env))
        });
    }
    let next = AtomicU64::new(0);
    let best = AtomicU64::new(u64::MAX);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| {
                let mut m = space.blank();
                let mut buf = Vec::new();
                loop {
                    let start = next.fetch_add(BLOCK, Ordering::Relaxed);
                    if start >= count || start >= best.load(Ordering::Relaxed) {
                        break;
                    }
                    for i in start..(start + BLOCK).min(count) {
                        if i >= best.load(Ordering::Relaxed) {
                            break;
                        }
                        space.fill(i, &mut m);
                        if p.countermodel_env(&m, &mut buf).is_some() {
                            best.fetch_min(i, Ordering::Relaxed);
                            break;
                        }
                    }
                }
            });
        }
    });
    let i = best.into_inner();
    (i != u64::MAX).then(|| {
        let env = p
            .countermodel_env(&space.model_at(i), &mut Vec::new())
            .expect("the winning index is a countermodel");
        (i, env)
    })
}

fn run<D: Degree>(
    p: &Prepared,
    spaces: Vec<ModelSpace<D>>,
    opts: &SearchOptions,
) -> Result<(Option<Witness>, u64), SearchError> {
    let mut total: u128 = 0;
    let mut counts = Vec::with_capacity(spaces.len());
    for s in &spaces {
        total = match s.count() {
            Some(c) => total.saturating_add(c),
            None => u128::MAX,
        };
        if total > opts.budget as u128 {
            let required = spaces
                .iter()
                .try_fold(0u128, |acc, s| s.count().and_then(|c| acc.checked_add(c)));
            return Err(SearchError::Budget {
                required,
                budget: opts.budget,
            });
        }
        counts.push(s.count().expect("checked against the budget") as u64);
    }
    let mut examined = 0;
    for (space, count) in spaces.iter().zip(counts) {
        if let Some((i, slots)) = scan(p, space, count, opts.workers) {
            let m = space.model_at(i);
            let env = p.conclusion.environment_from_slots(&slots);
            let witness = Witness {
                model: ModelFile::from_model(&m, None),
                environment: env.to_names(&m),
            };
            return Ok((Some(witness), examined + i + 1));
        }
        examined += count;
    }
    Ok((None, examined))
}

/// [`entails_with`] using one worker and the default budget.
pub fn entails(q: &EntailmentQuery) -> Result<Verdict, SearchError> {
    entails_with(q, &SearchOptions::default())
}

/// Scans models of sizes `1..=max_size` in canonical order and returns the
/// first model (and environment) in which every premise is designated under
/// all environments while the conclusion is not. The result does not depend
/// on `opts.workers`.
pub fn entails_with(q: &EntailmentQuery, opts: &SearchOptions) -> Result<Verdict, SearchError> {
    let started = Instant::now();
    if q.max_size == 0 {
        return Err(SearchError::InvalidBound("maximum domain size"));
    }
    if q.logic == Logic::Lbd && q.grid == 0 {
        return Err(SearchError::InvalidBound("grid denominator"));
    }
    let sig = q.signature()?;
    let prepared = Prepared {
        premises: q
            .premises
            .iter()
            .map(|f| CompiledFormula::compile(f, &sig, q.logic))
            .collect::<Result<_, _>>()?,
        conclusion: CompiledFormula::compile(&q.conclusion, &sig, q.logic)?,
        checker: ProfileChecker::new(&sig, q.logic, &q.profile)?,
    };
    let sizes = 1..=q.max_size;
    let (witness, models_examined) = match q.logic {
        Logic::Bd4 => {
            let spaces = sizes
                .map(|n| ModelSpace::four_valued(&sig, n, q.free_logic))
                .collect::<Result<_, _>>()?;
            run(&prepared, spaces, opts)?
        }
        Logic::Lbd => {
            let spaces = sizes
                .map(|n| ModelSpace::on_grid(&sig, n, q.grid, q.free_logic))
                .collect::<Result<_, _>>()?;
            run(&prepared, spaces, opts)?
        }
    };
    Ok(Verdict {
        outcome: if witness.is_some() {
            Outcome::Countermodel
        } else {
            Outcome::HoldsUpToBound
        },
        bound: q.max_size,
        grid: (q.logic == Logic::Lbd).then_some(q.grid),
        witness,
        models_examined,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Is `f` designated in every model up to the bound? Free-logic mode.
pub fn tautology_check(
    f: &Formula,
    logic: Logic,
    max_size: usize,
    grid: u32,
) -> Result<Verdict, SearchError> {
    entails(
        &EntailmentQuery::new(Vec::new(), f.clone())
            .logic(logic)
            .max_size(max_size)
            .grid(grid),
    )
}
