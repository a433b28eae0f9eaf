//! The `bilogic` command line.
//!
//! Exit codes: 0 success (or entailment holds up to the bound), 1 a
//! countermodel or failing schema was found, 2 usage or parse error, 3 the
//! model file is invalid, 4 the enumeration budget was exceeded.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::search::{entails_with, truth_table_with, EntailmentQuery, SearchError, SearchOptions};
use crate::semantics::{
    eval, AnyModel, Environment, ModelFile, Schema, TheoryProfile, ValidationOptions, ValueRepr,
    Violation,
};
use crate::syntax::{
    collect_signature, desugar, parse, parse_formula_lines, Formula, Mode, ParseError,
    ParseOptions, Signature, EXISTENCE,
};
use crate::values::{Logic, TruthValue};

#[derive(Debug, Parser)]
#[command(
    name = "bilogic",
    version,
    about = "Four-valued and fuzzy bilattice logics with free quantification"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Logic: bd4 or lbd [default: bd4, or the model file's mode]
    #[arg(long, global = true)]
    pub mode: Option<Logic>,
    /// Free-logic mode: E! and the inner quantifiers are available (default)
    #[arg(long, global = true, overrides_with = "no_free")]
    pub free: bool,
    /// Classical quantification only
    #[arg(long = "no-free", global = true, overrides_with = "free")]
    pub no_free: bool,
    /// Grid denominator for lbd truth tables and search [default: 10]
    #[arg(long, global = true)]
    pub grid: Option<u32>,
    /// Largest domain size searched by `entail`
    #[arg(long = "max-size", global = true, default_value_t = 3)]
    pub max_size: usize,
    /// Comma-separated axiom schemas: existence, normality, noncontradiction
    #[arg(long, global = true)]
    pub profile: Option<TheoryProfile>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Parallel search workers for `entail`
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Where `entail` writes a countermodel, as a model file
    #[arg(long = "witness-out", global = true)]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Show the syntax tree of a formula and its primitive expansion
    Parse { formula: String },
    /// Print the truth table of a propositional formula
    Truthtable { formula: String },
    /// Evaluate a formula in a model file
    Eval {
        model: PathBuf,
        formula: String,
        /// Variable assignment `x=element`, repeatable
        #[arg(long = "assign", value_name = "VAR=ELEMENT")]
        assign: Vec<String>,
    },
    /// Check a model file against axiom schemas [default profile: all]
    CheckTheory { model: PathBuf },
    /// Search for a countermodel to an entailment
    Entail {
        /// A premise, repeatable
        #[arg(long = "premise")]
        premises: Vec<String>,
        /// File with one premise per line ('#' in column 1 starts a comment)
        #[arg(long = "premises-file")]
        premises_file: Option<PathBuf>,
        #[arg(long)]
        conclusion: String,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("invalid model:\n{}", list(.0))]
    Validation(Vec<Violation>),
    #[error("{0}")]
    Budget(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn list(vs: &[Violation]) -> String {
    vs.iter()
        .map(|v| format!("  - {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Budget(_) => 4,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Budget { .. } => CliError::Budget(e.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

/// Global flags resolved against their defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Logic,
    pub free_logic: bool,
    pub grid: u32,
    pub max_size: usize,
    pub profile: Option<TheoryProfile>,
    pub output: OutputFormat,
    pub workers: usize,
}

impl RunConfig {
    /// `model_mode` is the default logic when a model file is involved.
    pub fn resolve(g: &GlobalArgs, model_mode: Option<Logic>) -> Result<Self, CliError> {
        let mode = g.mode.or(model_mode).unwrap_or(Logic::Bd4);
        if mode == Logic::Bd4 && g.grid.is_some() {
            return Err(CliError::Usage(
                "--grid is only meaningful with --mode lbd".into(),
            ));
        }
        let grid = g.grid.unwrap_or(10);
        if grid == 0 || g.max_size == 0 || g.workers == 0 {
            return Err(CliError::Usage(
                "--grid, --max-size and --workers must be positive".into(),
            ));
        }
        Ok(Self {
            mode,
            free_logic: !g.no_free,
            grid,
            max_size: g.max_size,
            profile: g.profile.clone(),
            output: g.output,
            workers: g.workers,
        })
    }

    fn syntax_mode(&self) -> Mode {
        Mode::new(self.mode, self.free_logic)
    }

    fn parse(&self, text: &str, sig: Option<&Signature>) -> Result<Formula, CliError> {
        let mut opts = ParseOptions::new(self.syntax_mode());
        if let Some(sig) = sig {
            opts = opts.with_signature(sig);
        }
        parse(text, &opts).map_err(|e| parse_error(text, &e))
    }
}

fn parse_error(text: &str, e: &ParseError) -> CliError {
    CliError::Parse(format!(
        "{e}\n  {text}\n  {}^",
        " ".repeat(e.pos.saturating_sub(1))
    ))
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Results go to stdout, diagnostics to stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, SearchOptions::from_env(), &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command, writing its report to `out`.
pub fn run(cli: &Cli, opts: SearchOptions, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Parse { formula } => cmd_parse(&RunConfig::resolve(g, None)?, formula, out),
        Command::Truthtable { formula } => {
            cmd_truthtable(&RunConfig::resolve(g, None)?, formula, opts, out)
        }
        Command::Eval {
            model,
            formula,
            assign,
        } => cmd_eval(g, model, formula, assign, out),
        Command::CheckTheory { model } => cmd_check_theory(g, model, out),
        Command::Entail {
            premises,
            premises_file,
            conclusion,
        } => {
            let cfg = RunConfig::resolve(g, None)?;
            cmd_entail(
                &cfg,
                premises,
                premises_file.as_deref(),
                conclusion,
                g.witness_out.as_deref(),
                opts,
                out,
            )
        }
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("reports always serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

fn cmd_parse(cfg: &RunConfig, text: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let f = cfg.parse(text, None)?;
    let expanded = desugar(&f, cfg.syntax_mode()).map_err(|e| CliError::Parse(e.to_string()))?;
    let free: Vec<String> = f.free_vars().into_iter().collect();
    match cfg.output {
        OutputFormat::Json => emit_json(
            out,
            &json!({
                "formula": f.to_string(),
                "ast": f.ast_dump(),
                "desugared": expanded.to_string(),
                "desugared_ast": expanded.ast_dump(),
                "free_variables": free,
            }),
        )?,
        OutputFormat::Text => {
            writeln!(out, "formula:        {f}")?;
            writeln!(out, "ast:            {}", f.ast_dump())?;
            writeln!(out, "desugared:      {expanded}")?;
            writeln!(out, "desugared ast:  {}", expanded.ast_dump())?;
            let free = if free.is_empty() {
                "(none)".to_string()
            } else {
                free.join(", ")
            };
            writeln!(out, "free variables: {free}")?;
        }
    }
    Ok(0)
}

fn cmd_truthtable(
    cfg: &RunConfig,
    text: &str,
    opts: SearchOptions,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let f = cfg.parse(text, None)?;
    let table = truth_table_with(&f, cfg.mode, cfg.grid, &opts)?;
    match cfg.output {
        OutputFormat::Json => writeln!(out, "{}", table.to_json())?,
        OutputFormat::Text => write!(out, "{}", table.render_text())?,
    }
    Ok(0)
}

fn load_model(path: &Path) -> Result<ModelFile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    ModelFile::from_json(&text).map_err(|e| {
        CliError::Validation(vec![Violation::Malformed(format!(
            "{}: {e}",
            path.display()
        ))])
    })
}

fn check(file: &ModelFile, opts: &ValidationOptions) -> Result<(), CliError> {
    let vs = file.validate(opts);
    if vs.is_empty() {
        Ok(())
    } else {
        Err(CliError::Validation(vs))
    }
}

fn value_repr(v: TruthValue) -> ValueRepr {
    match v {
        TruthValue::Four(t) => ValueRepr::from_value(t),
        TruthValue::Fuzzy(t) => ValueRepr::from_value(t),
        TruthValue::Grid(t) => ValueRepr::from_value(t),
    }
}

fn cmd_eval(
    g: &GlobalArgs,
    path: &Path,
    text: &str,
    assign: &[String],
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let file = load_model(path)?;
    let cfg = RunConfig::resolve(g, Some(file.mode))?;
    let structural = ValidationOptions {
        logic: Some(cfg.mode),
        ..Default::default()
    };
    check(&file, &structural)?;
    let model_sig = file
        .signature()
        .map_err(|e| CliError::Parse(e.to_string()))?;
    let f = cfg.parse(text, Some(&model_sig))?;
    desugar(&f, cfg.syntax_mode()).map_err(|e| CliError::Parse(e.to_string()))?;
    let needed = collect_signature(&f).map_err(|e| CliError::Parse(e.to_string()))?;
    check(
        &file,
        &ValidationOptions {
            signature: Some(needed),
            ..structural
        },
    )?;

    let mut names: BTreeMap<String, String> = file.environment.clone().unwrap_or_default();
    for a in assign {
        let (var, el) = a
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--assign expects VAR=ELEMENT, got `{a}`")))?;
        names.insert(var.trim().to_string(), el.trim().to_string());
    }
    if let Some(v) = f.free_vars().into_iter().find(|v| !names.contains_key(v)) {
        return Err(CliError::Usage(format!(
            "free variable `{v}` is unassigned; pass --assign {v}=<element>"
        )));
    }
    let usage = |e: crate::semantics::SemanticsError| CliError::Usage(e.to_string());
    let model = file.build().map_err(CliError::Validation)?;
    let value: TruthValue = match &model {
        AnyModel::Four(m) => eval(m, &Environment::from_names(m, &names).map_err(usage)?, &f)
            .map_err(usage)?
            .into(),
        AnyModel::Fuzzy(m) => eval(m, &Environment::from_names(m, &names).map_err(usage)?, &f)
            .map_err(usage)?
            .into(),
    };
    let class = value.classify();
    match cfg.output {
        OutputFormat::Json => emit_json(
            out,
            &json!({
                "formula": f.to_string(),
                "value": value_repr(value),
                "designated": class.designated,
                "normal": class.normal,
                "gappy": class.gappy,
                "glutty": class.glutty,
            }),
        )?,
        OutputFormat::Text => {
            let labels: Vec<&str> = [
                (class.designated, "designated"),
                (!class.designated, "not designated"),
                (class.normal, "normal"),
                (class.gappy, "gappy"),
                (class.glutty, "glutty"),
            ]
            .into_iter()
            .filter_map(|(on, l)| on.then_some(l))
            .collect();
            writeln!(out, "{value} ({})", labels.join(", "))?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct SchemaReport {
    schema: Schema,
    pass: bool,
    failures: Vec<String>,
}

fn cmd_check_theory(g: &GlobalArgs, path: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let file = load_model(path)?;
    let cfg = RunConfig::resolve(g, Some(file.mode))?;
    if !cfg.free_logic {
        return Err(CliError::Usage("check-theory needs free-logic mode".into()));
    }
    let structural = ValidationOptions {
        logic: Some(cfg.mode),
        ..Default::default()
    };
    check(&file, &structural)?;
    if !file.predicates.contains_key(EXISTENCE) {
        return Err(CliError::Usage("the model does not interpret E!".into()));
    }
    let profile = cfg.profile.clone().unwrap_or_else(TheoryProfile::all);
    let violations = file.validate(&ValidationOptions {
        profile: profile.clone(),
        ..structural
    });
    let reports: Vec<SchemaReport> = profile
        .schemas()
        .map(|schema| {
            let failures: Vec<String> = violations
                .iter()
                .filter(|v| match v {
                    Violation::Axiom { schema: s, .. } => *s == schema,
                    Violation::GradedInnerDomain { .. } => schema == Schema::Existence,
                    _ => false,
                })
                .map(|v| match v {
                    Violation::Axiom {
                        predicate,
                        tuple,
                        value,
                        ..
                    } => format!("{predicate}({}) = {value}", tuple.join(",")),
                    other => other.to_string(),
                })
                .collect();
            SchemaReport {
                schema,
                pass: failures.is_empty(),
                failures,
            }
        })
        .collect();
    let pass = reports.iter().all(|r| r.pass);
    match cfg.output {
        OutputFormat::Json => emit_json(out, &json!({ "pass": pass, "schemas": reports }))?,
        OutputFormat::Text => {
            for r in &reports {
                writeln!(
                    out,
                    "{}: {}",
                    r.schema,
                    if r.pass { "pass" } else { "FAIL" }
                )?;
                for f in &r.failures {
                    writeln!(out, "  {f}")?;
                }
            }
        }
    }
    Ok(if pass { 0 } else { 1 })
}

fn cmd_entail(
    cfg: &RunConfig,
    premises: &[String],
    premises_file: Option<&Path>,
    conclusion: &str,
    witness_out: Option<&Path>,
    opts: SearchOptions,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut gamma = premises
        .iter()
        .map(|p| cfg.parse(p, None))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(path) = premises_file {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let parsed = parse_formula_lines(&text, &ParseOptions::new(cfg.syntax_mode())).map_err(
            |(line, e)| CliError::Parse(format!("{}, line {line}: {e}", path.display())),
        )?;
        gamma.extend(parsed);
    }
    let phi = cfg.parse(conclusion, None)?;
    let query = EntailmentQuery::new(gamma, phi)
        .logic(cfg.mode)
        .free_logic(cfg.free_logic)
        .max_size(cfg.max_size)
        .grid(cfg.grid)
        .profile(cfg.profile.clone().unwrap_or_else(TheoryProfile::empty));
    let verdict = entails_with(&query, &opts.workers(cfg.workers))?;
    if let (Some(path), Some(w)) = (witness_out, &verdict.witness) {
        fs::write(path, w.to_model_file().to_json() + "\n")?;
    }
    match cfg.output {
        OutputFormat::Json => writeln!(out, "{}", verdict.to_json())?,
        OutputFormat::Text => {
            writeln!(out, "{}", verdict.summary())?;
            if let Some(w) = &verdict.witness {
                write!(out, "{}", w.to_model_file())?;
            }
        }
    }
    Ok(if verdict.holds() { 0 } else { 1 })
}
