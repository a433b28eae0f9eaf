//! Bounded countermodel search, in both logics and with several workers.
//!
//! ```text
//! cargo run --release --example countermodel_search
//! ```

use bilogic::search::{entails_with, EntailmentQuery, SearchOptions};
use bilogic::semantics::{Schema, TheoryProfile};
use bilogic::syntax::{parse, Formula, Mode, ParseOptions};
use bilogic::Logic;

fn formula(text: &str, logic: Logic) -> Formula {
    parse(text, &ParseOptions::new(Mode::new(logic, true))).expect("example formulas parse")
}

fn show(
    title: &str,
    q: &EntailmentQuery,
    workers: usize,
) -> Result<(), Box<dyn std::error::Error>> {
    let verdict = entails_with(q, &SearchOptions::from_env().workers(workers))?;
    println!("{title}\n  {}", verdict.summary().replace('\n', "\n  "));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bd4 = |ps: &[&str], c: &str| {
        EntailmentQuery::new(
            ps.iter().map(|p| formula(p, Logic::Bd4)).collect(),
            formula(c, Logic::Bd4),
        )
    };
    show(
        "universal instantiation needs existence",
        &bd4(&["forall x. P(x)"], "P(c)"),
        1,
    )?;
    show(
        "and holds once c exists",
        &bd4(&["E!(c)", "forall x. P(x)"], "P(c)"),
        4,
    )?;
    show("explosion fails", &bd4(&["P(c) & ~P(c)"], "Q(c)"), 1)?;
    // The schema only constrains existing elements, so c must exist too.
    let consistent = TheoryProfile::empty().with(Schema::Noncontradiction);
    show(
        "noncontradiction alone does not restore explosion",
        &bd4(&["P(c) & ~P(c)"], "Q(c)").profile(consistent.clone()),
        1,
    )?;
    show(
        "it does for existing constants",
        &bd4(&["E!(c)", "P(c) & ~P(c)"], "Q(c)").profile(consistent),
        1,
    )?;

    let lbd = |ps: &[&str], c: &str| {
        EntailmentQuery::new(
            ps.iter().map(|p| formula(p, Logic::Lbd)).collect(),
            formula(c, Logic::Lbd),
        )
        .logic(Logic::Lbd)
        .max_size(1)
        .grid(4)
    };
    show(
        "strong disjunction does not give weak disjunction",
        &lbd(&["P(c) || Q(c)"], "P(c) | Q(c)"),
        4,
    )?;
    show(
        "weak disjunction gives strong disjunction",
        &lbd(&["P(c) | Q(c)"], "P(c) || Q(c)"),
        4,
    )?;
    Ok(())
}
