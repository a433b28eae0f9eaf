//! Parsing, printing and expanding formulas.
//!
//! ```text
//! cargo run --example parsing
//! ```

use bilogic::syntax::{collect_signature, desugar, parse, pretty_print, Mode, ParseOptions};
use bilogic::Logic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mode = Mode::new(Logic::Lbd, true);
    let opts = ParseOptions::new(mode);
    for text in [
        "forall x. (P(x) => exists y. R(x, y))",
        "%p || ~#q",
        "Sigma x. ~E!(x)",
        "@(P(c) && Q(c))",
    ] {
        let f = parse(text, &opts)?;
        let sig = collect_signature(&f)?;
        println!("input     {text}");
        println!("printed   {}", pretty_print(&f));
        println!("expanded  {}", desugar(&f, mode)?);
        println!(
            "symbols   {:?} / {:?}",
            sig.predicates().collect::<Vec<_>>(),
            sig.constants().collect::<Vec<_>>()
        );
        println!();
    }

    // Errors carry a character position.
    if let Err(e) = parse("P(x) & ", &opts) {
        println!("error: {e}");
    }
    Ok(())
}
