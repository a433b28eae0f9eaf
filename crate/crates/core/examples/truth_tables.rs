//! Truth tables of the four-valued connectives, and the same connectives
//! read on the unit grid of the fuzzy logic.
//!
//! ```text
//! cargo run --example truth_tables
//! ```

use bilogic::search::truth_table;
use bilogic::syntax::{parse, Mode, ParseOptions};
use bilogic::Logic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bd4 = ParseOptions::new(Mode::new(Logic::Bd4, true));
    for text in ["p & q", "p | q", "p => q", "~p", "#p", "!p", "%p"] {
        let f = parse(text, &bd4)?;
        println!("{}", truth_table(&f, Logic::Bd4, 1)?.render_text());
    }

    // At the corners the strong connectives collapse onto the weak ones.
    let lbd = ParseOptions::new(Mode::new(Logic::Lbd, true));
    let strong = truth_table(&parse("p && q", &lbd)?, Logic::Lbd, 1)?;
    println!("{}", strong.render_text());
    Ok(())
}
