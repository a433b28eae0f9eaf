//! Which grid values make a formula designated. Prints each region as a
//! picture of the unit square, positive degree across and negative degree
//! down.
//!
//! ```text
//! cargo run --example fuzzy_regions
//! ```

use bilogic::search::designated_set;
use bilogic::syntax::{parse, Mode, ParseOptions};
use bilogic::values::GridValue;
use bilogic::Logic;

const G: u32 = 20;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = ParseOptions::new(Mode::new(Logic::Lbd, true));
    for text in [
        "(%p & (p | ~p)) | ~%p",
        "%p | (~#p & ~#~p)",
        "%p | ~%p",
        "p => p",
        "p || ~p",
    ] {
        let region = designated_set(&parse(text, &opts)?, G)?;
        println!(
            "{text}: {} of {} grid values",
            region.len(),
            (G + 1) * (G + 1)
        );
        for neg in 0..=G {
            let row: String = (0..=G)
                .map(|pos| {
                    let v = GridValue::grid(pos, neg, G).expect("on the grid");
                    if region.contains(&v) {
                        '#'
                    } else {
                        '.'
                    }
                })
                .collect();
            println!("  {row}");
        }
    }
    Ok(())
}
