//! Inner quantifiers range over the elements that exist; outer ones range
//! over the whole domain.
//!
//! ```text
//! cargo run --example free_quantifiers
//! ```

use bilogic::semantics::{eval, Environment, FourModel};
use bilogic::syntax::{parse, Mode, ParseOptions, Signature};
use bilogic::values::FourValue;
use bilogic::Logic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new()
        .with_predicate("P", 1)?
        .with_predicate("E!", 1)?
        .with_constant("pegasus")?;
    let domain = vec!["zeus".to_string(), "pegasus".to_string()];
    let mut m = FourModel::new(domain, sig.clone(), FourValue::F)?;
    m.set_constant("pegasus", "pegasus")?;
    m.set("E!", &["zeus"], FourValue::T)?;
    m.set("P", &["zeus"], FourValue::T)?;
    m.set("P", &["pegasus"], FourValue::N)?;

    let opts = ParseOptions::new(Mode::new(Logic::Bd4, true)).with_signature(&sig);
    for text in [
        "forall x. P(x)",
        "Pi x. P(x)",
        "P(pegasus)",
        "exists x. ~E!(x)",
        "Sigma x. ~E!(x)",
        "forall x. P(x) => P(pegasus)",
        "E!(pegasus) & forall x. P(x) => P(pegasus)",
    ] {
        let v = eval(&m, &Environment::new(), &parse(text, &opts)?)?;
        println!("{text:<45} {v}  designated: {}", v.is_designated());
    }
    Ok(())
}
