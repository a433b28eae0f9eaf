//! Loading a model file, evaluating formulas in it and checking it against
//! the axiom schemas.
//!
//! ```text
//! cargo run --example model_files
//! ```

use bilogic::semantics::{eval, schema_failures, AnyModel, Environment, ModelFile, Schema};
use bilogic::syntax::{parse, Mode, ParseOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/library.json"
    ))?;
    let file = ModelFile::from_json(&text)?;
    print!("{file}");

    let model = match file.build() {
        Ok(AnyModel::Four(m)) => m,
        Ok(AnyModel::Fuzzy(_)) => unreachable!("the sample is four-valued"),
        Err(violations) => {
            for v in violations {
                eprintln!("invalid: {v}");
            }
            std::process::exit(3);
        }
    };

    let sig = file.signature()?;
    let opts = ParseOptions::new(Mode::new(model.logic(), true)).with_signature(&sig);
    for formula in [
        "Mad(h)",
        "exists x. Loves(x, h)",
        "forall x. E!(x)",
        "Pi x. E!(x)",
        "Loves(h, y)",
    ] {
        let v = eval(&model, &Environment::new(), &parse(formula, &opts)?)?;
        println!("{formula:<24} {v}");
    }

    for schema in Schema::ALL {
        let failures = schema_failures(&model, schema)?;
        if failures.is_empty() {
            println!("{schema}: holds");
        }
        for f in failures {
            println!(
                "{schema}: fails at {} {:?}",
                f.predicate,
                model.element_names(&f.tuple)
            );
        }
    }

    // Models can be written back out.
    println!("{}", ModelFile::from_model(&model, None).to_json());
    Ok(())
}
