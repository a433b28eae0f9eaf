use std::fmt::Write as _;

use serde::Serialize;

use super::{SearchError, SearchOptions};
use crate::semantics::{CompiledFormula, Model, ValueRepr};
use crate::syntax::{Formula, Signature};
use crate::values::{Degree, FourValue, GridValue, Logic, Truth, TruthValue};

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub inputs: Vec<TruthValue>,
    pub output: TruthValue,
}

/// One row per assignment of values to the atoms. The first atom varies
/// slowest, so two-atom tables read row-major like a matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TruthTable {
    pub formula: Formula,
    pub atoms: Vec<String>,
    pub logic: Logic,
    pub grid: Option<u32>,
    pub rows: Vec<TableRow>,
}

fn repr(v: TruthValue) -> ValueRepr {
    match v {
        TruthValue::Four(t) => ValueRepr::from_value(t),
        TruthValue::Fuzzy(t) => ValueRepr::from_value(t),
        TruthValue::Grid(t) => ValueRepr::from_value(t),
    }
}

#[derive(Serialize)]
struct JsonRow {
    inputs: Vec<ValueRepr>,
    output: ValueRepr,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    formula: String,
    mode: Logic,
    grid: Option<u32>,
    atoms: &'a [String],
    rows: Vec<JsonRow>,
}

impl TruthTable {
    /// The output for the given inputs, if that row exists.
    pub fn lookup(&self, inputs: &[TruthValue]) -> Option<TruthValue> {
        self.rows
            .iter()
            .find(|r| r.inputs == inputs)
            .map(|r| r.output)
    }

    pub fn to_json(&self) -> String {
        let table = JsonTable {
            formula: self.formula.to_string(),
            mode: self.logic,
            grid: self.grid,
            atoms: &self.atoms,
            rows: self
                .rows
                .iter()
                .map(|r| JsonRow {
                    inputs: r.inputs.iter().map(|&v| repr(v)).collect(),
                    output: repr(r.output),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&table).expect("tables always serialize")
    }

    /// Plain-text rendering. Four-valued tables with two atoms are laid out
    /// as a matrix (first atom down, second across); everything else is a
    /// list of rows.
    pub fn render_text(&self) -> String {
        let head = self.formula.to_string();
        let mut out = String::new();
        if self.atoms.len() == 2 && self.grid.is_none() {
            let width = head.len().max(self.atoms[0].len());
            let _ = write!(out, "{head:>width$} |");
            for v in FourValue::all() {
                let _ = write!(out, " {v}");
            }
            let _ = writeln!(out, "\n{}+{}", "-".repeat(width + 1), "-".repeat(8));
            for chunk in self.rows.chunks(4) {
                let _ = write!(out, "{:>width$} |", chunk[0].inputs[0].to_string());
                for r in chunk {
                    let _ = write!(out, " {}", r.output);
                }
                out.push('\n');
            }
            return out;
        }
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                r.inputs
                    .iter()
                    .chain([&r.output])
                    .map(|v| v.to_string())
                    .collect()
            })
            .collect();
        let header: Vec<&str> = self
            .atoms
            .iter()
            .map(String::as_str)
            .chain([head.as_str()])
            .collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|i| {
                cells
                    .iter()
                    .map(|c| c[i].len())
                    .chain([header[i].len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let line = |cols: Vec<&str>| {
            let k = cols.len();
            let mut s = String::new();
            for (i, c) in cols.into_iter().enumerate() {
                if i + 1 == k {
                    s.push_str("| ");
                    s.push_str(c);
                } else {
                    let _ = write!(s, "{c:>w$} ", w = widths[i]);
                }
            }
            s
        };
        out.push_str(&line(header));
        out.push('\n');
        let _ = writeln!(
            out,
            "{}+{}",
            "-".repeat(widths[..widths.len() - 1].iter().map(|w| w + 1).sum()),
            "-".repeat(widths[widths.len() - 1] + 1)
        );
        for c in &cells {
            out.push_str(&line(c.iter().map(String::as_str).collect()));
            out.push('\n');
        }
        out
    }
}

/// Truth table of a quantifier-free formula over zero-ary atoms. In `bd4`
/// the atoms range over `T, B, N, F`; in `lbd` over the `(g+1)²` grid pairs.
pub fn truth_table(f: &Formula, logic: Logic, grid: u32) -> Result<TruthTable, SearchError> {
    truth_table_with(f, logic, grid, &SearchOptions::default())
}

pub fn truth_table_with(
    f: &Formula,
    logic: Logic,
    grid: u32,
    opts: &SearchOptions,
) -> Result<TruthTable, SearchError> {
    if f.has_quantifier() {
        return Err(SearchError::Quantified);
    }
    let mut bad = None;
    f.visit_atoms(&mut |pred, args| {
        if !args.is_empty() && bad.is_none() {
            bad = Some(pred.to_string());
        }
    });
    if let Some(p) = bad {
        return Err(SearchError::NotPropositional(p));
    }
    let atoms = f.propositional_atoms();
    let mut sig = Signature::new();
    for a in &atoms {
        sig.add_predicate(a, 0)?;
    }
    let compiled = CompiledFormula::compile(f, &sig, logic)?;
    let rows = match logic {
        Logic::Bd4 => rows(&compiled, &sig, &atoms, &FourValue::all(), opts.budget)?,
        Logic::Lbd => {
            if grid == 0 {
                return Err(SearchError::InvalidBound("grid denominator"));
            }
            rows(
                &compiled,
                &sig,
                &atoms,
                &GridValue::all_on_grid(grid),
                opts.budget,
            )?
        }
    };
    Ok(TruthTable {
        formula: f.clone(),
        atoms,
        logic,
        grid: (logic == Logic::Lbd).then_some(grid),
        rows,
    })
}

fn rows<D: Degree>(
    compiled: &CompiledFormula,
    sig: &Signature,
    atoms: &[String],
    values: &[Truth<D>],
    budget: u64,
) -> Result<Vec<TableRow>, SearchError>
where
    TruthValue: From<Truth<D>>,
{
    let required = (values.len() as u128).checked_pow(atoms.len() as u32);
    let count = match required {
        Some(c) if c <= budget as u128 => c as usize,
        _ => return Err(SearchError::Budget { required, budget }),
    };
    let mut m = Model::with_size(1, sig.clone(), values[0])?;
    // Tables are stored by predicate name, atoms by first occurrence.
    let table_of: Vec<usize> = atoms
        .iter()
        .map(|a| m.predicate_index(a).expect("atoms are in the signature"))
        .collect();
    let k = atoms.len();
    let mut out = Vec::with_capacity(count);
    for index in 0..count {
        let mut rest = index;
        let mut inputs = vec![TruthValue::F; k];
        for slot in (0..k).rev() {
            let v = values[rest % values.len()];
            rest /= values.len();
            m.tables_mut()[table_of[slot]].values_mut()[0] = v;
            inputs[slot] = v.into();
        }
        out.push(TableRow {
            inputs,
            output: compiled.eval_slots(&m, &[]).into(),
        });
    }
    Ok(out)
}

/// Grid pairs at which a one-atom formula is designated, in grid order.
pub fn designated_set(f: &Formula, grid: u32) -> Result<Vec<GridValue>, SearchError> {
    let atoms = f.propositional_atoms();
    if atoms.len() != 1 || f.has_quantifier() {
        return Err(SearchError::AtomCount(atoms.len()));
    }
    let table = truth_table(f, Logic::Lbd, grid)?;
    Ok(table
        .rows
        .iter()
        .filter(|r| r.output.is_designated())
        .filter_map(|r| match r.inputs[0] {
            TruthValue::Grid(g) => Some(g),
            _ => None,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse, Mode, ParseOptions};
    use crate::values::Corner;

    fn f(s: &str, logic: Logic) -> Formula {
        parse(s, &ParseOptions::new(Mode::new(logic, false))).unwrap()
    }

    fn outputs(t: &TruthTable) -> String {
        t.rows.iter().map(|r| r.output.to_string()).collect()
    }

    #[test]
    fn conjunction_table() {
        let t = truth_table(&f("p & q", Logic::Bd4), Logic::Bd4, 1).unwrap();
        assert_eq!(t.rows.len(), 16);
        assert_eq!(outputs(&t), "TBNFBBFFNFNFFFFF");
        assert!(t.render_text().contains("p & q | T B N F"));
    }

    #[test]
    fn atoms_keep_first_occurrence_order() {
        let t = truth_table(&f("q => p", Logic::Bd4), Logic::Bd4, 1).unwrap();
        assert_eq!(t.atoms, ["q", "p"]);
        assert_eq!(
            t.lookup(&[TruthValue::T, TruthValue::N]),
            Some(TruthValue::N)
        );
    }

    #[test]
    fn unary_tables() {
        assert_eq!(
            outputs(&truth_table(&f("#p", Logic::Bd4), Logic::Bd4, 1).unwrap()),
            "TTFF"
        );
        assert_eq!(
            outputs(&truth_table(&f("%p", Logic::Bd4), Logic::Bd4, 1).unwrap()),
            "TFFT"
        );
        assert_eq!(
            truth_table(&f("p", Logic::Lbd), Logic::Lbd, 2)
                .unwrap()
                .rows
                .len(),
            9
        );
    }

    #[test]
    fn rejects_quantifiers_and_arguments() {
        let m = ParseOptions::new(Mode::default());
        assert_eq!(
            truth_table(&parse("Pi x. P(x)", &m).unwrap(), Logic::Bd4, 1),
            Err(SearchError::Quantified)
        );
        assert_eq!(
            truth_table(&parse("P(c)", &m).unwrap(), Logic::Bd4, 1),
            Err(SearchError::NotPropositional("P".into()))
        );
    }

    #[test]
    fn reduction_regions() {
        let corners = designated_set(&f("(%p & (p | ~p)) | ~%p", Logic::Lbd), 20).unwrap();
        let mut got: Vec<_> = corners.iter().filter_map(|v| v.corner()).collect();
        got.sort_by_key(|c| c.glyph());
        assert_eq!(corners.len(), 4);
        assert_eq!(got, [Corner::B, Corner::F, Corner::N, Corner::T]);

        let partial = designated_set(&f("%p | (~#p & ~#~p)", Logic::Lbd), 20).unwrap();
        assert_eq!(partial.len(), 22);
        assert!(partial
            .iter()
            .all(|v| v.is_normal() || v.corner() == Some(Corner::N)));

        let paraconsistent = designated_set(&f("%p | ~%p", Logic::Lbd), 20).unwrap();
        assert_eq!(paraconsistent.len(), 23);

        assert_eq!(
            designated_set(&f("p & q", Logic::Lbd), 2),
            Err(SearchError::AtomCount(2))
        );
    }
}
