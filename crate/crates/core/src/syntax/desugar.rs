use super::ast::{BinaryOp, Formula, Quantifier, Term, UnaryOp};
use super::{Mode, SyntaxError};
use crate::values::Logic;

/// Expands every sugar node into primitive connectives and outer quantifiers.
///
/// Derived connectives use `∨`/`∧` in the four-valued logic and `⊕`/`⊗` in
/// the fuzzy one. Inner quantifiers are relativized to `E!`:
///
/// * `forall x. φ` becomes `Pi x. (E!(x) => φ)`, with `=>` expanded as above;
/// * `exists x. φ` becomes `Sigma x. (E!(x) & φ)` in both logics.
pub fn desugar(f: &Formula, mode: Mode) -> Result<Formula, SyntaxError> {
    let (or, and) = match mode.logic {
        Logic::Bd4 => (BinaryOp::WeakOr, BinaryOp::WeakAnd),
        Logic::Lbd => (BinaryOp::StrongOr, BinaryOp::StrongAnd),
    };
    let expand_implies = |l: Formula, r: Formula| Formula::binary(or, Formula::neg(l), r);
    Ok(match f {
        Formula::Atom { .. } => f.clone(),
        Formula::Unary(op, inner) => {
            let inner = desugar(inner, mode)?;
            match op {
                UnaryOp::BivalentNeg => Formula::neg(Formula::bd_delta(inner)),
                UnaryOp::Circ => {
                    let d = Formula::bd_delta(inner.clone());
                    let dn = Formula::bd_delta(Formula::neg(inner));
                    Formula::binary(
                        and,
                        Formula::binary(or, d.clone(), dn.clone()),
                        Formula::binary(or, Formula::neg(d), Formula::neg(dn)),
                    )
                }
                _ => Formula::unary(*op, inner),
            }
        }
        Formula::Binary(op, l, r) => {
            let l = desugar(l, mode)?;
            let r = desugar(r, mode)?;
            match op {
                BinaryOp::Implies => expand_implies(l, r),
                _ => Formula::binary(*op, l, r),
            }
        }
        Formula::Quant(q, var, body) => {
            let body = desugar(body, mode)?;
            let exists = || Formula::exists_pred(Term::Var(var.clone()));
            match q {
                Quantifier::InnerForall | Quantifier::InnerExists if !mode.free_logic => {
                    return Err(SyntaxError::InnerWithoutExistence(q.keyword()));
                }
                Quantifier::InnerForall => Formula::quant(
                    Quantifier::OuterForall,
                    var.clone(),
                    expand_implies(exists(), body),
                ),
                Quantifier::InnerExists => Formula::quant(
                    Quantifier::OuterExists,
                    var.clone(),
                    Formula::binary(BinaryOp::WeakAnd, exists(), body),
                ),
                _ => Formula::quant(*q, var.clone(), body),
            }
        }
    })
}
