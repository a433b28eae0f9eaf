use std::fmt::{self, Write};

use super::ast::{Formula, Term};

const UNARY_PREC: u8 = 6;

/// Renders `f` in the ASCII concrete syntax with minimal parentheses.
pub fn pretty_print(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, 0, true).expect("writing to a String cannot fail");
    out
}

// `tail` is true when nothing follows `f` in the enclosing text, so a
// quantifier (whose scope extends maximally right) can be printed bare.
fn write_formula(out: &mut String, f: &Formula, ctx: u8, tail: bool) -> fmt::Result {
    match f {
        Formula::Atom { pred, args } => {
            out.push_str(pred);
            if !args.is_empty() {
                out.push('(');
                for (i, t) in args.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write_term(out, t)?;
                }
                out.push(')');
            }
            Ok(())
        }
        Formula::Unary(op, inner) => {
            out.push_str(op.symbol());
            write_formula(out, inner, UNARY_PREC, tail)
        }
        Formula::Binary(op, l, r) => {
            let prec = op.precedence();
            let parens = prec < ctx;
            let tail = tail || parens;
            if parens {
                out.push('(');
            }
            let (lctx, rctx) = if op.is_right_assoc() {
                (prec + 1, prec)
            } else {
                (prec, prec + 1)
            };
            write_formula(out, l, lctx, false)?;
            write!(out, " {} ", op.symbol())?;
            write_formula(out, r, rctx, tail)?;
            if parens {
                out.push(')');
            }
            Ok(())
        }
        Formula::Quant(q, v, body) => {
            if !tail {
                out.push('(');
            }
            write!(out, "{} {v}. ", q.keyword())?;
            write_formula(out, body, 0, true)?;
            if !tail {
                out.push(')');
            }
            Ok(())
        }
    }
}

fn write_term(out: &mut String, t: &Term) -> fmt::Result {
    out.write_str(t.name())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty_print(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::ast::{BinaryOp, Quantifier};

    fn a(n: &str) -> Formula {
        Formula::prop(n)
    }

    #[test]
    fn minimal_parentheses() {
        let f = Formula::and(a("A"), Formula::or(a("B"), a("C")));
        assert_eq!(pretty_print(&f), "A & (B | C)");
        let g = Formula::neg(Formula::neg(a("A")));
        assert_eq!(pretty_print(&g), "~~A");
        let h = Formula::quant(
            Quantifier::InnerForall,
            "x",
            Formula::implies(
                Formula::atom("P", vec![Term::var("x")]),
                Formula::atom("Q", vec![Term::var("x")]),
            ),
        );
        assert_eq!(pretty_print(&h), "forall x. P(x) => Q(x)");
    }

    #[test]
    fn associativity() {
        let left = Formula::implies(Formula::implies(a("A"), a("B")), a("C"));
        assert_eq!(pretty_print(&left), "(A => B) => C");
        let right = Formula::implies(a("A"), Formula::implies(a("B"), a("C")));
        assert_eq!(pretty_print(&right), "A => B => C");
        let and_r = Formula::and(a("A"), Formula::and(a("B"), a("C")));
        assert_eq!(pretty_print(&and_r), "A & (B & C)");
        let strong = Formula::binary(
            BinaryOp::WeakAnd,
            Formula::binary(BinaryOp::StrongAnd, a("A"), a("B")),
            a("C"),
        );
        assert_eq!(pretty_print(&strong), "A && B & C");
    }

    #[test]
    fn quantifiers_in_operand_position() {
        let q = Formula::quant(
            Quantifier::OuterExists,
            "x",
            Formula::atom("P", vec![Term::var("x")]),
        );
        let f = Formula::and(q.clone(), a("C"));
        assert_eq!(pretty_print(&f), "(Sigma x. P(x)) & C");
        let g = Formula::and(a("C"), q.clone());
        assert_eq!(pretty_print(&g), "C & Sigma x. P(x)");
        let h = Formula::or(Formula::and(a("C"), q.clone()), a("D"));
        assert_eq!(pretty_print(&h), "C & (Sigma x. P(x)) | D");
        let n = Formula::neg(q);
        assert_eq!(pretty_print(&n), "~Sigma x. P(x)");
    }
}
