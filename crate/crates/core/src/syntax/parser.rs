use std::collections::HashMap;

use super::ast::{BinaryOp, Formula, Quantifier, Term, UnaryOp, EXISTENCE};
use super::lexer::{tokenize, Spanned, Tok};
use super::{ParseError, ParseErrorKind, ParseOptions};
use crate::values::Logic;

/// Identifiers that read as variables when not bound: a letter `u`..`z`
/// optionally followed by digits, underscores or primes (`x`, `y1`, `z_2`).
pub fn looks_like_variable(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('u'..='z'))
        && chars.all(|c| c.is_ascii_digit() || c == '_' || c == '\'')
}

pub(crate) struct Parser<'a> {
    toks: Vec<Spanned>,
    idx: usize,
    opts: &'a ParseOptions<'a>,
    bound: Vec<String>,
    arities: HashMap<String, usize>,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(text: &str, opts: &'a ParseOptions<'a>) -> Result<Self, ParseError> {
        Ok(Self {
            toks: tokenize(text)?,
            idx: 0,
            opts,
            bound: Vec::new(),
            arities: HashMap::new(),
        })
    }

    fn peek(&self) -> &Spanned {
        &self.toks[self.idx]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.idx].clone();
        if t.tok != Tok::Eof {
            self.idx += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let t = self.peek();
        let kind = match t.tok {
            Tok::Eof if expected.contains('(') || expected.contains(')') => {
                ParseErrorKind::Unbalanced
            }
            Tok::RParen => ParseErrorKind::Unbalanced,
            _ => ParseErrorKind::Unexpected {
                found: t.tok.describe(),
                expected: expected.to_string(),
            },
        };
        ParseError::new(t.pos, kind)
    }

    fn expect_close(&mut self) -> Result<(), ParseError> {
        if self.eat(&Tok::RParen) {
            Ok(())
        } else {
            let t = self.peek();
            let kind = if t.tok == Tok::Eof {
                ParseErrorKind::Unbalanced
            } else {
                ParseErrorKind::Unexpected {
                    found: t.tok.describe(),
                    expected: "`)`".into(),
                }
            };
            Err(ParseError::new(t.pos, kind))
        }
    }

    pub(crate) fn parse_complete(&mut self) -> Result<Formula, ParseError> {
        let f = self.implication()?;
        match self.peek().tok {
            Tok::Eof => Ok(f),
            _ => Err(self.unexpected("an operator or end of input")),
        }
    }

    fn fuzzy_check(&self, pos: usize, symbol: &'static str) -> Result<(), ParseError> {
        if self.opts.mode.logic == Logic::Bd4 {
            Err(ParseError::new(pos, ParseErrorKind::FuzzyOnly(symbol)))
        } else {
            Ok(())
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.binary_level(BinaryOp::WeakOr)?;
        if self.eat(&Tok::Implies) {
            let rhs = self.implication()?;
            Ok(Formula::binary(BinaryOp::Implies, lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn binary_level(&mut self, op: BinaryOp) -> Result<Formula, ParseError> {
        let (tok, tighter) = match op {
            BinaryOp::WeakOr => (Tok::Or, Some(BinaryOp::StrongOr)),
            BinaryOp::StrongOr => (Tok::OrOr, Some(BinaryOp::WeakAnd)),
            BinaryOp::WeakAnd => (Tok::And, Some(BinaryOp::StrongAnd)),
            BinaryOp::StrongAnd => (Tok::AndAnd, None),
            BinaryOp::Implies => unreachable!("implication is parsed separately"),
        };
        let operand = |p: &mut Self| match tighter {
            Some(t) => p.binary_level(t),
            None => p.unary(),
        };
        let mut lhs = operand(self)?;
        while self.peek().tok == tok {
            let pos = self.bump().pos;
            if op.is_fuzzy_only() {
                self.fuzzy_check(pos, op.symbol())?;
            }
            let rhs = operand(self)?;
            lhs = Formula::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let t = self.peek().clone();
        let op = match t.tok {
            Tok::Tilde => Some(UnaryOp::Neg),
            Tok::Hash => Some(UnaryOp::BdDelta),
            Tok::At => Some(UnaryOp::BaazDelta),
            Tok::Bang => Some(UnaryOp::BivalentNeg),
            Tok::Percent => Some(UnaryOp::Circ),
            _ => None,
        };
        if let Some(op) = op {
            self.bump();
            if op.is_fuzzy_only() {
                self.fuzzy_check(t.pos, op.symbol())?;
            }
            return Ok(Formula::unary(op, self.unary()?));
        }
        let q = match t.tok {
            Tok::Forall => Some(Quantifier::InnerForall),
            Tok::Exists => Some(Quantifier::InnerExists),
            Tok::Pi => Some(Quantifier::OuterForall),
            Tok::Sigma => Some(Quantifier::OuterExists),
            _ => None,
        };
        if let Some(q) = q {
            self.bump();
            let var = match self.bump() {
                Spanned {
                    tok: Tok::Ident(name),
                    ..
                } if name != EXISTENCE => name,
                other => {
                    return Err(ParseError::new(
                        other.pos,
                        ParseErrorKind::Unexpected {
                            found: other.tok.describe(),
                            expected: "a variable name".into(),
                        },
                    ))
                }
            };
            if !self.eat(&Tok::Dot) {
                return Err(self.unexpected("`.`"));
            }
            self.bound.push(var.clone());
            let body = self.implication();
            self.bound.pop();
            return Ok(Formula::quant(q, var, body?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::LParen => {
                let f = self.implication()?;
                self.expect_close()?;
                Ok(f)
            }
            Tok::Ident(name) => self.atom(name, t.pos),
            Tok::Eof => Err(ParseError::new(
                t.pos,
                ParseErrorKind::Unexpected {
                    found: t.tok.describe(),
                    expected: "a formula".into(),
                },
            )),
            Tok::RParen => Err(ParseError::new(t.pos, ParseErrorKind::Unbalanced)),
            other => Err(ParseError::new(
                t.pos,
                ParseErrorKind::Unexpected {
                    found: other.describe(),
                    expected: "a formula".into(),
                },
            )),
        }
    }

    fn atom(&mut self, pred: String, pos: usize) -> Result<Formula, ParseError> {
        let mut args = Vec::new();
        if self.eat(&Tok::LParen) && !self.eat(&Tok::RParen) {
            loop {
                args.push(self.term()?);
                if self.eat(&Tok::Comma) {
                    continue;
                }
                self.expect_close()?;
                break;
            }
        }
        self.check_predicate(&pred, args.len(), pos)?;
        Ok(Formula::Atom { pred, args })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Ident(name) if name != EXISTENCE => self.classify_term(name, t.pos),
            Tok::Eof => Err(ParseError::new(t.pos, ParseErrorKind::Unbalanced)),
            other => Err(ParseError::new(
                t.pos,
                ParseErrorKind::Unexpected {
                    found: other.describe(),
                    expected: "a term".into(),
                },
            )),
        }
    }

    fn classify_term(&self, name: String, pos: usize) -> Result<Term, ParseError> {
        if self.bound.contains(&name) {
            return Ok(Term::Var(name));
        }
        match self.opts.signature {
            Some(sig) if sig.has_constant(&name) => Ok(Term::Const(name)),
            Some(_) if self.opts.strict => {
                if looks_like_variable(&name) {
                    Ok(Term::Var(name))
                } else {
                    Err(ParseError::new(pos, ParseErrorKind::UnknownSymbol(name)))
                }
            }
            _ if looks_like_variable(&name) => Ok(Term::Var(name)),
            _ => Ok(Term::Const(name)),
        }
    }

    fn check_predicate(&mut self, name: &str, arity: usize, pos: usize) -> Result<(), ParseError> {
        let declared = self
            .opts
            .signature
            .and_then(|s| s.arity(name))
            .or_else(|| (name == EXISTENCE && self.opts.mode.free_logic).then_some(1));
        let expected = match declared {
            Some(a) => Some(a),
            None if self.opts.strict && self.opts.signature.is_some() => {
                return Err(ParseError::new(
                    pos,
                    ParseErrorKind::UnknownSymbol(name.to_string()),
                ));
            }
            None => self.arities.get(name).copied(),
        };
        match expected {
            Some(a) if a != arity => Err(ParseError::new(
                pos,
                ParseErrorKind::ArityMismatch {
                    name: name.to_string(),
                    expected: a,
                    found: arity,
                },
            )),
            _ => {
                self.arities.insert(name.to_string(), arity);
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_naming_convention() {
        assert!(looks_like_variable("x"));
        assert!(looks_like_variable("y1"));
        assert!(looks_like_variable("z_2"));
        assert!(!looks_like_variable("c"));
        assert!(!looks_like_variable("xs"));
        assert!(!looks_like_variable("a"));
    }
}
