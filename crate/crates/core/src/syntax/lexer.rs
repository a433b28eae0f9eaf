use super::{ParseError, ParseErrorKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Tilde,
    Hash,
    At,
    Bang,
    Percent,
    AndAnd,
    And,
    OrOr,
    Or,
    Implies,
    Forall,
    Exists,
    Pi,
    Sigma,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Hash => "`#`".into(),
            Tok::At => "`@`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Percent => "`%`".into(),
            Tok::AndAnd => "`&&`".into(),
            Tok::And => "`&`".into(),
            Tok::OrOr => "`||`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`=>`".into(),
            Tok::Forall => "`forall`".into(),
            Tok::Exists => "`exists`".into(),
            Tok::Pi => "`Pi`".into(),
            Tok::Sigma => "`Sigma`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

/// A token with its 1-based character column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub pos: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() && !is_symbol_letter(c) || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    (c.is_alphanumeric() && !is_symbol_letter(c)) || c == '_' || c == '\''
}

// Greek capitals used as operators are alphabetic in Unicode.
fn is_symbol_letter(c: char) -> bool {
    matches!(c, 'Π' | 'Σ' | 'Δ')
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let next = chars.get(i + 1).copied();
        let (tok, len) = match c {
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            ',' => (Tok::Comma, 1),
            '.' => (Tok::Dot, 1),
            '~' | '∼' => (Tok::Tilde, 1),
            '#' | '▲' => (Tok::Hash, 1),
            '@' | 'Δ' => (Tok::At, 1),
            '!' | '¬' => (Tok::Bang, 1),
            '%' | '∘' => (Tok::Percent, 1),
            '&' if next == Some('&') => (Tok::AndAnd, 2),
            '&' | '∧' => (Tok::And, 1),
            '⊗' => (Tok::AndAnd, 1),
            '|' if next == Some('|') => (Tok::OrOr, 2),
            '|' | '∨' => (Tok::Or, 1),
            '⊕' => (Tok::OrOr, 1),
            '=' if next == Some('>') => (Tok::Implies, 2),
            '→' => (Tok::Implies, 1),
            '∀' => (Tok::Forall, 1),
            '∃' => (Tok::Exists, 1),
            'Π' => (Tok::Pi, 1),
            'Σ' => (Tok::Sigma, 1),
            c if is_ident_start(c) => {
                let mut j = i + 1;
                while j < chars.len() && is_ident_continue(chars[j]) {
                    j += 1;
                }
                let mut word: String = chars[i..j].iter().collect();
                if word == "E" && chars.get(j) == Some(&'!') {
                    word.push('!');
                    j += 1;
                }
                let tok = match word.as_str() {
                    "forall" => Tok::Forall,
                    "exists" => Tok::Exists,
                    "Pi" => Tok::Pi,
                    "Sigma" => Tok::Sigma,
                    _ => Tok::Ident(word),
                };
                (tok, j - i)
            }
            other => {
                return Err(ParseError::new(pos, ParseErrorKind::Lexical(other)));
            }
        };
        out.push(Spanned { tok, pos });
        i += len;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        pos: chars.len() + 1,
    });
    Ok(out)
}
