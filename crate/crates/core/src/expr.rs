//! A small expression language over named sets.
//!
//! ```text
//! expr   := term ('|' term)*
//! term   := factor ('&' factor)*
//! factor := '~' factor | '(' expr ')' | IDENT
//! IDENT  := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! `|` is union, `&` intersection and `~` complement. `I` and `O` name the
//! full and null sets. Binary operators associate to the left.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::error::Error;
use crate::family::Family;
use crate::pfs::PictureFuzzySet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum ExprAst {
    Name(String),
    Full,
    Null,
    Union(Box<ExprAst>, Box<ExprAst>),
    Intersection(Box<ExprAst>, Box<ExprAst>),
    Complement(Box<ExprAst>),
}

impl ExprAst {
    pub fn name(label: impl Into<String>) -> Self {
        ExprAst::Name(label.into())
    }

    pub fn union(l: ExprAst, r: ExprAst) -> Self {
        ExprAst::Union(Box::new(l), Box::new(r))
    }

    pub fn intersection(l: ExprAst, r: ExprAst) -> Self {
        ExprAst::Intersection(Box::new(l), Box::new(r))
    }

    pub fn complement(e: ExprAst) -> Self {
        ExprAst::Complement(Box::new(e))
    }
}

/// Fully parenthesized form; parsing it yields the same tree.
impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprAst::Name(n) => f.write_str(n),
            ExprAst::Full => f.write_str("I"),
            ExprAst::Null => f.write_str("O"),
            ExprAst::Union(l, r) => write!(f, "({l} | {r})"),
            ExprAst::Intersection(l, r) => write!(f, "({l} & {r})"),
            ExprAst::Complement(e) => write!(f, "~{e}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Expected {
    Identifier,
    OpenParen,
    CloseParen,
    Tilde,
    Pipe,
    Ampersand,
    End,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::Identifier => "identifier",
            Expected::OpenParen => "'('",
            Expected::CloseParen => "')'",
            Expected::Tilde => "'~'",
            Expected::Pipe => "'|'",
            Expected::Ampersand => "'&'",
            Expected::End => "end of input",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[error("syntax error at byte {offset}: found {found}, expected {}", list(.expected))]
pub struct SyntaxError {
    pub offset: usize,
    pub found: String,
    pub expected: Vec<Expected>,
}

fn list(expected: &[Expected]) -> String {
    expected
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" or ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Pipe,
    Amp,
    Tilde,
    Open,
    Close,
    End,
    Bad(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Pipe => f.write_str("'|'"),
            Tok::Amp => f.write_str("'&'"),
            Tok::Tilde => f.write_str("'~'"),
            Tok::Open => f.write_str("'('"),
            Tok::Close => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
            Tok::Bad(c) => write!(f, "{c:?}"),
        }
    }
}

fn tokenize(text: &str) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((at, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '|' => Tok::Pipe,
            '&' => Tok::Amp,
            '~' => Tok::Tilde,
            '(' => Tok::Open,
            ')' => Tok::Close,
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = at + c.len_utf8();
                while let Some(&(i, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        end = i + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                Tok::Ident(text[at..end].to_string())
            }
            other => Tok::Bad(other),
        };
        out.push((at, tok));
    }
    out.push((text.len(), Tok::End));
    out
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].1
    }

    fn error(&self, expected: &[Expected]) -> SyntaxError {
        let (offset, tok) = &self.tokens[self.pos];
        SyntaxError {
            offset: *offset,
            found: tok.to_string(),
            expected: expected.to_vec(),
        }
    }

    fn expr(&mut self) -> Result<ExprAst, SyntaxError> {
        let mut lhs = self.term()?;
        while *self.peek() == Tok::Pipe {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = ExprAst::union(lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ExprAst, SyntaxError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Amp {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = ExprAst::intersection(lhs, rhs);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<ExprAst, SyntaxError> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.pos += 1;
                Ok(ExprAst::complement(self.factor()?))
            }
            Tok::Open => {
                self.pos += 1;
                let inner = self.expr()?;
                if *self.peek() != Tok::Close {
                    return Err(self.error(&[Expected::Pipe, Expected::Ampersand, Expected::CloseParen]));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Ident(name) => {
                self.pos += 1;
                Ok(match name.as_str() {
                    "I" => ExprAst::Full,
                    "O" => ExprAst::Null,
                    _ => ExprAst::Name(name),
                })
            }
            _ => Err(self.error(&[Expected::Tilde, Expected::OpenParen, Expected::Identifier])),
        }
    }
}

pub fn parse(text: &str) -> Result<ExprAst, SyntaxError> {
    let mut p = Parser {
        tokens: tokenize(text),
        pos: 0,
    };
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&[Expected::Pipe, Expected::Ampersand, Expected::End]));
    }
    Ok(ast)
}

/// Evaluates against the family's named members; `I` and `O` are the full and
/// null sets on the family's universe.
pub fn evaluate(ast: &ExprAst, family: &Family) -> Result<PictureFuzzySet, Error> {
    match ast {
        ExprAst::Name(n) => family
            .get(n)
            .map(|m| m.set.clone())
            .ok_or_else(|| Error::UnknownName(n.clone())),
        ExprAst::Full => Ok(PictureFuzzySet::full(family.universe())),
        ExprAst::Null => Ok(PictureFuzzySet::null(family.universe())),
        ExprAst::Union(l, r) => evaluate(l, family)?.union(&evaluate(r, family)?),
        ExprAst::Intersection(l, r) => evaluate(l, family)?.intersection(&evaluate(r, family)?),
        ExprAst::Complement(e) => Ok(evaluate(e, family)?.complement()),
    }
}
