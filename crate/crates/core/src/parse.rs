//! Recursive-descent parser for the concrete formula syntax.
//!
//! ```text
//! formula := iff
//! iff     := imp ("<->" iff)?
//! imp     := or ("->" imp)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | "(" formula ")" | ident
//! ident   := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! `¬ ∧ ∨ → ↔` are accepted as aliases of `~ & | -> <->`.

use std::fmt;

use thiserror::Error;

use crate::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub offset: usize,
    /// What the parser would have accepted there.
    pub expected: Vec<&'static str>,
    /// The token actually found (`end of input` at the end).
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at offset {}: expected {}, found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    End,
    Bad(char),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
            Tok::Bad(c) => format!("`{c}`"),
        }
    }
}

fn tokenize(text: &str) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let rest = &text[i..];
        let (tok, len) = if rest.starts_with("<->") {
            (Tok::Iff, 3)
        } else if rest.starts_with("->") {
            (Tok::Implies, 2)
        } else if c.is_ascii_alphabetic() {
            let end = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            (Tok::Ident(rest[..end].to_string()), end)
        } else {
            let tok = match c {
                '~' | '¬' => Tok::Not,
                '&' | '∧' => Tok::And,
                '|' | '∨' => Tok::Or,
                '→' => Tok::Implies,
                '↔' => Tok::Iff,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => Tok::Bad(other),
            };
            (tok, c.len_utf8())
        };
        out.push((i, tok));
        while let Some(&(j, _)) = chars.peek() {
            if j < i + len {
                chars.next();
            } else {
                break;
            }
        }
    }
    out.push((text.len(), Tok::End));
    out
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let (offset, tok) = &self.toks[self.pos];
        ParseError {
            offset: *offset,
            expected,
            found: tok.describe(),
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.imp()?;
        if *self.peek() == Tok::Iff {
            self.bump();
            Ok(Formula::iff(lhs, self.iff()?))
        } else {
            Ok(lhs)
        }
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            Ok(Formula::implies(lhs, self.imp()?))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            acc = Formula::or(acc, self.and()?);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(vec!["`)`", "binary connective"]));
                }
                self.bump();
                Ok(inner)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Var(name))
            }
            _ => Err(self.error(vec!["identifier", "`~`", "`(`"])),
        }
    }
}

/// Parses one formula; the whole input must be consumed.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: tokenize(text),
        pos: 0,
    };
    let f = p.iff()?;
    if *p.peek() != Tok::End {
        return Err(p.error(vec!["binary connective", "end of input"]));
    }
    Ok(f)
}

/// A formula read from a line-oriented file, with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located {
    pub line: usize,
    pub formula: Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {error}")]
pub struct FileParseError {
    pub line: usize,
    pub error: ParseError,
}

/// Parses a formula file: one formula per line, `#` starts a comment,
/// blank lines are skipped.
pub fn parse_formula_file(text: &str) -> Result<Vec<Located>, FileParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let formula = parse(body).map_err(|error| FileParseError {
            line: idx + 1,
            error,
        })?;
        out.push(Located {
            line: idx + 1,
            formula,
        });
    }
    Ok(out)
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}
