//! The line-oriented `ccomplex v1` text format.
//!
//! ```text
//! # Borromean rings
//! ccomplex v1
//! components 3
//! genus 0 0 0
//! word 1: c1- c3- c2+ c4+
//! word 2: c1- c2+
//! word 3: c3- c4+
//! ```
//!
//! Missing `word k` lines are empty claspwords. Clasp ends are inferred from
//! the two words containing each label. `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use crate::descriptor::{
    is_label_token, validate, CComplexDescriptor, RawDescriptor, Sign,
};
use crate::error::ValidationError;

pub const HEADER: &str = "ccomplex v1";

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

impl ParseError {
    fn syntax(line: usize, column: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            kind: ParseErrorKind::Syntax(msg.into()),
        }
    }
}

/// Splits `c12+` into its label and sign.
pub fn parse_letter(tok: &str) -> Option<(String, Sign)> {
    let sign = match tok.as_bytes().last()? {
        b'+' => Sign::Positive,
        b'-' => Sign::Negative,
        _ => return None,
    };
    let label = &tok[..tok.len() - 1];
    is_label_token(label).then(|| (label.to_string(), sign))
}

/// Whitespace-separated tokens with their 1-based byte columns.
fn tokens(s: &str, offset: usize) -> impl Iterator<Item = (usize, &str)> {
    s.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - s.as_ptr() as usize + offset + 1, t))
}

pub fn parse(text: &str) -> Result<CComplexDescriptor, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    let eof = |what: &str| ParseError::syntax(text.lines().count() + 1, 1, format!("expected {what}"));

    let (ln, header) = lines.next().ok_or_else(|| eof("header"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["ccomplex", "v1"] {
        return Err(ParseError::syntax(ln, 1, format!("expected `{HEADER}`")));
    }

    let (ln, line) = lines.next().ok_or_else(|| eof("`components <n>`"))?;
    let toks: Vec<_> = tokens(line, 0).collect();
    let n = match toks.as_slice() {
        [(_, "components"), (col, value)] => value
            .parse::<usize>()
            .map_err(|_| ParseError::syntax(ln, *col, "component count must be a nonnegative integer"))?,
        _ => return Err(ParseError::syntax(ln, 1, "expected `components <n>`")),
    };
    if n == 0 {
        return Err(ParseError {
            line: ln,
            column: 1,
            kind: ValidationError::NoComponents.into(),
        });
    }

    let (genus_line, line) = lines.next().ok_or_else(|| eof("`genus ...`"))?;
    let mut toks = tokens(line, 0);
    if toks.next().map(|t| t.1) != Some("genus") {
        return Err(ParseError::syntax(genus_line, 1, "expected `genus <g1> ... <gn>`"));
    }
    let mut genus = Vec::with_capacity(n);
    for (col, tok) in toks {
        let g = tok
            .parse::<i64>()
            .map_err(|_| ParseError::syntax(genus_line, col, format!("bad genus `{tok}`")))?;
        if g < 0 {
            return Err(ParseError {
                line: genus_line,
                column: col,
                kind: ValidationError::NegativeGenus {
                    component: genus.len() + 1,
                    genus: g,
                }
                .into(),
            });
        }
        genus.push(g);
    }
    if genus.len() != n {
        return Err(ParseError::syntax(
            genus_line,
            1,
            format!("expected {n} genus entries, found {}", genus.len()),
        ));
    }

    let mut words: Vec<Vec<(String, Sign)>> = vec![Vec::new(); n];
    let mut word_line = vec![0usize; n];
    for (ln, line) in lines {
        let trimmed_start = line.len() - line.trim_start().len();
        let body = line.trim_start();
        let Some(rest) = body.strip_prefix("word ") else {
            return Err(ParseError::syntax(ln, trimmed_start + 1, "expected `word <k>: ...`"));
        };
        let rest_offset = trimmed_start + 5;
        let Some(colon) = rest.find(':') else {
            return Err(ParseError::syntax(ln, rest_offset + 1, "missing `:` after component index"));
        };
        let index_str = rest[..colon].trim();
        let k = index_str
            .parse::<usize>()
            .ok()
            .filter(|k| (1..=n).contains(k))
            .ok_or_else(|| {
                ParseError::syntax(ln, rest_offset + 1, format!("component index `{index_str}` not in 1..={n}"))
            })?;
        if word_line[k - 1] != 0 {
            return Err(ParseError::syntax(
                ln,
                rest_offset + 1,
                format!("word {k} already given on line {}", word_line[k - 1]),
            ));
        }
        word_line[k - 1] = ln;
        for (col, tok) in tokens(&rest[colon + 1..], rest_offset + colon + 1) {
            let letter = parse_letter(tok).ok_or_else(|| {
                ParseError::syntax(ln, col, format!("bad letter `{tok}` (expected <label>+ or <label>-)"))
            })?;
            words[k - 1].push(letter);
        }
    }

    let locate = |err: ValidationError| -> ParseError {
        let component = match &err {
            ValidationError::SelfClasp { component, .. }
            | ValidationError::MissingOccurrence { component, .. }
            | ValidationError::ExtraOccurrence { component, .. }
            | ValidationError::UnknownLabel { component, .. } => Some(*component),
            _ => None,
        };
        let line = component
            .map(|k| word_line[k - 1])
            .filter(|&l| l != 0)
            .unwrap_or(genus_line);
        ParseError {
            line,
            column: 1,
            kind: err.into(),
        }
    };
    let label_line = |label: &str| {
        words
            .iter()
            .position(|w| w.iter().any(|(l, _)| l == label))
            .map(|k| word_line[k])
            .unwrap_or(genus_line)
    };

    let raw = RawDescriptor::from_signed_words(genus, words.clone()).map_err(|err| match &err {
        ValidationError::SignMismatch { label } => ParseError {
            line: label_line(label),
            column: 1,
            kind: err.clone().into(),
        },
        ValidationError::MissingOccurrence { label, .. } => ParseError {
            line: label_line(label),
            column: 1,
            kind: err.clone().into(),
        },
        _ => locate(err),
    })?;
    validate(&raw).map_err(locate)
}

/// Canonical text form: words in component order, empty words omitted.
pub fn serialize(d: &CComplexDescriptor) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    let _ = writeln!(out, "components {}", d.components());
    out.push_str("genus");
    for g in d.genus() {
        let _ = write!(out, " {g}");
    }
    out.push('\n');
    for k in 1..=d.components() {
        if d.word(k).is_empty() {
            continue;
        }
        let _ = write!(out, "word {k}:");
        for c in d.letters(k) {
            let _ = write!(out, " {}{}", c.label, c.sign.symbol());
        }
        out.push('\n');
    }
    out
}
