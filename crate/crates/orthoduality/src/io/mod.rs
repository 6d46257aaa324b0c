//! Text formats: the `.olat` and `.uvo` documents and DOT export.

pub mod dot;
pub mod olat;
pub mod uvo;

use std::fmt;

use thiserror::Error;

pub use dot::{lattice_to_dot, space_to_dot};
pub use olat::{olat_from_ortholattice, parse_olat, parse_olat_document, serialize_olat, OlatDocument, OlatError};
pub use uvo::{parse_uvo, parse_uvo_document, serialize_uvo, uvo_from_space, UvoDocument, UvoError};

/// 1-based line and column (in characters).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("ParseError({span}): {msg}")]
pub struct ParseError {
    pub span: Span,
    pub msg: String,
}

impl ParseError {
    pub(crate) fn at(span: Span, msg: impl Into<String>) -> ParseError {
        ParseError { span, msg: msg.into() }
    }
}

/// A declared or referenced name. Equality ignores the span.
#[derive(Clone, Debug, Eq)]
pub struct Named {
    pub name: String,
    pub span: Span,
}

impl Named {
    pub fn new(name: impl Into<String>) -> Named {
        Named { name: name.into(), span: Span::default() }
    }
}

impl PartialEq for Named {
    fn eq(&self, other: &Named) -> bool {
        self.name == other.name
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub span: Span,
}

/// Significant lines of `text`, comments stripped, split into tokens.
pub(crate) fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start: Option<(usize, usize)> = None;
        for (col, (byte, ch)) in line.char_indices().enumerate() {
            if ch.is_whitespace() {
                if let Some((b, c)) = start.take() {
                    toks.push(Token { text: &line[b..byte], span: Span { line: i + 1, col: c + 1 } });
                }
            } else if start.is_none() {
                start = Some((byte, col));
            }
        }
        if let Some((b, c)) = start {
            toks.push(Token { text: &line[b..], span: Span { line: i + 1, col: c + 1 } });
        }
        if !toks.is_empty() {
            out.push(toks);
        }
    }
    out
}

/// Checks the `<kind> v1` header on the first significant line.
pub(crate) fn expect_header(lines: &[Vec<Token<'_>>], kind: &str) -> Result<Span, ParseError> {
    let first = lines.first().ok_or_else(|| ParseError::at(Span { line: 1, col: 1 }, format!("missing `{kind} v1` header")))?;
    match first.as_slice() {
        [k, v] if k.text == kind && v.text == "v1" => Ok(k.span),
        [k, v, ..] if k.text == kind => Err(ParseError::at(v.span, format!("unsupported version `{}`", v.text))),
        _ => Err(ParseError::at(first[0].span, format!("missing `{kind} v1` header"))),
    }
}

pub(crate) fn is_keyword(t: &str) -> bool {
    matches!(t, "<" | "->" | "~") || t.ends_with(':')
}

pub(crate) fn named(t: &Token<'_>) -> Result<Named, ParseError> {
    if is_keyword(t.text) {
        return Err(ParseError::at(t.span, format!("expected a name, found `{}`", t.text)));
    }
    Ok(Named { name: t.text.to_string(), span: t.span })
}

/// `<a> <op> <b>` after the keyword.
pub(crate) fn pair(toks: &[Token<'_>], op: &str, keyword_span: Span) -> Result<(Named, Named), ParseError> {
    match toks {
        [a, o, b] if o.text == op => Ok((named(a)?, named(b)?)),
        [_, o, _] => Err(ParseError::at(o.span, format!("expected `{op}`, found `{}`", o.text))),
        [] => Err(ParseError::at(keyword_span, format!("expected `<name> {op} <name>`"))),
        _ => Err(ParseError::at(toks[0].span, format!("expected exactly `<name> {op} <name>`"))),
    }
}

/// Index of every declared name; duplicates are errors.
pub(crate) fn index_names(decl: &[Named], what: &str) -> Result<std::collections::HashMap<String, usize>, ParseError> {
    let mut idx = std::collections::HashMap::new();
    for (i, n) in decl.iter().enumerate() {
        if idx.insert(n.name.clone(), i).is_some() {
            return Err(ParseError::at(n.span, format!("duplicate {what} `{}`", n.name)));
        }
    }
    Ok(idx)
}

pub(crate) fn resolve(
    idx: &std::collections::HashMap<String, usize>,
    n: &Named,
    what: &str,
) -> Result<usize, ParseError> {
    idx.get(&n.name).copied().ok_or_else(|| ParseError::at(n.span, format!("unknown {what} `{}`", n.name)))
}

/// Every declared pair must be a cover of the closure it generates.
pub(crate) fn check_covers_only(
    up: &[crate::bitset::BitSet],
    pairs: &[(usize, usize)],
    spans: &[Span],
    names: &[String],
) -> Result<(), ParseError> {
    for (k, &(a, b)) in pairs.iter().enumerate() {
        if a == b {
            return Err(ParseError::at(spans[k], format!("`{0} < {0}` is not a strict cover", names[a])));
        }
        let between = up[a].intersection(pairs_down(up, b)).len();
        if up[a].contains(b) && between > 2 {
            let mid = up[a].intersection(pairs_down(up, b)).iter().find(|&c| c != a && c != b).unwrap();
            return Err(ParseError::at(
                spans[k],
                format!(
                    "`{} < {}` is not a cover (`{}` lies between); list covering pairs only",
                    names[a], names[b], names[mid]
                ),
            ));
        }
    }
    Ok(())
}

fn pairs_down(up: &[crate::bitset::BitSet], b: usize) -> crate::bitset::BitSet {
    (0..up.len()).filter(|&c| up[c].contains(b)).collect()
}
