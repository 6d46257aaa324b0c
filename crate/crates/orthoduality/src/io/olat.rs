//! `.olat` documents.
//!
//! ```text
//! olat v1
//! elements: 0 a a' 1
//! covers: 0 < a
//! covers: 0 < a'
//! covers: a < 1
//! covers: a' < 1
//! ocomp: a -> a'
//! ```

use thiserror::Error;

use super::{check_covers_only, expect_header, index_names, named, pair, resolve, tokenize, Named, ParseError, Span};
use crate::lattice::{check_partial_order, transitive_closure, Lattice, Ortholattice};
use crate::ValidationError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OlatDocument {
    pub header: Span,
    pub elements: Vec<Named>,
    pub covers: Vec<(Named, Named)>,
    pub ocomp: Vec<(Named, Named)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OlatError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Validation(#[from] ValidationError),
}

pub fn parse_olat_document(text: &str) -> Result<OlatDocument, ParseError> {
    let lines = tokenize(text);
    let header = expect_header(&lines, "olat")?;
    let mut doc = OlatDocument { header, elements: Vec::new(), covers: Vec::new(), ocomp: Vec::new() };
    for toks in &lines[1..] {
        let (kw, rest) = (&toks[0], &toks[1..]);
        match kw.text {
            "elements:" => {
                for t in rest {
                    doc.elements.push(named(t)?);
                }
            }
            "covers:" => doc.covers.push(pair(rest, "<", kw.span)?),
            "ocomp:" => doc.ocomp.push(pair(rest, "->", kw.span)?),
            other => return Err(ParseError::at(kw.span, format!("unknown directive `{other}`"))),
        }
    }
    if doc.elements.is_empty() {
        return Err(ParseError::at(header, "no `elements:` declared"));
    }
    Ok(doc)
}

impl OlatDocument {
    pub fn to_ortholattice(&self) -> Result<Ortholattice, OlatError> {
        let idx = index_names(&self.elements, "element")?;
        let names: Vec<String> = self.elements.iter().map(|e| e.name.clone()).collect();
        let n = names.len();
        let mut covers = Vec::with_capacity(self.covers.len());
        for (a, b) in &self.covers {
            covers.push((resolve(&idx, a, "element")?, resolve(&idx, b, "element")?));
        }
        let mut oc: Vec<Option<(usize, Span)>> = vec![None; n];
        for (a, b) in &self.ocomp {
            let (i, j) = (resolve(&idx, a, "element")?, resolve(&idx, b, "element")?);
            for (x, y) in [(i, j), (j, i)] {
                match oc[x] {
                    Some((z, _)) if z != y => {
                        return Err(ParseError::at(
                            a.span,
                            format!("ocomp conflict: `{}` already maps to `{}`", names[x], names[z]),
                        )
                        .into())
                    }
                    _ => oc[x] = Some((y, a.span)),
                }
            }
        }
        if n <= crate::bitset::MAX_BITS {
            let up = transitive_closure(n, &covers);
            if check_partial_order(&up).is_ok() {
                let spans: Vec<Span> = self.covers.iter().map(|(a, _)| a.span).collect();
                check_covers_only(&up, &covers, &spans, &names)?;
            }
        }
        let lattice = Lattice::from_covers(names, &covers)?;
        let (bot, top) = (lattice.bot(), lattice.top());
        if oc[bot].is_none() && oc[top].is_none() {
            oc[bot] = Some((top, self.header));
            oc[top] = Some((bot, self.header));
        }
        let mut table = Vec::with_capacity(n);
        for (a, entry) in oc.iter().enumerate() {
            match entry {
                Some((b, _)) => table.push(*b),
                None => {
                    return Err(ParseError::at(
                        self.elements[a].span,
                        format!("incomplete orthocomplement: no `ocomp:` entry for `{}`", lattice.name(a)),
                    )
                    .into())
                }
            }
        }
        Ok(Ortholattice::new(lattice, table)?)
    }
}

pub fn parse_olat(text: &str) -> Result<Ortholattice, OlatError> {
    parse_olat_document(text)?.to_ortholattice()
}

pub fn serialize_olat(doc: &OlatDocument) -> String {
    let mut s = String::from("olat v1\nelements:");
    for e in &doc.elements {
        s.push(' ');
        s.push_str(&e.name);
    }
    s.push('\n');
    for (a, b) in &doc.covers {
        s.push_str(&format!("covers: {} < {}\n", a.name, b.name));
    }
    for (a, b) in &doc.ocomp {
        s.push_str(&format!("ocomp: {} -> {}\n", a.name, b.name));
    }
    s
}

/// Canonical document: covers in index order, each non-bound ocomp pair once.
pub fn olat_from_ortholattice(l: &Ortholattice) -> OlatDocument {
    let nm = |a: usize| Named::new(l.name(a));
    let covers = l.covers().into_iter().map(|(a, b)| (nm(a), nm(b))).collect();
    let ocomp = (0..l.n())
        .filter(|&a| a != l.bot() && a != l.top() && a <= l.ocomp(a))
        .map(|a| (nm(a), nm(l.ocomp(a))))
        .collect();
    OlatDocument { header: Span { line: 1, col: 1 }, elements: (0..l.n()).map(nm).collect(), covers, ocomp }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_BY_TWO: &str = "olat v1\nelements: 0 a a' 1\ncovers: 0 < a\ncovers: 0 < a'\ncovers: a < 1\ncovers: a' < 1\nocomp: a -> a'\n";

    #[test]
    fn two_by_two_parses() {
        let l = parse_olat(TWO_BY_TWO).unwrap();
        assert_eq!(l.n(), 4);
        assert_eq!(l.ocomp(l.index_of("a'").unwrap()), l.index_of("a").unwrap());
        assert_eq!(serialize_olat(&parse_olat_document(TWO_BY_TWO).unwrap()), TWO_BY_TWO);
    }

    #[test]
    fn missing_ocomp_is_incomplete() {
        let text = TWO_BY_TWO.replace("ocomp: a -> a'\n", "");
        match parse_olat(&text) {
            Err(OlatError::Parse(e)) => assert!(e.msg.contains("incomplete orthocomplement"), "{e}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_cover_gets_hint() {
        let text = TWO_BY_TWO.replace("ocomp:", "covers: 0 < 1\nocomp:");
        match parse_olat(&text) {
            Err(OlatError::Parse(e)) => {
                assert!(e.msg.contains("not a cover"), "{e}");
                assert_eq!(e.span.line, 7);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_name_has_position() {
        let text = TWO_BY_TWO.replace("covers: a < 1", "covers: a < top");
        let e = parse_olat(&text).unwrap_err();
        assert_eq!(e, OlatError::Parse(ParseError::at(Span { line: 5, col: 13 }, "unknown element `top`")));
    }
}
