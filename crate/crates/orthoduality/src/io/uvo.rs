//! `.uvo` documents.
//!
//! ```text
//! uvo v1
//! points: x y1 y2
//! covers: x < y1
//! covers: x < y2
//! perp: y1 ~ y2
//! ```

use thiserror::Error;

use super::{check_covers_only, expect_header, index_names, named, pair, resolve, tokenize, Named, ParseError, Span};
use crate::lattice::{check_partial_order, transitive_closure};
use crate::uvo::UvoSpace;
use crate::SpaceError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UvoDocument {
    pub header: Span,
    pub points: Vec<Named>,
    pub covers: Vec<(Named, Named)>,
    pub perp: Vec<(Named, Named)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum UvoError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{error}{}", .span.map(|s| format!(" at {s}")).unwrap_or_default())]
    Space { error: SpaceError, span: Option<Span> },
}

pub fn parse_uvo_document(text: &str) -> Result<UvoDocument, ParseError> {
    let lines = tokenize(text);
    let header = expect_header(&lines, "uvo")?;
    let mut doc = UvoDocument { header, points: Vec::new(), covers: Vec::new(), perp: Vec::new() };
    for toks in &lines[1..] {
        let (kw, rest) = (&toks[0], &toks[1..]);
        match kw.text {
            "points:" => {
                for t in rest {
                    doc.points.push(named(t)?);
                }
            }
            "covers:" => doc.covers.push(pair(rest, "<", kw.span)?),
            "perp:" => doc.perp.push(pair(rest, "~", kw.span)?),
            other => return Err(ParseError::at(kw.span, format!("unknown directive `{other}`"))),
        }
    }
    Ok(doc)
}

impl UvoDocument {
    pub fn to_space(&self) -> Result<UvoSpace, UvoError> {
        let idx = index_names(&self.points, "point")?;
        let names: Vec<String> = self.points.iter().map(|p| p.name.clone()).collect();
        let m = names.len();
        let mut covers = Vec::with_capacity(self.covers.len());
        for (a, b) in &self.covers {
            covers.push((resolve(&idx, a, "point")?, resolve(&idx, b, "point")?));
        }
        let mut perp = Vec::with_capacity(self.perp.len());
        for (a, b) in &self.perp {
            let (i, j) = (resolve(&idx, a, "point")?, resolve(&idx, b, "point")?);
            if i == j {
                return Err(UvoError::Space { error: SpaceError::IrreflexivityViolated(a.name.clone()), span: Some(a.span) });
            }
            perp.push((i, j));
        }
        if m <= crate::bitset::MAX_BITS {
            let up = transitive_closure(m, &covers);
            if check_partial_order(&up).is_ok() {
                let spans: Vec<Span> = self.covers.iter().map(|(a, _)| a.span).collect();
                check_covers_only(&up, &covers, &spans, &names)?;
            }
        }
        UvoSpace::from_pairs(names, &covers, &perp).map_err(|error| UvoError::Space { error, span: None })
    }
}

pub fn parse_uvo(text: &str) -> Result<UvoSpace, UvoError> {
    parse_uvo_document(text)?.to_space()
}

pub fn serialize_uvo(doc: &UvoDocument) -> String {
    let mut s = String::from("uvo v1\npoints:");
    for p in &doc.points {
        s.push(' ');
        s.push_str(&p.name);
    }
    s.push('\n');
    for (a, b) in &doc.covers {
        s.push_str(&format!("covers: {} < {}\n", a.name, b.name));
    }
    for (a, b) in &doc.perp {
        s.push_str(&format!("perp: {} ~ {}\n", a.name, b.name));
    }
    s
}

/// Canonical document: covers in index order, each ⊥ pair once with the smaller index first.
pub fn uvo_from_space(x: &UvoSpace) -> UvoDocument {
    let nm = |p: usize| Named::new(x.name(p));
    UvoDocument {
        header: Span { line: 1, col: 1 },
        points: (0..x.m()).map(nm).collect(),
        covers: x.covers().into_iter().map(|(a, b)| (nm(a), nm(b))).collect(),
        perp: x.perp_pairs().into_iter().filter(|&(a, b)| a < b).map(|(a, b)| (nm(a), nm(b))).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG6: &str = "uvo v1\npoints: x y1 y2 y3\ncovers: x < y1\ncovers: x < y2\ncovers: x < y3\nperp: y1 ~ y2\nperp: y1 ~ y3\nperp: y2 ~ y3\n";

    #[test]
    fn m3_space_parses() {
        let x = parse_uvo(FIG6).unwrap();
        assert_eq!(x.m(), 4);
        assert!(x.perp(3, 1));
        assert_eq!(serialize_uvo(&uvo_from_space(&x)), FIG6);
    }

    #[test]
    fn reflexive_perp_rejected() {
        let e = parse_uvo("uvo v1\npoints: p q\nperp: p ~ p\n").unwrap_err();
        assert_eq!(
            e,
            UvoError::Space { error: SpaceError::IrreflexivityViolated("p".into()), span: Some(Span { line: 3, col: 7 }) }
        );
    }

    #[test]
    fn empty_perp_and_unknown_point() {
        assert_eq!(parse_uvo("uvo v1\npoints: p q\ncovers: p < q\n").unwrap().perp_pairs(), vec![]);
        assert!(matches!(parse_uvo("uvo v1\npoints: p\ncovers: p < r\n"), Err(UvoError::Parse(_))));
    }
}
