use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use orthoduality::catalog::{builtin, builtin_lattice, enumerate_ortholattices, m3_orthospace, ortholattice_names};
use orthoduality::dictionary::uvo_sum;
use orthoduality::filters::{dual_space, dual_space_named};
use orthoduality::io::*;
use orthoduality::lattice::Ortholattice;
use proptest::prelude::*;

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn pool() -> &'static [Ortholattice] {
    static POOL: OnceLock<Vec<Ortholattice>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<Ortholattice> = ortholattice_names().into_iter().map(|n| builtin(n).unwrap()).collect();
        v.extend(enumerate_ortholattices(10).unwrap());
        v
    })
}

fn parse_err(text: &str) -> ParseError {
    match parse_olat(text) {
        Err(OlatError::Parse(e)) => e,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn corpus_files_round_trip() {
    for dir in [corpus(), corpus().join("bad")] {
        for e in std::fs::read_dir(dir).unwrap() {
            let p = e.unwrap().path();
            let text = match p.extension().and_then(|e| e.to_str()) {
                Some("olat" | "uvo") => std::fs::read_to_string(&p).unwrap(),
                _ => continue,
            };
            let again = if p.extension().unwrap() == "olat" {
                serialize_olat(&parse_olat_document(&text).unwrap())
            } else {
                serialize_uvo(&parse_uvo_document(&text).unwrap())
            };
            assert_eq!(again, text, "{}", p.display());
        }
    }
}

#[test]
fn golden_files_match_the_catalog() {
    for (file, name) in [("o10.olat", "O10"), ("o6.olat", "O6"), ("mo2.olat", "MO2"), ("b8.olat", "B8")] {
        let text = std::fs::read_to_string(corpus().join(file)).unwrap();
        assert_eq!(text, serialize_olat(&olat_from_ortholattice(&builtin(name).unwrap())), "{file}");
    }
    let text = std::fs::read_to_string(corpus().join("xm3.uvo")).unwrap();
    assert_eq!(text, serialize_uvo(&uvo_from_space(&m3_orthospace())));
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let l = parse_olat("# four elements\nolat v1\n\nelements: 0 a a' 1  # square\ncovers: 0 < a\ncovers: 0 < a'\ncovers: a < 1\ncovers: a' < 1\nocomp: a -> a'\n").unwrap();
    assert_eq!(l.n(), 4);
    assert_eq!(l.name(l.ocomp(l.index_of("a").unwrap())), "a'");
    assert_eq!(l.ocomp(l.bot()), l.top());
}

#[test]
fn parse_errors_carry_spans() {
    let e = parse_err("elements: 0 1\n");
    assert_eq!((e.span.line, e.span.col), (1, 1));
    assert!(e.msg.contains("header"));

    let e = parse_err("olat v2\nelements: 0 1\n");
    assert_eq!(e.span, Span { line: 1, col: 6 });

    let e = parse_err("olat v1\nelements: 0 a a 1\n");
    assert_eq!(e.span, Span { line: 2, col: 15 });
    assert_eq!(e.msg, "duplicate element `a`");

    let e = parse_err("olat v1\nelements: 0 1\ncovers: 0 < q\n");
    assert_eq!(e.span, Span { line: 3, col: 13 });
    assert_eq!(e.msg, "unknown element `q`");

    let e = parse_err("olat v1\nelements: 0 a a' 1\ncovers: 0 < a\ncovers: 0 < a'\ncovers: a < 1\ncovers: a' < 1\nocomp: a -> a'\nocomp: a -> 1\n");
    assert_eq!(e.span.line, 8);
    assert!(e.msg.starts_with("ocomp conflict"), "{}", e.msg);

    let e = parse_err("olat v1\nelements: 0 a 1\ncovers: 0 < a\ncovers: a < 1\ncovers: 0 < 1\n");
    assert_eq!(e.span.line, 5);
    assert!(e.msg.contains("`a` lies between") && e.msg.contains("list covering pairs only"), "{}", e.msg);

    let e = parse_err("olat v1\nelements: 0 a 1\ncovers: a < a\n");
    assert!(e.msg.contains("not a strict cover"));

    let e = parse_err("olat v1\nelements: 0 a a' 1\ncovers: 0 < a\ncovers: 0 < a'\ncovers: a < 1\ncovers: a' < 1\n");
    assert_eq!(e.span, Span { line: 2, col: 13 });
    assert_eq!(e.msg, "incomplete orthocomplement: no `ocomp:` entry for `a`");

    let e = parse_err("olat v1\nelements: 0 1\nmeets: 0 < 1\n");
    assert!(e.msg.contains("unknown directive"));
}

#[test]
fn validation_errors_are_not_parse_errors() {
    for f in ["m3_bad_ocomp.olat", "four_chain.olat", "o6_not_order_reversing.olat", "bowtie.olat"] {
        let text = std::fs::read_to_string(corpus().join("bad").join(f)).unwrap();
        assert!(matches!(parse_olat(&text), Err(OlatError::Validation(_))), "{f}");
    }
    let text = std::fs::read_to_string(corpus().join("bad/discrete_pair.uvo")).unwrap();
    let x = parse_uvo(&text).unwrap();
    assert!(!x.validate_uvo().unwrap().passed());
    assert!(matches!(parse_uvo("uvo v1\npoints: p\nperp: p ~ p\n"), Err(UvoError::Space { span: Some(_), .. })));
}

fn shuffled<T: Clone>(v: &[T], keys: &[u32]) -> Vec<T> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by_key(|&i| keys[i]);
    idx.into_iter().map(|i| v[i].clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn olat_round_trip_preserves_structure(i in 0usize..200, keys in prop::collection::vec(any::<u32>(), 32)) {
        let l = &pool()[i % pool().len()];
        let mut doc = olat_from_ortholattice(l);
        doc.elements = shuffled(&doc.elements, &keys);
        doc.covers = shuffled(&doc.covers, &keys);
        let text = serialize_olat(&doc);
        let back = parse_olat(&text).unwrap();
        prop_assert_eq!(serialize_olat(&parse_olat_document(&text).unwrap()), text);
        prop_assert_eq!(back.n(), l.n());
        for a in 0..l.n() {
            let a2 = back.index_of(l.name(a)).unwrap();
            prop_assert_eq!(back.name(back.ocomp(a2)), l.name(l.ocomp(a)));
            for b in 0..l.n() {
                prop_assert_eq!(back.leq(a2, back.index_of(l.name(b)).unwrap()), l.leq(a, b));
            }
        }
    }

    #[test]
    fn uvo_round_trip_preserves_structure(i in 0usize..200, keys in prop::collection::vec(any::<u32>(), 64)) {
        let l = &pool()[i % pool().len()];
        prop_assume!(l.n() <= 12);
        let x = dual_space(l).space;
        let mut doc = uvo_from_space(&x);
        doc.points = shuffled(&doc.points, &keys);
        doc.perp = shuffled(&doc.perp, &keys);
        let text = serialize_uvo(&doc);
        let back = parse_uvo(&text).unwrap();
        prop_assert_eq!(back.m(), x.m());
        for p in 0..x.m() {
            let p2 = back.index_of(x.name(p)).unwrap();
            for q in 0..x.m() {
                let q2 = back.index_of(x.name(q)).unwrap();
                prop_assert_eq!(back.leq(p2, q2), x.leq(p, q));
                prop_assert_eq!(back.perp(p2, q2), x.perp(p, q));
            }
        }
        prop_assert_eq!(serialize_uvo(&uvo_from_space(&back)).len(), serialize_uvo(&uvo_from_space(&x)).len());
    }
}

fn edges(dot: &str, style: &str) -> usize {
    dot.lines().filter(|l| l.contains("->") && l.contains(style)).count()
}

fn nodes(dot: &str) -> usize {
    dot.lines().filter(|l| l.trim_start().starts_with('n') && l.contains("[label=")).count()
}

#[test]
fn dot_export() {
    let fp = orthoduality::dictionary::filter_poset(&builtin_lattice("M3_lattice_only").unwrap());
    let d = space_to_dot(&fp, "M3", false);
    assert_eq!((nodes(&d), edges(&d, "dotted")), (4, 3));

    let o2 = dual_space(&builtin("O2").unwrap()).space;
    let d = space_to_dot(&o2, "O2", true);
    assert_eq!((nodes(&d), edges(&d, "dotted"), edges(&d, "dashed")), (1, 0, 0));
    let d = lattice_to_dot(&builtin("O2").unwrap(), "O2");
    assert_eq!((nodes(&d), edges(&d, "dir=none")), (2, 1));

    let z = dual_space_named(&builtin("O2").unwrap(), |_| "z".to_string()).space;
    let s = uvo_sum(&z, &m3_orthospace()).unwrap().space;
    let d = space_to_dot(&s, "sum", true);
    assert_eq!((nodes(&d), edges(&d, "dotted"), edges(&d, "dashed")), (9, 13, 13));
    assert_eq!(d, space_to_dot(&s, "sum", true));
    assert!(d.starts_with("digraph") && d.contains("rankdir=BT"));
}
