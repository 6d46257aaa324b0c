//! Graphviz export. Bottom-to-top layout, undirected edges, nodes in index order.

use std::fmt::Write;

use crate::lattice::Lattice;
use crate::uvo::UvoSpace;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn header(title: &str, names: &[String]) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {} {{", quote(title)).unwrap();
    s.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for (i, n) in names.iter().enumerate() {
        writeln!(s, "  n{i} [label={}];", quote(n)).unwrap();
    }
    s
}

/// Hasse diagram with solid cover edges.
pub fn lattice_to_dot(l: &Lattice, title: &str) -> String {
    let mut s = header(title, l.names());
    for (a, b) in l.covers() {
        writeln!(s, "  n{a} -> n{b} [dir=none];").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Specialization covers as dotted edges, optionally ⊥ as dashed labelled edges.
pub fn space_to_dot(x: &UvoSpace, title: &str, show_perp: bool) -> String {
    let mut s = header(title, x.names());
    for (a, b) in x.covers() {
        writeln!(s, "  n{a} -> n{b} [dir=none, style=dotted];").unwrap();
    }
    if show_perp {
        for (a, b) in x.perp_pairs().into_iter().filter(|&(a, b)| a < b) {
            writeln!(s, "  n{a} -> n{b} [dir=none, style=dashed, label=\"⊥\", constraint=false];").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    #[test]
    fn o2_has_two_nodes_one_edge() {
        let d = lattice_to_dot(&builtin("O2").unwrap(), "O2");
        assert_eq!(d.matches("[label=").count(), 2);
        assert_eq!(d.matches(" -> ").count(), 1);
    }

    #[test]
    fn labels_are_escaped() {
        let l = Lattice::from_covers(vec!["\"b\"".into(), "t\\".into()], &[(0, 1)]).unwrap();
        let d = lattice_to_dot(&l, "q");
        assert!(d.contains(r#"[label="\"b\""]"#) && d.contains(r#"[label="t\\"]"#));
    }
}
