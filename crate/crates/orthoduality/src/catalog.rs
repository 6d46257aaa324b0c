//! Named small lattices, exhaustive enumeration, and homomorphism search.

use std::collections::HashSet;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{cap_check, Error, Result};
use crate::lattice::{Lattice, LatticeHom, Ortholattice};
use crate::uvo::UvoSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Ortholattice,
    LatticeOnly,
}

/// Stable catalog names, in listing order.
pub const CATALOG: &[(&str, EntryKind)] = &[
    ("O2", EntryKind::Ortholattice),
    ("TwoByTwo", EntryKind::Ortholattice),
    ("O6", EntryKind::Ortholattice),
    ("O10", EntryKind::Ortholattice),
    ("MO1", EntryKind::Ortholattice),
    ("MO2", EntryKind::Ortholattice),
    ("MO3", EntryKind::Ortholattice),
    ("B4", EntryKind::Ortholattice),
    ("B8", EntryKind::Ortholattice),
    ("B16", EntryKind::Ortholattice),
    ("M3_lattice_only", EntryKind::LatticeOnly),
    ("N5_lattice_only", EntryKind::LatticeOnly),
];

pub fn ortholattice_names() -> Vec<&'static str> {
    CATALOG.iter().filter(|(_, k)| *k == EntryKind::Ortholattice).map(|(n, _)| *n).collect()
}

fn build_lattice(elements: &str, covers: &[(&str, &str)]) -> Lattice {
    let names: Vec<String> = elements.split_whitespace().map(String::from).collect();
    let idx = |s: &str| names.iter().position(|n| n == s).unwrap_or_else(|| panic!("unknown element {s}"));
    let pairs: Vec<(usize, usize)> = covers.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    Lattice::from_covers(names.clone(), &pairs).expect("catalog entries are lattices")
}

fn build(elements: &str, covers: &[(&str, &str)], ocomp: &[(&str, &str)]) -> Ortholattice {
    let l = build_lattice(elements, covers);
    let mut oc: Vec<usize> = (0..l.n()).collect();
    oc[l.bot()] = l.top();
    oc[l.top()] = l.bot();
    for &(a, b) in ocomp {
        let (a, b) = (l.index_of(a).unwrap(), l.index_of(b).unwrap());
        oc[a] = b;
        oc[b] = a;
    }
    Ortholattice::new(l, oc).expect("catalog entries are ortholattices")
}

/// `MOₖ`: `0`, `1` and `k` pairs `{x, x'}` of atoms.
pub fn mo(k: usize) -> Ortholattice {
    let letters: Vec<String> = (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let mut elems = vec!["0".to_string()];
    for l in &letters {
        elems.push(l.clone());
        elems.push(format!("{l}'"));
    }
    elems.push("1".into());
    let joined = elems.join(" ");
    let mids: Vec<&str> = elems[1..elems.len() - 1].iter().map(|s| s.as_str()).collect();
    let mut covers = Vec::new();
    for &m in &mids {
        covers.push(("0", m));
        covers.push((m, "1"));
    }
    let pairs: Vec<(String, String)> = letters.iter().map(|l| (l.clone(), format!("{l}'"))).collect();
    let pairs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    build(&joined, &covers, &pairs)
}

/// The Boolean algebra of subsets of `k` atoms named `p, q, r, s, ...`; `0` and `1` for the bounds.
pub fn boolean(k: usize) -> Ortholattice {
    let letters: Vec<char> = "pqrstuvw".chars().take(k).collect();
    let n = 1usize << k;
    let full = n - 1;
    let name = |m: usize| -> String {
        if m == 0 {
            "0".into()
        } else if m == full {
            "1".into()
        } else {
            (0..k).filter(|i| m >> i & 1 == 1).map(|i| letters[i]).collect()
        }
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&m| (m.count_ones(), m));
    let names = order.iter().map(|&m| name(m)).collect();
    let leq: Vec<Vec<bool>> = order.iter().map(|&a| order.iter().map(|&b| a & !b == 0).collect()).collect();
    let pos = |m: usize| order.iter().position(|&o| o == m).unwrap();
    let ocomp = order.iter().map(|&m| pos(full & !m)).collect();
    crate::lattice::validate_ortholattice(crate::lattice::RawOrtholattice { names, leq, ocomp })
        .expect("Boolean algebras are ortholattices")
}

pub fn builtin(name: &str) -> Result<Ortholattice> {
    Ok(match name {
        "O2" => build("0 1", &[("0", "1")], &[]),
        "TwoByTwo" => build("0 a a' 1", &[("0", "a"), ("0", "a'"), ("a", "1"), ("a'", "1")], &[("a", "a'")]),
        "O6" => build(
            "0 a b b' a' 1",
            &[("0", "a"), ("a", "b'"), ("b'", "1"), ("0", "b"), ("b", "a'"), ("a'", "1")],
            &[("a", "a'"), ("b", "b'")],
        ),
        "O10" => build(
            "0 d a a' d' b b' c c' 1",
            &[
                ("0", "a"),
                ("0", "a'"),
                ("0", "d"),
                ("0", "d'"),
                ("0", "c'"),
                ("0", "b'"),
                ("c'", "b"),
                ("b'", "c"),
                ("a", "1"),
                ("a'", "1"),
                ("d", "1"),
                ("d'", "1"),
                ("b", "1"),
                ("c", "1"),
            ],
            &[("a", "a'"), ("b", "b'"), ("c", "c'"), ("d", "d'")],
        ),
        "MO1" => mo(1),
        "MO2" => mo(2),
        "MO3" => mo(3),
        "B4" => boolean(2),
        "B8" => boolean(3),
        "B16" => boolean(4),
        "M3_lattice_only" | "N5_lattice_only" => {
            return Err(Error::UnknownName(format!("{name} is a plain lattice without orthocomplement")))
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

pub fn builtin_lattice(name: &str) -> Result<Lattice> {
    match name {
        "M3_lattice_only" => Ok(build_lattice(
            "0 a b c 1",
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )),
        "N5_lattice_only" => Ok(build_lattice("0 c a b 1", &[("0", "c"), ("c", "a"), ("a", "1"), ("0", "b"), ("b", "1")])),
        _ => builtin(name).map(|l| l.lattice().clone()),
    }
}

/// The orthospace drawn for the dual of M₃: `x` below `y1, y2, y3`, with `yᵢ ⊥ yⱼ` for `i ≠ j`.
pub fn m3_orthospace() -> UvoSpace {
    let names = ["x", "y1", "y2", "y3"].iter().map(|s| s.to_string()).collect();
    UvoSpace::from_pairs(names, &[(0, 1), (0, 2), (0, 3)], &[(1, 2), (2, 3), (1, 3)]).expect("well-formed")
}

pub const ENUMERATION_CAP: usize = 10;

fn canon_lattice(up: &[BitSet]) -> CanonicalCode {
    canonical_form(up, None).0
}

/// One lattice per isomorphism class, for each size `1..=n_max`, by adjoining atoms.
pub fn enumerate_lattices(n_max: usize) -> Result<Vec<Lattice>> {
    cap_check("enumeration size", n_max, ENUMERATION_CAP)?;
    let mut out: Vec<Vec<BitSet>> = Vec::new();
    if n_max == 0 {
        return Ok(Vec::new());
    }
    out.push(vec![BitSet::singleton(0)]);
    if n_max >= 2 {
        out.push(vec![BitSet::from_indices([0, 1]), BitSet::singleton(1)]);
    }
    let mut level: Vec<Vec<BitSet>> = if n_max >= 2 { vec![out[1].clone()] } else { vec![] };
    for n in 2..n_max {
        let mut seen: HashSet<CanonicalCode> = HashSet::new();
        let mut next = Vec::new();
        for up in &level {
            for f in atom_extensions(up) {
                let mut new_up = up.clone();
                new_up[0].insert(n);
                new_up.push(f.with(n));
                let code = canon_lattice(&new_up);
                if seen.insert(code) {
                    next.push(new_up);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out.into_iter().map(|up| lattice_from_up(&up)).collect())
}

/// Element 0 is the bottom; the new atom gets upper set `F ⊆ L ∖ {0}`.
fn atom_extensions(up: &[BitSet]) -> Vec<BitSet> {
    let n = up.len();
    let mut down = vec![BitSet::EMPTY; n];
    for a in 0..n {
        for b in up[a].iter() {
            down[b].insert(a);
        }
    }
    let meet = |a: usize, b: usize| -> usize {
        let lbs = down[a].intersection(down[b]);
        lbs.iter().find(|&m| lbs.is_subset(down[m])).unwrap()
    };
    let nonzero = BitSet::full(n).difference(BitSet::singleton(0));
    let mut out = Vec::new();
    let mut antichain = Vec::new();
    fn antichains(
        up: &[BitSet],
        down: &[BitSet],
        cands: &[usize],
        i: usize,
        blocked: BitSet,
        cur: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if i == cands.len() {
            emit(cur);
            return;
        }
        antichains(up, down, cands, i + 1, blocked, cur, emit);
        let c = cands[i];
        if !blocked.contains(c) {
            cur.push(c);
            antichains(up, down, cands, i + 1, blocked.union(up[c]).union(down[c]), cur, emit);
            cur.pop();
        }
    }
    let cands: Vec<usize> = nonzero.iter().collect();
    antichains(up, &down, &cands, 0, BitSet::EMPTY, &mut antichain, &mut |ac: &[usize]| {
        if ac.is_empty() {
            return;
        }
        let f = ac.iter().fold(BitSet::EMPTY, |acc, &a| acc.union(up[a]));
        let meet_closed = f.iter().all(|a| f.iter().all(|b| {
            let m = meet(a, b);
            m == 0 || f.contains(m)
        }));
        if !meet_closed {
            return;
        }
        let joins_exist = nonzero.iter().all(|x| {
            let ub = f.intersection(up[x]);
            ub.iter().any(|j| ub.is_subset(up[j]))
        });
        if joins_exist {
            out.push(f);
        }
    });
    out
}

fn lattice_from_up(up: &[BitSet]) -> Lattice {
    let n = up.len();
    let (_, perm) = canonical_form(up, None);
    let pos: Vec<usize> = {
        let mut p = vec![0; n];
        for (i, &a) in perm.iter().enumerate() {
            p[a] = i;
        }
        p
    };
    let new_up: Vec<BitSet> = perm.iter().map(|&a| up[a].iter().map(|b| pos[b]).collect()).collect();
    let mut k = 0;
    let names = (0..n)
        .map(|i| {
            if new_up[i] == BitSet::full(n) {
                "0".to_string()
            } else if new_up[i] == BitSet::singleton(i) {
                "1".to_string()
            } else {
                k += 1;
                format!("e{k}")
            }
        })
        .collect();
    let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| new_up[a].contains(b)).collect()).collect();
    Lattice::from_order(names, &leq).expect("enumerated structures are lattices")
}

/// All orthocomplementations of `l`, by backtracking on complementary pairs.
pub fn orthocomplementations(l: &Lattice) -> Vec<Vec<usize>> {
    let n = l.n();
    if n == 1 {
        return vec![vec![0]];
    }
    let mut oc = vec![usize::MAX; n];
    oc[l.bot()] = l.top();
    oc[l.top()] = l.bot();
    let mut out = Vec::new();
    fn consistent(l: &Lattice, oc: &[usize], a: usize) -> bool {
        let b = oc[a];
        (0..l.n()).all(|c| {
            let d = oc[c];
            d == usize::MAX || ((!l.leq(a, c) || l.leq(d, b)) && (!l.leq(c, a) || l.leq(b, d)))
        })
    }
    fn go(l: &Lattice, oc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let a = match oc.iter().position(|&x| x == usize::MAX) {
            None => {
                out.push(oc.clone());
                return;
            }
            Some(a) => a,
        };
        for b in 0..l.n() {
            if b == a || oc[b] != usize::MAX || l.meet(a, b) != l.bot() || l.join(a, b) != l.top() {
                continue;
            }
            oc[a] = b;
            oc[b] = a;
            if consistent(l, oc, a) && consistent(l, oc, b) {
                go(l, oc, out);
            }
            oc[a] = usize::MAX;
            oc[b] = usize::MAX;
        }
    }
    go(l, &mut oc, &mut out);
    out.retain(|o| Ortholattice::new(l.clone(), o.clone()).is_ok());
    out
}

/// One ortholattice per isomorphism class, for each size `1..=n_max`.
pub fn enumerate_ortholattices(n_max: usize) -> Result<Vec<Ortholattice>> {
    let mut out = Vec::new();
    for l in enumerate_lattices(n_max)? {
        if l.n() > 1 && l.n() % 2 == 1 {
            continue;
        }
        let up: Vec<BitSet> = (0..l.n()).map(|a| l.up(a)).collect();
        let mut seen = HashSet::new();
        for oc in orthocomplementations(&l) {
            if seen.insert(canonical_form(&up, Some(&oc)).0) {
                out.push(Ortholattice::new(l.clone(), oc).expect("filtered above"));
            }
        }
    }
    Ok(out)
}

pub const ALL_HOMS_CAP: usize = 8;

/// Every homomorphism `l → r`, found by propagating forced values over elements ordered by height.
pub fn all_homs(l: &Arc<Ortholattice>, r: &Arc<Ortholattice>) -> Result<Vec<LatticeHom>> {
    cap_check("homomorphism search source", l.n(), ALL_HOMS_CAP)?;
    cap_check("homomorphism search target", r.n(), ALL_HOMS_CAP)?;
    let mut order: Vec<usize> = (0..l.n()).collect();
    order.sort_by_key(|&a| (l.down(a).len(), a));
    let mut map = vec![usize::MAX; l.n()];
    let ok = assign(l, r, &mut map, l.bot(), r.bot()) && assign(l, r, &mut map, l.top(), r.top());
    let mut out = Vec::new();
    if ok {
        hom_search(l, r, &order, map, &mut out);
    }
    let homs = out
        .into_iter()
        .map(|m| LatticeHom::new(l.clone(), r.clone(), m))
        .collect::<Result<Vec<_>>>()?;
    Ok(homs)
}

fn assign(l: &Ortholattice, r: &Ortholattice, map: &mut [usize], a: usize, v: usize) -> bool {
    let mut stack = vec![(a, v)];
    while let Some((a, v)) = stack.pop() {
        if map[a] != usize::MAX {
            if map[a] != v {
                return false;
            }
            continue;
        }
        map[a] = v;
        stack.push((l.ocomp(a), r.ocomp(v)));
        for b in 0..l.n() {
            if map[b] != usize::MAX {
                stack.push((l.meet(a, b), r.meet(v, map[b])));
                stack.push((l.join(a, b), r.join(v, map[b])));
            }
        }
    }
    true
}

fn hom_search(l: &Ortholattice, r: &Ortholattice, order: &[usize], map: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let a = match order.iter().find(|&&a| map[a] == usize::MAX) {
        None => {
            out.push(map);
            return;
        }
        Some(&a) => a,
    };
    for v in 0..r.n() {
        let mut m = map.clone();
        if assign(l, r, &mut m, a, v) {
            hom_search(l, r, order, m, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for name in ortholattice_names() {
            builtin(name).unwrap();
        }
        assert!(builtin("M3_lattice_only").is_err());
        assert!(matches!(builtin("nope"), Err(Error::UnknownName(_))));
        assert_eq!(builtin_lattice("M3_lattice_only").unwrap().n(), 5);
    }

    #[test]
    fn small_lattice_counts() {
        let ls = enumerate_lattices(6).unwrap();
        let counts: Vec<usize> = (1..=6).map(|n| ls.iter().filter(|l| l.n() == n).count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15]);
    }
}
