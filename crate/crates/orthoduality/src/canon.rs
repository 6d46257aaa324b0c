//! Canonical forms of finite posets with an optional involution, by colour refinement
//! and individualization.

use std::collections::HashMap;

use crate::bitset::BitSet;

/// A labelling-independent code; equal codes mean isomorphic structures.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(pub Vec<u64>);

/// Canonical code and a permutation `perm[position] = element` realizing it.
pub fn canonical_form(up: &[BitSet], ocomp: Option<&[usize]>) -> (CanonicalCode, Vec<usize>) {
    let n = up.len();
    let mut down = vec![BitSet::EMPTY; n];
    for a in 0..n {
        for b in up[a].iter() {
            down[b].insert(a);
        }
    }
    let s = Structure { up, down: &down, ocomp };
    let init: Vec<u32> = (0..n).map(|a| (up[a].len() * 64 + down[a].len()) as u32).collect();
    let colors = s.refine(rank(&init));
    let mut best: Option<(CanonicalCode, Vec<usize>)> = None;
    s.search(colors, BitSet::EMPTY, &mut best);
    best.expect("search visits at least one leaf")
}

struct Structure<'a> {
    up: &'a [BitSet],
    down: &'a [BitSet],
    ocomp: Option<&'a [usize]>,
}

fn rank<T: Ord + Clone + std::hash::Hash>(sig: &[T]) -> Vec<u32> {
    let mut uniq: Vec<T> = sig.to_vec();
    uniq.sort();
    uniq.dedup();
    let pos: HashMap<&T, u32> = uniq.iter().enumerate().map(|(i, t)| (t, i as u32)).collect();
    sig.iter().map(|t| pos[t]).collect()
}

fn count(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&m| m as usize + 1)
}

impl Structure<'_> {
    fn n(&self) -> usize {
        self.up.len()
    }

    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        loop {
            let sig: Vec<(u32, Vec<u32>, Vec<u32>, u32)> = (0..self.n())
                .map(|a| {
                    let mut u: Vec<u32> = self.up[a].iter().filter(|&b| b != a).map(|b| colors[b]).collect();
                    let mut d: Vec<u32> = self.down[a].iter().filter(|&b| b != a).map(|b| colors[b]).collect();
                    u.sort_unstable();
                    d.sort_unstable();
                    let o = self.ocomp.map_or(0, |oc| colors[oc[a]]);
                    (colors[a], u, d, o)
                })
                .collect();
            let next = rank(&sig);
            if count(&next) == count(&colors) {
                return next;
            }
            colors = next;
        }
    }

    fn code(&self, colors: &[u32]) -> (CanonicalCode, Vec<usize>) {
        let n = self.n();
        let mut perm = vec![0; n];
        for a in 0..n {
            perm[colors[a] as usize] = a;
        }
        let mut code = Vec::with_capacity(2 * n);
        for &a in &perm {
            code.push(self.up[a].iter().fold(0u64, |acc, b| acc | (1u64 << colors[b])));
        }
        if let Some(oc) = self.ocomp {
            code.extend(perm.iter().map(|&a| colors[oc[a]] as u64));
        }
        (CanonicalCode(code), perm)
    }

    fn is_automorphism(&self, sigma: &[usize]) -> bool {
        let n = self.n();
        (0..n).all(|a| {
            self.up[a].iter().map(|b| sigma[b]).collect::<BitSet>() == self.up[sigma[a]]
                && self.ocomp.map_or(true, |oc| sigma[oc[a]] == oc[sigma[a]])
        })
    }

    /// The swap of `u` and `v` (with their images under the involution), if it fixes `fixed`.
    fn swap_of(&self, u: usize, v: usize, fixed: BitSet) -> Option<Vec<usize>> {
        let mut sigma: Vec<usize> = (0..self.n()).collect();
        sigma[u] = v;
        sigma[v] = u;
        if let Some(oc) = self.ocomp {
            let (pu, pv) = (oc[u], oc[v]);
            if pu == v {
                // u and v are each other's complements; the plain swap already commutes
            } else if pu == u || pv == v || pu == pv {
                return None;
            } else {
                sigma[pu] = pv;
                sigma[pv] = pu;
            }
        }
        if fixed.iter().any(|a| sigma[a] != a) {
            return None;
        }
        Some(sigma)
    }

    fn search(&self, colors: Vec<u32>, fixed: BitSet, best: &mut Option<(CanonicalCode, Vec<usize>)>) {
        let n = self.n();
        if count(&colors) == n {
            let leaf = self.code(&colors);
            if best.as_ref().map_or(true, |b| leaf.0 < b.0) {
                *best = Some(leaf);
            }
            return;
        }
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..n as u32).find(|&c| sizes[c as usize] > 1).unwrap();
        let cell: Vec<usize> = (0..n).filter(|&a| colors[a] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            let redundant = tried.iter().any(|&u| self.swap_of(u, v, fixed).map_or(false, |s| self.is_automorphism(&s)));
            if redundant {
                continue;
            }
            tried.push(v);
            let split: Vec<u64> = (0..n).map(|a| colors[a] as u64 * 2 + u64::from(colors[a] == target && a != v)).collect();
            let next = self.refine(rank(&split));
            self.search(next, fixed.with(v), best);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_chains_agree() {
        let a = vec![BitSet::from_indices([0, 1, 2]), BitSet::from_indices([1, 2]), BitSet::from_indices([2])];
        let b = vec![BitSet::from_indices([0]), BitSet::from_indices([0, 1]), BitSet::from_indices([0, 1, 2])];
        assert_eq!(canonical_form(&a, None).0, canonical_form(&b, None).0);
    }

    #[test]
    fn chain_and_diamond_differ() {
        let chain = vec![
            BitSet::from_indices([0, 1, 2, 3]),
            BitSet::from_indices([1, 2, 3]),
            BitSet::from_indices([2, 3]),
            BitSet::from_indices([3]),
        ];
        let diamond = vec![
            BitSet::from_indices([0, 1, 2, 3]),
            BitSet::from_indices([1, 3]),
            BitSet::from_indices([2, 3]),
            BitSet::from_indices([3]),
        ];
        assert_ne!(canonical_form(&chain, None).0, canonical_form(&diamond, None).0);
    }
}
