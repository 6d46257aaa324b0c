//! Finite bounded lattices and ortholattices.
//!
//! Elements are dense indices `0..n`; the order, meet and join tables are
//! computed once when a structure is validated.

use std::collections::{HashMap, HashSet};
use std::ops::Deref;
use std::sync::Arc;

use crate::bitset::{BitSet, MAX_BITS};
use crate::error::{Error, Result, ValidationError};

/// A finite bounded lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    names: Vec<String>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    meet: Vec<u8>,
    join: Vec<u8>,
    bot: usize,
    top: usize,
}

impl Lattice {
    /// Validates an order matrix `leq[a][b] ⟺ a ≤ b`.
    pub fn from_order(names: Vec<String>, leq: &[Vec<bool>]) -> std::result::Result<Lattice, ValidationError> {
        let n = names.len();
        if n == 0 {
            return Err(ValidationError::EmptyCarrier);
        }
        if n > MAX_BITS {
            return Err(ValidationError::SizeCapExceeded { size: n, cap: MAX_BITS });
        }
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(ValidationError::NotAPoset {
                law: "square order matrix",
                witness: vec![],
            });
        }
        let mut up = vec![BitSet::EMPTY; n];
        for a in 0..n {
            for b in 0..n {
                if leq[a][b] {
                    up[a].insert(b);
                }
            }
        }
        Self::from_up_sets(names, up)
    }

    /// Builds the order as the reflexive-transitive closure of `covers` (pairs `a < b`).
    pub fn from_covers(
        names: Vec<String>,
        covers: &[(usize, usize)],
    ) -> std::result::Result<Lattice, ValidationError> {
        let n = names.len();
        if n == 0 {
            return Err(ValidationError::EmptyCarrier);
        }
        if n > MAX_BITS {
            return Err(ValidationError::SizeCapExceeded { size: n, cap: MAX_BITS });
        }
        let up = transitive_closure(n, covers);
        Self::from_up_sets(names, up)
    }

    fn from_up_sets(names: Vec<String>, up: Vec<BitSet>) -> std::result::Result<Lattice, ValidationError> {
        let n = names.len();
        check_partial_order(&up).map_err(|(law, w)| ValidationError::NotAPoset {
            law,
            witness: w.iter().map(|&i| names[i].clone()).collect(),
        })?;
        let mut down = vec![BitSet::EMPTY; n];
        for a in 0..n {
            for b in up[a].iter() {
                down[b].insert(a);
            }
        }
        let mut meet = vec![0u8; n * n];
        let mut join = vec![0u8; n * n];
        for a in 0..n {
            for b in a..n {
                let lbs = down[a].intersection(down[b]);
                let m = lbs.iter().find(|&m| lbs.is_subset(down[m])).ok_or_else(|| {
                    ValidationError::NotALattice {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        missing: "meet",
                    }
                })?;
                let ubs = up[a].intersection(up[b]);
                let j = ubs.iter().find(|&j| ubs.is_subset(up[j])).ok_or_else(|| {
                    ValidationError::NotALattice {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        missing: "join",
                    }
                })?;
                meet[a * n + b] = m as u8;
                meet[b * n + a] = m as u8;
                join[a * n + b] = j as u8;
                join[b * n + a] = j as u8;
            }
        }
        let all = BitSet::full(n);
        let bot = (0..n).find(|&a| up[a] == all).ok_or_else(|| ValidationError::NotALattice {
            a: names[0].clone(),
            b: names[0].clone(),
            missing: "least element",
        })?;
        let top = (0..n).find(|&a| down[a] == all).ok_or_else(|| ValidationError::NotALattice {
            a: names[0].clone(),
            b: names[0].clone(),
            missing: "greatest element",
        })?;
        Ok(Lattice { names, up, down, meet, join, bot, top })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }
    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n() + b] as usize
    }
    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n() + b] as usize
    }
    pub fn bot(&self) -> usize {
        self.bot
    }
    pub fn top(&self) -> usize {
        self.top
    }
    /// `↑a` as a set of elements.
    pub fn up(&self, a: usize) -> BitSet {
        self.up[a]
    }
    /// `↓a` as a set of elements.
    pub fn down(&self, a: usize) -> BitSet {
        self.down[a]
    }
    pub fn carrier(&self) -> BitSet {
        BitSet::full(self.n())
    }
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n()).map(|a| (0..self.n()).map(|b| self.leq(a, b)).collect()).collect()
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.top, |m, a| self.meet(m, a))
    }
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.bot, |j, a| self.join(j, a))
    }

    /// Hasse diagram edges `(a, b)` with `a ⋖ b`, in index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n() {
            for b in self.up[a].iter() {
                if a != b && self.up[a].intersection(self.down[b]) == BitSet::from_indices([a, b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn atoms(&self) -> BitSet {
        (0..self.n())
            .filter(|&a| a != self.bot && self.down[a] == BitSet::from_indices([self.bot, a]))
            .collect()
    }

    /// Every nonzero element lies above some atom.
    pub fn is_atomic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.n()).filter(|&a| a != self.bot).all(|a| self.down[a].intersects(atoms))
    }

    /// Every nonzero element is the join of the atoms below it.
    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.n()).all(|a| self.join_all(self.down[a].intersection(atoms).iter()) == a)
    }

    pub fn is_atomless(&self) -> bool {
        self.atoms().is_empty()
    }

    /// Lexicographically smallest M₃ sublattice.
    pub fn find_m3(&self) -> Option<Sublattice5> {
        let n = self.n();
        let mut best: Option<Sublattice5> = None;
        for x in 0..n {
            for y in x + 1..n {
                let o = self.meet(x, y);
                let i = self.join(x, y);
                if o == x || o == y {
                    continue;
                }
                for z in y + 1..n {
                    if self.meet(x, z) == o
                        && self.meet(y, z) == o
                        && self.join(x, z) == i
                        && self.join(y, z) == i
                    {
                        let w = Sublattice5 { kind: SubKind::M3, elems: [o, x, y, z, i] };
                        if best.map_or(true, |b| w.sorted() < b.sorted()) {
                            best = Some(w);
                        }
                    }
                }
            }
        }
        best
    }

    /// Lexicographically smallest N₅ sublattice, reported as `[o, low, high, side, i]`.
    pub fn find_n5(&self) -> Option<Sublattice5> {
        let n = self.n();
        let mut best: Option<Sublattice5> = None;
        for low in 0..n {
            for high in self.up[low].iter() {
                if high == low {
                    continue;
                }
                for side in 0..n {
                    let o = self.meet(side, high);
                    let i = self.join(side, low);
                    if self.meet(side, low) != o || self.join(side, high) != i {
                        continue;
                    }
                    let e = [o, low, high, side, i];
                    if BitSet::from_indices(e).len() != 5 {
                        continue;
                    }
                    let w = Sublattice5 { kind: SubKind::N5, elems: e };
                    if best.map_or(true, |b| w.sorted() < b.sorted()) {
                        best = Some(w);
                    }
                }
            }
        }
        best
    }

    /// Distributive iff no M₃ or N₅ sublattice; the witness prefers M₃.
    pub fn is_distributive(&self) -> (bool, Option<Sublattice5>) {
        match self.find_m3().or_else(|| self.find_n5()) {
            Some(w) => (false, Some(w)),
            None => (true, None),
        }
    }

    /// First triple violating `a∧(b∨c) = (a∧b)∨(a∧c)` or its dual.
    pub fn distributive_law_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let l1 = self.meet(a, self.join(b, c));
                    let r1 = self.join(self.meet(a, b), self.meet(a, c));
                    let l2 = self.join(a, self.meet(b, c));
                    let r2 = self.meet(self.join(a, b), self.join(a, c));
                    if l1 != r1 || l2 != r2 {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// `x ≤ z ⟹ x ∨ (y ∧ z) = (x ∨ y) ∧ z`; first failing `(x, y, z)`.
    pub fn is_modular(&self) -> (bool, Option<(usize, usize, usize)>) {
        let n = self.n();
        for x in 0..n {
            for z in self.up[x].iter() {
                for y in 0..n {
                    if self.join(x, self.meet(y, z)) != self.meet(self.join(x, y), z) {
                        return (false, Some((x, y, z)));
                    }
                }
            }
        }
        (true, None)
    }
}

/// A five-element sublattice witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sublattice5 {
    pub kind: SubKind,
    /// M₃: `[o, x, y, z, i]`; N₅: `[o, low, high, side, i]`.
    pub elems: [usize; 5],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubKind {
    M3,
    N5,
}

impl Sublattice5 {
    pub fn sorted(&self) -> [usize; 5] {
        let mut e = self.elems;
        e.sort_unstable();
        e
    }
}

pub(crate) fn transitive_closure(n: usize, pairs: &[(usize, usize)]) -> Vec<BitSet> {
    let mut up: Vec<BitSet> = (0..n).map(BitSet::singleton).collect();
    for &(a, b) in pairs {
        up[a].insert(b);
    }
    for k in 0..n {
        for a in 0..n {
            if up[a].contains(k) {
                up[a] = up[a].union(up[k]);
            }
        }
    }
    up
}

/// Checks that `up[a]` (the set of `b` with `a ≤ b`) defines a partial order.
pub(crate) fn check_partial_order(up: &[BitSet]) -> std::result::Result<(), (&'static str, Vec<usize>)> {
    let n = up.len();
    for a in 0..n {
        if !up[a].contains(a) {
            return Err(("reflexivity", vec![a]));
        }
    }
    for a in 0..n {
        for b in up[a].iter() {
            if b != a && up[b].contains(a) {
                return Err(("antisymmetry", vec![a, b]));
            }
        }
    }
    for a in 0..n {
        for b in up[a].iter() {
            if !up[b].is_subset(up[a]) {
                let c = up[b].difference(up[a]).first().unwrap();
                return Err(("transitivity", vec![a, b, c]));
            }
        }
    }
    Ok(())
}

/// Unvalidated ortholattice data: an order matrix and a unary map.
#[derive(Clone, Debug)]
pub struct RawOrtholattice {
    pub names: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub ocomp: Vec<usize>,
}

/// A validated finite ortholattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ortholattice {
    lattice: Lattice,
    ocomp: Vec<usize>,
}

impl Deref for Ortholattice {
    type Target = Lattice;
    fn deref(&self) -> &Lattice {
        &self.lattice
    }
}

pub fn validate_ortholattice(raw: RawOrtholattice) -> std::result::Result<Ortholattice, ValidationError> {
    let lattice = Lattice::from_order(raw.names, &raw.leq)?;
    Ortholattice::new(lattice, raw.ocomp)
}

impl Ortholattice {
    /// Checks the ortholattice laws in a fixed order and reports the first failure.
    pub fn new(lattice: Lattice, ocomp: Vec<usize>) -> std::result::Result<Ortholattice, ValidationError> {
        let n = lattice.n();
        if ocomp.len() != n {
            return Err(ValidationError::MalformedOcomp(format!(
                "{} entries for {} elements",
                ocomp.len(),
                n
            )));
        }
        if let Some(a) = (0..n).find(|&a| ocomp[a] >= n) {
            return Err(ValidationError::MalformedOcomp(format!(
                "image of {} out of range",
                lattice.name(a)
            )));
        }
        let nm = |a: usize| lattice.name(a).to_string();
        for a in 0..n {
            if ocomp[ocomp[a]] != a {
                return Err(ValidationError::NotInvolutive(nm(a)));
            }
        }
        for a in 0..n {
            if lattice.meet(a, ocomp[a]) != lattice.bot() {
                return Err(ValidationError::ComplementLawFails(nm(a)));
            }
        }
        for a in 0..n {
            for b in lattice.up(a).iter() {
                if !lattice.leq(ocomp[b], ocomp[a]) {
                    return Err(ValidationError::NotOrderReversing(nm(a), nm(b)));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let m = lattice.meet(a, b);
                let j = lattice.join(a, b);
                if ocomp[m] != lattice.join(ocomp[a], ocomp[b])
                    || ocomp[j] != lattice.meet(ocomp[a], ocomp[b])
                {
                    return Err(ValidationError::DeMorganFails(nm(a), nm(b)));
                }
            }
        }
        Ok(Ortholattice { lattice, ocomp })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }
    #[inline]
    pub fn ocomp(&self, a: usize) -> usize {
        self.ocomp[a]
    }
    pub fn ocomp_table(&self) -> &[usize] {
        &self.ocomp
    }

    pub fn to_raw(&self) -> RawOrtholattice {
        RawOrtholattice {
            names: self.names().to_vec(),
            leq: self.leq_matrix(),
            ocomp: self.ocomp.clone(),
        }
    }

    /// Same structure with new element labels.
    pub fn renamed(&self, names: Vec<String>) -> Ortholattice {
        assert_eq!(names.len(), self.n());
        let mut lattice = self.lattice.clone();
        lattice.names = names;
        Ortholattice { lattice, ocomp: self.ocomp.clone() }
    }

    /// `a ≤ b ⟹ b = a ∨ (b ∧ a⊥)`; first failing pair.
    pub fn is_orthomodular(&self) -> (bool, Option<(usize, usize)>) {
        for a in 0..self.n() {
            for b in self.up(a).iter() {
                if self.join(a, self.meet(b, self.ocomp(a))) != b {
                    return (false, Some((a, b)));
                }
            }
        }
        (true, None)
    }

    /// `a → b = a⊥ ∨ (b ∧ a)`.
    pub fn sasaki_hook(&self, a: usize, b: usize) -> usize {
        self.join(self.ocomp(a), self.meet(b, a))
    }

    pub fn is_boolean(&self) -> bool {
        self.is_distributive().0
    }
}

/// `L × L'` with elements `⟨a,b⟩` at index `a·|L'| + b`.
pub fn product(l: &Ortholattice, r: &Ortholattice) -> Result<Ortholattice> {
    let (n, m) = (l.n(), r.n());
    crate::error::cap_check("product", n * m, MAX_BITS)?;
    let mut names = Vec::with_capacity(n * m);
    let mut leq = vec![vec![false; n * m]; n * m];
    let mut ocomp = vec![0; n * m];
    for a in 0..n {
        for b in 0..m {
            names.push(format!("⟨{},{}⟩", l.name(a), r.name(b)));
            ocomp[a * m + b] = l.ocomp(a) * m + r.ocomp(b);
            for c in 0..n {
                for d in 0..m {
                    leq[a * m + b][c * m + d] = l.leq(a, c) && r.leq(b, d);
                }
            }
        }
    }
    Ok(validate_ortholattice(RawOrtholattice { names, leq, ocomp })?)
}

/// The two projections out of `product(l, r)`.
pub fn projections(
    l: &Arc<Ortholattice>,
    r: &Arc<Ortholattice>,
    p: &Arc<Ortholattice>,
) -> Result<(LatticeHom, LatticeHom)> {
    let m = r.n();
    let left = (0..p.n()).map(|i| i / m).collect();
    let right = (0..p.n()).map(|i| i % m).collect();
    Ok((
        LatticeHom::new(p.clone(), l.clone(), left)?,
        LatticeHom::new(p.clone(), r.clone(), right)?,
    ))
}

/// A structure-preserving map between ortholattices.
#[derive(Clone, Debug)]
pub struct LatticeHom {
    pub source: Arc<Ortholattice>,
    pub target: Arc<Ortholattice>,
    pub map: Vec<usize>,
}

impl LatticeHom {
    /// Checks preservation of ∧, ⊥ and 0 (and, redundantly, ∨ and 1).
    pub fn new(source: Arc<Ortholattice>, target: Arc<Ortholattice>, map: Vec<usize>) -> Result<LatticeHom> {
        check_hom(&source, &target, &map)?;
        Ok(LatticeHom { source, target, map })
    }

    pub fn identity(l: &Arc<Ortholattice>) -> LatticeHom {
        LatticeHom { source: l.clone(), target: l.clone(), map: (0..l.n()).collect() }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &LatticeHom) -> Result<LatticeHom> {
        if *self.target != *other.source {
            return Err(Error::NotAHomomorphism("composition of non-composable maps".into()));
        }
        let map = self.map.iter().map(|&a| other.map[a]).collect();
        LatticeHom::new(self.source.clone(), other.target.clone(), map)
    }

    pub fn is_injective(&self) -> bool {
        BitSet::from_indices(self.map.iter().copied()).len() == self.map.len()
    }

    pub fn is_surjective(&self) -> bool {
        BitSet::from_indices(self.map.iter().copied()) == self.target.carrier()
    }
}

pub fn check_hom(s: &Ortholattice, t: &Ortholattice, map: &[usize]) -> Result<()> {
    let bad = |m: String| Err(Error::NotAHomomorphism(m));
    if map.len() != s.n() {
        return bad(format!("map has {} entries, source has {}", map.len(), s.n()));
    }
    if let Some(a) = (0..s.n()).find(|&a| map[a] >= t.n()) {
        return bad(format!("image of {} out of range", s.name(a)));
    }
    if map[s.bot()] != t.bot() {
        return bad("0 not preserved".into());
    }
    if map[s.top()] != t.top() {
        return bad("1 not preserved".into());
    }
    for a in 0..s.n() {
        if map[s.ocomp(a)] != t.ocomp(map[a]) {
            return bad(format!("⊥ not preserved at {}", s.name(a)));
        }
        for b in 0..s.n() {
            if map[s.meet(a, b)] != t.meet(map[a], map[b]) {
                return bad(format!("∧ not preserved at ({}, {})", s.name(a), s.name(b)));
            }
            if map[s.join(a, b)] != t.join(map[a], map[b]) {
                return bad(format!("∨ not preserved at ({}, {})", s.name(a), s.name(b)));
            }
        }
    }
    Ok(())
}

/// A partition of the carrier, given by class index per element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    pub class_of: Vec<usize>,
}

impl Congruence {
    /// Relabels classes by order of first appearance.
    pub fn normalized(raw: &[usize]) -> Congruence {
        let mut map = HashMap::new();
        let class_of = raw
            .iter()
            .map(|c| {
                let k = map.len();
                *map.entry(*c).or_insert(k)
            })
            .collect();
        Congruence { class_of }
    }

    pub fn identity(n: usize) -> Congruence {
        Congruence { class_of: (0..n).collect() }
    }

    pub fn total(n: usize) -> Congruence {
        Congruence { class_of: vec![0; n] }
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn class(&self, a: usize) -> BitSet {
        let c = self.class_of[a];
        (0..self.class_of.len()).filter(|&b| self.class_of[b] == c).collect()
    }

    pub fn refines(&self, other: &Congruence) -> bool {
        let n = self.class_of.len();
        (0..n).all(|a| (0..n).all(|b| !self.related(a, b) || other.related(a, b)))
    }

    pub fn is_compatible(&self, l: &Ortholattice) -> bool {
        let n = l.n();
        for a in 0..n {
            for b in 0..n {
                if !self.related(a, b) {
                    continue;
                }
                if !self.related(l.ocomp(a), l.ocomp(b)) {
                    return false;
                }
                for c in 0..n {
                    if !self.related(l.meet(a, c), l.meet(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Smallest congruence containing the given classes' relation and the pairs.
fn close_congruence(l: &Ortholattice, start: &[usize], pairs: &[(usize, usize)]) -> Congruence {
    let n = l.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let nx = p[x];
            p[x] = r;
            x = nx;
        }
        r
    }
    fn union(p: &mut [usize], a: usize, b: usize) -> bool {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra == rb {
            return false;
        }
        p[ra.max(rb)] = ra.min(rb);
        true
    }
    for a in 0..n {
        for b in a + 1..n {
            if start[a] == start[b] {
                union(&mut parent, a, b);
            }
        }
    }
    for &(a, b) in pairs {
        union(&mut parent, a, b);
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in a + 1..n {
                if find(&mut parent, a) != find(&mut parent, b) {
                    continue;
                }
                changed |= union(&mut parent, l.ocomp(a), l.ocomp(b));
                for c in 0..n {
                    changed |= union(&mut parent, l.meet(a, c), l.meet(b, c));
                }
            }
        }
        if !changed {
            break;
        }
    }
    let roots: Vec<usize> = (0..n).map(|a| find(&mut parent, a)).collect();
    Congruence::normalized(&roots)
}

pub const DEFAULT_CONGRUENCE_CAP: usize = 12;

/// All congruences, as joins of principal congruences, sorted by class vector.
pub fn congruences_bruteforce(l: &Ortholattice, cap: usize) -> Result<Vec<Congruence>> {
    crate::error::cap_check("congruences", l.n(), cap)?;
    let n = l.n();
    let id = Congruence::identity(n);
    let mut principal = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let c = close_congruence(l, &id.class_of, &[(a, b)]);
            if !principal.contains(&c) {
                principal.push(c);
            }
        }
    }
    let mut seen: HashSet<Congruence> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(c) = queue.pop() {
        for p in &principal {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|&(a, b)| p.related(a, b))
                .collect();
            let j = close_congruence(l, &c.class_of, &pairs);
            if seen.insert(j.clone()) {
                queue.push(j);
            }
        }
    }
    let mut out: Vec<Congruence> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `L/θ` with the quotient map; classes are named `[rep]` after their first element.
pub fn quotient(l: &Arc<Ortholattice>, theta: &Congruence) -> Result<(Arc<Ortholattice>, LatticeHom)> {
    if !theta.is_compatible(l) {
        return Err(Error::VerificationFailed("partition is not a congruence".into()));
    }
    let k = theta.num_classes();
    let reps: Vec<usize> = (0..k).map(|c| theta.class_of.iter().position(|&x| x == c).unwrap()).collect();
    let names = reps.iter().map(|&r| format!("[{}]", l.name(r))).collect();
    let leq = (0..k)
        .map(|c| (0..k).map(|d| theta.class_of[l.meet(reps[c], reps[d])] == c).collect())
        .collect();
    let ocomp = (0..k).map(|c| theta.class_of[l.ocomp(reps[c])]).collect();
    let q = Arc::new(validate_ortholattice(RawOrtholattice { names, leq, ocomp })?);
    let h = LatticeHom::new(l.clone(), q.clone(), theta.class_of.clone())?;
    Ok((q, h))
}

/// Closure of `S ∪ {0,1}` under ∧ and ⊥, with its inclusion.
pub fn subalgebra_generated(l: &Arc<Ortholattice>, s: BitSet) -> Result<(Arc<Ortholattice>, LatticeHom)> {
    let mut cur = s.with(l.bot()).with(l.top());
    loop {
        let mut next = cur;
        for a in cur.iter() {
            next.insert(l.ocomp(a));
            for b in cur.iter() {
                next.insert(l.meet(a, b));
            }
        }
        if next == cur {
            break;
        }
        cur = next;
    }
    let elems: Vec<usize> = cur.iter().collect();
    let pos = |a: usize| elems.iter().position(|&e| e == a).unwrap();
    let names = elems.iter().map(|&a| l.name(a).to_string()).collect();
    let leq = elems.iter().map(|&a| elems.iter().map(|&b| l.leq(a, b)).collect()).collect();
    let ocomp = elems.iter().map(|&a| pos(l.ocomp(a))).collect();
    let sub = Arc::new(validate_ortholattice(RawOrtholattice { names, leq, ocomp })?);
    let inc = LatticeHom::new(sub.clone(), l.clone(), elems)?;
    Ok((sub, inc))
}

/// First order- and ocomp-preserving bijection in lexicographic order, if any.
pub fn find_isomorphism(a: &Ortholattice, b: &Ortholattice) -> Option<Vec<usize>> {
    iso_search(a, b, Some((a.ocomp_table(), b.ocomp_table())))
}

/// Order isomorphism between plain lattices.
pub fn find_lattice_isomorphism(a: &Lattice, b: &Lattice) -> Option<Vec<usize>> {
    iso_search(a, b, None)
}

fn iso_search(a: &Lattice, b: &Lattice, oc: Option<(&[usize], &[usize])>) -> Option<Vec<usize>> {
    let n = a.n();
    if n != b.n() {
        return None;
    }
    let sig = |l: &Lattice, x: usize| (l.down(x).len(), l.up(x).len());
    let mut sa: Vec<_> = (0..n).map(|x| sig(a, x)).collect();
    let mut sb: Vec<_> = (0..n).map(|x| sig(b, x)).collect();
    let sig_a = sa.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = BitSet::EMPTY;

    fn consistent(a: &Lattice, b: &Lattice, map: &[usize], x: usize, y: usize) -> bool {
        (0..map.len()).all(|u| {
            let v = map[u];
            v == usize::MAX || (a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v))
        })
    }

    fn go(
        a: &Lattice,
        b: &Lattice,
        oc: Option<(&[usize], &[usize])>,
        sig_a: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut BitSet,
        x: usize,
    ) -> bool {
        let n = map.len();
        if x == n {
            return true;
        }
        if map[x] != usize::MAX {
            return go(a, b, oc, sig_a, map, used, x + 1);
        }
        for y in 0..n {
            if used.contains(y) || (b.down(y).len(), b.up(y).len()) != sig_a[x] {
                continue;
            }
            if !consistent(a, b, map, x, y) {
                continue;
            }
            map[x] = y;
            used.insert(y);
            let mut paired = None;
            let mut ok = true;
            if let Some((oa, ob)) = oc {
                let (xp, yp) = (oa[x], ob[y]);
                if (xp == x) != (yp == y) {
                    ok = false;
                } else if xp != x {
                    if map[xp] != usize::MAX {
                        ok = map[xp] == yp;
                    } else if used.contains(yp) || !consistent(a, b, map, xp, yp) {
                        ok = false;
                    } else {
                        map[xp] = yp;
                        used.insert(yp);
                        paired = Some((xp, yp));
                    }
                }
            }
            if ok && go(a, b, oc, sig_a, map, used, x + 1) {
                return true;
            }
            if let Some((xp, yp)) = paired {
                map[xp] = usize::MAX;
                used.remove(yp);
            }
            map[x] = usize::MAX;
            used.remove(y);
        }
        false
    }

    if go(a, b, oc, &sig_a, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}
