//! Finite orthospaces: a specialization order together with an orthogonality relation.
//!
//! On a finite T0 space the open sets are exactly the up-sets of the
//! specialization order, so every topological question below is answered on
//! the order.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::bitset::{BitSet, MAX_BITS};
use crate::error::{cap_check, Error, Result, SpaceError};
use crate::filters::{dual_space, DualSpace};
use crate::lattice::{check_partial_order, transitive_closure, validate_ortholattice, Ortholattice, RawOrtholattice};

pub type PointSet = BitSet;

/// Default cap on the number of up-sets materialized by an enumeration.
pub const UP_SET_CAP: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UvoSpace {
    names: Vec<String>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    perp: Vec<BitSet>,
}

impl UvoSpace {
    /// `up[x]` is the set of points above `x`; `perp[x]` the set of points orthogonal to `x`.
    pub fn new(names: Vec<String>, up: Vec<BitSet>, perp: Vec<BitSet>) -> std::result::Result<UvoSpace, SpaceError> {
        let m = names.len();
        if m > MAX_BITS {
            return Err(SpaceError::Malformed(format!("{m} points exceed the cap of {MAX_BITS}")));
        }
        if up.len() != m || perp.len() != m {
            return Err(SpaceError::Malformed("relation tables do not match the point count".into()));
        }
        let all = BitSet::full(m);
        if up.iter().chain(perp.iter()).any(|r| !r.is_subset(all)) {
            return Err(SpaceError::Malformed("relation refers to a missing point".into()));
        }
        check_partial_order(&up).map_err(|(law, w)| SpaceError::NotAPartialOrder {
            law,
            witness: w.iter().map(|&i| names[i].clone()).collect(),
        })?;
        for x in 0..m {
            if perp[x].contains(x) {
                return Err(SpaceError::IrreflexivityViolated(names[x].clone()));
            }
            for y in perp[x].iter() {
                if !perp[y].contains(x) {
                    return Err(SpaceError::NotSymmetric(names[x].clone(), names[y].clone()));
                }
            }
        }
        let mut down = vec![BitSet::EMPTY; m];
        for x in 0..m {
            for y in up[x].iter() {
                down[y].insert(x);
            }
        }
        Ok(UvoSpace { names, up, down, perp })
    }

    /// Order from covering pairs `p < q` (closed reflexively and transitively), ⊥ closed symmetrically.
    pub fn from_pairs(
        names: Vec<String>,
        covers: &[(usize, usize)],
        perp_pairs: &[(usize, usize)],
    ) -> std::result::Result<UvoSpace, SpaceError> {
        let m = names.len();
        if m > MAX_BITS {
            return Err(SpaceError::Malformed(format!("{m} points exceed the cap of {MAX_BITS}")));
        }
        let up = transitive_closure(m, covers);
        let mut perp = vec![BitSet::EMPTY; m];
        for &(p, q) in perp_pairs {
            perp[p].insert(q);
            perp[q].insert(p);
        }
        UvoSpace::new(names, up, perp)
    }

    pub fn m(&self) -> usize {
        self.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }
    pub fn all(&self) -> PointSet {
        BitSet::full(self.m())
    }
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }
    #[inline]
    pub fn perp(&self, x: usize, y: usize) -> bool {
        self.perp[x].contains(y)
    }
    pub fn up(&self, x: usize) -> PointSet {
        self.up[x]
    }
    pub fn down(&self, x: usize) -> PointSet {
        self.down[x]
    }
    pub fn perp_row(&self, x: usize) -> PointSet {
        self.perp[x]
    }
    pub fn up_rows(&self) -> &[BitSet] {
        &self.up
    }
    pub fn perp_rows(&self) -> &[BitSet] {
        &self.perp
    }

    /// `(p, q)` pairs with `p ⊥ q` and `p < q` by index.
    pub fn perp_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.m()).flat_map(|x| self.perp[x].iter().filter(move |&y| y > x).map(move |y| (x, y))).collect()
    }

    /// Renders a point set with point names.
    pub fn fmt_set(&self, s: PointSet) -> String {
        if s.is_empty() {
            return "∅".into();
        }
        let parts: Vec<&str> = s.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn is_up_set(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.up[x].is_subset(s))
    }
    pub fn up_closure(&self, s: PointSet) -> PointSet {
        s.iter().fold(BitSet::EMPTY, |acc, x| acc.union(self.up[x]))
    }
    pub fn down_closure(&self, s: PointSet) -> PointSet {
        s.iter().fold(BitSet::EMPTY, |acc, x| acc.union(self.down[x]))
    }
    /// Largest up-set contained in `s`.
    pub fn interior(&self, s: PointSet) -> PointSet {
        (0..self.m()).filter(|&x| self.up[x].is_subset(s)).collect()
    }
    pub fn maximal_points(&self) -> PointSet {
        (0..self.m()).filter(|&x| self.up[x] == BitSet::singleton(x)).collect()
    }

    /// Specialization covers `(x, y)` with `x ⋖ y`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.m() {
            for y in self.up[x].iter() {
                if x != y && self.up[x].intersection(self.down[y]) == BitSet::from_indices([x, y]) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// `Y* = {x : ∀y ∈ Y, x ⊥ y}`.
    pub fn star(&self, y: PointSet) -> PointSet {
        star_rows(&self.perp, self.m(), y)
    }

    pub fn is_orthoregular(&self, y: PointSet) -> bool {
        self.star(self.star(y)) == y
    }

    /// `□◇Y` for the modal pair over the complement of ⊥.
    pub fn box_diamond(&self, y: PointSet) -> PointSet {
        let all = self.all();
        let diamond = |s: PointSet| -> PointSet {
            (0..self.m()).filter(|&x| s.iter().any(|z| !self.perp(x, z))).collect()
        };
        diamond(diamond(y).complement(self.m())).complement(self.m()).intersection(all)
    }

    /// All up-sets, via antichains in index order.
    pub fn up_sets(&self, cap: usize) -> Result<Vec<PointSet>> {
        let m = self.m();
        let comparable: Vec<BitSet> = (0..m).map(|x| self.up[x].union(self.down[x])).collect();
        let mut out = Vec::new();
        let mut overflow = false;
        fn go(
            sp: &UvoSpace,
            comparable: &[BitSet],
            x: usize,
            blocked: BitSet,
            acc: PointSet,
            out: &mut Vec<PointSet>,
            cap: usize,
            overflow: &mut bool,
        ) {
            if *overflow {
                return;
            }
            if x == sp.m() {
                if out.len() == cap {
                    *overflow = true;
                } else {
                    out.push(acc);
                }
                return;
            }
            go(sp, comparable, x + 1, blocked, acc, out, cap, overflow);
            if !blocked.contains(x) {
                go(sp, comparable, x + 1, blocked.union(comparable[x]), acc.union(sp.up[x]), out, cap, overflow);
            }
        }
        go(self, &comparable, 0, BitSet::EMPTY, BitSet::EMPTY, &mut out, cap, &mut overflow);
        if overflow {
            return Err(Error::SizeCapExceeded { what: "up-sets", size: cap + 1, cap });
        }
        Ok(out)
    }

    /// Orthoregular up-sets, ordered by size then bit pattern.
    pub fn cor(&self) -> Result<CorFamily> {
        let members: Vec<PointSet> = self.up_sets(UP_SET_CAP)?.into_iter().filter(|&u| self.is_orthoregular(u)).collect();
        Ok(CorFamily::new(members))
    }

    /// Per-axiom report for the finite UVO axioms.
    pub fn validate_uvo(&self) -> Result<UvoReport> {
        let cor = self.cor()?;
        let t0 = match check_partial_order(&self.up) {
            Ok(()) => AxiomCheck::pass(),
            Err((law, w)) => AxiomCheck::fail(Witness::points(format!("antisymmetry ({law})"), w)),
        };
        let closed = self.check_closed(&cor);
        let basis = self.check_basis(&cor);
        let filters = if closed.passed {
            self.check_filters(&cor)?
        } else {
            AxiomCheck::fail(Witness::note("not evaluated: COR is not closed under ∩ and *"))
        };
        let separation = self.check_separation(&cor);
        let orthospace = AxiomCheck::pass();
        Ok(UvoReport { orthospace, t0, closed, basis, filters, separation, cor_size: cor.len() })
    }

    fn check_closed(&self, cor: &CorFamily) -> AxiomCheck {
        for &u in &cor.members {
            let s = self.star(u);
            if cor.index_of(s).is_none() {
                return AxiomCheck::fail(Witness::sets(
                    format!("{}* = {} is not in COR", self.fmt_set(u), self.fmt_set(s)),
                    vec![u],
                ));
            }
            for &v in &cor.members {
                if cor.index_of(u.intersection(v)).is_none() {
                    return AxiomCheck::fail(Witness::sets(
                        format!("{} ∩ {} is not in COR", self.fmt_set(u), self.fmt_set(v)),
                        vec![u, v],
                    ));
                }
            }
        }
        AxiomCheck::pass()
    }

    fn check_basis(&self, cor: &CorFamily) -> AxiomCheck {
        // each open is a union of COR members iff every smallest neighbourhood ↑x is
        for x in 0..self.m() {
            let u = self.up[x];
            if !cor.members.iter().any(|&v| v.contains(x) && v.is_subset(u)) {
                return AxiomCheck::fail(Witness::sets(
                    format!("U = ↑{} = {} is not a union of COR members", self.name(x), self.fmt_set(u)),
                    vec![u],
                ));
            }
        }
        AxiomCheck::pass()
    }

    fn check_filters(&self, cor: &CorFamily) -> Result<AxiomCheck> {
        cap_check("COR members", cor.len(), MAX_BITS)?;
        let point_filters: Vec<BitSet> = (0..self.m()).map(|x| cor.containing(x)).collect();
        for f in family_proper_filters(cor) {
            if !point_filters.contains(&f) {
                let sets: Vec<PointSet> = f.iter().map(|i| cor.members[i]).collect();
                let desc: Vec<String> = sets.iter().map(|&s| self.fmt_set(s)).collect();
                return Ok(AxiomCheck::fail(Witness::sets(
                    format!("proper filter {{{}}} is not COR(x) for any point", desc.join(", ")),
                    sets,
                )));
            }
        }
        Ok(AxiomCheck::pass())
    }

    fn check_separation(&self, cor: &CorFamily) -> AxiomCheck {
        for x in 0..self.m() {
            for y in self.perp[x].iter() {
                if !cor.members.iter().any(|&u| u.contains(x) && self.star(u).contains(y)) {
                    return AxiomCheck::fail(Witness::points(
                        format!("{} ⊥ {} but no U ∈ COR separates them", self.name(x), self.name(y)),
                        vec![x, y],
                    ));
                }
            }
        }
        AxiomCheck::pass()
    }

    /// `(COR(X), ⊆, *)` as an ortholattice.
    pub fn cor_algebra(&self) -> Result<CorAlgebra> {
        let family = self.cor()?;
        cap_check("COR members", family.len(), MAX_BITS)?;
        let k = family.len();
        let names = family.members.iter().map(|&u| self.fmt_set(u)).collect();
        let leq = (0..k)
            .map(|i| (0..k).map(|j| family.members[i].is_subset(family.members[j])).collect())
            .collect();
        let mut ocomp = Vec::with_capacity(k);
        for &u in &family.members {
            let s = self.star(u);
            match family.index_of(s) {
                Some(i) => ocomp.push(i),
                None => {
                    return Err(Error::NotUvo(format!("{}* = {} is not in COR", self.fmt_set(u), self.fmt_set(s))))
                }
            }
        }
        let lattice = validate_ortholattice(RawOrtholattice { names, leq, ocomp })?;
        for i in 0..k {
            for j in 0..k {
                let m = lattice.meet(i, j);
                if family.members[m] != family.members[i].intersection(family.members[j]) {
                    return Err(Error::NotUvo(format!(
                        "lattice meet of {} and {} is not their intersection",
                        lattice.name(i),
                        lattice.name(j)
                    )));
                }
            }
        }
        Ok(CorAlgebra { lattice: Arc::new(lattice), family })
    }

    /// `x ↦ COR_X(x)` into the dual space of the COR algebra, verified bijective and structure-preserving.
    pub fn char_map(&self) -> Result<CharMap> {
        let algebra = self.cor_algebra()?;
        let dual = dual_space(&algebra.lattice);
        let mut map = Vec::with_capacity(self.m());
        for x in 0..self.m() {
            let g = algebra.family.containing(x);
            match dual.point_of_members(g) {
                Some(p) => map.push(p),
                None => {
                    return Err(Error::VerificationFailed(format!(
                        "COR({}) is not a proper filter of COR(X)",
                        self.name(x)
                    )))
                }
            }
        }
        if BitSet::from_indices(map.iter().copied()) != dual.space.all() || map.len() != dual.space.m() {
            return Err(Error::VerificationFailed("characterization map is not a bijection".into()));
        }
        for x in 0..self.m() {
            for y in 0..self.m() {
                if self.leq(x, y) != dual.space.leq(map[x], map[y]) {
                    return Err(Error::VerificationFailed(format!(
                        "order not preserved at ({}, {})",
                        self.name(x),
                        self.name(y)
                    )));
                }
                if self.perp(x, y) != dual.space.perp(map[x], map[y]) {
                    return Err(Error::VerificationFailed(format!(
                        "⊥ not preserved at ({}, {})",
                        self.name(x),
                        self.name(y)
                    )));
                }
            }
        }
        Ok(CharMap { map, algebra, dual })
    }

    /// Points `x` having an open neighbourhood with no point strictly below `x`.
    pub fn principal_points(&self) -> PointSet {
        // the smallest open neighbourhood ↑x is contained in every other one
        (0..self.m())
            .filter(|&x| {
                let u = self.up[x];
                self.is_up_set(u) && u.intersection(self.down[x]) == BitSet::singleton(x)
            })
            .collect()
    }

    /// The principal points with ⊥ restricted to them.
    pub fn pframe(&self) -> Frame {
        let pts: Vec<usize> = self.principal_points().iter().collect();
        let names = pts.iter().map(|&x| self.name(x).to_string()).collect();
        let rel = pts
            .iter()
            .map(|&x| pts.iter().enumerate().filter(|&(_, &y)| self.perp(x, y)).map(|(j, _)| j).collect())
            .collect();
        Frame { names, rel }
    }

    /// The whole space as a frame over ⊥.
    pub fn frame(&self) -> Frame {
        Frame { names: self.names.clone(), rel: self.perp.clone() }
    }
}

pub(crate) fn star_rows(rows: &[BitSet], m: usize, y: PointSet) -> PointSet {
    y.iter().fold(BitSet::full(m), |acc, z| acc.intersection(rows[z]))
}

/// Proper filters of a ∩-closed family containing the whole space, found by closure search.
/// Filters are bitsets over member indices.
pub(crate) fn family_proper_filters(cor: &CorFamily) -> Vec<BitSet> {
    let k = cor.len();
    let empty = cor.index_of(BitSet::EMPTY);
    let close = |mut f: BitSet| -> BitSet {
        loop {
            let mut next = f;
            for i in f.iter() {
                for j in 0..k {
                    if cor.members[i].is_subset(cor.members[j]) {
                        next.insert(j);
                    }
                }
                for j in f.iter() {
                    if let Some(t) = cor.index_of(cor.members[i].intersection(cor.members[j])) {
                        next.insert(t);
                    }
                }
            }
            if next == f {
                return f;
            }
            f = next;
        }
    };
    let top = match cor.members.iter().enumerate().max_by_key(|(_, u)| u.len()) {
        Some((i, _)) => i,
        None => return Vec::new(),
    };
    let start = close(BitSet::singleton(top));
    if empty.map_or(false, |e| start.contains(e)) {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    seen.insert(start);
    let mut queue = vec![start];
    while let Some(f) = queue.pop() {
        for j in 0..k {
            if f.contains(j) {
                continue;
            }
            let g = close(f.with(j));
            if empty.map_or(false, |e| g.contains(e)) {
                continue;
            }
            if seen.insert(g) {
                queue.push(g);
            }
        }
    }
    let mut out: Vec<BitSet> = seen.into_iter().collect();
    out.sort();
    out
}

/// The orthoregular up-sets of a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorFamily {
    pub members: Vec<PointSet>,
    index: HashMap<PointSet, usize>,
}

impl CorFamily {
    pub fn new(mut members: Vec<PointSet>) -> CorFamily {
        members.sort_by_key(|u| (u.len(), u.0));
        members.dedup();
        let index = members.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        CorFamily { members, index }
    }
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
    pub fn index_of(&self, u: PointSet) -> Option<usize> {
        self.index.get(&u).copied()
    }
    /// Indices of members containing `x`.
    pub fn containing(&self, x: usize) -> BitSet {
        self.members.iter().enumerate().filter(|(_, u)| u.contains(x)).map(|(i, _)| i).collect()
    }
}

#[derive(Clone, Debug)]
pub struct CorAlgebra {
    /// Element `i` is `family.members[i]`.
    pub lattice: Arc<Ortholattice>,
    pub family: CorFamily,
}

#[derive(Clone, Debug)]
pub struct CharMap {
    /// Point of `dual.space` assigned to each point of the source space.
    pub map: Vec<usize>,
    pub algebra: CorAlgebra,
    pub dual: DualSpace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub description: String,
    pub points: Vec<usize>,
    pub sets: Vec<PointSet>,
}

impl Witness {
    fn points(description: String, points: Vec<usize>) -> Witness {
        Witness { description, points, sets: Vec::new() }
    }
    fn sets(description: String, sets: Vec<PointSet>) -> Witness {
        Witness { description, points: Vec::new(), sets }
    }
    fn note(description: &str) -> Witness {
        Witness { description: description.into(), points: Vec::new(), sets: Vec::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    fn pass() -> AxiomCheck {
        AxiomCheck { passed: true, witness: None }
    }
    fn fail(w: Witness) -> AxiomCheck {
        AxiomCheck { passed: false, witness: Some(w) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UvoReport {
    /// Partial order plus irreflexive symmetric ⊥; guaranteed by construction.
    pub orthospace: AxiomCheck,
    pub t0: AxiomCheck,
    /// COR closed under ∩ and *.
    pub closed: AxiomCheck,
    /// COR is a basis.
    pub basis: AxiomCheck,
    /// Every proper filter of COR is COR(x).
    pub filters: AxiomCheck,
    /// `x ⊥ y` is separated by some `U ∈ COR` with `y ∈ U*`.
    pub separation: AxiomCheck,
    pub cor_size: usize,
}

impl UvoReport {
    pub fn axioms(&self) -> [(&'static str, &AxiomCheck); 5] {
        [
            ("T0", &self.t0),
            ("COR closed under ∩ and *", &self.closed),
            ("COR is a basis", &self.basis),
            ("proper filters of COR are point filters", &self.filters),
            ("⊥ is separated by COR", &self.separation),
        ]
    }

    pub fn passed(&self) -> bool {
        self.orthospace.passed && self.axioms().iter().all(|(_, a)| a.passed)
    }

    pub fn first_failure(&self) -> Option<(usize, &'static str, &AxiomCheck)> {
        self.axioms().into_iter().enumerate().find(|(_, (_, a))| !a.passed).map(|(i, (n, a))| (i + 1, n, a))
    }
}

/// A set with a binary relation, used for regular-set algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub names: Vec<String>,
    pub rel: Vec<BitSet>,
}

impl Frame {
    pub fn m(&self) -> usize {
        self.names.len()
    }
    pub fn star(&self, y: PointSet) -> PointSet {
        star_rows(&self.rel, self.m(), y)
    }
}

#[derive(Clone, Debug)]
pub struct RegularAlgebra {
    /// Element `i` is `members[i]`.
    pub lattice: Arc<Ortholattice>,
    pub members: Vec<PointSet>,
}

pub const REGULAR_SWEEP_CAP: usize = 20;

/// All `Y = Y**`, ordered by ⊆ with `*` as orthocomplement.
pub fn regular_algebra(frame: &Frame) -> Result<RegularAlgebra> {
    let m = frame.m();
    cap_check("regular-set sweep points", m, REGULAR_SWEEP_CAP)?;
    let mut members = Vec::new();
    for bits in 0u64..(1u64 << m) {
        let y = BitSet(bits);
        if frame.star(frame.star(y)) == y {
            members.push(y);
        }
    }
    cap_check("regular sets", members.len(), MAX_BITS)?;
    members.sort_by_key(|u| (u.len(), u.0));
    let k = members.len();
    let pos: HashMap<PointSet, usize> = members.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let fmt = |s: PointSet| -> String {
        if s.is_empty() {
            "∅".into()
        } else {
            format!("{{{}}}", s.iter().map(|x| frame.names[x].as_str()).collect::<Vec<_>>().join(","))
        }
    };
    let names = members.iter().map(|&u| fmt(u)).collect();
    let leq = (0..k).map(|i| (0..k).map(|j| members[i].is_subset(members[j])).collect()).collect();
    let ocomp = members
        .iter()
        .map(|&u| {
            pos.get(&frame.star(u))
                .copied()
                .ok_or_else(|| Error::VerificationFailed(format!("{}* is not regular", fmt(u))))
        })
        .collect::<Result<Vec<_>>>()?;
    let lattice = validate_ortholattice(RawOrtholattice { names, leq, ocomp })?;
    Ok(RegularAlgebra { lattice: Arc::new(lattice), members })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn two_incomparable_points_fail_basis_at_p() {
        let x = UvoSpace::from_pairs(names("p q"), &[], &[]).unwrap();
        assert_eq!(x.star(BitSet::EMPTY), x.all());
        assert_eq!(x.star(BitSet::singleton(0)), BitSet::EMPTY);
        assert!(!x.is_orthoregular(BitSet::singleton(0)));
        let r = x.validate_uvo().unwrap();
        assert!(r.separation.passed);
        assert!(!r.basis.passed);
        let w = r.basis.witness.unwrap();
        assert_eq!(w.sets, vec![BitSet::singleton(0)]);
    }

    #[test]
    fn reflexive_perp_is_rejected() {
        let e = UvoSpace::from_pairs(names("p"), &[], &[(0, 0)]).unwrap_err();
        assert_eq!(e, SpaceError::IrreflexivityViolated("p".into()));
    }

    #[test]
    fn empty_space_cor() {
        let x = UvoSpace::from_pairs(vec![], &[], &[]).unwrap();
        let cor = x.cor().unwrap();
        assert_eq!(cor.members, vec![BitSet::EMPTY]);
        assert_eq!(x.star(BitSet::EMPTY), BitSet::EMPTY);
    }

    #[test]
    fn box_diamond_is_double_star_on_small_space() {
        let x = UvoSpace::from_pairs(names("a b c"), &[(0, 1)], &[(1, 2)]).unwrap();
        for bits in 0..8u64 {
            let y = BitSet(bits);
            assert_eq!(x.box_diamond(y), x.star(x.star(y)));
        }
    }
}
