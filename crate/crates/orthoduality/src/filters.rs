//! Lattice filters and the dual space of an ortholattice.

use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::error::{cap_check, Result};
use crate::lattice::{Lattice, Ortholattice};
use crate::uvo::{PointSet, UvoSpace};

/// A lattice filter, as its set of members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter(pub BitSet);

impl Filter {
    pub fn members(self) -> BitSet {
        self.0
    }
    pub fn contains(self, a: usize) -> bool {
        self.0.contains(a)
    }
    pub fn is_proper(self, l: &Lattice) -> bool {
        !self.0.contains(l.bot())
    }
    /// The least member, if the filter has one (always, for finite lattices).
    pub fn generator(self, l: &Lattice) -> Option<usize> {
        self.0.iter().find(|&a| self.0.is_subset(l.up(a)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generated {
    Proper(Filter),
    Improper,
}

/// Smallest up-set closed under binary meets that contains `s` (and 1).
pub fn filter_generated(l: &Lattice, s: BitSet) -> Generated {
    let mut cur = s.with(l.top());
    loop {
        let mut next = l.up_closure(cur);
        for a in cur.iter() {
            for b in cur.iter() {
                next.insert(l.meet(a, b));
            }
        }
        if next == cur {
            break;
        }
        cur = next;
    }
    if cur.contains(l.bot()) {
        Generated::Improper
    } else {
        Generated::Proper(Filter(cur))
    }
}

impl Lattice {
    pub fn up_closure(&self, s: BitSet) -> BitSet {
        s.iter().fold(BitSet::EMPTY, |acc, a| acc.union(self.up(a)))
    }
}

/// Proper filters reachable from `{1}` by adjoining one element and closing; no principality assumed.
pub fn filters_by_closure(l: &Lattice) -> Vec<Filter> {
    let start = match filter_generated(l, BitSet::EMPTY) {
        Generated::Proper(f) => f,
        Generated::Improper => return Vec::new(),
    };
    let mut seen = HashSet::new();
    seen.insert(start);
    let mut queue = vec![start];
    while let Some(f) = queue.pop() {
        for a in l.carrier().difference(f.0).iter() {
            if let Generated::Proper(g) = filter_generated(l, f.0.with(a)) {
                if seen.insert(g) {
                    queue.push(g);
                }
            }
        }
    }
    let mut out: Vec<Filter> = seen.into_iter().collect();
    out.sort_by_key(|f| (f.generator(l), f.0));
    out
}

/// `↑a` for every `a ≠ 0`, in element order.
pub fn principal_filters(l: &Lattice) -> Vec<Filter> {
    (0..l.n()).filter(|&a| a != l.bot()).map(|a| Filter(l.up(a))).collect()
}

/// The proper filters ordered by generator index, cross-checked against the closure search.
pub fn enumerate_proper_filters(l: &Lattice) -> Vec<Filter> {
    let principal = principal_filters(l);
    let searched = filters_by_closure(l);
    assert_eq!(principal, searched, "closure search found a filter that is not principal");
    principal
}

/// `x ⊥ y ⟺ ∃a: a⊥ ∈ x, a ∈ y`.
pub fn ortho_rel(l: &Ortholattice, x: Filter, y: Filter) -> bool {
    y.0.iter().any(|a| x.contains(l.ocomp(a)))
}

/// `X⁺_L` together with its filters and basic opens.
#[derive(Clone, Debug)]
pub struct DualSpace {
    pub space: UvoSpace,
    /// Point `i` is `filters[i] = ↑generator[i]`.
    pub filters: Vec<Filter>,
    pub generator: Vec<usize>,
    /// `hat[a] = â = {x : a ∈ x}`.
    pub hat: Vec<PointSet>,
}

impl DualSpace {
    pub fn point_of_members(&self, members: BitSet) -> Option<usize> {
        self.filters.iter().position(|f| f.0 == members)
    }
    pub fn point_of_generator(&self, a: usize) -> Option<usize> {
        self.generator.iter().position(|&g| g == a)
    }
    pub fn basic_open(&self, a: usize) -> PointSet {
        self.hat[a]
    }
}

/// Points named after their generators, `↑a`.
pub fn dual_space(l: &Ortholattice) -> DualSpace {
    dual_space_named(l, |a| format!("↑{}", l.name(a)))
}

pub fn dual_space_named(l: &Ortholattice, name: impl Fn(usize) -> String) -> DualSpace {
    let filters = enumerate_proper_filters(l);
    let m = filters.len();
    let generator: Vec<usize> = filters.iter().map(|f| f.generator(l).expect("finite filters are principal")).collect();
    let names = generator.iter().map(|&a| name(a)).collect();
    let up = (0..m)
        .map(|i| (0..m).filter(|&j| filters[i].0.is_subset(filters[j].0)).collect())
        .collect();
    let perp = (0..m)
        .map(|i| (0..m).filter(|&j| ortho_rel(l, filters[i], filters[j])).collect())
        .collect();
    let space = UvoSpace::new(names, up, perp).expect("dual space relations are well-formed");
    let hat = (0..l.n()).map(|a| basic_open_of(&filters, a)).collect();
    DualSpace { space, filters, generator, hat }
}

fn basic_open_of(filters: &[Filter], a: usize) -> PointSet {
    filters.iter().enumerate().filter(|(_, f)| f.contains(a)).map(|(i, _)| i).collect()
}

/// `â` computed directly from the filter list.
pub fn basic_open(l: &Ortholattice, a: usize) -> PointSet {
    basic_open_of(&enumerate_proper_filters(l), a)
}

/// Literal spectral-space checks over the materialized open family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralReport {
    pub t0: bool,
    pub compact: bool,
    pub coherent: bool,
    pub sober: bool,
    pub opens: usize,
}

impl SpectralReport {
    pub fn all(&self) -> bool {
        self.t0 && self.compact && self.coherent && self.sober
    }
}

pub const SPECTRAL_OPEN_CAP: usize = 1 << 12;

pub fn verify_spectral(x: &UvoSpace) -> Result<SpectralReport> {
    let opens = x.up_sets(SPECTRAL_OPEN_CAP)?;
    cap_check("open sets", opens.len(), SPECTRAL_OPEN_CAP)?;
    let open_set: HashSet<PointSet> = opens.iter().copied().collect();
    let m = x.m();

    let t0 = (0..m).all(|a| (0..m).all(|b| a == b || !(x.leq(a, b) && x.leq(b, a))))
        && (0..m).all(|a| (0..m).all(|b| a == b || opens.iter().any(|u| u.contains(a) != u.contains(b))));

    // a cover of U by the principal opens inside it has the finite subcover
    // indexed by the minimal points of U
    let compact = opens.iter().all(|&u| {
        let minimal: PointSet = u.iter().filter(|&p| x.down(p).intersection(u) == BitSet::singleton(p)).collect();
        x.up_closure(minimal) == u
    });

    let coherent = compact
        && opens.iter().all(|&u| opens.iter().all(|&v| open_set.contains(&u.intersection(v))))
        && opens.iter().all(|&u| u.iter().all(|p| opens.iter().any(|&v| v.contains(p) && v.is_subset(u))));

    // filters of a finite lattice are principal: candidate filters are {U : V ⊆ U}
    let mut prime_generators = Vec::new();
    for &v in &opens {
        if v.is_empty() {
            continue;
        }
        let prime = opens.iter().all(|&u1| {
            if v.is_subset(u1) {
                return true;
            }
            let u2 = x.up_closure(v.difference(u1));
            v.is_subset(u2)
        });
        if prime {
            prime_generators.push(v);
        }
    }
    let point_opens: Vec<PointSet> = (0..m).map(|p| x.up(p)).collect();
    let sober = prime_generators.len() == m && prime_generators.iter().all(|v| point_opens.contains(v));

    Ok(SpectralReport { t0, compact, coherent, sober, opens: opens.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Lattice, Ortholattice};

    fn diamond() -> Ortholattice {
        let names = "0 a b 1".split(' ').map(String::from).collect();
        let l = Lattice::from_covers(names, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        Ortholattice::new(l, vec![3, 2, 1, 0]).unwrap()
    }

    #[test]
    fn diamond_filters_and_opens() {
        let l = diamond();
        let fs = enumerate_proper_filters(&l);
        assert_eq!(fs.len(), 3);
        assert_eq!(filter_generated(&l, BitSet::from_indices([1, 2])), Generated::Improper);
        assert_eq!(filter_generated(&l, BitSet::singleton(3)), Generated::Proper(Filter(BitSet::singleton(3))));
        let d = dual_space(&l);
        assert_eq!(d.space.names(), &["↑a", "↑b", "↑1"]);
        assert_eq!(d.hat[1], BitSet::singleton(0));
        assert_eq!(d.hat[0], BitSet::EMPTY);
        assert_eq!(d.hat[3], d.space.all());
        assert!(d.space.perp(0, 1));
        assert!(!d.space.perp(2, 0) && !d.space.perp(2, 1));
        let r = verify_spectral(&d.space).unwrap();
        assert!(r.all());
    }
}
