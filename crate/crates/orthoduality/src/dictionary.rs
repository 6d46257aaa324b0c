//! Lattice-side constructions and their space-side counterparts.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::duality::UvoMap;
use crate::error::{cap_check, Error, Result};
use crate::filters::{dual_space, enumerate_proper_filters, DualSpace, Filter};
use crate::lattice::{
    congruences_bruteforce, find_isomorphism, product, Congruence, Ortholattice, DEFAULT_CONGRUENCE_CAP,
};
use crate::uvo::{regular_algebra, CorFamily, Frame, PointSet, RegularAlgebra, UvoSpace, UP_SET_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaCheck {
    pub holds: bool,
    pub families_checked: usize,
    pub witness: Option<String>,
}

/// Subfamilies of `0..k` with at most `cap` members, in size then lexicographic order.
fn subfamilies(k: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..cap {
        let mut next = Vec::new();
        for f in &frontier {
            let start = f.last().map_or(0, |&l: &usize| l + 1);
            for i in start..k {
                let mut g = f.clone();
                g.push(i);
                next.push(g);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Lattice meet in COR equals the interior of the intersection.
pub fn meet_formula_check(x: &UvoSpace, cap: usize) -> Result<FormulaCheck> {
    let alg = x.cor_algebra()?;
    let fam = &alg.family.members;
    let l = &alg.lattice;
    let subs = subfamilies(fam.len(), cap);
    for s in &subs {
        let m = l.meet_all(s.iter().copied());
        let inter = s.iter().fold(x.all(), |acc, &i| acc.intersection(fam[i]));
        if fam[m] != x.interior(inter) {
            return Ok(FormulaCheck {
                holds: false,
                families_checked: subs.len(),
                witness: Some(format!("meet of {:?}", s.iter().map(|&i| l.name(i)).collect::<Vec<_>>())),
            });
        }
    }
    Ok(FormulaCheck { holds: true, families_checked: subs.len(), witness: None })
}

/// Lattice join in COR equals `((∪ Uᵢ)*)°*`.
pub fn join_formula_check(x: &UvoSpace, cap: usize) -> Result<FormulaCheck> {
    let alg = x.cor_algebra()?;
    let fam = &alg.family.members;
    let l = &alg.lattice;
    let subs = subfamilies(fam.len(), cap);
    for s in &subs {
        let j = l.join_all(s.iter().copied());
        let uni = s.iter().fold(BitSet::EMPTY, |acc, &i| acc.union(fam[i]));
        if fam[j] != x.star(x.interior(x.star(uni))) {
            return Ok(FormulaCheck {
                holds: false,
                families_checked: subs.len(),
                witness: Some(format!("join of {:?}", s.iter().map(|&i| l.name(i)).collect::<Vec<_>>())),
            });
        }
    }
    Ok(FormulaCheck { holds: true, families_checked: subs.len(), witness: None })
}

pub const COMPLETE_CHECK_CAP: usize = 16;

/// `((U*)°)* ∈ COR` for every up-set `U`.
pub fn is_complete_uvo(x: &UvoSpace) -> Result<bool> {
    cap_check("points for completeness check", x.m(), COMPLETE_CHECK_CAP)?;
    let cor = x.cor()?;
    Ok(x.up_sets(UP_SET_CAP)?.into_iter().all(|u| cor.index_of(x.star(x.interior(x.star(u)))).is_some()))
}

/// Points `p` with `{p}` open.
pub fn isolated_points(x: &UvoSpace) -> PointSet {
    (0..x.m()).filter(|&p| x.is_up_set(BitSet::singleton(p))).collect()
}

pub fn is_atomless_dual(x: &UvoSpace) -> bool {
    isolated_points(x).is_empty()
}

/// Closure of the isolated points is the whole space; closed sets are the down-sets.
pub fn is_atomic_dual(x: &UvoSpace) -> bool {
    x.down_closure(isolated_points(x)) == x.all()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomsBijection {
    /// `(atom, point ↑atom)`.
    pub pairs: Vec<(usize, usize)>,
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
}

impl AtomsBijection {
    pub fn holds(&self) -> bool {
        self.well_defined && self.injective && self.surjective
    }
}

pub fn atoms_bijection(l: &Ortholattice) -> AtomsBijection {
    let d = dual_space(l);
    let iso = isolated_points(&d.space);
    let pairs: Vec<(usize, usize)> = l
        .atoms()
        .iter()
        .map(|a| (a, d.point_of_members(l.up(a)).expect("↑a is a proper filter")))
        .collect();
    let image: PointSet = pairs.iter().map(|&(_, p)| p).collect();
    AtomsBijection {
        well_defined: pairs.iter().all(|&(_, p)| iso.contains(p)),
        injective: image.len() == pairs.len(),
        surjective: image == iso,
        pairs,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumTag {
    Left(usize),
    Right(usize),
    Pair(usize, usize),
}

/// `X + Y` on `X ∪ Y ∪ (X × Y)`, points ordered left, right, then pairs lexicographically.
#[derive(Clone, Debug)]
pub struct SumSpace {
    pub space: UvoSpace,
    pub tags: Vec<SumTag>,
    /// The order agrees with the specialization order of the topology generated by `U ∪ V ∪ (U × V)`.
    pub generated_order_agrees: bool,
}

impl SumSpace {
    pub fn index_of(&self, t: SumTag) -> Option<usize> {
        self.tags.iter().position(|&s| s == t)
    }
}

pub fn uvo_sum(x: &UvoSpace, y: &UvoSpace) -> Result<SumSpace> {
    let (mx, my) = (x.m(), y.m());
    let total = mx + my + mx * my;
    cap_check("sum points", total, crate::bitset::MAX_BITS)?;
    let mut tags = Vec::with_capacity(total);
    tags.extend((0..mx).map(SumTag::Left));
    tags.extend((0..my).map(SumTag::Right));
    for a in 0..mx {
        for b in 0..my {
            tags.push(SumTag::Pair(a, b));
        }
    }
    let clash = x.names().iter().any(|n| y.names().contains(n));
    let names = tags
        .iter()
        .map(|t| match *t {
            SumTag::Left(a) if clash => format!("L.{}", x.name(a)),
            SumTag::Right(b) if clash => format!("R.{}", y.name(b)),
            SumTag::Left(a) => x.name(a).to_string(),
            SumTag::Right(b) => y.name(b).to_string(),
            SumTag::Pair(a, b) => format!("⟨{},{}⟩", x.name(a), y.name(b)),
        })
        .collect();
    let leq = |s: SumTag, t: SumTag| -> bool {
        use SumTag::*;
        match (s, t) {
            (Left(a), Left(c)) => x.leq(a, c),
            (Right(b), Right(d)) => y.leq(b, d),
            (Pair(a, _), Left(c)) => x.leq(a, c),
            (Pair(_, b), Right(d)) => y.leq(b, d),
            (Pair(a, b), Pair(c, d)) => x.leq(a, c) && y.leq(b, d),
            _ => false,
        }
    };
    let perp_one = |s: SumTag, t: SumTag| -> bool {
        use SumTag::*;
        match (s, t) {
            (Left(a), Left(c)) => x.perp(a, c),
            (Right(b), Right(d)) => y.perp(b, d),
            (Left(_), Right(_)) => true,
            (Pair(a, _), Left(c)) => x.perp(a, c),
            (Pair(_, b), Right(d)) => y.perp(b, d),
            (Pair(a, b), Pair(c, d)) => x.perp(a, c) && y.perp(b, d),
            _ => false,
        }
    };
    let up: Vec<BitSet> = tags
        .iter()
        .map(|&s| (0..total).filter(|&j| leq(s, tags[j])).collect())
        .collect();
    let perp: Vec<BitSet> = tags
        .iter()
        .map(|&s| (0..total).filter(|&j| perp_one(s, tags[j]) || perp_one(tags[j], s)).collect())
        .collect();
    let space = UvoSpace::new(names, up, perp)?;

    let cx = x.cor()?;
    let cy = y.cor()?;
    let mut basis = Vec::new();
    for &u in &cx.members {
        for &v in &cy.members {
            let b: BitSet = tags
                .iter()
                .enumerate()
                .filter(|(_, t)| match **t {
                    SumTag::Left(a) => u.contains(a),
                    SumTag::Right(b) => v.contains(b),
                    SumTag::Pair(a, b) => u.contains(a) && v.contains(b),
                })
                .map(|(i, _)| i)
                .collect();
            basis.push(b);
        }
    }
    let generated_order_agrees = (0..total).all(|i| {
        (0..total).all(|j| {
            let spec = basis.iter().all(|b| !b.contains(i) || b.contains(j));
            spec == space.leq(i, j)
        })
    });
    Ok(SumSpace { space, tags, generated_order_agrees })
}

/// Pairing `[f, g] : X + Y → Z` with `⟨x,y⟩ ↦ f(x) ∧ g(y)` (greatest lower bound in `Z`).
pub fn copair(sum: &SumSpace, z: &UvoSpace, f: &[usize], g: &[usize]) -> Option<Vec<usize>> {
    sum.tags
        .iter()
        .map(|t| match *t {
            SumTag::Left(a) => Some(f[a]),
            SumTag::Right(b) => Some(g[b]),
            SumTag::Pair(a, b) => {
                let lower = z.down(f[a]).intersection(z.down(g[b]));
                lower.iter().find(|&c| lower.is_subset(z.down(c)))
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct ProductSumHomeo {
    pub product: Arc<Ortholattice>,
    pub product_dual: DualSpace,
    pub sum: SumSpace,
    /// Sum point assigned to each point of the product's dual.
    pub map: Vec<usize>,
}

/// `X⁺_{L×L'} ≅ X⁺_L + X⁺_{L'}` via the properness case split.
pub fn product_sum_homeo(l: &Ortholattice, r: &Ortholattice) -> Result<ProductSumHomeo> {
    let p = Arc::new(product(l, r)?);
    let dp = dual_space(&p);
    let dl = dual_space(l);
    let dr = dual_space(r);
    let sum = uvo_sum(&dl.space, &dr.space)?;
    let m = r.n();
    let mut map = Vec::with_capacity(dp.space.m());
    for f in &dp.filters {
        let fl: BitSet = f.0.iter().map(|i| i / m).collect();
        let fr: BitSet = f.0.iter().map(|i| i % m).collect();
        let lp = !fl.contains(l.bot());
        let rp = !fr.contains(r.bot());
        let tag = match (lp, rp) {
            (true, false) => dl.point_of_members(fl).map(SumTag::Left),
            (false, true) => dr.point_of_members(fr).map(SumTag::Right),
            (true, true) => dl.point_of_members(fl).zip(dr.point_of_members(fr)).map(|(a, b)| SumTag::Pair(a, b)),
            (false, false) => None,
        };
        let idx = tag
            .and_then(|t| sum.index_of(t))
            .ok_or_else(|| Error::VerificationFailed("filter of the product has no sum counterpart".into()))?;
        map.push(idx);
    }
    if BitSet::from_indices(map.iter().copied()) != sum.space.all() || map.len() != sum.space.m() {
        return Err(Error::VerificationFailed("case map is not a bijection".into()));
    }
    for i in 0..map.len() {
        for j in 0..map.len() {
            if dp.space.leq(i, j) != sum.space.leq(map[i], map[j]) {
                return Err(Error::VerificationFailed(format!(
                    "order differs at ({}, {})",
                    dp.space.name(i),
                    dp.space.name(j)
                )));
            }
            if dp.space.perp(i, j) != sum.space.perp(map[i], map[j]) {
                return Err(Error::VerificationFailed(format!(
                    "⊥ differs at ({}, {})",
                    dp.space.name(i),
                    dp.space.name(j)
                )));
            }
        }
    }
    Ok(ProductSumHomeo { product: p, product_dual: dp, sum, map })
}

/// Subsets `A` of a lattice with `A = A^{ul}`.
#[derive(Clone, Debug)]
pub struct NormalFamily {
    pub members: Vec<BitSet>,
    pub lattice: Arc<Ortholattice>,
}

pub const NORMAL_SWEEP_CAP: usize = 20;

fn upper(l: &Ortholattice, a: BitSet) -> BitSet {
    a.iter().fold(l.carrier(), |acc, x| acc.intersection(l.up(x)))
}

fn lower(l: &Ortholattice, a: BitSet) -> BitSet {
    a.iter().fold(l.carrier(), |acc, x| acc.intersection(l.down(x)))
}

pub fn normal_family(l: &Ortholattice) -> Result<NormalFamily> {
    cap_check("normal-subset sweep elements", l.n(), NORMAL_SWEEP_CAP)?;
    let mut members = Vec::new();
    for bits in 0u64..(1u64 << l.n()) {
        let a = BitSet(bits);
        if lower(l, upper(l, a)) == a {
            members.push(a);
        }
    }
    cap_check("normal subsets", members.len(), crate::bitset::MAX_BITS)?;
    members.sort_by_key(|u| (u.len(), u.0));
    let k = members.len();
    for &a in &members {
        for &b in &members {
            if !members.contains(&a.intersection(b)) {
                return Err(Error::VerificationFailed("normal subsets are not closed under ∩".into()));
            }
        }
    }
    let fmt = |s: BitSet| format!("{{{}}}", s.iter().map(|x| l.name(x)).collect::<Vec<_>>().join(","));
    let names = members.iter().map(|&a| fmt(a)).collect();
    let leq = (0..k).map(|i| (0..k).map(|j| members[i].is_subset(members[j])).collect()).collect();
    let ocomp = members
        .iter()
        .map(|&a| {
            let perp: BitSet = (0..l.n()).filter(|&b| a.iter().all(|x| l.leq(b, l.ocomp(x)))).collect();
            members
                .iter()
                .position(|&c| c == perp)
                .ok_or_else(|| Error::VerificationFailed("orthocomplement of a normal subset is not normal".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let lattice = crate::lattice::validate_ortholattice(crate::lattice::RawOrtholattice { names, leq, ocomp })?;
    Ok(NormalFamily { members, lattice: Arc::new(lattice) })
}

/// `(L, ⫠)` with `a ⫠ b ⟺ a ≤ b⊥`, optionally without 0.
pub fn maclaren_frame(l: &Ortholattice, drop_bottom: bool) -> (Frame, Vec<usize>) {
    let elems: Vec<usize> = (0..l.n()).filter(|&a| !(drop_bottom && a == l.bot())).collect();
    let names = elems.iter().map(|&a| l.name(a).to_string()).collect();
    let rel = elems
        .iter()
        .map(|&a| elems.iter().enumerate().filter(|&(_, &b)| l.leq(a, l.ocomp(b))).map(|(j, _)| j).collect())
        .collect();
    (Frame { names, rel }, elems)
}

#[derive(Clone, Debug)]
pub struct MacNeille {
    pub norm: NormalFamily,
    /// `R(L, ⫠)`.
    pub maclaren: RegularAlgebra,
    /// `R(L⁻, ⫠)`.
    pub maclaren_minus: RegularAlgebra,
    /// `R` of the principal frame of the dual space.
    pub via_frame: RegularAlgebra,
    /// Isomorphism `Norm(L) → R(pframe(X⁺_L))`.
    pub certificate: Vec<usize>,
    /// Isomorphism `L → Norm(L)`.
    pub iso_to_l: Vec<usize>,
}

pub fn macneille(l: &Ortholattice) -> Result<MacNeille> {
    let norm = normal_family(l)?;
    let (f_all, _) = maclaren_frame(l, false);
    let (f_minus, elems_minus) = maclaren_frame(l, true);
    let maclaren = regular_algebra(&f_all)?;
    let maclaren_minus = regular_algebra(&f_minus)?;
    // U ↦ U ∖ {0} carries R(L, ⫠) onto R(L⁻, ⫠)
    let transported: Vec<BitSet> = maclaren
        .members
        .iter()
        .map(|u| {
            u.iter()
                .filter(|&a| a != l.bot())
                .map(|a| elems_minus.iter().position(|&e| e == a).unwrap())
                .collect()
        })
        .collect();
    let mut t_sorted = transported.clone();
    t_sorted.sort_by_key(|u| (u.len(), u.0));
    if t_sorted != maclaren_minus.members {
        return Err(Error::VerificationFailed("U ↦ U∖{0} is not a bijection R(L,⫠) → R(L⁻,⫠)".into()));
    }
    for i in 0..transported.len() {
        for j in 0..transported.len() {
            if maclaren.members[i].is_subset(maclaren.members[j]) != transported[i].is_subset(transported[j]) {
                return Err(Error::VerificationFailed("U ↦ U∖{0} is not an order isomorphism".into()));
            }
        }
    }
    if norm.members != maclaren.members {
        return Err(Error::VerificationFailed("normal subsets differ from the regular sets of (L, ⫠)".into()));
    }
    let d = dual_space(l);
    let via_frame = regular_algebra(&d.space.pframe())?;
    let certificate = find_isomorphism(&norm.lattice, &via_frame.lattice)
        .ok_or_else(|| Error::VerificationFailed("the two MacNeille constructions disagree".into()))?;
    find_isomorphism(&maclaren_minus.lattice, &via_frame.lattice)
        .ok_or_else(|| Error::VerificationFailed("R(L⁻, ⫠) differs from the frame construction".into()))?;
    let iso_to_l = find_isomorphism(l, &norm.lattice)
        .ok_or_else(|| Error::VerificationFailed("MacNeille completion of a finite lattice is not the lattice".into()))?;
    Ok(MacNeille { norm, maclaren, maclaren_minus, via_frame, certificate, iso_to_l })
}

#[derive(Clone, Debug)]
pub struct CanonicalExtension {
    pub dual: DualSpace,
    pub algebra: RegularAlgebra,
    /// `a ↦` index of `â` in `algebra`.
    pub embedding: Vec<usize>,
    pub compactness_pairs_checked: usize,
}

pub const COMPACTNESS_FAMILY_CAP: usize = 3;

pub fn canonical_extension(l: &Ortholattice) -> Result<CanonicalExtension> {
    let dual = dual_space(l);
    let x = &dual.space;
    let algebra = regular_algebra(&x.frame())?;
    let pos = |u: PointSet| algebra.members.iter().position(|&v| v == u);
    let embedding = (0..l.n())
        .map(|a| pos(dual.hat[a]).ok_or_else(|| Error::VerificationFailed(format!("â is not regular at {}", l.name(a)))))
        .collect::<Result<Vec<_>>>()?;
    crate::lattice::check_hom(l, &algebra.lattice, &embedding)
        .map_err(|e| Error::VerificationFailed(format!("a ↦ â is not a homomorphism: {e}")))?;
    for u in 0..x.m() {
        let uu = x.star(x.star(BitSet::singleton(u)));
        let meet = dual.hat.iter().filter(|h| uu.is_subset(**h)).fold(x.all(), |acc, h| acc.intersection(*h));
        if meet != uu {
            return Err(Error::VerificationFailed(format!("{{{}}}** is not a meet of basic opens", x.name(u))));
        }
    }
    for &y in &algebra.members {
        let parts = y
            .iter()
            .map(|u| x.star(x.star(BitSet::singleton(u))))
            .fold(BitSet::EMPTY, |acc, s| acc.union(s));
        if !parts.is_subset(y) || x.star(x.star(parts)) != y {
            return Err(Error::VerificationFailed(format!("{} is not a join of closed elements", x.fmt_set(y))));
        }
    }
    let subs = subfamilies(l.n(), COMPACTNESS_FAMILY_CAP);
    let mut checked = 0;
    for a in &subs {
        let lhs = a.iter().fold(x.all(), |acc, &i| acc.intersection(dual.hat[i]));
        for b in &subs {
            let rhs = x.star(x.star(b.iter().fold(BitSet::EMPTY, |acc, &j| acc.union(dual.hat[j]))));
            checked += 1;
            if lhs.is_subset(rhs) && !l.leq(l.meet_all(a.iter().copied()), l.join_all(b.iter().copied())) {
                return Err(Error::VerificationFailed("embedding is not compact".into()));
            }
        }
    }
    if find_isomorphism(l, &algebra.lattice).is_none() {
        return Err(Error::VerificationFailed("canonical extension of a finite lattice is not the lattice".into()));
    }
    Ok(CanonicalExtension { dual, algebra, embedding, compactness_pairs_checked: checked })
}

/// `s ⊄⊥ y ⟹ ∃s' ∈ S: s ⊄⊥ s', y ≤ s'`, for all `s ∈ S`.
pub fn is_generated_up_to_specialization(x: &UvoSpace, s: PointSet) -> bool {
    s.iter().all(|a| {
        (0..x.m()).all(|y| x.perp(a, y) || s.iter().any(|b| !x.perp(a, b) && x.leq(y, b)))
    })
}

/// `s ∈ S, s ⊄⊥ y ⟹ y ∈ S`.
pub fn is_generated_subframe(x: &UvoSpace, s: PointSet) -> bool {
    s.iter().all(|a| (0..x.m()).all(|y| x.perp(a, y) || s.contains(y)))
}

#[derive(Clone, Debug)]
pub struct CongruenceCorrespondence {
    pub congruences: Vec<Congruence>,
    /// Principal up-sets (and ∅) generated up to specialization.
    pub pugs: Vec<PointSet>,
    /// Principal up-sets (and ∅) closed under `⊄⊥`.
    pub literal_pugs: Vec<PointSet>,
    /// `f[i]` indexes `pugs` for `congruences[i]`.
    pub f: Vec<usize>,
}

pub fn congruence_correspondence(l: &Ortholattice) -> Result<CongruenceCorrespondence> {
    let (om, w) = l.is_orthomodular();
    if !om {
        let (a, b) = w.unwrap();
        return Err(Error::NotOrthomodular(l.name(a).into(), l.name(b).into()));
    }
    let congruences = congruences_bruteforce(l, DEFAULT_CONGRUENCE_CAP)?;
    let d = dual_space(l);
    let x = &d.space;
    let mut candidates: Vec<PointSet> = (0..x.m()).map(|u| x.up(u)).collect();
    candidates.push(BitSet::EMPTY);
    let pugs: Vec<PointSet> = CorFamily::new(
        candidates.iter().copied().filter(|&s| is_generated_up_to_specialization(x, s)).collect(),
    )
    .members;
    let literal_pugs: Vec<PointSet> =
        CorFamily::new(candidates.iter().copied().filter(|&s| is_generated_subframe(x, s)).collect()).members;

    let g = |s: PointSet| -> Congruence {
        let keys: Vec<u64> = (0..l.n()).map(|a| d.hat[a].intersection(s).0).collect();
        Congruence::normalized(&keys.iter().map(|&k| keys.iter().position(|&j| j == k).unwrap()).collect::<Vec<_>>())
    };
    let mut f = Vec::new();
    for theta in &congruences {
        let one = Filter(theta.class(l.top()));
        for a in 0..l.n() {
            for b in 0..l.n() {
                if theta.related(a, b) {
                    let h = l.sasaki_hook(a, b);
                    if !theta.related(h, l.top()) || !l.leq(l.meet(a, h), b) {
                        return Err(Error::VerificationFailed("Sasaki hook step fails".into()));
                    }
                }
            }
        }
        let s: PointSet = (0..x.m()).filter(|&u| one.0.is_subset(d.filters[u].0)).collect();
        let i = pugs
            .iter()
            .position(|&p| p == s)
            .ok_or_else(|| Error::VerificationFailed(format!("f(θ) = {} is not in PUGS", x.fmt_set(s))))?;
        if g(s) != *theta {
            return Err(Error::VerificationFailed("g(f(θ)) ≠ θ".into()));
        }
        f.push(i);
    }
    for &s in &pugs {
        let t = g(s);
        if !t.is_compatible(l) {
            return Err(Error::VerificationFailed(format!("g({}) is not a congruence", x.fmt_set(s))));
        }
        let i = congruences.iter().position(|c| *c == t).unwrap();
        if pugs[f[i]] != s {
            return Err(Error::VerificationFailed("f(g(S)) ≠ S".into()));
        }
    }
    if congruences.len() != pugs.len() {
        return Err(Error::VerificationFailed("counts differ".into()));
    }
    Ok(CongruenceCorrespondence { congruences, pugs, literal_pugs, f })
}

/// The coprojections `X → X + Y ← Y`.
pub fn coprojections(sum: &SumSpace, x: &Arc<UvoSpace>, y: &Arc<UvoSpace>) -> Result<(UvoMap, UvoMap)> {
    let s = Arc::new(sum.space.clone());
    let left = (0..x.m()).map(|a| sum.index_of(SumTag::Left(a)).unwrap()).collect();
    let right = (0..y.m()).map(|b| sum.index_of(SumTag::Right(b)).unwrap()).collect();
    Ok((UvoMap::unchecked(x.clone(), s.clone(), left)?, UvoMap::unchecked(y.clone(), s, right)?))
}

/// Proper filters of the plain lattice, ordered by inclusion, as a space with empty ⊥.
pub fn filter_poset(l: &crate::lattice::Lattice) -> UvoSpace {
    let fs = enumerate_proper_filters(l);
    let names = fs.iter().map(|f| format!("↑{}", l.name(f.generator(l).unwrap()))).collect();
    let up = (0..fs.len()).map(|i| (0..fs.len()).filter(|&j| fs[i].0.is_subset(fs[j].0)).collect()).collect();
    UvoSpace::new(names, up, vec![BitSet::EMPTY; fs.len()]).expect("inclusion is a partial order")
}
