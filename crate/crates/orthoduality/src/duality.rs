//! Maps between spaces, and the two functors between homomorphisms and UVO-maps.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::filters::{dual_space, DualSpace};
use crate::lattice::LatticeHom;
use crate::uvo::{CorAlgebra, PointSet, UvoSpace};

/// Result of the two spectral-map checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectralCheck {
    pub order_preserving: bool,
    /// Preimage of every COR member of the target is an up-set; `None` if COR could not be built.
    pub cor_preimages_open: Option<bool>,
}

impl SpectralCheck {
    pub fn spectral(&self) -> bool {
        self.order_preserving
    }
    pub fn agree(&self) -> bool {
        self.cor_preimages_open.map_or(true, |p| p == self.order_preserving)
    }
}

pub fn preimage(map: &[usize], u: PointSet) -> PointSet {
    (0..map.len()).filter(|&x| u.contains(map[x])).collect()
}

pub fn image(map: &[usize], s: PointSet) -> PointSet {
    s.iter().map(|x| map[x]).collect()
}

pub fn is_spectral_map(x: &UvoSpace, y: &UvoSpace, f: &[usize]) -> SpectralCheck {
    let order_preserving = (0..x.m()).all(|a| x.up(a).iter().all(|b| y.leq(f[a], f[b])));
    let cor_preimages_open = y.cor().ok().map(|cor| cor.members.iter().all(|&u| x.is_up_set(preimage(f, u))));
    SpectralCheck { order_preserving, cor_preimages_open }
}

/// Forth and back conditions for the complement `⊄⊥` of orthogonality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PMorphismReport {
    /// `x ⊄⊥ y ⟹ f(x) ⊄⊥ f(y)`; failing `(x, y)`.
    pub forth: Option<(usize, usize)>,
    /// `f(x) ⊄⊥ y' ⟹ ∃y: x ⊄⊥ y, y' ≤ f(y)`; failing `(x, y')`.
    pub back: Option<(usize, usize)>,
    /// `f(x) ⊄⊥ y' ⟹ ∃y: x ⊄⊥ y, f(y) = y'`; failing `(x, y')`.
    pub back_strict: Option<(usize, usize)>,
    /// `f(x) ≤ y' ⟹ ∃y ≥ x: f(y) = y'`; failing `(x, y')`.
    pub order_back: Option<(usize, usize)>,
}

impl PMorphismReport {
    pub fn forth_holds(&self) -> bool {
        self.forth.is_none()
    }
    pub fn back_holds(&self) -> bool {
        self.back.is_none()
    }
}

pub fn is_p_morphism_nonperp(x: &UvoSpace, y: &UvoSpace, f: &[usize]) -> PMorphismReport {
    let m = x.m();
    let mut forth = None;
    'f: for a in 0..m {
        for b in 0..m {
            if !x.perp(a, b) && y.perp(f[a], f[b]) {
                forth = Some((a, b));
                break 'f;
            }
        }
    }
    let back = first_back_failure(x, y, f, |b, yp| y.leq(yp, f[b]));
    let back_strict = first_back_failure(x, y, f, |b, yp| f[b] == yp);
    let mut order_back = None;
    'o: for a in 0..m {
        for yp in y.up(f[a]).iter() {
            if !x.up(a).iter().any(|b| f[b] == yp) {
                order_back = Some((a, yp));
                break 'o;
            }
        }
    }
    PMorphismReport { forth, back, back_strict, order_back }
}

fn first_back_failure(
    x: &UvoSpace,
    y: &UvoSpace,
    f: &[usize],
    reaches: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    for a in 0..x.m() {
        for yp in 0..y.m() {
            if y.perp(f[a], yp) {
                continue;
            }
            if !(0..x.m()).any(|b| !x.perp(a, b) && reaches(b, yp)) {
                return Some((a, yp));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFlags {
    pub spectral: bool,
    pub cor_preimages_open: Option<bool>,
    pub pmorphic_forth: bool,
    pub pmorphic_back: bool,
    pub pmorphic_back_strict: bool,
    pub order_back: bool,
}

impl MapFlags {
    pub fn verified(&self) -> bool {
        self.spectral && self.pmorphic_forth && self.pmorphic_back
    }
}

/// A point map between spaces with its computed flags.
#[derive(Clone, Debug)]
pub struct UvoMap {
    pub source: Arc<UvoSpace>,
    pub target: Arc<UvoSpace>,
    pub map: Vec<usize>,
    pub flags: MapFlags,
}

impl UvoMap {
    /// Computes flags without requiring them to hold.
    pub fn unchecked(source: Arc<UvoSpace>, target: Arc<UvoSpace>, map: Vec<usize>) -> Result<UvoMap> {
        if map.len() != source.m() || map.iter().any(|&p| p >= target.m()) {
            return Err(Error::VerificationFailed("point map does not fit its spaces".into()));
        }
        let s = is_spectral_map(&source, &target, &map);
        let p = is_p_morphism_nonperp(&source, &target, &map);
        let flags = MapFlags {
            spectral: s.spectral(),
            cor_preimages_open: s.cor_preimages_open,
            pmorphic_forth: p.forth_holds(),
            pmorphic_back: p.back_holds(),
            pmorphic_back_strict: p.back_strict.is_none(),
            order_back: p.order_back.is_none(),
        };
        Ok(UvoMap { source, target, map, flags })
    }

    /// Requires spectral, forth and back.
    pub fn new(source: Arc<UvoSpace>, target: Arc<UvoSpace>, map: Vec<usize>) -> Result<UvoMap> {
        let f = UvoMap::unchecked(source, target, map)?;
        if !f.flags.verified() {
            return Err(Error::VerificationFailed(format!("not a UVO-map: {:?}", f.flags)));
        }
        Ok(f)
    }

    pub fn identity(x: &Arc<UvoSpace>) -> UvoMap {
        UvoMap::unchecked(x.clone(), x.clone(), (0..x.m()).collect()).expect("identity fits")
    }

    pub fn is_verified(&self) -> bool {
        self.flags.verified()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &UvoMap) -> Result<UvoMap> {
        if *self.target != *other.source {
            return Err(Error::VerificationFailed("composition of non-composable maps".into()));
        }
        let map = self.map.iter().map(|&p| other.map[p]).collect();
        UvoMap::unchecked(self.source.clone(), other.target.clone(), map)
    }

    pub fn is_injective(&self) -> bool {
        image(&self.map, self.source.all()).len() == self.source.m()
    }

    pub fn is_surjective(&self) -> bool {
        image(&self.map, self.source.all()) == self.target.all()
    }
}

/// `h₊ : X⁺_{L'} → X⁺_L`, `x ↦ h⁻¹[x]`, for `h : L → L'`.
#[derive(Clone, Debug)]
pub struct DualMap {
    pub map: UvoMap,
    /// Dual of `h.target`; source of `map`.
    pub source_dual: DualSpace,
    /// Dual of `h.source`; target of `map`.
    pub target_dual: DualSpace,
}

pub fn hom_to_uvomap(h: &LatticeHom) -> Result<DualMap> {
    let (l, lp) = (&h.source, &h.target);
    let dl = dual_space(l);
    let dlp = dual_space(lp);
    let mut map = Vec::with_capacity(dlp.space.m());
    for f in &dlp.filters {
        let pre: BitSet = (0..l.n()).filter(|&a| f.contains(h.map[a])).collect();
        match dl.point_of_members(pre) {
            Some(p) => map.push(p),
            None => return Err(Error::VerificationFailed("preimage of a proper filter is not a proper filter".into())),
        }
    }
    for a in 0..l.n() {
        if preimage(&map, dl.hat[a]) != dlp.hat[h.map[a]] {
            return Err(Error::VerificationFailed(format!("h₊⁻¹[â] ≠ ĥ(a) at a = {}", l.name(a))));
        }
    }
    let f = UvoMap::unchecked(Arc::new(dlp.space.clone()), Arc::new(dl.space.clone()), map)?;
    if !f.is_verified() || f.flags.cor_preimages_open == Some(false) {
        return Err(Error::VerificationFailed(format!("h₊ fails its checks: {:?}", f.flags)));
    }
    Ok(DualMap { map: f, source_dual: dlp, target_dual: dl })
}

/// `f⁺ : COR(X') → COR(X)`, `U ↦ f⁻¹[U]`, for `f : X → X'`.
#[derive(Clone, Debug)]
pub struct FPlus {
    pub hom: LatticeHom,
    /// `COR(f.target)`.
    pub source: CorAlgebra,
    /// `COR(f.source)`.
    pub target: CorAlgebra,
}

pub fn uvomap_to_hom(f: &UvoMap) -> Result<FPlus> {
    let (x, y) = (&f.source, &f.target);
    let cx = x.cor_algebra()?;
    let cy = y.cor_algebra()?;
    let mut map = Vec::with_capacity(cy.family.len());
    for &u in &cy.family.members {
        let pre = preimage(&f.map, u);
        match cx.family.index_of(pre) {
            Some(i) => map.push(i),
            None => {
                return Err(Error::VerificationFailed(format!(
                    "f⁻¹[{}] = {} is not in COR",
                    y.fmt_set(u),
                    x.fmt_set(pre)
                )))
            }
        }
    }
    for &u in &cy.family.members {
        let pre = preimage(&f.map, u);
        if preimage(&f.map, y.star(u)) != x.star(pre) {
            return Err(Error::VerificationFailed(format!("f⁻¹ does not preserve * at {}", y.fmt_set(u))));
        }
        for &v in &cy.family.members {
            if preimage(&f.map, u.intersection(v)) != pre.intersection(preimage(&f.map, v)) {
                return Err(Error::VerificationFailed("f⁻¹ does not preserve ∩".into()));
            }
        }
    }
    if !preimage(&f.map, BitSet::EMPTY).is_empty() {
        return Err(Error::VerificationFailed("f⁻¹ does not preserve ∅".into()));
    }
    let hom = LatticeHom::new(cy.lattice.clone(), cx.lattice.clone(), map)?;
    Ok(FPlus { hom, source: cy, target: cx })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareCheck {
    pub holds: bool,
    pub witness: Option<String>,
}

impl SquareCheck {
    fn ok() -> SquareCheck {
        SquareCheck { holds: true, witness: None }
    }
    fn fail(w: String) -> SquareCheck {
        SquareCheck { holds: false, witness: Some(w) }
    }
}

/// `(h₊)⁺ ∘ rep_L = rep_{L'} ∘ h` where `rep(a) = â`.
pub fn check_naturality(h: &LatticeHom) -> Result<SquareCheck> {
    let d = hom_to_uvomap(h)?;
    let plus = uvomap_to_hom(&d.map)?;
    // plus: COR(X⁺_L) → COR(X⁺_{L'})
    for a in 0..h.source.n() {
        let rep = plus
            .source
            .family
            .index_of(d.target_dual.hat[a])
            .ok_or_else(|| Error::VerificationFailed("â is not in COR".into()))?;
        let rep_h = plus
            .target
            .family
            .index_of(d.source_dual.hat[h.map[a]])
            .ok_or_else(|| Error::VerificationFailed("â is not in COR".into()))?;
        if plus.hom.map[rep] != rep_h {
            return Ok(SquareCheck::fail(format!("square fails at {}", h.source.name(a))));
        }
    }
    Ok(SquareCheck::ok())
}

/// `(f⁺)₊ ∘ g_X = g_{X'} ∘ f` where `g` is the characterization map.
pub fn check_conaturality(f: &UvoMap) -> Result<SquareCheck> {
    let gx = f.source.char_map()?;
    let gy = f.target.char_map()?;
    let plus = uvomap_to_hom(f)?;
    let back = hom_to_uvomap(&plus.hom)?;
    for x in 0..f.source.m() {
        if back.map.map[gx.map[x]] != gy.map[f.map[x]] {
            return Ok(SquareCheck::fail(format!("square fails at {}", f.source.name(x))));
        }
    }
    Ok(SquareCheck::ok())
}

/// Injective, and every `U ∈ COR(X)` is the trace of some `V ∈ COR(X')` on the image.
pub fn is_uvo_embedding(f: &UvoMap) -> Result<SquareCheck> {
    if !f.is_injective() {
        return Ok(SquareCheck::fail("not injective".into()));
    }
    let cx = f.source.cor()?;
    let cy = f.target.cor()?;
    let img = image(&f.map, f.source.all());
    for &u in &cx.members {
        let fu = image(&f.map, u);
        if !cy.members.iter().any(|&v| img.intersection(v) == fu) {
            return Ok(SquareCheck::fail(format!("f[{}] is not a trace of COR", f.source.fmt_set(u))));
        }
    }
    Ok(SquareCheck::ok())
}

pub const MAP_SEARCH_CAP: usize = 1 << 22;

/// All point maps `X → X'` passing the UVO-map checks, by backtracking over order-preserving maps.
pub fn all_uvo_maps(x: &Arc<UvoSpace>, y: &Arc<UvoSpace>) -> Result<Vec<UvoMap>> {
    let total = (y.m() as f64).powi(x.m() as i32);
    if total > MAP_SEARCH_CAP as f64 {
        return Err(Error::SizeCapExceeded { what: "point maps", size: total as usize, cap: MAP_SEARCH_CAP });
    }
    let mut out = Vec::new();
    let mut cur = vec![0usize; x.m()];
    fn go(x: &Arc<UvoSpace>, y: &Arc<UvoSpace>, i: usize, cur: &mut Vec<usize>, out: &mut Vec<UvoMap>) -> Result<()> {
        if i == x.m() {
            let f = UvoMap::unchecked(x.clone(), y.clone(), cur.clone())?;
            if f.is_verified() {
                out.push(f);
            }
            return Ok(());
        }
        for p in 0..y.m() {
            let ok = (0..i).all(|j| {
                (!x.leq(j, i) || y.leq(cur[j], p))
                    && (!x.leq(i, j) || y.leq(p, cur[j]))
                    && (x.perp(i, j) || !y.perp(p, cur[j]))
            });
            if ok {
                cur[i] = p;
                go(x, y, i + 1, cur, out)?;
            }
        }
        Ok(())
    }
    go(x, y, 0, &mut cur, &mut out)?;
    Ok(out)
}
