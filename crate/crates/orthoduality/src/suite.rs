//! The instance-verification suite behind `verify-all` and the acceptance target.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::bitset::BitSet;
use crate::catalog::{
    all_homs, builtin, builtin_lattice, enumerate_lattices, enumerate_ortholattices, m3_orthospace,
    ortholattice_names, orthocomplementations,
};
use crate::dictionary::{
    atoms_bijection, canonical_extension, congruence_correspondence, filter_poset, is_atomic_dual,
    is_atomless_dual, join_formula_check, macneille, meet_formula_check, product_sum_homeo, uvo_sum,
};
use crate::duality::{all_uvo_maps, check_conaturality, check_naturality, hom_to_uvomap, uvomap_to_hom, UvoMap};
use crate::filters::{dual_space, dual_space_named, filters_by_closure, principal_filters};
use crate::lattice::{check_hom, find_isomorphism, Lattice, LatticeHom, Ortholattice, DEFAULT_CONGRUENCE_CAP};
use crate::uvo::UvoSpace;
use crate::Error;

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl CriterionOutcome {
    pub fn within_budget(&self) -> bool {
        self.budget.map_or(true, |b| self.elapsed <= b)
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }
    fn note(&mut self, s: String) {
        self.notes.push(s);
    }
}

/// Shared inputs: catalog entries and the enumerated ortholattices.
pub struct Corpus {
    pub max_size: usize,
    pub catalog: Vec<(String, Arc<Ortholattice>)>,
    pub enumerated: Vec<Arc<Ortholattice>>,
    pub lattices: Vec<Lattice>,
    pub enumeration_time: Duration,
}

impl Corpus {
    pub fn new(max_size: usize) -> crate::Result<Corpus> {
        let t = Instant::now();
        let lattices = enumerate_lattices(max_size)?;
        let enumerated = enumerate_ortholattices(max_size)?.into_iter().map(Arc::new).collect();
        let enumeration_time = t.elapsed();
        let catalog = ortholattice_names()
            .into_iter()
            .map(|n| Ok((n.to_string(), Arc::new(builtin(n)?))))
            .collect::<crate::Result<Vec<_>>>()?;
        Ok(Corpus { max_size, catalog, enumerated, lattices, enumeration_time })
    }

    /// Catalog entries followed by enumerated ones, labelled for reports.
    fn all(&self) -> Vec<(String, Arc<Ortholattice>)> {
        let mut v = self.catalog.clone();
        v.extend(self.enumerated.iter().enumerate().map(|(i, l)| (format!("enum#{i}(n={})", l.n()), l.clone())));
        v
    }
}

fn run(id: u8, title: &'static str, budget: Option<Duration>, f: impl FnOnce(&mut Tally)) -> CriterionOutcome {
    let t = Instant::now();
    let mut tally = Tally::default();
    f(&mut tally);
    CriterionOutcome {
        id,
        title,
        passed: tally.failures.is_empty(),
        checks: tally.checks,
        failures: tally.failures,
        notes: tally.notes,
        elapsed: t.elapsed(),
        budget,
    }
}

pub fn criterion_1(c: &Corpus) -> CriterionOutcome {
    run(1, "filter-spectrum counts", Some(Duration::from_secs(1)), |t| {
        for (name, l) in c.all() {
            let closure = filters_by_closure(l.lattice());
            t.check(closure == principal_filters(l.lattice()), || format!("{name}: non-principal filter found"));
            t.check(closure.len() + 1 == l.n(), || format!("{name}: {} filters for {} elements", closure.len(), l.n()));
        }
        for l in &c.lattices {
            let k = filters_by_closure(l).len();
            t.check(k + 1 == l.n(), || format!("lattice of size {}: {k} filters", l.n()));
        }
        let m3 = builtin_lattice("M3_lattice_only").expect("catalog");
        let fp = filter_poset(&m3);
        let fig = m3_orthospace();
        t.check(fp.m() == 4, || format!("X⁺_M3 has {} points", fp.m()));
        let minimum: Vec<usize> = (0..fp.m()).filter(|&p| fp.up(p) == fp.all()).collect();
        let maximal = fp.maximal_points();
        t.check(minimum.len() == 1 && maximal.len() == 3 && fp.covers().len() == 3, || {
            "X⁺_M3 is not one minimum below three incomparable points".into()
        });
        // ↑1 ↦ x, ↑a ↦ y1, ↑b ↦ y2, ↑c ↦ y3
        let rename: Vec<usize> = ["↑1", "↑a", "↑b", "↑c"].iter().map(|n| fp.index_of(n).unwrap()).collect();
        let same = (0..4).all(|i| (0..4).all(|j| fig.leq(i, j) == fp.leq(rename[i], rename[j])));
        t.check(same, || "the M3 space order differs from the filter poset of M3".into());
        let o2 = dual_space(&builtin("O2").unwrap());
        t.check(o2.space.m() == 1, || format!("X⁺_O2 has {} points", o2.space.m()));
        t.note(format!("{} ortholattices, {} lattices", c.catalog.len() + c.enumerated.len(), c.lattices.len()));
    })
}

pub fn criterion_2(c: &Corpus) -> CriterionOutcome {
    let mut out = run(2, "representation theorem", Some(Duration::from_secs(10)), |t| {
        for (name, l) in c.all() {
            let d = dual_space(&l);
            let alg = match d.space.cor_algebra() {
                Ok(a) => a,
                Err(e) => {
                    t.check(false, || format!("{name}: {e}"));
                    continue;
                }
            };
            let rep: Option<Vec<usize>> = (0..l.n()).map(|a| alg.family.index_of(d.hat[a])).collect();
            let ok = match rep {
                Some(rep) => {
                    let bij = BitSet::from_indices(rep.iter().copied()).len() == l.n() && alg.family.len() == l.n();
                    bij && check_hom(&l, &alg.lattice, &rep).is_ok()
                }
                None => false,
            };
            t.check(ok, || format!("{name}: a ↦ â is not an isomorphism onto COR"));
            t.check(find_isomorphism(&l, &alg.lattice).is_some(), || format!("{name}: no isomorphism to COR"));
        }
    });
    out.notes.push(format!("enumeration took {:?}", c.enumeration_time));
    out.elapsed += c.enumeration_time;
    out
}

/// Dual spaces of every criterion-1 ortholattice.
fn dual_spaces(c: &Corpus) -> Vec<(String, UvoSpace)> {
    c.all().into_iter().map(|(n, l)| (n, dual_space(&l).space)).collect()
}

pub fn criterion_3(c: &Corpus) -> CriterionOutcome {
    run(3, "characterization theorem", None, |t| {
        for (name, x) in dual_spaces(c) {
            match x.validate_uvo() {
                Ok(r) => t.check(r.passed(), || format!("{name}: UVO axioms fail: {:?}", r.first_failure())),
                Err(e) => t.check(false, || format!("{name}: {e}")),
            }
            let r = x.char_map();
            t.check(r.is_ok(), || format!("{name}: {}", r.unwrap_err()));
        }
    })
}

pub const DUALITY_SIZE_CAP: usize = 6;

pub fn criterion_4(c: &Corpus) -> CriterionOutcome {
    run(4, "dual equivalence", Some(Duration::from_secs(60)), |t| {
        let small: Vec<(String, Arc<Ortholattice>)> =
            c.catalog.iter().filter(|(_, l)| l.n() <= DUALITY_SIZE_CAP).cloned().collect();
        let duals: Vec<Arc<UvoSpace>> = small.iter().map(|(_, l)| Arc::new(dual_space(l).space)).collect();
        let k = small.len();
        let mut homs: Vec<Vec<Vec<LatticeHom>>> = vec![vec![Vec::new(); k]; k];
        let mut lowered: Vec<Vec<Vec<UvoMap>>> = vec![vec![Vec::new(); k]; k];
        let mut total = 0;
        for i in 0..k {
            for j in 0..k {
                let hs = match all_homs(&small[i].1, &small[j].1) {
                    Ok(h) => h,
                    Err(e) => {
                        t.check(false, || format!("all_homs: {e}"));
                        continue;
                    }
                };
                for h in &hs {
                    total += 1;
                    let (a, b) = (&small[i].0, &small[j].0);
                    match hom_to_uvomap(h) {
                        Ok(d) => {
                            t.check(*d.map.source == *duals[j] && *d.map.target == *duals[i], || {
                                format!("{a}→{b}: h₊ has the wrong spaces")
                            });
                            let conat = check_conaturality(&d.map);
                            t.check(conat.as_ref().map_or(false, |s| s.holds), || format!("{a}→{b}: θ square {conat:?}"));
                            lowered[i][j].push(d.map);
                        }
                        Err(e) => t.check(false, || format!("{a}→{b}: {e}")),
                    }
                    let nat = check_naturality(h);
                    t.check(nat.as_ref().map_or(false, |s| s.holds), || format!("{a}→{b}: η square {nat:?}"));
                }
                // UVO-maps X⁺_{L'} → X⁺_L are exactly the h₊
                match all_uvo_maps(&duals[j], &duals[i]) {
                    Ok(maps) => {
                        let from_homs: BTreeSet<Vec<usize>> = lowered[i][j].iter().map(|f| f.map.clone()).collect();
                        let all: BTreeSet<Vec<usize>> = maps.iter().map(|f| f.map.clone()).collect();
                        t.check(from_homs == all && from_homs.len() == hs.len(), || {
                            format!("{}→{}: {} homs but {} UVO-maps", small[i].0, small[j].0, hs.len(), all.len())
                        });
                    }
                    Err(e) => t.check(false, || format!("all_uvo_maps: {e}")),
                }
                homs[i][j] = hs;
            }
        }
        for i in 0..k {
            let id = LatticeHom::identity(&small[i].1);
            let ok = hom_to_uvomap(&id).map_or(false, |d| d.map.map == (0..duals[i].m()).collect::<Vec<_>>());
            t.check(ok, || format!("{}: (id)₊ ≠ id", small[i].0));
            let idx = UvoMap::identity(&duals[i]);
            let ok = uvomap_to_hom(&idx).map_or(false, |p| p.hom.map == (0..p.hom.map.len()).collect::<Vec<_>>());
            t.check(ok, || format!("{}: (id)⁺ ≠ id", small[i].0));
        }
        for i in 0..k {
            for j in 0..k {
                for m in 0..k {
                    for (hi, h) in homs[i][j].iter().enumerate() {
                        for (gi, g) in homs[j][m].iter().enumerate() {
                            let gh = h.then(g).expect("composable homs");
                            // (g∘h)₊ = h₊ ∘ g₊
                            let lhs = hom_to_uvomap(&gh).map(|d| d.map.map);
                            let rhs = lowered[j][m][gi].then(&lowered[i][j][hi]).map(|f| f.map);
                            t.check(lhs.is_ok() && lhs == rhs, || {
                                format!("({}→{}→{}) lower-star functoriality", small[i].0, small[j].0, small[m].0)
                            });
                            // (h₊ ∘ g₊)⁺ = (g₊)⁺ ∘ (h₊)⁺
                            let comp = lowered[j][m][gi].then(&lowered[i][j][hi]);
                            let lhs = comp.and_then(|f| uvomap_to_hom(&f)).map(|p| p.hom.map);
                            let rhs = uvomap_to_hom(&lowered[i][j][hi])
                                .and_then(|p| uvomap_to_hom(&lowered[j][m][gi]).map(|q| (p, q)))
                                .map(|(p, q)| p.hom.map.iter().map(|&a| q.hom.map[a]).collect::<Vec<_>>());
                            t.check(lhs.is_ok() && lhs == rhs, || {
                                format!("({}→{}→{}) upper-star functoriality", small[i].0, small[j].0, small[m].0)
                            });
                        }
                    }
                }
            }
        }
        t.note(format!("{total} homomorphisms across {} lattices", k));
    })
}

pub fn criterion_5(c: &Corpus) -> CriterionOutcome {
    run(5, "duality dictionary", None, |t| {
        for (name, l) in &c.catalog {
            let x = dual_space(l).space;
            for (what, r) in [("meet", meet_formula_check(&x, 3)), ("join", join_formula_check(&x, 3))] {
                t.check(r.as_ref().map_or(false, |f| f.holds), || format!("{name}: {what} formula {r:?}"));
            }
            let ab = atoms_bijection(l);
            t.check(ab.holds(), || format!("{name}: atoms bijection {ab:?}"));
            t.check(is_atomic_dual(&x) == l.is_atomic(), || format!("{name}: atomicity disagrees"));
            t.check(is_atomless_dual(&x) == l.is_atomless(), || format!("{name}: atomlessness disagrees"));
            let mn = macneille(l);
            t.check(mn.is_ok(), || format!("{name}: MacNeille {}", mn.unwrap_err()));
            let ce = canonical_extension(l);
            t.check(ce.is_ok(), || format!("{name}: canonical extension {}", ce.unwrap_err()));
        }

        let o2 = builtin("O2").unwrap();
        let z = dual_space_named(&o2, |_| "z".to_string()).space;
        let fig = m3_orthospace();
        match uvo_sum(&z, &fig) {
            Ok(s) => {
                t.check(s.space.m() == 9, || format!("sum has {} points", s.space.m()));
                t.check(s.generated_order_agrees, || "sum order differs from the generated topology".into());
                let got: BTreeSet<(String, String)> = s
                    .space
                    .covers()
                    .into_iter()
                    .map(|(a, b)| (s.space.name(a).to_string(), s.space.name(b).to_string()))
                    .collect();
                t.check(got == o2_m3_sum_covers(), || format!("O2 + M3 sum covers differ: {got:?}"));
                for (a, b) in o2_m3_sum_perp() {
                    let (i, j) = (s.space.index_of(&a).unwrap(), s.space.index_of(&b).unwrap());
                    t.check(s.space.perp(i, j) && s.space.perp(j, i), || format!("{a} ⊥ {b} missing from the sum"));
                }
            }
            Err(e) => t.check(false, || format!("sum: {e}")),
        }

        for (a, b) in [("O2", "TwoByTwo"), ("TwoByTwo", "MO2")] {
            let (la, lb) = (builtin(a).unwrap(), builtin(b).unwrap());
            match product_sum_homeo(&la, &lb) {
                Ok(h) => {
                    t.check(h.sum.generated_order_agrees, || format!("{a}×{b}: sum order vs generated topology"));
                    let cor = h.sum.space.cor_algebra();
                    let iso = cor.as_ref().ok().and_then(|alg| find_isomorphism(&h.product, &alg.lattice));
                    t.check(iso.is_some(), || format!("{a}×{b}: COR(X+Y) is not the product"));
                }
                Err(e) => t.check(false, || format!("{a}×{b}: {e}")),
            }
        }

        for (name, expect) in [("B8", 8usize), ("MO2", 2)] {
            let l = builtin(name).unwrap();
            match congruence_correspondence(&l) {
                Ok(cc) => {
                    t.check(cc.congruences.len() == expect && cc.pugs.len() == expect, || {
                        format!("{name}: {} congruences, {} PUGS", cc.congruences.len(), cc.pugs.len())
                    });
                    t.note(format!(
                        "{name}: {} congruences, {} PUGS, {} literal ⊄⊥-closed principal up-sets",
                        cc.congruences.len(),
                        cc.pugs.len(),
                        cc.literal_pugs.len()
                    ));
                }
                Err(e) => t.check(false, || format!("{name}: {e}")),
            }
        }
        for (name, l) in &c.catalog {
            if l.n() > DEFAULT_CONGRUENCE_CAP {
                continue;
            }
            let r = congruence_correspondence(l);
            if l.is_orthomodular().0 {
                t.check(r.is_ok(), || format!("{name}: {}", r.as_ref().unwrap_err()));
            } else {
                t.check(matches!(r, Err(Error::NotOrthomodular(..))), || format!("{name}: expected NotOrthomodular"));
            }
        }
    })
}

/// Specialization covers of the O2 + M3 sum.
pub fn o2_m3_sum_covers() -> BTreeSet<(String, String)> {
    [
        ("⟨z,x⟩", "⟨z,y1⟩"),
        ("⟨z,x⟩", "⟨z,y2⟩"),
        ("⟨z,x⟩", "⟨z,y3⟩"),
        ("⟨z,x⟩", "x"),
        ("⟨z,y1⟩", "z"),
        ("⟨z,y2⟩", "z"),
        ("⟨z,y3⟩", "z"),
        ("⟨z,y1⟩", "y1"),
        ("⟨z,y2⟩", "y2"),
        ("⟨z,y3⟩", "y3"),
        ("x", "y1"),
        ("x", "y2"),
        ("x", "y3"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect()
}

/// The orthogonal pairs displayed for the O2 + M3 sum.
pub fn o2_m3_sum_perp() -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> =
        [("y1", "y2"), ("y2", "y3"), ("y1", "y3")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                v.push((format!("⟨z,y{i}⟩"), format!("y{j}")));
            }
        }
    }
    v
}

pub const SUBSET_ORACLE_CAP: usize = 12;

/// Spaces in the catalog with at most `SUBSET_ORACLE_CAP` points.
pub fn catalog_spaces(c: &Corpus) -> Vec<(String, UvoSpace)> {
    let mut v: Vec<(String, UvoSpace)> =
        c.catalog.iter().map(|(n, l)| (format!("X⁺_{n}"), dual_space(l).space)).collect();
    v.push(("X⁺_M3 orthospace".into(), m3_orthospace()));
    let o2 = builtin("O2").unwrap();
    let z = dual_space_named(&o2, |_| "z".to_string()).space;
    if let Ok(s) = uvo_sum(&z, &m3_orthospace()) {
        v.push(("X⁺_O2 + X⁺_M3".into(), s.space));
    }
    v.retain(|(_, x)| x.m() <= SUBSET_ORACLE_CAP);
    v
}

pub fn criterion_6(c: &Corpus) -> CriterionOutcome {
    run(6, "subset-calculus oracle", Some(Duration::from_secs(30)), |t| {
        let spaces = catalog_spaces(c);
        for (name, x) in &spaces {
            let mut ok = true;
            for bits in 0u64..(1u64 << x.m()) {
                let y = BitSet(bits);
                let s = x.star(y);
                ok &= x.star(s) == x.box_diamond(y) && x.star(x.star(s)) == s;
            }
            t.check(ok, || format!("{name}: star laws fail"));
        }
        t.note(format!("{} spaces", spaces.len()));
    })
}

pub fn criterion_7(_c: &Corpus) -> CriterionOutcome {
    run(7, "negative controls", None, |t| {
        let names: Vec<String> = ["0", "a", "b", "1"].iter().map(|s| s.to_string()).collect();
        let chain = Lattice::from_covers(names, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        t.check(orthocomplementations(&chain).is_empty(), || "4-chain has an orthocomplementation".into());
        let mut any = false;
        for oc in involutions(4) {
            any |= Ortholattice::new(chain.clone(), oc).is_ok();
        }
        t.check(!any, || "validator accepts an involution on the 4-chain".into());

        let o6 = builtin("O6").unwrap();
        let (om, w) = o6.is_orthomodular();
        let expect = (o6.index_of("a").unwrap(), o6.index_of("b'").unwrap());
        t.check(!om && w == Some(expect), || format!("O6 orthomodularity witness {w:?}"));

        let o10 = builtin("O10").unwrap();
        let as_names = |e: [usize; 5]| -> BTreeSet<String> { e.iter().map(|&i| o10.name(i).to_string()).collect() };
        let set = |s: &[&str]| -> BTreeSet<String> { s.iter().map(|x| x.to_string()).collect() };
        let m3 = o10.find_m3().map(|w| as_names(w.elems));
        t.check(m3 == Some(set(&["0", "a", "a'", "d", "1"])), || format!("O10 M3 witness {m3:?}"));
        let n5 = o10.find_n5().map(|w| as_names(w.elems));
        t.check(n5 == Some(set(&["0", "c'", "b", "d", "1"])), || format!("O10 N5 witness {n5:?}"));
        t.check(!o10.is_distributive().0, || "O10 reported distributive".into());
    })
}

/// All involutions of `0..n` as maps.
pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let a = match p.iter().position(|&x| x == usize::MAX) {
            None => {
                out.push(p.clone());
                return;
            }
            Some(a) => a,
        };
        p[a] = a;
        go(p, out);
        for b in a + 1..p.len() {
            if p[b] == usize::MAX {
                p[a] = b;
                p[b] = a;
                go(p, out);
                p[b] = usize::MAX;
            }
        }
        p[a] = usize::MAX;
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; n], &mut out);
    out
}

/// Runs criteria 1–7 in order.
pub fn run_all(max_size: usize) -> crate::Result<Vec<CriterionOutcome>> {
    let c = Corpus::new(max_size)?;
    Ok(vec![
        criterion_1(&c),
        criterion_2(&c),
        criterion_3(&c),
        criterion_4(&c),
        criterion_5(&c),
        criterion_6(&c),
        criterion_7(&c),
    ])
}
