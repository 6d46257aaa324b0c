use std::sync::Arc;

use orthoduality::catalog::{enumerate_lattices, enumerate_ortholattices};
use orthoduality::dictionary::{
    atoms_bijection, canonical_extension, congruence_correspondence, coprojections, filter_poset, is_atomic_dual,
    is_atomless_dual, isolated_points, macneille, product_sum_homeo, uvo_sum, SumTag,
};
use orthoduality::filters::{dual_space, verify_spectral};
use orthoduality::io::{lattice_to_dot, olat_from_ortholattice, serialize_olat, serialize_uvo, space_to_dot, uvo_from_space};
use orthoduality::lattice::{check_hom, find_isomorphism, product, Lattice, Ortholattice, SubKind};
use orthoduality::suite;
use orthoduality::uvo::{PointSet, UvoSpace, Witness};
use orthoduality::Error;
use serde_json::{json, Value};

use crate::input::{self, Input};
use crate::report::{Failure, Report};

type Outcome = Result<Report, Failure>;

fn names(l: &Lattice, it: impl IntoIterator<Item = usize>) -> Vec<String> {
    it.into_iter().map(|a| l.name(a).to_string()).collect()
}

fn point_names(x: &UvoSpace, s: PointSet) -> Vec<String> {
    s.iter().map(|p| x.name(p).to_string()).collect()
}

fn pairs_json(pairs: &[(String, String)]) -> Value {
    pairs.iter().map(|(a, b)| json!([a, b])).collect()
}

fn space_json(x: &UvoSpace) -> Value {
    let covers: Vec<(String, String)> =
        x.covers().into_iter().map(|(a, b)| (x.name(a).to_string(), x.name(b).to_string())).collect();
    let perp: Vec<(String, String)> = x
        .perp_pairs()
        .into_iter()
        .filter(|&(a, b)| a < b)
        .map(|(a, b)| (x.name(a).to_string(), x.name(b).to_string()))
        .collect();
    json!({ "points": x.names(), "covers": pairs_json(&covers), "perp": pairs_json(&perp) })
}

fn witness_json(x: &UvoSpace, w: &Witness) -> Value {
    json!({
        "description": w.description,
        "points": w.points.iter().map(|&p| x.name(p)).collect::<Vec<_>>(),
        "sets": w.sets.iter().map(|&s| point_names(x, s)).collect::<Vec<_>>(),
    })
}

/// Runs the UVO axiom checks, recording each and failing the report on the first violation.
fn uvo_axioms(r: &mut Report, x: &UvoSpace) -> Result<bool, Failure> {
    let rep = x.validate_uvo()?;
    let axioms: Vec<Value> = rep
        .axioms()
        .iter()
        .map(|(name, a)| json!({ "axiom": name, "passed": a.passed, "witness": a.witness.as_ref().map(|w| witness_json(x, w)) }))
        .collect();
    r.set("uvo_axioms", axioms).set("cor_size", rep.cor_size);
    if let Some((i, name, a)) = rep.first_failure() {
        let w = a.witness.as_ref().map(|w| match w.points.as_slice() {
            [] => w.description.clone(),
            ps => format!("{} (points: {})", w.description, ps.iter().map(|&p| x.name(p)).collect::<Vec<_>>().join(", ")),
        });
        r.require(false, || format!("UVO axiom ({i}) {name} fails: {}", w.unwrap_or_default()));
        return Ok(false);
    }
    r.line(format!("UVO-space: all five axioms hold, |COR| = {}", rep.cor_size));
    Ok(true)
}

fn lattice_props(r: &mut Report, l: &Lattice) {
    let (dist, w) = l.is_distributive();
    let (kind, label) = match w.map(|w| w.kind) {
        Some(SubKind::M3) => ("M3", "M₃"),
        _ => ("N5", "N₅"),
    };
    let wj = w.map(|w| json!({ "kind": kind, "elements": names(l, w.elems) }));
    r.line(match w {
        None => "distributive".to_string(),
        Some(w) => format!("non-distributive ({label} witness: {})", names(l, w.elems).join(",")),
    });
    let (modular, mw) = l.is_modular();
    r.line(match mw {
        None => "modular".to_string(),
        Some((a, b, c)) => format!("non-modular (witness: {})", names(l, [a, b, c]).join(",")),
    });
    r.set("size", l.n())
        .set("distributive", json!({ "holds": dist, "witness": wj }))
        .set("modular", json!({ "holds": modular, "witness": mw.map(|(a, b, c)| names(l, [a, b, c])) }))
        .set("atomic", l.is_atomic())
        .set("atomistic", l.is_atomistic())
        .set("atomless", l.is_atomless());
}

pub fn check(arg: &str) -> Outcome {
    let mut r = Report::new();
    r.set("input", arg);
    match input::load(arg)? {
        Input::Ortholattice(l) => {
            r.set("kind", "ortholattice");
            r.line(format!("valid ortholattice with {} elements", l.n()));
            lattice_props(&mut r, l.lattice());
            let (om, w) = l.is_orthomodular();
            r.set("orthomodular", json!({ "holds": om, "witness": w.map(|(a, b)| names(&l, [a, b])) }));
            r.set("boolean", l.is_boolean());
            r.line(match w {
                None => "orthomodular".to_string(),
                Some((a, b)) => format!("not orthomodular (witness: {}, {})", l.name(a), l.name(b)),
            });
        }
        Input::Lattice(l) => {
            r.set("kind", "lattice");
            r.line(format!("lattice with {} elements (no orthocomplement)", l.n()));
            lattice_props(&mut r, &l);
        }
        Input::Space(x) => {
            r.set("kind", "space").set("space", space_json(&x));
            r.line(format!("orthospace with {} points", x.m()));
            uvo_axioms(&mut r, &x)?;
        }
    }
    Ok(r)
}

pub fn dualize(arg: &str) -> Outcome {
    let mut r = Report::new();
    r.set("input", arg);
    let x = match input::load(arg)? {
        Input::Ortholattice(l) => dual_space(&l).space,
        Input::Lattice(l) => {
            let x = filter_poset(&l);
            r.set("kind", "filter-poset").set("space", space_json(&x)).set("document", serialize_uvo(&uvo_from_space(&x)));
            r.line(format!("{} proper filters ordered by inclusion (no orthocomplement, so no ⊥)", x.m()));
            for (a, b) in x.covers() {
                r.line(format!("  {} ≤ {}", x.name(a), x.name(b)));
            }
            return Ok(r);
        }
        Input::Space(x) => dual_space(&x.cor_algebra()?.lattice).space,
    };
    r.set("kind", "uvo-space").set("space", space_json(&x)).set("document", serialize_uvo(&uvo_from_space(&x)));
    r.line(format!("X⁺ has {} points", x.m()));
    uvo_axioms(&mut r, &x)?;
    match verify_spectral(&x) {
        Ok(s) => {
            r.set("spectral", json!({ "t0": s.t0, "compact": s.compact, "coherent": s.coherent, "sober": s.sober, "opens": s.opens }));
            r.require(s.all(), || format!("spectral checks fail: {s:?}"));
            r.line(format!("spectral: T0, compact, coherent, sober ({} opens)", s.opens));
        }
        Err(Error::SizeCapExceeded { .. }) => {
            r.set("spectral", Value::Null);
            r.line("spectral: skipped (open-set cap exceeded)");
        }
        Err(e) => return Err(e.into()),
    }
    r.text.push(String::new());
    r.text.push(serialize_uvo(&uvo_from_space(&x)).trim_end().to_string());
    Ok(r)
}

pub fn cor(arg: &str) -> Outcome {
    let mut r = Report::new();
    r.set("input", arg);
    let (x, source) = match input::load(arg)? {
        Input::Ortholattice(l) => (dual_space(&l).space, Some(l)),
        Input::Space(x) => (x, None),
        Input::Lattice(_) => return Err(Failure::Usage(format!("`{arg}` has no orthocomplement"))),
    };
    if !uvo_axioms(&mut r, &x)? {
        return Ok(r);
    }
    let alg = x.cor_algebra()?;
    let members: Vec<Vec<String>> = alg.family.members.iter().map(|&u| point_names(&x, u)).collect();
    r.set("elements", members).set("size", alg.lattice.n());
    r.set("document", serialize_olat(&olat_from_ortholattice(&alg.lattice)));
    r.line(format!("COR has {} elements", alg.lattice.n()));
    for (i, &u) in alg.family.members.iter().enumerate() {
        r.line(format!("  {}⊥ = {}", x.fmt_set(u), x.fmt_set(alg.family.members[alg.lattice.ocomp(i)])));
    }
    if let Some(l) = source {
        let iso = find_isomorphism(&l, &alg.lattice).is_some();
        r.set("isomorphic_to_input", iso);
        r.require(iso, || "COR(X⁺_L) is not isomorphic to L".into());
    }
    Ok(r)
}

pub fn roundtrip(arg: &str) -> Outcome {
    let mut r = Report::new();
    r.set("input", arg);
    match input::load(arg)? {
        Input::Ortholattice(l) => {
            let d = dual_space(&l);
            let alg = d.space.cor_algebra()?;
            let rep: Option<Vec<usize>> = (0..l.n()).map(|a| alg.family.index_of(d.hat[a])).collect();
            let iso = match &rep {
                Some(rep) => {
                    let onto: std::collections::BTreeSet<usize> = rep.iter().copied().collect();
                    onto.len() == l.n() && alg.family.len() == l.n() && check_hom(&l, &alg.lattice, rep).is_ok()
                }
                None => false,
            };
            r.set("direction", "lattice").set("isomorphism", iso);
            if let Some(rep) = rep.filter(|_| iso) {
                let map: serde_json::Map<String, Value> =
                    (0..l.n()).map(|a| (l.name(a).to_string(), json!(point_names(&d.space, alg.family.members[rep[a]])))).collect();
                r.set("map", map);
            }
            if r.require(iso, || "a ↦ â is not an isomorphism L → COR(X⁺_L)".into()) {
                r.line("L ≅ COR(X⁺_L): isomorphism found");
            }
        }
        Input::Space(x) => {
            r.set("direction", "space");
            if !uvo_axioms(&mut r, &x)? {
                return Ok(r);
            }
            let g = x.char_map()?;
            let map: serde_json::Map<String, Value> =
                (0..x.m()).map(|p| (x.name(p).to_string(), json!(g.dual.space.name(g.map[p])))).collect();
            r.set("map", map).set("homeomorphism", true);
            r.line("X ≅ X⁺_{COR(X)}: homeomorphism and ⊥-isomorphism verified");
        }
        Input::Lattice(_) => return Err(Failure::Usage(format!("`{arg}` has no orthocomplement"))),
    }
    Ok(r)
}

pub fn sum(a: &str, b: &str) -> Outcome {
    let mut r = Report::new();
    r.set("inputs", json!([a, b]));
    let (x, y) = (Arc::new(input::space(a)?), Arc::new(input::space(b)?));
    let s = uvo_sum(&x, &y)?;
    let tags: Vec<Value> = s
        .tags
        .iter()
        .map(|t| match *t {
            SumTag::Left(p) => json!({ "left": x.name(p) }),
            SumTag::Right(q) => json!({ "right": y.name(q) }),
            SumTag::Pair(p, q) => json!({ "pair": [x.name(p), y.name(q)] }),
        })
        .collect();
    r.set("space", space_json(&s.space)).set("tags", tags).set("generated_order_agrees", s.generated_order_agrees);
    r.set("document", serialize_uvo(&uvo_from_space(&s.space)));
    r.line(format!("X + Y has {} points, {} covers", s.space.m(), s.space.covers().len()));
    r.require(s.generated_order_agrees, || "order differs from the specialization order of the generated topology".into());
    uvo_axioms(&mut r, &s.space)?;
    let (i, j) = coprojections(&s, &x, &y)?;
    r.set(
        "coprojections",
        json!({ "left": { "verified": i.is_verified(), "strict_back": i.flags.pmorphic_back_strict },
                "right": { "verified": j.is_verified(), "strict_back": j.flags.pmorphic_back_strict } }),
    );
    r.require(i.is_verified() && j.is_verified(), || "coprojections are not UVO-maps".into());
    r.text.push(String::new());
    r.text.push(serialize_uvo(&uvo_from_space(&s.space)).trim_end().to_string());
    Ok(r)
}

pub fn product_cmd(a: &str, b: &str) -> Outcome {
    let mut r = Report::new();
    r.set("inputs", json!([a, b]));
    let (l, m) = (input::ortholattice(a)?, input::ortholattice(b)?);
    let p = product(&l, &m)?;
    r.set("size", p.n()).set("document", serialize_olat(&olat_from_ortholattice(&p)));
    r.line(format!("L × L' has {} elements", p.n()));
    let h = product_sum_homeo(&l, &m)?;
    let agree = h.sum.generated_order_agrees;
    let cor_iso = h.sum.space.cor_algebra().ok().and_then(|alg| find_isomorphism(&p, &alg.lattice)).is_some();
    r.set("homeomorphism", true).set("cor_sum_isomorphic", cor_iso);
    r.line("X⁺_{L×L'} ≅ X⁺_L + X⁺_{L'}: verified");
    r.require(agree, || "sum order differs from the generated topology".into());
    if r.require(cor_iso, || "COR(X⁺_L + X⁺_{L'}) is not isomorphic to L × L'".into()) {
        r.line("COR(X⁺_L + X⁺_{L'}) ≅ L × L': isomorphism found");
    }
    Ok(r)
}

pub fn macneille_cmd(arg: &str) -> Outcome {
    let mut r = Report::new();
    r.set("input", arg);
    let l = input::ortholattice(arg)?;
    let mn = macneille(&l)?;
    r.set("normal_family_size", mn.norm.members.len())
        .set("maclaren_size", mn.maclaren.lattice.n())
        .set("maclaren_minus_size", mn.maclaren_minus.lattice.n())
        .set("via_frame_size", mn.via_frame.lattice.n())
        .set("isomorphic_to_input", true);
    r.line(format!(
        "Norm(L), R(L,⫠), R(L⁻,⫠), R(pframe(X⁺_L)): {}, {}, {}, {} elements",
        mn.norm.members.len(),
        mn.maclaren.lattice.n(),
        mn.maclaren_minus.lattice.n(),
        mn.via_frame.lattice.n()
    ));
    r.line("MacNeille completion ≅ L: isomorphism found both ways");
    Ok(r)
}

pub fn canonical_cmd(arg: &str) -> Outcome {
    let mut r = Report::new();
    r.set("input", arg);
    let l = input::ortholattice(arg)?;
    let ce = canonical_extension(&l)?;
    r.set("size", ce.algebra.lattice.n())
        .set("compactness_pairs_checked", ce.compactness_pairs_checked)
        .set("isomorphic_to_input", true);
    r.line(format!("R(frame(X⁺_L)) has {} elements; dense and compact embedding verified", ce.algebra.lattice.n()));
    r.line("canonical extension ≅ L: isomorphism found");
    Ok(r)
}

pub fn congruences_cmd(arg: &str) -> Outcome {
    let mut r = Report::new();
    r.set("input", arg);
    let l = input::ortholattice(arg)?;
    let cc = congruence_correspondence(&l)?;
    let x = dual_space(&l).space;
    let classes: Vec<Vec<Vec<String>>> = cc
        .congruences
        .iter()
        .map(|t| {
            let mut seen = Vec::new();
            (0..l.n())
                .filter_map(|a| {
                    let c = t.class(a);
                    (!seen.contains(&c)).then(|| {
                        seen.push(c);
                        names(&l, c.iter())
                    })
                })
                .collect()
        })
        .collect();
    r.set("congruences", classes)
        .set("pugs", cc.pugs.iter().map(|&s| point_names(&x, s)).collect::<Vec<_>>())
        .set("literal_pugs", cc.literal_pugs.iter().map(|&s| point_names(&x, s)).collect::<Vec<_>>())
        .set("correspondence", cc.f.clone());
    r.line(format!("{} congruences ↔ {} PUGS: bijection verified", cc.congruences.len(), cc.pugs.len()));
    for (i, &k) in cc.f.iter().enumerate() {
        r.line(format!("  θ{i} ({} classes) ↦ {}", cc.congruences[i].num_classes(), x.fmt_set(cc.pugs[k])));
    }
    Ok(r)
}

pub fn atoms_cmd(arg: &str) -> Outcome {
    let mut r = Report::new();
    r.set("input", arg);
    let l = input::ortholattice(arg)?;
    let x = dual_space(&l).space;
    let ab = atoms_bijection(&l);
    let pairs: Vec<(String, String)> = ab.pairs.iter().map(|&(a, p)| (l.name(a).to_string(), x.name(p).to_string())).collect();
    r.set("pairs", pairs_json(&pairs))
        .set("isolated_points", point_names(&x, isolated_points(&x)))
        .set("bijection", ab.holds())
        .set("atomic", json!([l.is_atomic(), is_atomic_dual(&x)]))
        .set("atomless", json!([l.is_atomless(), is_atomless_dual(&x)]));
    r.line(format!("{} atoms ↔ {} isolated points", ab.pairs.len(), isolated_points(&x).len()));
    for (a, p) in &pairs {
        r.line(format!("  {a} ↦ {p}"));
    }
    r.require(ab.holds(), || format!("atoms map is not a bijection: {ab:?}"));
    r.require(l.is_atomic() == is_atomic_dual(&x), || "atomicity disagrees with the dual".into());
    r.require(l.is_atomless() == is_atomless_dual(&x), || "atomlessness disagrees with the dual".into());
    Ok(r)
}

pub const ENUMERATION_CAP: usize = 10;

pub fn enumerate(max_size: usize) -> Outcome {
    let mut r = Report::new();
    if max_size > ENUMERATION_CAP {
        return Err(Failure::Usage(format!("--max-size {max_size} exceeds the enumeration cap {ENUMERATION_CAP}")));
    }
    let lats = enumerate_lattices(max_size)?;
    let olats: Vec<Ortholattice> = enumerate_ortholattices(max_size)?;
    let mut rows = Vec::new();
    for n in 1..=max_size {
        let a = lats.iter().filter(|l| l.n() == n).count();
        let b = olats.iter().filter(|l| l.n() == n).count();
        let c = olats.iter().filter(|l| l.n() == n && l.is_orthomodular().0).count();
        rows.push(json!({ "size": n, "lattices": a, "ortholattices": b, "orthomodular": c }));
        r.line(format!("n={n}: {a} lattices, {b} ortholattices, {c} orthomodular"));
    }
    r.set("max_size", max_size).set("counts", rows);
    Ok(r)
}

pub fn export_dot(args: &[String], dual: bool, perp: bool) -> Outcome {
    let mut r = Report::new();
    r.set("inputs", args.to_vec());
    let dot = match args {
        [a] => match input::load(a)? {
            Input::Ortholattice(l) if !dual => lattice_to_dot(&l, a),
            Input::Ortholattice(l) => space_to_dot(&dual_space(&l).space, a, perp),
            Input::Lattice(l) if !dual => lattice_to_dot(&l, a),
            Input::Lattice(l) => space_to_dot(&filter_poset(&l), a, perp),
            Input::Space(x) => space_to_dot(&x, a, perp),
        },
        [a, b] => {
            let s = uvo_sum(&input::space(a)?, &input::space(b)?)?;
            space_to_dot(&s.space, &format!("{a} + {b}"), perp)
        }
        _ => return Err(Failure::Usage("export-dot takes one input, or two for their sum".into())),
    };
    r.set("dot", dot.clone());
    r.raw = Some(dot);
    Ok(r)
}

pub fn verify_all(max_size: usize) -> Outcome {
    let mut r = Report::new();
    if max_size > ENUMERATION_CAP {
        return Err(Failure::Usage(format!("--max-size {max_size} exceeds the enumeration cap {ENUMERATION_CAP}")));
    }
    let outcomes = suite::run_all(max_size)?;
    let mut rows = Vec::new();
    for o in &outcomes {
        let pass = o.passed && o.within_budget();
        let budget = o.budget.map(|b| format!(" (budget {:?})", b)).unwrap_or_default();
        r.line(format!(
            "criterion {}: {} {} [{} checks, {:.3}s{}]",
            o.id,
            if pass { "PASS" } else { "FAIL" },
            o.title,
            o.checks,
            o.elapsed.as_secs_f64(),
            budget
        ));
        for f in &o.failures {
            r.line(format!("  witness: {f}"));
        }
        if !o.within_budget() {
            r.line("  over the time budget");
        }
        r.ok &= pass;
        rows.push(json!({
            "id": o.id,
            "title": o.title,
            "passed": pass,
            "checks": o.checks,
            "failures": o.failures,
            "notes": o.notes,
            "elapsed_secs": o.elapsed.as_secs_f64(),
            "budget_secs": o.budget.map(|b| b.as_secs_f64()),
        }));
    }
    r.set("max_size", max_size).set("criteria", rows);
    Ok(r)
}
