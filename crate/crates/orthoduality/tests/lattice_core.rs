use std::collections::BTreeSet;
use std::sync::Arc;

use orthoduality::bitset::BitSet;
use orthoduality::catalog::{all_homs, builtin, enumerate_lattices, enumerate_ortholattices, orthocomplementations};
use orthoduality::lattice::{
    check_hom, congruences_bruteforce, find_isomorphism, find_lattice_isomorphism, product, projections, quotient,
    subalgebra_generated, validate_ortholattice, Lattice, Ortholattice, RawOrtholattice, SubKind,
};
use orthoduality::ValidationError;
use proptest::prelude::*;

type Leq = Vec<Vec<bool>>;

fn glb(leq: &Leq, a: usize, b: usize) -> Option<usize> {
    let n = leq.len();
    let lower: Vec<usize> = (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
    lower.iter().copied().find(|&m| lower.iter().all(|&c| leq[c][m]))
}

fn lub(leq: &Leq, a: usize, b: usize) -> Option<usize> {
    let n = leq.len();
    let upper: Vec<usize> = (0..n).filter(|&c| leq[a][c] && leq[b][c]).collect();
    upper.iter().copied().find(|&j| upper.iter().all(|&c| leq[j][c]))
}

fn is_partial_order(leq: &Leq) -> bool {
    let n = leq.len();
    (0..n).all(|a| leq[a][a])
        && (0..n).all(|a| (0..n).all(|b| a == b || !(leq[a][b] && leq[b][a])))
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(leq[a][b] && leq[b][c]) || leq[a][c])))
}

fn is_lattice(leq: &Leq) -> bool {
    let n = leq.len();
    n > 0 && (0..n).all(|a| (0..n).all(|b| glb(leq, a, b).is_some() && lub(leq, a, b).is_some()))
}

/// Ortholattice laws read directly off the order matrix.
fn is_ortholattice(leq: &Leq, oc: &[usize]) -> bool {
    let n = leq.len();
    if !is_partial_order(leq) || !is_lattice(leq) {
        return false;
    }
    let bot = (0..n).find(|&a| (0..n).all(|b| leq[a][b])).unwrap();
    let top = (0..n).find(|&a| (0..n).all(|b| leq[b][a])).unwrap();
    (0..n).all(|a| oc[oc[a]] == a)
        && (0..n).all(|a| (0..n).all(|b| !leq[a][b] || leq[oc[b]][oc[a]]))
        && (0..n).all(|a| glb(leq, a, oc[a]) == Some(bot) && lub(leq, a, oc[a]) == Some(top))
}

fn all_maps(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(n as u32)).map(move |mut k| {
        (0..n)
            .map(|_| {
                let d = k % n;
                k /= n;
                d
            })
            .collect()
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    all_maps(n).filter(|p| p.iter().collect::<BTreeSet<_>>().len() == n).collect()
}

fn relabel(leq: &Leq, p: &[usize]) -> Leq {
    let n = leq.len();
    let mut out = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            out[p[a]][p[b]] = leq[a][b];
        }
    }
    out
}

fn code(leq: &Leq, oc: Option<&[usize]>, perms: &[Vec<usize>]) -> Vec<u8> {
    perms
        .iter()
        .map(|p| {
            let r = relabel(leq, p);
            let mut c: Vec<u8> = r.iter().flatten().map(|&b| b as u8).collect();
            if let Some(oc) = oc {
                let mut moved = vec![0; oc.len()];
                for a in 0..oc.len() {
                    moved[p[a]] = p[oc[a]] as u8;
                }
                c.extend(moved);
            }
            c
        })
        .min()
        .unwrap()
}

#[test]
fn orthocomplementations_match_involution_filter_up_to_six() {
    let mut classes = vec![BTreeSet::new(); 7];
    for l in enumerate_lattices(6).unwrap() {
        let n = l.n();
        let leq = l.leq_matrix();
        let perms = permutations(n);
        let oracle: BTreeSet<Vec<usize>> =
            all_maps(n).filter(|oc| oc.iter().enumerate().all(|(a, &b)| oc[b] == a)).filter(|oc| is_ortholattice(&leq, oc)).collect();
        let found: BTreeSet<Vec<usize>> = orthocomplementations(&l).into_iter().collect();
        assert_eq!(found, oracle, "lattice of size {n}");
        for oc in all_maps(n).filter(|oc| oc.iter().enumerate().all(|(a, &b)| oc[b] == a)) {
            assert_eq!(Ortholattice::new(l.clone(), oc.clone()).is_ok(), oracle.contains(&oc));
        }
        for oc in &oracle {
            classes[n].insert(code(&leq, Some(oc), &perms));
        }
    }
    let enumerated = enumerate_ortholattices(6).unwrap();
    for n in 1..=6 {
        assert_eq!(enumerated.iter().filter(|l| l.n() == n).count(), classes[n].len(), "size {n}");
    }
}

#[test]
fn lattice_counts_match_brute_force_up_to_eight() {
    // unlabelled lattices with a linear extension along the index order: 0 bottom, n-1 top
    for n in 1..=8usize {
        let inner: Vec<(usize, usize)> = (1..n.saturating_sub(1)).flat_map(|i| (i + 1..n - 1).map(move |j| (i, j))).collect();
        let perms: Vec<Vec<usize>> = if n <= 2 {
            vec![(0..n).collect()]
        } else {
            permutations(n - 2).into_iter().map(|p| std::iter::once(0).chain(p.iter().map(|&x| x + 1)).chain([n - 1]).collect()).collect()
        };
        let mut seen = BTreeSet::new();
        for mask in 0u32..(1 << inner.len()) {
            let mut leq = vec![vec![false; n]; n];
            for a in 0..n {
                leq[a][a] = true;
                leq[0][a] = true;
                leq[a][n - 1] = true;
            }
            for (k, &(i, j)) in inner.iter().enumerate() {
                leq[i][j] = mask >> k & 1 == 1;
            }
            if is_partial_order(&leq) && is_lattice(&leq) {
                seen.insert(code(&leq, None, &perms));
            }
        }
        let got = enumerate_lattices(n).unwrap().iter().filter(|l| l.n() == n).count();
        assert_eq!(got, seen.len(), "size {n}");
    }
}

#[test]
fn known_lattice_and_ortholattice_counts() {
    let lats = enumerate_lattices(9).unwrap();
    let counts: Vec<usize> = (1..=9).map(|n| lats.iter().filter(|l| l.n() == n).count()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 5, 15, 53, 222, 1078]);
    let ols = enumerate_ortholattices(10).unwrap();
    let counts: Vec<usize> = (1..=10).map(|n| ols.iter().filter(|l| l.n() == n).count()).collect();
    assert_eq!(counts, [1, 1, 0, 1, 0, 2, 0, 5, 0, 15]);
}

fn direct_distributive(l: &Lattice) -> bool {
    let n = l.n();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)))))
}

fn direct_modular(l: &Lattice) -> bool {
    let n = l.n();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !l.leq(a, c) || l.join(a, l.meet(b, c)) == l.meet(l.join(a, b), c))))
}

fn is_m3(l: &Lattice, [o, x, y, z, i]: [usize; 5]) -> bool {
    let atoms = [x, y, z];
    atoms.iter().all(|&p| atoms.iter().all(|&q| p == q || (l.meet(p, q) == o && l.join(p, q) == i)))
        && BTreeSet::from([o, x, y, z, i]).len() == 5
}

fn is_n5(l: &Lattice, [o, lo, hi, side, i]: [usize; 5]) -> bool {
    lo != hi
        && l.leq(lo, hi)
        && l.meet(side, hi) == o
        && l.join(side, lo) == i
        && l.meet(side, lo) == o
        && l.join(side, hi) == i
        && BTreeSet::from([o, lo, hi, side, i]).len() == 5
}

#[test]
fn distributivity_and_modularity_agree_with_direct_laws() {
    for l in enumerate_lattices(8).unwrap() {
        let (d, w) = l.is_distributive();
        assert_eq!(d, direct_distributive(&l));
        match w {
            None => assert!(d),
            Some(w) if w.kind == SubKind::M3 => assert!(is_m3(&l, w.elems)),
            Some(w) => assert!(is_n5(&l, w.elems)),
        }
        if let Some(w) = l.find_m3() {
            assert!(is_m3(&l, w.elems));
        }
        let n5 = l.find_n5();
        if let Some(w) = n5 {
            assert!(is_n5(&l, w.elems));
        }
        let (m, mw) = l.is_modular();
        assert_eq!(m, direct_modular(&l));
        assert_eq!(m, n5.is_none());
        if let Some((a, b, c)) = mw {
            assert!(l.leq(a, c) && l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c));
        }
        assert_eq!(d, l.find_m3().is_none() && n5.is_none());
    }
}

fn catalog() -> Vec<Ortholattice> {
    orthoduality::catalog::ortholattice_names().into_iter().map(|n| builtin(n).unwrap()).collect()
}

#[test]
fn de_morgan_holds_everywhere() {
    for l in pool() {
        for a in 0..l.n() {
            for b in 0..l.n() {
                assert_eq!(l.ocomp(l.meet(a, b)), l.join(l.ocomp(a), l.ocomp(b)));
                assert_eq!(l.ocomp(l.join(a, b)), l.meet(l.ocomp(a), l.ocomp(b)));
            }
            assert_eq!(l.sasaki_hook(a, a), l.top());
        }
    }
}

#[test]
fn enumerated_lattices_are_pairwise_non_isomorphic() {
    let lats = enumerate_lattices(7).unwrap();
    for (i, a) in lats.iter().enumerate() {
        for b in &lats[i + 1..] {
            if a.n() == b.n() {
                assert!(find_lattice_isomorphism(a, b).is_none());
            }
        }
    }
    let ols = enumerate_ortholattices(10).unwrap();
    for (i, a) in ols.iter().enumerate() {
        for b in &ols[i + 1..] {
            if a.n() == b.n() {
                assert!(find_isomorphism(a, b).is_none());
            }
        }
    }
}

#[test]
fn catalog_examples() {
    let mo2 = Arc::new(builtin("MO2").unwrap());
    let i = |n: &str| mo2.index_of(n).unwrap();
    assert_eq!(mo2.sasaki_hook(i("a"), i("b")), i("a'"));

    let tbt = Arc::new(builtin("TwoByTwo").unwrap());
    // identity, the ⊥-swap, and the two maps through O2
    let maps: BTreeSet<Vec<usize>> = all_homs(&tbt, &tbt).unwrap().into_iter().map(|h| h.map).collect();
    assert_eq!(maps, BTreeSet::from([vec![0, 1, 2, 3], vec![0, 2, 1, 3], vec![0, 0, 3, 3], vec![0, 3, 0, 3]]));

    let (sub, incl) = subalgebra_generated(&mo2, BitSet::singleton(i("a"))).unwrap();
    assert!(find_isomorphism(&sub, &tbt).is_some());
    assert!(incl.is_injective());

    let o2 = builtin("O2").unwrap();
    let p = Arc::new(product(&o2, &tbt).unwrap());
    assert!(find_isomorphism(&p, &builtin("B8").unwrap()).is_some());
    let (pl, pr) = projections(&Arc::new(o2.clone()), &tbt, &p).unwrap();
    assert!(pl.is_surjective() && pr.is_surjective());

    let one = Lattice::from_covers(vec!["0".into()], &[]).unwrap();
    assert!(Ortholattice::new(one, vec![0]).is_ok());

    let o6 = builtin("O6").unwrap();
    assert_eq!(o6.is_orthomodular(), (false, Some((o6.index_of("a").unwrap(), o6.index_of("b'").unwrap()))));
    assert!(builtin("MO2").unwrap().is_orthomodular().0);
    assert!(!builtin("O10").unwrap().is_orthomodular().0);
}

/// Partitions of `0..n` as class labels.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in out {
            let k = p.iter().max().map_or(0, |&m| m + 1);
            for c in 0..=k {
                let mut q = p.clone();
                q.push(c);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

fn is_congruence(l: &Ortholattice, p: &[usize]) -> bool {
    let n = l.n();
    (0..n).all(|a| {
        (0..n).all(|b| {
            p[a] != p[b]
                || (p[l.ocomp(a)] == p[l.ocomp(b)]
                    && (0..n).all(|c| p[l.meet(a, c)] == p[l.meet(b, c)] && p[l.join(a, c)] == p[l.join(b, c)]))
        })
    })
}

#[test]
fn congruence_counts_match_partition_sweep() {
    for l in catalog().into_iter().filter(|l| l.n() <= 8).chain(enumerate_ortholattices(8).unwrap()) {
        let oracle = partitions(l.n()).into_iter().filter(|p| is_congruence(&l, p)).count();
        assert_eq!(congruences_bruteforce(&l, 12).unwrap().len(), oracle);
    }
    let b8 = Arc::new(builtin("B8").unwrap());
    let cs = congruences_bruteforce(&b8, 12).unwrap();
    assert_eq!(cs.len(), 8);
    let four = cs.iter().find(|c| c.num_classes() == 4).unwrap();
    let (q, h) = quotient(&b8, four).unwrap();
    assert!(find_isomorphism(&q, &builtin("B4").unwrap()).is_some());
    assert!(h.is_surjective());
    assert_eq!(congruences_bruteforce(&builtin("MO2").unwrap(), 12).unwrap().len(), 2);
}

#[test]
fn all_homs_match_map_sweep() {
    let small: Vec<Arc<Ortholattice>> = catalog().into_iter().filter(|l| l.n() <= 6).map(Arc::new).collect();
    for s in &small {
        for t in &small {
            let oracle = all_maps_into(s.n(), t.n())
                .filter(|m| {
                    (0..s.n()).all(|a| {
                        m[s.ocomp(a)] == t.ocomp(m[a]) && (0..s.n()).all(|b| m[s.meet(a, b)] == t.meet(m[a], m[b]))
                    })
                })
                .count();
            assert_eq!(all_homs(s, t).unwrap().len(), oracle);
        }
    }
}

fn all_maps_into(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..m.pow(n as u32)).map(move |mut k| {
        (0..n)
            .map(|_| {
                let d = k % m;
                k /= m;
                d
            })
            .collect()
    })
}

fn pool() -> &'static [Ortholattice] {
    static POOL: std::sync::OnceLock<Vec<Ortholattice>> = std::sync::OnceLock::new();
    POOL.get_or_init(|| catalog().into_iter().chain(enumerate_ortholattices(10).unwrap()).collect())
}

fn raw_candidate() -> impl Strategy<Value = (usize, Vec<bool>, Vec<usize>)> {
    (1usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec(any::<bool>(), n * n), prop::collection::vec(0..n, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn validator_agrees_with_direct_laws((n, bits, oc) in raw_candidate()) {
        let mut leq: Leq = (0..n).map(|a| (0..n).map(|b| bits[a * n + b]).collect()).collect();
        for a in 0..n {
            leq[a][a] = true;
        }
        let raw = RawOrtholattice { names: (0..n).map(|a| format!("e{a}")).collect(), leq: leq.clone(), ocomp: oc.clone() };
        let got = validate_ortholattice(raw);
        prop_assert_eq!(got.is_ok(), is_ortholattice(&leq, &oc));
        if let Err(e) = got {
            let laws = is_partial_order(&leq) && is_lattice(&leq);
            let ocomp_law = matches!(
                e,
                ValidationError::MalformedOcomp(_)
                    | ValidationError::NotInvolutive(_)
                    | ValidationError::ComplementLawFails(_)
                    | ValidationError::NotOrderReversing(..)
                    | ValidationError::DeMorganFails(..)
            );
            prop_assert_eq!(laws, ocomp_law);
        }
    }

    #[test]
    fn relabelling_preserves_structure(idx in 0usize..64, seed in any::<u64>()) {
        let pool = pool();
        let l = &pool[idx % pool.len()];
        let n = l.n();
        let mut p: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            p.swap(i, (s >> 33) as usize % (i + 1));
        }
        let leq = relabel(&l.leq_matrix(), &p);
        let mut oc = vec![0; n];
        for a in 0..n {
            oc[p[a]] = p[l.ocomp(a)];
        }
        let mut names = vec![String::new(); n];
        for a in 0..n {
            names[p[a]] = l.name(a).to_string();
        }
        let m = validate_ortholattice(RawOrtholattice { names, leq, ocomp: oc }).unwrap();
        let iso = find_isomorphism(l, &m).expect("relabelling is an isomorphism");
        prop_assert!(check_hom(l, &m, &iso).is_ok());
        prop_assert_eq!(iso.iter().collect::<BTreeSet<_>>().len(), n);
        prop_assert_eq!(l.is_orthomodular().0, m.is_orthomodular().0);
        prop_assert_eq!(l.is_distributive().0, m.is_distributive().0);
    }
}
