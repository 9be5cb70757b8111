//! Acceptance gate: one test per criterion, each printing a single verdict
//! line. A criterion that the exhaustive search genuinely refutes is left
//! failing with the observed truth pinned alongside it, not weakened.

use cayleymap::aut::DEFAULT_AUT_BOUND;
use cayleymap::catalog::{self, FamilyId};
use cayleymap::group::{FiniteGroup, IDENTITY};
use cayleymap::map::CayleyMap;
use cayleymap::perm::Perm;
use cayleymap::quadruple;
use cayleymap::quotient;
use cayleymap::skew;
use cayleymap::subgroup::Subgroup;
use std::sync::Arc;

fn verdict(criterion: usize, name: &str, ok: bool) -> bool {
    println!(
        "[criterion {criterion}] {name}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn bound_for(n: usize) -> usize {
    DEFAULT_AUT_BOUND.max(4 * n)
}

/// Every inverse-closed generating skew-orbit on D_n, deduped by rotation
/// cycle, exactly as the classifier builds its candidate pool.
fn candidates(n: usize) -> Vec<CayleyMap> {
    let group = Arc::new(FiniteGroup::dihedral(n).unwrap());
    let skews = skew::enumerate_skew_morphisms(&group).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for s in &skews {
        for orbit in s.psi().cycles() {
            if orbit.contains(&IDENTITY)
                || !orbit.iter().all(|&x| orbit.contains(&group.inv(x)))
            {
                continue;
            }
            if let Ok(map) = CayleyMap::new(Arc::clone(&group), orbit) {
                if seen.insert(map.canonical_rotation()) {
                    out.push(map);
                }
            }
        }
    }
    out
}

/// Kernel-4 catalog: class counts for n = 2..=12 against the published list
/// (2, 0, 1, 0, 2, 0, 2, 0, 1, 0, 1) with each class matched to its family.
///
/// This criterion FAILS, and the failure is real: at n = 4 the exhaustive
/// search finds a second class, the antibalanced embedding of K_{4,4},
/// alongside the listed valence-3 map. The extra class is pinned below so a
/// regression in either direction is caught.
#[test]
fn acceptance_1_kernel4_catalog() {
    let expected = [2usize, 0, 1, 0, 2, 0, 2, 0, 1, 0, 1];
    let report = catalog::verify_theorem_main(12).unwrap();
    assert_eq!(report.entries.len(), 11);

    // pin the observed truth at n = 4: two classes, the unlisted one being
    // the antibalanced K_{4,4} embedding with kernel {1, a^2, ab, a^3b}
    let n4 = catalog::classify(4, Some(4)).unwrap();
    assert_eq!(n4.classes.len(), 2);
    let extra: Vec<_> = n4.classes.iter().filter(|c| c.family.is_none()).collect();
    assert_eq!(extra.len(), 1);
    let extra = extra[0];
    assert_eq!(extra.map.valence(), 4);
    assert_eq!(extra.map.t_balance(), Some(3));
    assert!(extra.map.underlying_graph().is_complete_bipartite(4));
    let group = extra.map.group();
    let kernel = extra.analysis.kernel.as_ref().unwrap();
    assert_eq!(kernel.order(), 4);
    assert!(kernel.members().iter().all(|&g| {
        let (j, r) = group.dihedral_parts(g).unwrap();
        (r == 0 && j % 2 == 0) || (r == 1 && j % 2 == 1)
    }));

    // every other n matches the published catalog exactly
    for e in &report.entries {
        if e.n != 4 {
            assert!(e.pass(), "unexpected divergence at n = {}", e.n);
            assert_eq!(e.class_count, expected[e.n - 2], "count at n = {}", e.n);
        }
    }

    let counts: Vec<usize> = report.entries.iter().map(|e| e.class_count).collect();
    let ok = report.pass() && counts == expected;
    verdict(1, "kernel-4 catalog matches published class counts for n = 2..=12", ok);
    assert!(
        ok,
        "n = 4 has {} kernel-4 classes, not {}: the antibalanced K_{{4,4}} \
         embedding CM(D_4, {{a, a^-1, b, a^2 b}}, (a, b, a^-1, a^2 b)) is a \
         regular Cayley map with power-function kernel of order 4 and is not \
         equivalent to the listed valence-3 class; verified independently by \
         the dart-counting oracle and the skew-morphism oracle",
        counts[2],
        expected[2]
    );
}

/// Minimum kernel: over every regular class at n = 2..=10 the kernel meets
/// the reflections and has order at least 4, except the two octahedron
/// embeddings at n = 3.
#[test]
fn acceptance_2_minimum_kernel() {
    let report = catalog::verify_theorem_min(10).unwrap();
    let n3 = report.entries.iter().find(|e| e.n == 3).unwrap();
    assert!(n3.exceptional_classes > 0, "octahedron exceptions at n = 3");
    let ok = report.pass();
    assert!(verdict(2, "kernel >= 4 and meets reflections for n = 2..=10", ok));
}

/// Infinite families: closed-form skew-morphism, kernel, power values,
/// congruences and cyclic core for map1 at n = 6..=16 and map2 at n = 8, 16.
#[test]
fn acceptance_3_family_lemmas() {
    let report = catalog::verify_family_lemmas(&[6, 8, 10, 12, 14, 16]).unwrap();
    assert_eq!(report.checks.len(), 8, "six map1 checks and two map2 checks");
    let ok = report.pass();
    assert!(verdict(3, "closed-form family lemmas at n = 6..=16", ok));
}

/// Oracle agreement: for every candidate rotation at n = 2..=8 the
/// dart-counting regularity test and the skew-morphism witness test agree.
#[test]
fn acceptance_4_oracle_agreement() {
    let mut total = 0;
    let mut ok = true;
    for n in 2..=8 {
        let group = FiniteGroup::dihedral(n).unwrap();
        let skews = skew::enumerate_skew_morphisms(&group).unwrap();
        for map in candidates(n) {
            total += 1;
            let sys = map.dart_system();
            let by_count = sys.automorphism_count() == sys.dart_count();
            let by_skew = skews.iter().any(|s| {
                map.rotation().iter().all(|&x| s.psi().apply(x) == map.p(x))
            });
            ok &= by_count == by_skew;
        }
    }
    assert!(total > 50, "candidate pool is non-trivial, saw {total}");
    assert!(verdict(4, "dart oracle agrees with skew oracle on all candidates, n <= 8", ok));
}

/// Kernel conjugation: for every regular class at n = 2..=8 the kernel's left
/// multiplications are closed under conjugation by the skew-morphism, and the
/// cyclic-part normality consequence holds.
#[test]
fn acceptance_5_kernel_conjugation() {
    let mut ok = true;
    for n in 2..=8 {
        for entry in &catalog::classify(n, None).unwrap().classes {
            ok &= entry.map.kernel_conjugation_check().unwrap();
            ok &= catalog::kernel_cyclic_normality_check(&entry.map).unwrap();
        }
    }
    assert!(verdict(5, "kernel conjugation laws on all regular classes, n <= 8", ok));
}

/// Quotient laws: map1(n) factored by the order-2 center satisfies every
/// quotient identity, with skew orders n and n/2 and quotient kernel 4.
#[test]
fn acceptance_6_quotient_laws() {
    let mut ok = true;
    for n in [8usize, 16] {
        let map = catalog::build_family(FamilyId::map1(n)).unwrap();
        let group = map.group_arc();
        let center = Subgroup::generated(&group, &[group.dihedral_elem(n as i64 / 2, 0).unwrap()]);
        let witness = quotient::quotient_map(&map, &center).unwrap();
        let report = quotient::verify_quotient_laws(&map, &center).unwrap();
        ok &= report.pass();
        ok &= witness.parent_skew_order == n && witness.quotient_skew_order == n / 2;
        // |<psi>| = |N| * |<psi^{G/N}>| exactly, since X is a union of cosets
        ok &= witness.parent_skew_order == witness.normal_order * witness.quotient_skew_order;
        ok &= report.x_union_of_cosets;
        ok &= report.quotient_kernel_order == 4;
    }
    assert!(verdict(6, "quotient laws for map1(8) and map1(16) by the center", ok));
}

/// Round trip: every regular class at n <= 6 passes through its automorphism
/// group quadruple and back to an equivalent map; twenty conjugated
/// quadruples induce equivalent maps.
#[test]
fn acceptance_7_quadruple_round_trip() {
    let mut ok = true;
    let mut conjugations = 0;
    for n in 2..=6 {
        for entry in &catalog::classify(n, None).unwrap().classes {
            let q = quadruple::from_regular_map(&entry.map, 512).unwrap();
            let back = quadruple::induced_cayley_map(&q).unwrap();
            ok &= entry.map.equivalent(&back, bound_for(n)).unwrap().is_some();
            for g in (1..q.group.order()).step_by(7) {
                if conjugations >= 20 {
                    break;
                }
                let alpha = Perm::new(
                    (0..q.group.order()).map(|z| q.group.conj(g, z)).collect(),
                )
                .unwrap();
                let qc = q.conjugate(q.group.clone(), &alpha).unwrap();
                let conj = quadruple::induced_cayley_map(&qc).unwrap();
                ok &= back.equivalent(&conj, bound_for(n)).unwrap().is_some();
                conjugations += 1;
            }
        }
    }
    assert_eq!(conjugations, 20);
    assert!(verdict(7, "quadruple round trip on all regular classes, n <= 6", ok));
}

/// Core-free case: exactly one core-free class at n = 6 and n = 10, matching
/// the closed-form family, with |Aut| = 2n^2 and the order-72 automorphism
/// group at n = 6 isomorphic to the swap extension of C_3.
#[test]
fn acceptance_8_core_free() {
    let r6 = catalog::verify_cfree(6).unwrap();
    let r10 = catalog::verify_cfree(10).unwrap();
    let ok = r6.pass()
        && r6.aut_order == 72
        && r6.swap_extension_iso == Some(true)
        && r10.pass()
        && r10.aut_order == 200;
    assert!(verdict(8, "core-free classification at n = 6 and n = 10", ok));
}

/// Enumeration cross-check: the pruned skew-morphism search returns exactly
/// the permutations the brute-force filter accepts, for D_2, D_3, D_4.
#[test]
fn acceptance_9_enumeration_cross_check() {
    let mut ok = true;
    for n in 2..=4 {
        let group = FiniteGroup::dihedral(n).unwrap();
        let pruned: std::collections::BTreeSet<Vec<usize>> =
            skew::enumerate_skew_morphisms(&group)
                .unwrap()
                .iter()
                .map(|s| s.psi().images().to_vec())
                .collect();
        let naive: std::collections::BTreeSet<Vec<usize>> =
            skew::enumerate_skew_morphisms_naive(&group)
                .unwrap()
                .iter()
                .map(|s| s.psi().images().to_vec())
                .collect();
        ok &= pruned == naive && !pruned.is_empty();
    }
    assert!(verdict(9, "pruned enumeration equals brute force for D_2, D_3, D_4", ok));
}
