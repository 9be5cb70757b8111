//! Named map families, exhaustive classification of regular Cayley maps on
//! D_n at small n, and the theorem verifiers the CLI exposes.

use crate::aut;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, IDENTITY};
use crate::map::{CayleyMap, MapAnalysis};
use crate::perm::Perm;
use crate::skew::{check_skew, enumerate_skew_morphisms};
use crate::subgroup::Subgroup;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Default upper bound on n for a full classification sweep.
pub const DEFAULT_CLASSIFY_BOUND: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyKind {
    ThmMain1a,
    ThmMain1b,
    ThmMain2,
    ThmMain3,
    Map1,
    Map2,
    CFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub n: usize,
}

impl FamilyId {
    pub fn thm_main_1a() -> Self {
        FamilyId { kind: FamilyKind::ThmMain1a, n: 2 }
    }
    pub fn thm_main_1b() -> Self {
        FamilyId { kind: FamilyKind::ThmMain1b, n: 2 }
    }
    pub fn thm_main_2() -> Self {
        FamilyId { kind: FamilyKind::ThmMain2, n: 4 }
    }
    pub fn thm_main_3() -> Self {
        FamilyId { kind: FamilyKind::ThmMain3, n: 6 }
    }
    pub fn map1(n: usize) -> Self {
        FamilyId { kind: FamilyKind::Map1, n }
    }
    pub fn map2(n: usize) -> Self {
        FamilyId { kind: FamilyKind::Map2, n }
    }
    pub fn cfree(n: usize) -> Self {
        FamilyId { kind: FamilyKind::CFree, n }
    }

    pub fn name(&self) -> String {
        match self.kind {
            FamilyKind::ThmMain1a => "case-1a".into(),
            FamilyKind::ThmMain1b => "case-1b".into(),
            FamilyKind::ThmMain2 => "case-2".into(),
            FamilyKind::ThmMain3 => "case-3".into(),
            FamilyKind::Map1 => format!("map1({})", self.n),
            FamilyKind::Map2 => format!("map2({})", self.n),
            FamilyKind::CFree => format!("cfree({})", self.n),
        }
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The closed-form skew-morphism of the first infinite family on D_n,
/// n = 2m >= 6.
pub fn map1_psi(group: &FiniteGroup) -> Result<Perm> {
    let n = group.dihedral_n().ok_or(Error::NotDihedral)? as i64;
    let mut images = vec![0usize; 2 * n as usize];
    for j in 0..n {
        images[group.dihedral_elem(j, 0)?] = if j % 2 == 0 {
            group.dihedral_elem(-j, 0)?
        } else {
            group.dihedral_elem(j + 1, 1)?
        };
        images[group.dihedral_elem(j, 1)?] = if j % 2 == 0 {
            group.dihedral_elem(j + 1, 0)?
        } else {
            group.dihedral_elem(-j, 1)?
        };
    }
    Perm::new(images)
}

/// The closed-form skew-morphism of the second infinite family on D_n,
/// 8 | n, m = n/2.
pub fn map2_psi(group: &FiniteGroup) -> Result<Perm> {
    let n = group.dihedral_n().ok_or(Error::NotDihedral)? as i64;
    let m = n / 2;
    let mut images = vec![0usize; 2 * n as usize];
    for j in 0..n {
        images[group.dihedral_elem(j, 0)?] = if j % 2 == 0 {
            group.dihedral_elem((j / 2) * m - j, 0)?
        } else {
            group.dihedral_elem(j + 1 + ((j + 1) / 2) * m, 1)?
        };
        images[group.dihedral_elem(j, 1)?] = if j % 2 == 0 {
            group.dihedral_elem(j + 1 + (j / 2) * m, 0)?
        } else {
            group.dihedral_elem(((j + 1) / 2) * m - j, 1)?
        };
    }
    Perm::new(images)
}

fn rotation_from_psi(group: &Arc<FiniteGroup>, psi: &Perm) -> Result<CayleyMap> {
    let n = group.dihedral_n().ok_or(Error::NotDihedral)?;
    let b = group.dihedral_elem(0, 1)?;
    let rotation = psi.orbit(b);
    if rotation.len() != n {
        return Err(Error::Invalid(format!(
            "orbit of b has length {}, expected {n}",
            rotation.len()
        )));
    }
    CayleyMap::new(Arc::clone(group), rotation)
}

/// The exact map of the named family case.
pub fn build_family(id: FamilyId) -> Result<CayleyMap> {
    let bad = |msg: String| Err(Error::FamilyParam(msg));
    match id.kind {
        FamilyKind::ThmMain1a => {
            if id.n != 2 {
                return bad(format!("case-1a is fixed at n = 2, got {}", id.n));
            }
            let g = Arc::new(FiniteGroup::dihedral(2)?);
            let rot = vec![g.dihedral_elem(1, 0)?, g.dihedral_elem(0, 1)?];
            CayleyMap::new(g, rot)
        }
        FamilyKind::ThmMain1b => {
            if id.n != 2 {
                return bad(format!("case-1b is fixed at n = 2, got {}", id.n));
            }
            let g = Arc::new(FiniteGroup::dihedral(2)?);
            let rot = vec![
                g.dihedral_elem(1, 0)?,
                g.dihedral_elem(0, 1)?,
                g.dihedral_elem(1, 1)?,
            ];
            CayleyMap::new(g, rot)
        }
        FamilyKind::ThmMain2 => {
            if id.n != 4 {
                return bad(format!("case-2 is fixed at n = 4, got {}", id.n));
            }
            let g = Arc::new(FiniteGroup::dihedral(4)?);
            let rot = vec![
                g.dihedral_elem(1, 0)?,
                g.dihedral_elem(0, 1)?,
                g.dihedral_elem(-1, 0)?,
            ];
            CayleyMap::new(g, rot)
        }
        FamilyKind::ThmMain3 => {
            if id.n != 6 {
                return bad(format!("case-3 is fixed at n = 6, got {}", id.n));
            }
            let g = Arc::new(FiniteGroup::dihedral(6)?);
            let rot = vec![
                g.dihedral_elem(1, 0)?,
                g.dihedral_elem(-1, 0)?,
                g.dihedral_elem(1, 1)?,
                g.dihedral_elem(-1, 1)?,
            ];
            CayleyMap::new(g, rot)
        }
        FamilyKind::Map1 => {
            if id.n < 6 || id.n % 2 != 0 {
                return bad(format!("map1 needs an even n >= 6, got {}", id.n));
            }
            let g = Arc::new(FiniteGroup::dihedral(id.n)?);
            let map = rotation_from_psi(&g, &map1_psi(&g)?)?;
            debug_assert_eq!(map.rotation(), map1_rotation_direct(&g)?);
            Ok(map)
        }
        FamilyKind::Map2 => {
            if id.n % 8 != 0 {
                return bad(format!("map2 needs 8 | n, got {}", id.n));
            }
            let g = Arc::new(FiniteGroup::dihedral(id.n)?);
            rotation_from_psi(&g, &map2_psi(&g)?)
        }
        FamilyKind::CFree => {
            if id.n < 6 || id.n % 2 != 0 || (id.n / 2) % 2 != 1 {
                return bad(format!("cfree needs n = 2m with odd m >= 3, got {}", id.n));
            }
            build_family(FamilyId::map1(id.n))
        }
    }
}

/// The rotation (b, a, a^2 b, a^3, ..., a^{n-2} b, a^{n-1}) spelled out.
fn map1_rotation_direct(group: &FiniteGroup) -> Result<Vec<Elem>> {
    let n = group.dihedral_n().ok_or(Error::NotDihedral)?;
    (0..n)
        .map(|i| group.dihedral_elem(i as i64, 1 - (i % 2)))
        .collect()
}

/// One equivalence class of the classification.
#[derive(Clone, Debug)]
pub struct ClassEntry {
    pub map: CayleyMap,
    pub analysis: MapAnalysis,
    pub family: Option<FamilyId>,
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub n: usize,
    pub classes: Vec<ClassEntry>,
    /// the same classes counted up to the weaker reflection-equivalence
    pub reflection_class_count: usize,
    /// candidate maps examined before the equivalence reduction
    pub candidate_count: usize,
}

fn equivalence_bound(n: usize) -> usize {
    aut::DEFAULT_AUT_BOUND.max(2 * n)
}

/// All regular Cayley maps on D_n up to equivalence, optionally filtered by
/// kernel size. Every candidate comes from a skew-morphism orbit, so the
/// enumeration is exhaustive by the skew-morphism characterization of
/// regularity.
pub fn classify(n: usize, kernel_filter: Option<usize>) -> Result<ClassificationResult> {
    classify_bounded(n, kernel_filter, DEFAULT_CLASSIFY_BOUND)
}

pub fn classify_bounded(
    n: usize,
    kernel_filter: Option<usize>,
    bound: usize,
) -> Result<ClassificationResult> {
    if n < 2 || n > bound {
        return Err(Error::Capacity { order: n, bound });
    }
    let group = Arc::new(FiniteGroup::dihedral(n)?);
    let skews = enumerate_skew_morphisms(&group)?;

    // each inverse-closed generating orbit of each skew-morphism, deduped by
    // the canonical form of its rotation cycle
    let candidates: Vec<(Vec<Elem>, CayleyMap)> = skews
        .par_iter()
        .flat_map_iter(|skew| {
            let group = Arc::clone(&group);
            skew.psi()
                .cycles()
                .into_iter()
                .filter_map(move |orbit| {
                    if orbit.contains(&IDENTITY) {
                        return None;
                    }
                    let closed = orbit.iter().all(|&x| orbit.contains(&group.inv(x)));
                    if !closed {
                        return None;
                    }
                    let map = CayleyMap::new(Arc::clone(&group), orbit).ok()?;
                    Some((map.canonical_rotation(), map))
                })
        })
        .collect();
    let deduped: BTreeMap<Vec<Elem>, CayleyMap> = candidates.into_iter().collect();
    let candidate_count = deduped.len();

    let analyzed: Vec<(CayleyMap, MapAnalysis)> = deduped
        .into_values()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|map| {
            let analysis = map.analyze();
            (map, analysis)
        })
        .filter(|(_, analysis)| {
            analysis.regular
                && match kernel_filter {
                    Some(k) => analysis.kernel.as_ref().map(|s| s.order()) == Some(k),
                    None => true,
                }
        })
        .collect();

    // equivalence reduction, pruned by an invariant signature
    let bound = equivalence_bound(n);
    let mut buckets: BTreeMap<(usize, usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    let mut classes: Vec<ClassEntry> = Vec::new();
    for (map, analysis) in analyzed {
        let mut pi: Vec<usize> = analysis
            .skew
            .as_ref()
            .expect("regular")
            .pi_table()
            .to_vec();
        pi.sort_unstable();
        let kernel_order = analysis.kernel.as_ref().expect("regular").order();
        let sig = (map.valence(), kernel_order, pi);
        let bucket = buckets.entry(sig).or_default();
        let mut known = false;
        for &idx in bucket.iter() {
            if classes[idx].map.equivalent(&map, bound)?.is_some() {
                known = true;
                break;
            }
        }
        if !known {
            bucket.push(classes.len());
            classes.push(ClassEntry {
                map,
                analysis,
                family: None,
            });
        }
    }

    // annotate each class with the family it realizes, if any
    for entry in classes.iter_mut() {
        for id in families_at(n) {
            let fam = build_family(id)?;
            if entry.map.equivalent(&fam, bound)?.is_some() {
                entry.family = Some(id);
                break;
            }
        }
    }

    // the catalog count up to reflection as well
    let mut reflection_reps: Vec<&CayleyMap> = Vec::new();
    for entry in &classes {
        let mut merged = false;
        for rep in &reflection_reps {
            if entry.map.equivalent_up_to_reflection(rep, bound)? {
                merged = true;
                break;
            }
        }
        if !merged {
            reflection_reps.push(&entry.map);
        }
    }
    let reflection_class_count = reflection_reps.len();

    Ok(ClassificationResult {
        n,
        classes,
        reflection_class_count,
        candidate_count,
    })
}

/// The kernel-4 families the classification is expected to realize at n.
pub fn families_at(n: usize) -> Vec<FamilyId> {
    match n {
        2 => vec![FamilyId::thm_main_1a(), FamilyId::thm_main_1b()],
        4 => vec![FamilyId::thm_main_2()],
        _ if n >= 6 && n % 2 == 0 => {
            let mut out = vec![FamilyId::map1(n)];
            if n == 6 {
                out.insert(0, FamilyId::thm_main_3());
            }
            if n % 8 == 0 {
                out.push(FamilyId::map2(n));
            }
            out
        }
        _ => Vec::new(),
    }
}

/// The subgroup N <= C_n with L(N) the core of L(C_n) in Aut(M), computed as
/// the largest subgroup of C_n whose left multiplications are stable under
/// conjugation by the associated skew-morphism.
pub fn core_of_cyclic(map: &CayleyMap) -> Result<Subgroup> {
    let group = map.group();
    let n = group.dihedral_n().ok_or(Error::NotDihedral)?;
    let skew = map.associated_skew().ok_or(Error::NotRegular)?;
    let psi = skew.psi();
    let psi_inv = psi.inverse();
    let stable = |sub: &Subgroup| -> bool {
        sub.members().iter().all(|&s| {
            let c = psi.compose(&group.left_mul_perm(s)).compose(&psi_inv);
            let t = c.apply(IDENTITY);
            sub.contains(t) && c == group.left_mul_perm(t)
        })
    };
    let mut gens: Vec<Elem> = Vec::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let sub = Subgroup::generated(group, &[d % n]);
        if stable(&sub) {
            gens.push(d % n);
        }
    }
    let join = Subgroup::generated(group, &gens);
    debug_assert!(stable(&join));
    Ok(join)
}

/// One verified n of the kernel-4 classification.
#[derive(Clone, Debug)]
pub struct MainEntry {
    pub n: usize,
    pub class_count: usize,
    pub reflection_class_count: usize,
    /// family and whether exactly one class realizes it
    pub families: Vec<(FamilyId, bool)>,
    pub unmatched_classes: usize,
}

impl MainEntry {
    pub fn pass(&self) -> bool {
        self.unmatched_classes == 0
            && self.class_count == self.families.len()
            && self.families.iter().all(|&(_, ok)| ok)
    }
}

#[derive(Clone, Debug)]
pub struct MainReport {
    pub entries: Vec<MainEntry>,
}

impl MainReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(MainEntry::pass)
    }
}

/// Matches the kernel-4 classes at every n <= max_n against the named
/// families, demanding a bijection with explicit equivalence witnesses.
pub fn verify_theorem_main(max_n: usize) -> Result<MainReport> {
    let mut entries = Vec::new();
    for n in 2..=max_n {
        let result = classify(n, Some(4))?;
        let bound = equivalence_bound(n);
        let mut families = Vec::new();
        for id in families_at(n) {
            let fam = build_family(id)?;
            let mut hits = 0;
            for entry in &result.classes {
                if entry.map.equivalent(&fam, bound)?.is_some() {
                    hits += 1;
                }
            }
            families.push((id, hits == 1));
        }
        let unmatched_classes = result
            .classes
            .iter()
            .filter(|e| e.family.is_none())
            .count();
        entries.push(MainEntry {
            n,
            class_count: result.classes.len(),
            reflection_class_count: result.reflection_class_count,
            families,
            unmatched_classes,
        });
    }
    Ok(MainReport { entries })
}

#[derive(Clone, Debug)]
pub struct MinEntry {
    pub n: usize,
    pub class_count: usize,
    /// every kernel meets the reflection class of D_n
    pub kernels_dihedral: bool,
    /// |kernel| >= 4 except verified octahedron embeddings at n = 3
    pub sizes_ok: bool,
    pub exceptional_classes: usize,
}

impl MinEntry {
    pub fn pass(&self) -> bool {
        self.kernels_dihedral && self.sizes_ok
    }
}

#[derive(Clone, Debug)]
pub struct MinReport {
    pub entries: Vec<MinEntry>,
}

impl MinReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(MinEntry::pass)
    }
}

/// Checks the minimum-kernel statement over every regular map at n <= max_n.
pub fn verify_theorem_min(max_n: usize) -> Result<MinReport> {
    let mut entries = Vec::new();
    for n in 2..=max_n {
        let result = classify(n, None)?;
        let mut kernels_dihedral = true;
        let mut sizes_ok = true;
        let mut exceptional = 0;
        for entry in &result.classes {
            let kernel = entry.analysis.kernel.as_ref().expect("regular");
            let group = entry.map.group();
            let meets_reflections = kernel
                .members()
                .iter()
                .any(|&g| group.is_reflection(g).unwrap_or(false));
            kernels_dihedral &= meets_reflections;
            if kernel.order() < 4 {
                let octahedron = n == 3
                    && kernel.order() == 2
                    && entry.map.underlying_graph().is_octahedron();
                if octahedron {
                    exceptional += 1;
                } else {
                    sizes_ok = false;
                }
            }
        }
        entries.push(MinEntry {
            n,
            class_count: result.classes.len(),
            kernels_dihedral,
            sizes_ok,
            exceptional_classes: exceptional,
        });
    }
    Ok(MinReport { entries })
}

/// Point checks of one infinite-family map at one n.
#[derive(Clone, Debug)]
pub struct FamilyChecks {
    pub id: FamilyId,
    /// regular under the dart-count oracle and the skew-morphism oracle
    pub regular_both: bool,
    /// associated skew-morphism equals the closed form on all 2n elements
    pub psi_closed_form: bool,
    /// kernel is exactly {1, a^m, ba, ba^{m+1}}
    pub kernel_exact: bool,
    /// power values are exactly the odd numbers below n
    pub pi_values: bool,
    /// pi(x) = 3 mod 4 exactly on X, when 4 | n
    pub congruence: bool,
    pub core_order: usize,
    pub core_order_ok: bool,
}

impl FamilyChecks {
    pub fn pass(&self) -> bool {
        self.regular_both
            && self.psi_closed_form
            && self.kernel_exact
            && self.pi_values
            && self.congruence
            && self.core_order_ok
    }
}

#[derive(Clone, Debug)]
pub struct FamiliesReport {
    pub checks: Vec<FamilyChecks>,
}

impl FamiliesReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(FamilyChecks::pass)
    }
}

fn family_checks(id: FamilyId) -> Result<FamilyChecks> {
    let map = build_family(id)?;
    let group = map.group();
    let n = group.dihedral_n().ok_or(Error::NotDihedral)?;
    let m = n / 2;
    let closed_form = match id.kind {
        FamilyKind::Map1 => map1_psi(group)?,
        FamilyKind::Map2 => map2_psi(group)?,
        _ => return Err(Error::FamilyParam("family checks cover map1 and map2".into())),
    };

    let sys = map.dart_system();
    let dart_regular = sys.automorphism_count() == sys.dart_count();
    let regular_both = dart_regular && check_skew(group, &closed_form).is_some();

    let associated = map.associated_skew().ok_or(Error::NotRegular)?;
    let psi_closed_form = associated.psi() == &closed_form;

    let expected_kernel = {
        let mut v = vec![
            IDENTITY,
            group.dihedral_elem(m as i64, 0)?,
            // ba = a^{-1} b and b a^{m+1} = a^{m-1} b
            group.dihedral_elem(-1, 1)?,
            group.dihedral_elem(m as i64 - 1, 1)?,
        ];
        v.sort_unstable();
        v
    };
    let kernel_exact = associated.kernel(group).members() == expected_kernel;

    let mut pi_seen: Vec<usize> = associated.pi_table().to_vec();
    pi_seen.sort_unstable();
    pi_seen.dedup();
    let odd: Vec<usize> = (0..m).map(|i| 2 * i + 1).collect();
    let pi_values = pi_seen == odd;

    let congruence = if n % 4 == 0 {
        group
            .elements()
            .all(|g| (associated.pi(g) % 4 == 3) == map.contains(g))
    } else {
        true
    };

    let core_order = core_of_cyclic(&map)?.order();
    let core_order_ok = match id.kind {
        FamilyKind::Map1 => {
            if m % 2 == 1 {
                core_order == 1
            } else {
                core_order == 2
            }
        }
        FamilyKind::Map2 => core_order == 2,
        _ => unreachable!(),
    };

    Ok(FamilyChecks {
        id,
        regular_both,
        psi_closed_form,
        kernel_exact,
        pi_values,
        congruence,
        core_order,
        core_order_ok,
    })
}

/// Closed-form family checks: map1 at every even n in the list, map2 where
/// 8 | n.
pub fn verify_family_lemmas(ns: &[usize]) -> Result<FamiliesReport> {
    let mut checks = Vec::new();
    for &n in ns {
        if n >= 6 && n % 2 == 0 {
            checks.push(family_checks(FamilyId::map1(n))?);
        }
        if n % 8 == 0 {
            checks.push(family_checks(FamilyId::map2(n))?);
        }
    }
    Ok(FamiliesReport { checks })
}

#[derive(Clone, Debug)]
pub struct CfreeReport {
    pub n: usize,
    pub class_count: usize,
    pub matches_family: bool,
    pub aut_order: usize,
    pub aut_order_ok: bool,
    /// explicit isomorphism to the swap extension found (checked at n = 6)
    pub swap_extension_iso: Option<bool>,
}

impl CfreeReport {
    pub fn pass(&self) -> bool {
        self.class_count == 1
            && self.matches_family
            && self.aut_order_ok
            && self.swap_extension_iso.unwrap_or(true)
    }
}

/// Finds the classes whose cyclic core is trivial and checks them against
/// the core-free family map.
pub fn verify_cfree(n: usize) -> Result<CfreeReport> {
    if n % 2 != 0 || (n / 2) % 2 != 1 || n < 6 {
        return Err(Error::FamilyParam(format!(
            "core-free case needs n = 2m with odd m >= 3, got {n}"
        )));
    }
    let result = classify(n, None)?;
    let bound = equivalence_bound(n);
    let mut reps: Vec<&ClassEntry> = Vec::new();
    for entry in &result.classes {
        if core_of_cyclic(&entry.map)?.order() == 1 {
            reps.push(entry);
        }
    }
    let family = build_family(FamilyId::cfree(n))?;
    let mut matches_family = !reps.is_empty();
    let mut aut_order = 0;
    for entry in &reps {
        matches_family &= entry.map.equivalent(&family, bound)?.is_some();
        aut_order = entry.analysis.aut_count;
    }
    let aut_order_ok = reps.iter().all(|e| e.analysis.aut_count == 2 * n * n);
    let swap_extension_iso = if n == 6 && reps.len() == 1 {
        let q = crate::quadruple::from_regular_map(&reps[0].map, 8 * n * n)?;
        let target = FiniteGroup::swap_extension(n / 2)?;
        Some(aut::isomorphism(&q.group, &target, q.group.order().max(target.order()))?.is_some())
    } else {
        None
    };
    Ok(CfreeReport {
        n,
        class_count: reps.len(),
        matches_family,
        aut_order,
        aut_order_ok,
        swap_extension_iso,
    })
}

/// The normality consequence of a large cyclic kernel part: whenever
/// |C_n ∩ kernel| > 2, those left multiplications are stable under
/// conjugation by the associated skew-morphism.
pub fn kernel_cyclic_normality_check(map: &CayleyMap) -> Result<bool> {
    let group = map.group();
    let n = group.dihedral_n().ok_or(Error::NotDihedral)?;
    let skew = map.associated_skew().ok_or(Error::NotRegular)?;
    let cyclic: Vec<Elem> = (0..n).collect();
    let cyclic = Subgroup::from_members(group, cyclic)?;
    let meet = skew.kernel(group).intersect(&cyclic);
    if meet.order() <= 2 {
        return Ok(true);
    }
    let psi = skew.psi();
    let psi_inv = psi.inverse();
    Ok(meet.members().iter().all(|&s| {
        let c = psi.compose(&group.left_mul_perm(s)).compose(&psi_inv);
        let t = c.apply(IDENTITY);
        meet.contains(t) && c == group.left_mul_perm(t)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_constructors() {
        let m = build_family(FamilyId::thm_main_2()).unwrap();
        assert_eq!(m.valence(), 3);
        assert!(m.is_regular());

        let m1 = build_family(FamilyId::map1(6)).unwrap();
        let m3 = build_family(FamilyId::thm_main_3()).unwrap();
        assert!(m1
            .equivalent(&m3, aut::DEFAULT_AUT_BOUND)
            .unwrap()
            .is_none());

        assert!(matches!(
            build_family(FamilyId::map2(12)),
            Err(Error::FamilyParam(_))
        ));
        assert!(matches!(
            build_family(FamilyId::map1(5)),
            Err(Error::FamilyParam(_))
        ));
        assert!(matches!(
            build_family(FamilyId::cfree(8)),
            Err(Error::FamilyParam(_))
        ));
    }

    #[test]
    fn map1_rotation_matches_paper_pattern() {
        let m = build_family(FamilyId::map1(8)).unwrap();
        let g = m.group();
        let words: Vec<&str> = m.rotation().iter().map(|&x| g.label(x)).collect();
        assert_eq!(
            words,
            ["b", "a", "a^2b", "a^3", "a^4b", "a^5", "a^6b", "a^7"]
        );
    }

    #[test]
    fn classify_small_kernel_counts() {
        // n = 4 carries, besides the valence-3 sporadic map, the antibalanced
        // embedding of K_{4,4} whose kernel also has order 4
        let c4 = classify(4, Some(4)).unwrap();
        assert_eq!(c4.classes.len(), 2);
        assert_eq!(
            c4.classes.iter().filter(|e| e.family.is_some()).count(),
            1
        );
        let extra = c4.classes.iter().find(|e| e.family.is_none()).unwrap();
        assert_eq!(extra.map.valence(), 4);
        assert_eq!(extra.map.t_balance(), Some(3));
        assert!(extra.map.underlying_graph().is_complete_bipartite(4));

        assert_eq!(classify(5, Some(4)).unwrap().classes.len(), 0);
        let c6 = classify(6, Some(4)).unwrap();
        assert_eq!(c6.classes.len(), 2);
        assert!(c6.classes.iter().all(|e| e.family.is_some()));
    }

    #[test]
    fn map1_8_family_checks() {
        let report = verify_family_lemmas(&[8]).unwrap();
        assert_eq!(report.checks.len(), 2);
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn cfree_n6() {
        let report = verify_cfree(6).unwrap();
        assert!(report.pass(), "{report:?}");
        assert_eq!(report.aut_order, 72);
        assert_eq!(report.swap_extension_iso, Some(true));
    }
}
