//! Quotients of regular Cayley maps by normal subgroups whose cosets form a
//! block system, plus the checkable laws relating the map to its quotient.

use crate::aut;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, IDENTITY};
use crate::map::CayleyMap;
use crate::perm::Perm;
use crate::skew::SkewMorphism;
use crate::subgroup::{CosetPartition, Side, Subgroup};
use std::sync::Arc;

/// A quotient map together with the data linking it back to its parent.
#[derive(Clone, Debug)]
pub struct QuotientWitness {
    pub map: CayleyMap,
    /// parent element -> element of the quotient group
    pub projection: Vec<Elem>,
    pub normal_order: usize,
    /// |<psi>| for the parent map
    pub parent_skew_order: usize,
    /// |<psi^{G/N}>| for the quotient map
    pub quotient_skew_order: usize,
}

/// Whether `normal` is normal in the map's group and the associated
/// skew-morphism permutes its cosets (left multiplications always do).
pub fn is_block_system(map: &CayleyMap, normal: &Subgroup) -> Result<bool> {
    let skew = map.associated_skew().ok_or(Error::NotRegular)?;
    let group = map.group();
    if !normal.is_normal(group) {
        return Ok(false);
    }
    let cosets = normal.cosets(group, Side::Right);
    let psi = skew.psi();
    Ok(cosets.blocks.iter().all(|block| {
        let target = cosets.block_of[psi.apply(block[0])];
        block
            .iter()
            .all(|&g| cosets.block_of[psi.apply(g)] == target)
    }))
}

/// The quotient map `M/N` on the factor group, re-expressed on the standard
/// dihedral table whenever the factor group admits one.
pub fn quotient_map(map: &CayleyMap, normal: &Subgroup) -> Result<QuotientWitness> {
    let group = map.group();
    if !is_block_system(map, normal)? {
        return Err(Error::NotBlockSystem(describe(group, normal)));
    }
    for &x in map.rotation() {
        if normal.contains(x) {
            return Err(Error::GeneratorInSubgroup(group.label(x).to_string()));
        }
    }
    let cosets = normal.cosets(group, Side::Right);
    let (factor, to_factor) = factor_group(group, &cosets)?;
    let factor = Arc::new(factor);

    // collapse the rotation cycle: the coset successor map must be
    // consistent, and X/N a single cycle under it
    let k = map.valence();
    let mut successor: std::collections::BTreeMap<Elem, Elem> = std::collections::BTreeMap::new();
    for i in 0..k {
        let c = to_factor[map.rotation()[i]];
        let next = to_factor[map.rotation()[(i + 1) % k]];
        match successor.entry(c) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(next);
            }
            std::collections::btree_map::Entry::Occupied(e) => {
                if *e.get() != next {
                    return Err(Error::Invalid(
                        "collapsed rotation is not well-defined on X/N".into(),
                    ));
                }
            }
        }
    }
    let start = to_factor[map.rotation()[0]];
    let mut rotation = vec![start];
    let mut cur = successor[&start];
    while cur != start {
        rotation.push(cur);
        cur = successor[&cur];
    }
    if rotation.len() != successor.len() {
        return Err(Error::Invalid(
            "collapsed rotation is not a single cycle on X/N".into(),
        ));
    }

    let qmap = CayleyMap::new(Arc::clone(&factor), rotation)?;
    let parent_skew = map.associated_skew().ok_or(Error::NotRegular)?;
    let quotient_skew = qmap.associated_skew().ok_or(Error::NotRegular)?;
    Ok(QuotientWitness {
        parent_skew_order: parent_skew.order(),
        quotient_skew_order: quotient_skew.order(),
        normal_order: normal.order(),
        projection: to_factor,
        map: qmap,
    })
}

/// The factor group as a table group, retagged onto the standard dihedral
/// table when isomorphic to one; returns the group and the projection from
/// parent elements.
fn factor_group(
    group: &FiniteGroup,
    cosets: &CosetPartition,
) -> Result<(FiniteGroup, Vec<Elem>)> {
    let m = cosets.blocks.len();
    debug_assert_eq!(cosets.block_of[IDENTITY], 0);
    let mut table = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in 0..m {
            table[i][j] = cosets.block_of[group.mul(cosets.blocks[i][0], cosets.blocks[j][0])];
        }
    }
    let labels: Vec<String> = cosets
        .blocks
        .iter()
        .map(|b| format!("[{}]", group.label(b[0])))
        .collect();
    let raw = FiniteGroup::from_table(table, Some(labels))?;
    if m >= 4 && m % 2 == 0 {
        let dihedral = FiniteGroup::dihedral(m / 2)?;
        if let Some(phi) = aut::isomorphism(&raw, &dihedral, m)? {
            let projection = cosets.block_of.iter().map(|&b| phi.apply(b)).collect();
            return Ok((dihedral, projection));
        }
    }
    Ok((raw, cosets.block_of.clone()))
}

/// The coset action of the parent skew-morphism, as a permutation of the
/// quotient group's elements.
pub fn induced_skew_perm(parent: &SkewMorphism, witness: &QuotientWitness) -> Result<Perm> {
    let m = witness.map.group().order();
    let mut images = vec![usize::MAX; m];
    for (g, &q) in witness.projection.iter().enumerate() {
        let img = witness.projection[parent.psi().apply(g)];
        if images[q] == usize::MAX {
            images[q] = img;
        } else if images[q] != img {
            return Err(Error::Invalid("coset action of psi ill-defined".into()));
        }
    }
    Perm::new(images)
}

/// Point-by-point verification of the quotient laws.
#[derive(Clone, Debug)]
pub struct QuotientReport {
    pub quotient_regular: bool,
    /// |<psi>| <= |N| * |<psi^{G/N}>|
    pub order_inequality: bool,
    pub x_union_of_cosets: bool,
    /// equality in the order inequality holds iff X is a union of N-cosets
    pub equality_iff_union: bool,
    /// induced coset action of psi equals the quotient map's skew-morphism
    pub skew_action_matches: bool,
    /// number of distinct induced dart actions of Aut(M) equals |Aut(M/N)|
    pub aut_action_matches: bool,
    /// pi^{G/N}(Ng) = pi(g) mod |<psi^{G/N}>| for every g
    pub power_congruence: bool,
    pub quotient_kernel_order: usize,
}

impl QuotientReport {
    pub fn pass(&self) -> bool {
        self.quotient_regular
            && self.order_inequality
            && self.equality_iff_union
            && self.skew_action_matches
            && self.aut_action_matches
            && self.power_congruence
    }
}

pub fn verify_quotient_laws(map: &CayleyMap, normal: &Subgroup) -> Result<QuotientReport> {
    let witness = quotient_map(map, normal)?;
    let parent_skew = map.associated_skew().ok_or(Error::NotRegular)?;
    let quotient_skew = witness.map.associated_skew();
    let quotient_regular = quotient_skew.is_some();
    let quotient_skew = quotient_skew.ok_or(Error::NotRegular)?;

    let order_inequality =
        witness.parent_skew_order <= witness.normal_order * witness.quotient_skew_order;
    let equality =
        witness.parent_skew_order == witness.normal_order * witness.quotient_skew_order;
    let group = map.group();
    let x_union_of_cosets = map.rotation().iter().all(|&x| {
        normal
            .members()
            .iter()
            .all(|&u| map.contains(group.mul(u, x)))
    });
    let equality_iff_union = equality == x_union_of_cosets;

    let skew_action_matches =
        induced_skew_perm(&parent_skew, &witness)? == *quotient_skew.psi();

    let aut_action_matches = induced_aut_order(map, &witness)?
        == witness.map.dart_system().automorphism_count();

    let r = witness.quotient_skew_order;
    let power_congruence = group
        .elements()
        .all(|g| quotient_skew.pi(witness.projection[g]) % r == parent_skew.pi(g) % r);

    let quotient_kernel_order = quotient_skew.kernel(witness.map.group()).order();
    Ok(QuotientReport {
        quotient_regular,
        order_inequality,
        x_union_of_cosets,
        equality_iff_union,
        skew_action_matches,
        aut_action_matches,
        power_congruence,
        quotient_kernel_order,
    })
}

/// |Aut(M)^{G/N}|: the number of distinct permutations of quotient darts
/// induced by the parent map's automorphisms.
fn induced_aut_order(map: &CayleyMap, witness: &QuotientWitness) -> Result<usize> {
    let parent_darts = map.dart_system();
    let k = map.valence();
    let qmap = &witness.map;
    let qk = qmap.valence();
    // parent dart (g, x_i) -> quotient dart (proj(g), position of [x_i])
    let to_q: Vec<usize> = (0..parent_darts.dart_count())
        .map(|d| {
            let g = d / k;
            let x = map.rotation()[d % k];
            let qx = witness.projection[x];
            witness.projection[g] * qk + qmap.position(qx).expect("X/N covers the image")
        })
        .collect();
    let q_dart_count = qmap.group().order() * qk;
    let mut seen = std::collections::BTreeSet::new();
    for phi in parent_darts.automorphisms() {
        let mut images = vec![usize::MAX; q_dart_count];
        for d in 0..parent_darts.dart_count() {
            let (from, to) = (to_q[d], to_q[phi.apply(d)]);
            if images[from] == usize::MAX {
                images[from] = to;
            } else if images[from] != to {
                return Err(Error::Invalid("induced dart action ill-defined".into()));
            }
        }
        seen.insert(Perm::new(images)?);
    }
    Ok(seen.len())
}

fn describe(group: &FiniteGroup, sub: &Subgroup) -> String {
    let gens: Vec<&str> = sub.members().iter().map(|&g| group.label(g)).collect();
    format!("{{{}}}", gens.join(", "))
}
