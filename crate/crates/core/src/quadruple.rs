//! Admissible quadruples (G, H, x, y), their coset graphs, the Cayley map a
//! quadruple induces, and the round trip back from a regular map through its
//! materialized automorphism group.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{Elem, FiniteGroup, IDENTITY};
use crate::map::CayleyMap;
use crate::perm::Perm;
use crate::subgroup::{Side, Subgroup};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct AdmissibleQuadruple {
    pub group: Arc<FiniteGroup>,
    pub h: Subgroup,
    pub x: Elem,
    pub y: Elem,
}

impl AdmissibleQuadruple {
    pub fn y_subgroup(&self) -> Subgroup {
        Subgroup::generated(&self.group, &[self.y])
    }

    /// The quadruple with an isomorphism applied to all four entries, which
    /// is again admissible.
    pub fn conjugate(&self, target: Arc<FiniteGroup>, alpha: &Perm) -> Result<AdmissibleQuadruple> {
        let members: Vec<Elem> = self.h.members().iter().map(|&g| alpha.apply(g)).collect();
        check_admissible(
            target.clone(),
            Subgroup::from_members(&target, members)?,
            alpha.apply(self.x),
            alpha.apply(self.y),
        )
    }
}

/// The double coset `Y s Y` as a sorted element list.
fn double_coset(group: &FiniteGroup, y_sub: &Subgroup, s: Elem) -> Vec<Elem> {
    let mut out = BTreeSet::new();
    for &u in y_sub.members() {
        let us = group.mul(u, s);
        for &v in y_sub.members() {
            out.insert(group.mul(us, v));
        }
    }
    out.into_iter().collect()
}

/// Validates the quadruple axioms, reporting the first violated one.
pub fn check_admissible(
    group: Arc<FiniteGroup>,
    h: Subgroup,
    x: Elem,
    y: Elem,
) -> Result<AdmissibleQuadruple> {
    if y == IDENTITY {
        return Err(Error::NotAdmissible("y is the identity".into()));
    }
    if h.order() <= 1 {
        return Err(Error::NotAdmissible("H is trivial".into()));
    }
    let y_sub = Subgroup::generated(&group, &[y]);
    if h.intersect(&y_sub).order() != 1 {
        return Err(Error::NotAdmissible("H and Y intersect non-trivially".into()));
    }
    if h.order() * y_sub.order() != group.order() {
        return Err(Error::NotAdmissible("G is not the product HY".into()));
    }
    if y_sub.core(&group).order() != 1 {
        return Err(Error::NotAdmissible("Y is not core-free in G".into()));
    }
    let mut gens: Vec<Elem> = y_sub.members().to_vec();
    gens.push(x);
    if Subgroup::generated(&group, &gens).order() != group.order() {
        return Err(Error::NotAdmissible("Y and x do not generate G".into()));
    }
    if double_coset(&group, &y_sub, x) != double_coset(&group, &y_sub, group.inv(x)) {
        return Err(Error::NotAdmissible(
            "double coset YxY differs from Yx^{-1}Y".into(),
        ));
    }
    Ok(AdmissibleQuadruple { group, h, x, y })
}

/// The coset graph on left Y-cosets with adjacency `g1^{-1} g2 in YxY`.
pub fn coset_graph(group: &FiniteGroup, y_sub: &Subgroup, x: Elem) -> Result<Graph> {
    let dc = double_coset(group, y_sub, x);
    if dc != double_coset(group, y_sub, group.inv(x)) {
        return Err(Error::NotAdmissible(
            "double coset YxY differs from Yx^{-1}Y".into(),
        ));
    }
    let cosets = y_sub.cosets(group, Side::Left);
    let in_dc: Vec<bool> = {
        let set: BTreeSet<Elem> = dc.into_iter().collect();
        (0..group.order()).map(|g| set.contains(&g)).collect()
    };
    let mut edges = Vec::new();
    for (i, bi) in cosets.blocks.iter().enumerate() {
        for (j, bj) in cosets.blocks.iter().enumerate().skip(i + 1) {
            if in_dc[group.mul(group.inv(bi[0]), bj[0])] {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(cosets.blocks.len(), &edges))
}

/// H materialized as a table group, with the index map from parent elements.
fn subgroup_as_group(group: &FiniteGroup, h: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
    let members = h.members();
    let mut index = vec![usize::MAX; group.order()];
    for (i, &g) in members.iter().enumerate() {
        index[g] = i;
    }
    let table: Vec<Vec<Elem>> = members
        .iter()
        .map(|&g| members.iter().map(|&k| index[group.mul(g, k)]).collect())
        .collect();
    let labels = members.iter().map(|&g| group.label(g).to_string()).collect();
    Ok((FiniteGroup::from_table(table, Some(labels))?, index))
}

/// The regular Cayley map CM(H, X, p) induced by an admissible quadruple:
/// X = {h in H : hY within YxY} and p follows the y-action on coset
/// representatives.
pub fn induced_cayley_map(q: &AdmissibleQuadruple) -> Result<CayleyMap> {
    let group = &q.group;
    let y_sub = q.y_subgroup();
    let cosets = y_sub.cosets(group, Side::Left);

    // each coset gY holds exactly one representative in H
    let mut rep = vec![usize::MAX; cosets.blocks.len()];
    for &h in q.h.members() {
        let c = cosets.block_of[h];
        if rep[c] != usize::MAX {
            return Err(Error::NotAdmissible(
                "coset holds two representatives in H".into(),
            ));
        }
        rep[c] = h;
    }
    if rep.iter().any(|&r| r == usize::MAX) {
        return Err(Error::NotAdmissible("coset misses H".into()));
    }

    // the y-action on H: y(h) is the H-representative of the coset yhY
    let act_y: Vec<Elem> = q
        .h
        .members()
        .iter()
        .map(|&h| rep[cosets.block_of[group.mul(q.y, h)]])
        .collect();

    // rotation = orbit of the representative of xY under the y-action
    let (h_group, h_index) = subgroup_as_group(group, &q.h)?;
    let start = rep[cosets.block_of[q.x]];
    let mut rotation = vec![h_index[start]];
    let mut cur = start;
    loop {
        cur = act_y[q.h.members().binary_search(&cur).expect("in H")];
        if cur == start {
            break;
        }
        rotation.push(h_index[cur]);
    }
    if rotation.len() != y_sub.order() {
        return Err(Error::NotAdmissible(
            "orbit of x under Y is shorter than |Y|".into(),
        ));
    }
    let map = CayleyMap::new(Arc::new(h_group), rotation)?;
    let sys = map.dart_system();
    if sys.automorphism_count() != group.order() {
        return Err(Error::NotAdmissible(
            "induced map is not regular with |Aut| = |G|".into(),
        ));
    }
    Ok(map)
}

/// Whether X as defined by the double coset agrees with the induced map's
/// generating set, and the coset graph is isomorphic to Cay(H, X).
pub fn coset_graph_matches_cayley(q: &AdmissibleQuadruple) -> Result<bool> {
    let map = induced_cayley_map(q)?;
    let group = &q.group;
    let y_sub = q.y_subgroup();
    let dc: BTreeSet<Elem> = double_coset(group, &y_sub, q.x).into_iter().collect();
    // X = {h in H : hY within YxY}
    let x_set: BTreeSet<&str> = q
        .h
        .members()
        .iter()
        .filter(|&&h| y_sub.members().iter().all(|&u| dc.contains(&group.mul(h, u))))
        .map(|&h| group.label(h))
        .collect();
    let map_x: BTreeSet<&str> = map
        .rotation()
        .iter()
        .map(|&z| map.group().label(z))
        .collect();
    if x_set != map_x {
        return Ok(false);
    }
    Ok(coset_graph(group, &y_sub, q.x)?.isomorphic(&map.underlying_graph()))
}

/// The quadruple (Aut(M), L(H), L_{x_1}, psi) of a regular map, with Aut(M)
/// materialized as a table group from the dart automorphism list.
pub fn from_regular_map(map: &CayleyMap, bound: usize) -> Result<AdmissibleQuadruple> {
    let sys = map.dart_system();
    if sys.dart_count() > bound {
        return Err(Error::Capacity {
            order: sys.dart_count(),
            bound,
        });
    }
    let perms = sys.automorphisms();
    if perms.len() != sys.dart_count() {
        return Err(Error::NotRegular);
    }
    let index: BTreeMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let order = perms.len();
    let mut table = vec![vec![0usize; order]; order];
    for (i, p) in perms.iter().enumerate() {
        for (j, r) in perms.iter().enumerate() {
            let prod = p.compose(r);
            table[i][j] = *index
                .get(&prod)
                .ok_or_else(|| Error::InvalidGroup("automorphisms not closed".into()))?;
        }
    }
    let k = map.valence();
    let labels: Vec<String> = perms
        .iter()
        .map(|p| {
            let d = p.apply(0);
            format!("({},{})", map.group().label(d / k), d % k)
        })
        .collect();
    let aut_group = Arc::new(FiniteGroup::from_table(table, Some(labels))?);

    // L_g is the unique automorphism taking the base dart (1, x_1) to (g, x_1)
    let left: Vec<Elem> = map
        .group()
        .elements()
        .map(|g| {
            let phi = sys
                .extend_automorphism(0, g * k)
                .expect("left multiplications are automorphisms");
            index[&phi]
        })
        .collect();
    let h = Subgroup::from_members(&aut_group, left.clone())?;
    let x1 = map.rotation()[0];
    let x = left[x1];
    let psi = sys
        .extend_automorphism(0, sys.rotation_perm().apply(0))
        .ok_or(Error::NotRegular)?;
    let y = index[&psi];
    check_admissible(aut_group, h, x, y)
}
