//! Automorphism and isomorphism search for table groups.
//!
//! Generic groups are handled by backtracking over generator images; dihedral
//! groups with n > 2 get the closed form a -> a^s (gcd(s, n) = 1), b -> a^t b.

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GroupTag, IDENTITY};
use crate::perm::{gcd, Perm};

/// Default capacity bound for the generic search.
pub const DEFAULT_AUT_BOUND: usize = 48;

/// A small generating sequence found greedily (each element enlarges the
/// closure of its predecessors).
pub fn generating_sequence(group: &FiniteGroup) -> Vec<Elem> {
    let mut gens: Vec<Elem> = Vec::new();
    let mut closure = crate::subgroup::Subgroup::trivial();
    // prefer high-order elements so few generators are needed
    let mut by_order: Vec<Elem> = (1..group.order()).collect();
    by_order.sort_by_key(|&g| std::cmp::Reverse(group.elem_order(g)));
    for g in by_order {
        if !closure.contains(g) {
            gens.push(g);
            closure = crate::subgroup::Subgroup::generated(group, &gens);
            if closure.order() == group.order() {
                break;
            }
        }
    }
    gens
}

/// All automorphisms of `group`, within the capacity bound.
pub fn automorphisms(group: &FiniteGroup, bound: usize) -> Result<Vec<Perm>> {
    if group.order() > bound {
        return Err(Error::Capacity {
            order: group.order(),
            bound,
        });
    }
    if let GroupTag::Dihedral(n) = *group.tag() {
        if n > 2 {
            return Ok(dihedral_automorphisms(group, n));
        }
    }
    Ok(isomorphisms_generic(group, group))
}

fn dihedral_automorphisms(group: &FiniteGroup, n: usize) -> Vec<Perm> {
    let mut auts = Vec::new();
    for s in (1..n).filter(|&s| gcd(s, n) == 1) {
        for t in 0..n {
            auts.push(dihedral_automorphism(group, n, s, t));
        }
    }
    auts
}

/// The automorphism a -> a^s, b -> a^t b of D_n (n > 2, gcd(s, n) = 1).
pub fn dihedral_automorphism(_group: &FiniteGroup, n: usize, s: usize, t: usize) -> Perm {
    let mut images = vec![0; 2 * n];
    for j in 0..n {
        images[j] = (j * s) % n; // a^j -> a^{js}
        images[n + j] = n + (j * s + t) % n; // a^j b -> a^{js + t} b
    }
    Perm::new(images).expect("dihedral automorphism is a bijection")
}

/// One multiplication-preserving bijection `g1 -> g2`, or `None`.
pub fn isomorphism(g1: &FiniteGroup, g2: &FiniteGroup, bound: usize) -> Result<Option<Perm>> {
    let order = g1.order().max(g2.order());
    if order > bound {
        return Err(Error::Capacity { order, bound });
    }
    if g1.order() != g2.order() {
        return Ok(None);
    }
    Ok(isomorphisms_impl(g1, g2, true).into_iter().next())
}

/// All isomorphisms `g1 -> g2` by generic backtracking.
pub fn isomorphisms_generic(g1: &FiniteGroup, g2: &FiniteGroup) -> Vec<Perm> {
    if g1.order() != g2.order() {
        return Vec::new();
    }
    isomorphisms_impl(g1, g2, false)
}

fn isomorphisms_impl(g1: &FiniteGroup, g2: &FiniteGroup, first_only: bool) -> Vec<Perm> {
    let gens = generating_sequence(g1);
    // express every element of g1 as (previous element) * (generator)
    let order = g1.order();
    let mut expr: Vec<Option<(Elem, usize)>> = vec![None; order];
    let mut bfs_order: Vec<Elem> = vec![IDENTITY];
    let mut seen = vec![false; order];
    seen[IDENTITY] = true;
    let mut head = 0;
    while head < bfs_order.len() {
        let g = bfs_order[head];
        head += 1;
        for (gi, &gen) in gens.iter().enumerate() {
            let prod = g1.mul(g, gen);
            if !seen[prod] {
                seen[prod] = true;
                expr[prod] = Some((g, gi));
                bfs_order.push(prod);
            }
        }
    }
    debug_assert_eq!(bfs_order.len(), order);

    // candidate images per generator, filtered by element order
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| {
            let o = g1.elem_order(g);
            g2.elements().filter(|&h| g2.elem_order(h) == o).collect()
        })
        .collect();

    let mut results = Vec::new();
    let mut gen_images = vec![0usize; gens.len()];
    search(
        g1,
        g2,
        &gens,
        &candidates,
        &bfs_order,
        &expr,
        0,
        &mut gen_images,
        &mut results,
        first_only,
    );
    results
}

#[allow(clippy::too_many_arguments)]
fn search(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    bfs_order: &[Elem],
    expr: &[Option<(Elem, usize)>],
    depth: usize,
    gen_images: &mut Vec<Elem>,
    results: &mut Vec<Perm>,
    first_only: bool,
) {
    if first_only && !results.is_empty() {
        return;
    }
    if depth == gens.len() {
        if let Some(phi) = complete_map(g1, g2, gens, gen_images, bfs_order, expr) {
            results.push(phi);
        }
        return;
    }
    for &img in &candidates[depth] {
        gen_images[depth] = img;
        // quick prune: the subgroup generated so far must have matching order
        let part1 = crate::subgroup::Subgroup::generated(g1, &gens[..=depth]);
        let part2 = crate::subgroup::Subgroup::generated(g2, &gen_images[..=depth]);
        if part1.order() != part2.order() {
            continue;
        }
        search(
            g1, g2, gens, candidates, bfs_order, expr, depth + 1, gen_images, results, first_only,
        );
    }
}

fn complete_map(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    gens: &[Elem],
    gen_images: &[Elem],
    bfs_order: &[Elem],
    expr: &[Option<(Elem, usize)>],
) -> Option<Perm> {
    let order = g1.order();
    let mut phi = vec![usize::MAX; order];
    let mut hit = vec![false; order];
    phi[IDENTITY] = IDENTITY;
    hit[IDENTITY] = true;
    for &g in &bfs_order[1..] {
        let (prev, gi) = expr[g].expect("BFS covers the group");
        // gens themselves may appear with expr = (1, gi)
        let img = g2.mul(phi[prev], gen_images[gi]);
        if hit[img] {
            return None; // not injective
        }
        phi[g] = img;
        hit[img] = true;
    }
    let _ = gens;
    // full homomorphism check
    for g in 0..order {
        for h in 0..order {
            if phi[g1.mul(g, h)] != g2.mul(phi[g], phi[h]) {
                return None;
            }
        }
    }
    Some(Perm::new(phi).expect("checked bijective"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_automorphism(g: &FiniteGroup, phi: &Perm) -> bool {
        g.elements()
            .all(|x| g.elements().all(|y| phi.apply(g.mul(x, y)) == g.mul(phi.apply(x), phi.apply(y))))
    }

    #[test]
    fn dihedral_counts() {
        // |Aut(D_n)| = n * phi(n) for n > 2
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(automorphisms(&d4, DEFAULT_AUT_BOUND).unwrap().len(), 8);
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(automorphisms(&d3, DEFAULT_AUT_BOUND).unwrap().len(), 6);
        // D_2 = Z_2 x Z_2: Aut = GL(2,2) of order 6, closed form does not apply
        let d2 = FiniteGroup::dihedral(2).unwrap();
        assert_eq!(automorphisms(&d2, DEFAULT_AUT_BOUND).unwrap().len(), 6);
    }

    #[test]
    fn closed_form_matches_generic_search() {
        for n in [3, 4, 5, 6] {
            let g = FiniteGroup::dihedral(n).unwrap();
            let mut fast: Vec<Perm> = automorphisms(&g, DEFAULT_AUT_BOUND).unwrap();
            let mut slow = isomorphisms_generic(&g, &g);
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow, "n = {n}");
            assert!(fast.iter().all(|p| is_automorphism(&g, p)));
        }
    }

    #[test]
    fn automorphism_set_is_a_group() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let auts = automorphisms(&g, DEFAULT_AUT_BOUND).unwrap();
        let set: std::collections::BTreeSet<Perm> = auts.iter().cloned().collect();
        for p in &auts {
            assert!(set.contains(&p.inverse()));
            for q in &auts {
                assert!(set.contains(&p.compose(q)));
            }
        }
    }

    #[test]
    fn isomorphism_basic() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert!(isomorphism(&d4, &z8, DEFAULT_AUT_BOUND).unwrap().is_none());
        let phi = isomorphism(&d4, &d4, DEFAULT_AUT_BOUND).unwrap().unwrap();
        assert!(is_automorphism(&d4, &phi));
    }

    #[test]
    fn capacity_bound_enforced() {
        let big = FiniteGroup::swap_extension(3).unwrap();
        assert!(matches!(
            automorphisms(&big, DEFAULT_AUT_BOUND),
            Err(Error::Capacity { .. })
        ));
    }
}
