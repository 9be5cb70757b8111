//! Property tests for the structural invariants of skew-morphisms, maps and
//! the wire format.

use cayleymap::group::{FiniteGroup, IDENTITY};
use cayleymap::json as wire;
use cayleymap::map::CayleyMap;
use cayleymap::perm::Perm;
use cayleymap::skew::enumerate_skew_morphisms;
use cayleymap::subgroup::{Side, Subgroup};
use proptest::prelude::*;
use std::sync::Arc;

fn dihedral(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::dihedral(n).unwrap())
}

fn candidate_maps(n: usize) -> Vec<CayleyMap> {
    let group = dihedral(n);
    let mut out = Vec::new();
    for s in enumerate_skew_morphisms(&group).unwrap() {
        for orbit in s.psi().cycles() {
            if orbit.contains(&IDENTITY)
                || !orbit.iter().all(|&x| orbit.contains(&group.inv(x)))
            {
                continue;
            }
            if let Ok(map) = CayleyMap::new(Arc::clone(&group), orbit) {
                out.push(map);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The defining identity and its consequences hold for every enumerated
    /// skew-morphism at random arguments.
    #[test]
    fn skew_identity_and_kernel(n in 2usize..7, seed in 0usize..1000) {
        let group = dihedral(n);
        let skews = enumerate_skew_morphisms(&group).unwrap();
        let s = &skews[seed % skews.len()];
        let g = seed % group.order();
        let h = (seed / 7) % group.order();
        // psi(gh) = psi(g) psi^{pi(g)}(h)
        let lhs = s.psi().apply(group.mul(g, h));
        let rhs = group.mul(s.psi().apply(g), s.psi().pow(s.pi(g) as i64).apply(h));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(s.power_sum_check(&group, g, h));
        // the kernel is a subgroup containing the identity, and pi is
        // constant on its right cosets
        let kernel = s.kernel(&group);
        prop_assert!(kernel.contains(IDENTITY));
        for block in &kernel.cosets(&group, Side::Right).blocks {
            prop_assert!(block.iter().all(|&z| s.pi(z) == s.pi(block[0])));
        }
    }

    /// Orders divide: psi has the order the record claims, and pi never
    /// exceeds it.
    #[test]
    fn skew_order_consistency(n in 2usize..7, seed in 0usize..1000) {
        let group = dihedral(n);
        let skews = enumerate_skew_morphisms(&group).unwrap();
        let s = &skews[seed % skews.len()];
        prop_assert_eq!(s.psi().order(), s.order());
        prop_assert!(s.pi_table().iter().all(|&v| 1 <= v && v <= s.order()));
    }

    /// Mirroring is an involution that preserves regularity and valence.
    #[test]
    fn mirror_involution(n in 2usize..6, seed in 0usize..1000) {
        let maps = candidate_maps(n);
        let map = &maps[seed % maps.len()];
        let mirror = map.mirror();
        prop_assert_eq!(mirror.valence(), map.valence());
        let double = mirror.mirror();
        prop_assert_eq!(double.rotation(), map.rotation());
        prop_assert_eq!(mirror.is_regular(), map.is_regular());
    }

    /// Serializing a map and reading it back is the identity.
    #[test]
    fn wire_round_trip(n in 2usize..6, seed in 0usize..1000) {
        let maps = candidate_maps(n);
        let map = &maps[seed % maps.len()];
        let back = wire::map_from_json(&wire::map_to_json(map)).unwrap();
        prop_assert_eq!(back.rotation(), map.rotation());
        prop_assert_eq!(back.group().order(), map.group().order());
    }

    /// Permutation algebra: composition with the inverse is the identity and
    /// powers add.
    #[test]
    fn perm_algebra(images in Just((0usize..8).collect::<Vec<_>>()).prop_shuffle(), i in -6i64..6, j in -6i64..6) {
        let p = Perm::new(images).unwrap();
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(p.pow(i).compose(&p.pow(j)), p.pow(i + j));
    }

    /// Left and right cosets of a cyclic subgroup partition the group into
    /// equal-size blocks with the identity in block zero.
    #[test]
    fn coset_partitions(n in 2usize..8, g in 0usize..16, side in 0usize..2) {
        let group = dihedral(n);
        let g = g % group.order();
        let sub = Subgroup::generated(&group, &[g]);
        let side = if side == 0 { Side::Left } else { Side::Right };
        let cosets = sub.cosets(&group, side);
        prop_assert_eq!(cosets.blocks.len() * sub.order(), group.order());
        prop_assert!(cosets.blocks[0].contains(&IDENTITY));
        prop_assert!(cosets.blocks.iter().all(|b| b.len() == sub.order()));
    }
}
