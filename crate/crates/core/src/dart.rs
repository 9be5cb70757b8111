//! The map-as-darts view: rotation R, dart-reversing involution T,
//! automorphism extension by propagation, and the independent regularity
//! oracle.
//!
//! Dart `(g, gx)` is indexed as `g * k + i` with `i` the position of x in the
//! rotation cycle, so R is position increment and T follows the edge.

use crate::group::{Elem, IDENTITY};
use crate::map::CayleyMap;
use crate::perm::Perm;
use crate::skew::{check_skew, SkewMorphism};

#[derive(Clone, Debug)]
pub struct DartSystem {
    valence: usize,
    vertices: usize,
    r: Perm,
    t: Perm,
}

impl DartSystem {
    pub fn build(map: &CayleyMap) -> DartSystem {
        let k = map.valence();
        let group = map.group();
        let n = group.order();
        let rotation = map.rotation();
        let dart_count = n * k;
        let mut r = Vec::with_capacity(dart_count);
        let mut t = Vec::with_capacity(dart_count);
        for g in 0..n {
            for (i, &x) in rotation.iter().enumerate() {
                r.push(g * k + (i + 1) % k);
                let head = group.mul(g, x);
                let back = map.position(group.inv(x)).expect("X is inverse-closed");
                t.push(head * k + back);
            }
        }
        let sys = DartSystem {
            valence: k,
            vertices: n,
            r: Perm::new(r).expect("R is a permutation"),
            t: Perm::new(t).expect("T is a permutation"),
        };
        debug_assert!(sys.t.compose(&sys.t).is_identity());
        debug_assert!(sys.is_connected());
        sys
    }

    pub fn dart_count(&self) -> usize {
        self.vertices * self.valence
    }

    pub fn rotation_perm(&self) -> &Perm {
        &self.r
    }

    pub fn reversing_involution(&self) -> &Perm {
        &self.t
    }

    pub fn tail(&self, dart: usize) -> Elem {
        dart / self.valence
    }

    /// Whether `<R, T>` is transitive on the dart set.
    pub fn is_connected(&self) -> bool {
        let total = self.dart_count();
        let mut seen = vec![false; total];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for next in [self.r.apply(d), self.t.apply(d)] {
                if !seen[next] {
                    seen[next] = true;
                    count += 1;
                    stack.push(next);
                }
            }
        }
        count == total
    }

    /// The unique permutation commuting with R and T that sends `d0` to `d1`,
    /// if consistent. Propagates along R- and T-words from the seed; the
    /// result is checked to commute on every dart.
    pub fn extend_automorphism(&self, d0: usize, d1: usize) -> Option<Perm> {
        let total = self.dart_count();
        const UNSET: usize = usize::MAX;
        let mut img = vec![UNSET; total];
        let mut used = vec![false; total];
        img[d0] = d1;
        used[d1] = true;
        let mut queue = vec![d0];
        while let Some(d) = queue.pop() {
            for (succ_d, succ_i) in [
                (self.r.apply(d), self.r.apply(img[d])),
                (self.t.apply(d), self.t.apply(img[d])),
            ] {
                if img[succ_d] == UNSET {
                    if used[succ_i] {
                        return None;
                    }
                    img[succ_d] = succ_i;
                    used[succ_i] = true;
                    queue.push(succ_d);
                } else if img[succ_d] != succ_i {
                    return None;
                }
            }
        }
        // connectivity guarantees full coverage
        debug_assert!(img.iter().all(|&v| v != UNSET));
        let phi = Perm::new(img).ok()?;
        let commutes = phi.compose(&self.r) == self.r.compose(&phi)
            && phi.compose(&self.t) == self.t.compose(&phi);
        commutes.then_some(phi)
    }

    /// |Aut(M)|: the number of admissible images of a fixed base dart
    /// (map automorphisms act semi-regularly on darts).
    pub fn automorphism_count(&self) -> usize {
        (0..self.dart_count())
            .filter(|&d1| self.extend_automorphism(0, d1).is_some())
            .count()
    }

    /// The full automorphism list, identity first.
    pub fn automorphisms(&self) -> Vec<Perm> {
        let mut list: Vec<Perm> = (0..self.dart_count())
            .filter_map(|d1| self.extend_automorphism(0, d1))
            .collect();
        list.sort_by_key(|p| if p.is_identity() { 0 } else { 1 });
        list
    }

    /// Projects a dart permutation to its action on vertices (tails); `None`
    /// if darts with equal tails map to darts with different tails.
    pub fn vertex_projection(&self, phi: &Perm) -> Option<Perm> {
        let k = self.valence;
        let mut images = vec![usize::MAX; self.vertices];
        for d in 0..self.dart_count() {
            let v = d / k;
            let w = phi.apply(d) / k;
            if images[v] == usize::MAX {
                images[v] = w;
            } else if images[v] != w {
                return None;
            }
        }
        Perm::new(images).ok()
    }

    /// The stabilizer generator of the base vertex: extend the base dart
    /// `(1, x_1)` to `(1, p(x_1))`, project to vertices, and validate as a
    /// skew-morphism extending p. Present exactly when the map is regular.
    pub fn stabilizer_skew(&self, map: &CayleyMap) -> Option<SkewMorphism> {
        let d0 = IDENTITY * self.valence;
        let phi = self.extend_automorphism(d0, self.r.apply(d0))?;
        let psi = self.vertex_projection(&phi)?;
        if map.rotation().iter().any(|&x| psi.apply(x) != map.p(x)) {
            return None;
        }
        let skew = check_skew(map.group(), &psi)?;
        debug_assert_eq!(skew.order(), map.valence());
        Some(skew)
    }

    /// One text line per vertex listing its R-orbit, for cross-tool use.
    pub fn rotation_system_text(&self, map: &CayleyMap) -> String {
        let group = map.group();
        let mut out = String::new();
        for g in 0..self.vertices {
            let darts: Vec<String> = map
                .rotation()
                .iter()
                .map(|&x| group.label(group.mul(g, x)).to_string())
                .collect();
            out.push_str(&format!("{}: {}\n", group.label(g), darts.join(" ")));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use std::sync::Arc;

    fn theorem_d4_map() -> CayleyMap {
        let d4 = Arc::new(FiniteGroup::dihedral(4).unwrap());
        let a = d4.elem_by_label("a").unwrap();
        let b = d4.elem_by_label("b").unwrap();
        let a3 = d4.elem_by_label("a^3").unwrap();
        CayleyMap::new(d4, vec![a, b, a3]).unwrap()
    }

    #[test]
    fn dart_counts_and_involution() {
        let m = theorem_d4_map();
        let sys = m.dart_system();
        assert_eq!(sys.dart_count(), 24);
        assert!(sys
            .reversing_involution()
            .compose(sys.reversing_involution())
            .is_identity());
        // R-orbits are the darts sharing a tail
        for d in 0..sys.dart_count() {
            assert_eq!(sys.tail(sys.rotation_perm().apply(d)), sys.tail(d));
        }
    }

    #[test]
    fn identity_extension() {
        let sys = theorem_d4_map().dart_system();
        let phi = sys.extend_automorphism(0, 0).unwrap();
        assert!(phi.is_identity());
    }

    #[test]
    fn left_multiplications_always_extend() {
        let m = theorem_d4_map();
        let sys = m.dart_system();
        let k = m.valence();
        let g = m.group().elem_by_label("a^2b").unwrap();
        // L_g sends the base dart (1, x_1) to (g, g x_1)
        let phi = sys.extend_automorphism(0, g * k).unwrap();
        // and acts on every dart as (h, hx) -> (gh, ghx)
        for d in 0..sys.dart_count() {
            assert_eq!(sys.tail(phi.apply(d)), m.group().mul(g, sys.tail(d)));
        }
    }

    #[test]
    fn theorem_d4_map_is_regular() {
        let m = theorem_d4_map();
        let sys = m.dart_system();
        assert_eq!(sys.automorphism_count(), 24);
        let skew = sys.stabilizer_skew(&m).expect("regular");
        assert_eq!(skew.order(), 3);
        assert_eq!(skew.kernel(m.group()).order(), 4);
    }

    #[test]
    fn non_regular_rotation_detected() {
        // all cyclic orders of X = {a, a^3, b, ab} on D_4; the two oracles
        // must agree everywhere and at least one order must be non-regular
        let d4 = Arc::new(FiniteGroup::dihedral(4).unwrap());
        let a = d4.elem_by_label("a").unwrap();
        let b = d4.elem_by_label("b").unwrap();
        let a3 = d4.elem_by_label("a^3").unwrap();
        let ab = d4.elem_by_label("ab").unwrap();
        let mut found_non_regular = false;
        let rest = [a3, b, ab];
        for perm in [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            let rot = vec![a, rest[perm[0]], rest[perm[1]], rest[perm[2]]];
            let m = CayleyMap::new(Arc::clone(&d4), rot).unwrap();
            let sys = m.dart_system();
            let regular_by_count = sys.automorphism_count() == sys.dart_count();
            let regular_by_skew = sys.stabilizer_skew(&m).is_some();
            assert_eq!(regular_by_count, regular_by_skew);
            if !regular_by_count {
                assert!(sys.automorphism_count() < sys.dart_count());
                assert!(sys.automorphism_count() >= m.group().order());
                found_non_regular = true;
            }
        }
        assert!(found_non_regular);
    }
}
