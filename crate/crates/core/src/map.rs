//! Cayley maps `CM(G, X, p)` and their analysis: regularity, the associated
//! skew-morphism, chi, kernels, skew-type, t-balance and equivalence.

use crate::aut;
use crate::dart::DartSystem;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, IDENTITY};
use crate::perm::Perm;
use crate::skew::SkewMorphism;
use crate::subgroup::Subgroup;
use std::sync::Arc;

/// A Cayley map: an inverse-closed generating set together with one cyclic
/// rotation, stored as the cycle sequence `(x_1, .., x_k)` with
/// `p(x_i) = x_{i+1 mod k}`.
#[derive(Clone)]
pub struct CayleyMap {
    group: Arc<FiniteGroup>,
    rotation: Vec<Elem>,
    /// position of each group element inside `rotation`, or `usize::MAX`
    pos: Vec<usize>,
}

const NOT_IN_X: usize = usize::MAX;

impl CayleyMap {
    pub fn new(group: Arc<FiniteGroup>, rotation: Vec<Elem>) -> Result<Self> {
        if rotation.is_empty() {
            return Err(Error::NotGenerating);
        }
        let mut pos = vec![NOT_IN_X; group.order()];
        for (i, &x) in rotation.iter().enumerate() {
            if x >= group.order() {
                return Err(Error::Invalid(format!("element {x} out of range")));
            }
            if x == IDENTITY {
                return Err(Error::IdentityInGeneratingSet);
            }
            if pos[x] != NOT_IN_X {
                return Err(Error::NotACycle);
            }
            pos[x] = i;
        }
        for &x in &rotation {
            if pos[group.inv(x)] == NOT_IN_X {
                return Err(Error::NotInverseClosed(group.label(x).to_string()));
            }
        }
        if Subgroup::generated(&group, &rotation).order() != group.order() {
            return Err(Error::NotGenerating);
        }
        Ok(CayleyMap {
            group,
            rotation,
            pos,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<FiniteGroup> {
        Arc::clone(&self.group)
    }

    /// The rotation cycle; its element set is X.
    pub fn rotation(&self) -> &[Elem] {
        &self.rotation
    }

    pub fn valence(&self) -> usize {
        self.rotation.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.pos[x] != NOT_IN_X
    }

    pub fn position(&self, x: Elem) -> Option<usize> {
        (self.pos[x] != NOT_IN_X).then(|| self.pos[x])
    }

    /// `p(x)` for x in X.
    pub fn p(&self, x: Elem) -> Elem {
        let i = self.pos[x];
        debug_assert_ne!(i, NOT_IN_X);
        self.rotation[(i + 1) % self.rotation.len()]
    }

    /// `p^c(x)`, c may be any integer.
    pub fn p_pow(&self, x: Elem, c: i64) -> Elem {
        let k = self.rotation.len() as i64;
        let i = self.pos[x] as i64;
        self.rotation[((i + c).rem_euclid(k)) as usize]
    }

    /// Smallest c >= 0 with `p^c(x) = x^{-1}` (exists since X is
    /// inverse-closed and p a full cycle).
    pub fn chi(&self, x: Elem) -> usize {
        let k = self.rotation.len();
        let inv = self.group.inv(x);
        (self.pos[inv] + k - self.pos[x]) % k
    }

    /// The same map with the reversed rotation.
    pub fn mirror(&self) -> CayleyMap {
        let mut rotation = self.rotation.clone();
        rotation[1..].reverse();
        CayleyMap::new(Arc::clone(&self.group), rotation).expect("mirror of a valid map")
    }

    /// Rotation cycle rotated so its least element comes first; equal cycles
    /// give equal canonical forms.
    pub fn canonical_rotation(&self) -> Vec<Elem> {
        let k = self.rotation.len();
        let start = (0..k).min_by_key(|&i| self.rotation[i]).unwrap();
        (0..k).map(|i| self.rotation[(start + i) % k]).collect()
    }

    pub fn dart_system(&self) -> DartSystem {
        DartSystem::build(self)
    }

    /// The associated skew-morphism when the map is regular, via the dart
    /// stabilizer extension, revalidated by `check_skew`.
    pub fn associated_skew(&self) -> Option<SkewMorphism> {
        self.dart_system().stabilizer_skew(self)
    }

    pub fn is_regular(&self) -> bool {
        self.associated_skew().is_some()
    }

    /// Least t in `{1..k}` with `p(x)^{-1} = p^t(x^{-1})` for all x, if any.
    pub fn t_balance(&self) -> Option<usize> {
        let k = self.rotation.len();
        (1..=k).find(|&t| {
            self.rotation.iter().all(|&x| {
                self.group.inv(self.p(x)) == self.p_pow(self.group.inv(x), t as i64)
            })
        })
    }

    /// The power function restricted to X from the chi formula
    /// `pi(x) = chi(p(x)) - chi(x) + 1 (mod k)`, values in `{1..k}`.
    pub fn power_on_x(&self) -> Result<Vec<usize>> {
        if !self.is_regular() {
            return Err(Error::NotRegular);
        }
        let k = self.rotation.len();
        Ok(self
            .rotation
            .iter()
            .map(|&x| {
                let v = (self.chi(self.p(x)) + k + 1 - self.chi(x)) % k;
                if v == 0 {
                    k
                } else {
                    v
                }
            })
            .collect())
    }

    /// Full analysis record; non-regular maps still get dart-level facts.
    pub fn analyze(&self) -> MapAnalysis {
        let darts = self.dart_system();
        let aut_count = darts.automorphism_count();
        let skew = darts.stabilizer_skew(self);
        let regular = skew.is_some();
        let chi: Vec<usize> = self.rotation.iter().map(|&x| self.chi(x)).collect();
        let kernel = skew.as_ref().map(|s| s.kernel(&self.group));
        let skew_type = kernel
            .as_ref()
            .map(|ker| self.group.order() / ker.order());
        MapAnalysis {
            regular,
            skew,
            chi,
            kernel,
            skew_type,
            balance: self.t_balance(),
            aut_count,
        }
    }

    /// An equivalence witness: a group isomorphism phi with phi(X1) = X2 and
    /// `phi p1 = p2 phi`, or `None`.
    pub fn equivalent(&self, other: &CayleyMap, bound: usize) -> Result<Option<Perm>> {
        if self.valence() != other.valence() {
            return Ok(None);
        }
        for phi in isomorphisms_between(&self.group, &other.group, bound)? {
            if self.equivalence_witnessed_by(other, &phi) {
                return Ok(Some(phi));
            }
        }
        Ok(None)
    }

    pub fn equivalence_witnessed_by(&self, other: &CayleyMap, phi: &Perm) -> bool {
        self.rotation.iter().all(|&x| {
            let y = phi.apply(x);
            other.contains(y) && phi.apply(self.p(x)) == other.p(y)
        })
    }

    /// Equivalence to `other` or to its mirror; the small-map catalogs count
    /// maps up to this weaker relation.
    pub fn equivalent_up_to_reflection(
        &self,
        other: &CayleyMap,
        bound: usize,
    ) -> Result<bool> {
        Ok(self.equivalent(other, bound)?.is_some()
            || self.equivalent(&other.mirror(), bound)?.is_some())
    }

    /// Checks `kr(pi) = {g : psi L_g psi^{-1} in L(G)}` under the left-regular
    /// identification, with both sides computed independently.
    pub fn kernel_conjugation_check(&self) -> Result<bool> {
        let skew = self.associated_skew().ok_or(Error::NotRegular)?;
        let psi = skew.psi();
        let psi_inv = psi.inverse();
        let left: std::collections::BTreeSet<Perm> = self
            .group
            .elements()
            .map(|g| self.group.left_mul_perm(g))
            .collect();
        let conj_side: Vec<Elem> = self
            .group
            .elements()
            .filter(|&g| {
                let c = psi.compose(&self.group.left_mul_perm(g)).compose(&psi_inv);
                left.contains(&c)
            })
            .collect();
        Ok(conj_side == skew.kernel(&self.group).members())
    }

    /// The underlying Cayley graph `Cay(G, X)`.
    pub fn underlying_graph(&self) -> crate::graph::Graph {
        let mut edges = Vec::new();
        for g in self.group.elements() {
            for &x in &self.rotation {
                let h = self.group.mul(g, x);
                if g < h {
                    edges.push((g, h));
                }
            }
        }
        crate::graph::Graph::from_edges(self.group.order(), &edges)
    }
}

impl std::fmt::Debug for CayleyMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let words: Vec<&str> = self.rotation.iter().map(|&x| self.group.label(x)).collect();
        write!(f, "CM({:?}, p=({}))", self.group, words.join(","))
    }
}

/// Full analysis of one Cayley map.
#[derive(Clone, Debug)]
pub struct MapAnalysis {
    pub regular: bool,
    pub skew: Option<SkewMorphism>,
    /// chi per rotation entry.
    pub chi: Vec<usize>,
    pub kernel: Option<Subgroup>,
    pub skew_type: Option<usize>,
    pub balance: Option<usize>,
    /// |Aut(M)| by dart extension count.
    pub aut_count: usize,
}

/// All isomorphisms between two small groups (automorphisms when equal).
pub fn isomorphisms_between(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    bound: usize,
) -> Result<Vec<Perm>> {
    if g1 == g2 {
        return aut::automorphisms(g1, bound);
    }
    let Some(iso) = aut::isomorphism(g1, g2, bound)? else {
        return Ok(Vec::new());
    };
    Ok(aut::automorphisms(g1, bound)?
        .into_iter()
        .map(|alpha| iso.compose(&alpha))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::dihedral(n).unwrap())
    }

    fn elems(g: &FiniteGroup, words: &[&str]) -> Vec<Elem> {
        words
            .iter()
            .map(|w| g.elem_by_label(w).expect("label"))
            .collect()
    }

    #[test]
    fn validates_construction() {
        let d4 = d(4);
        let rot = elems(&d4, &["a", "b", "a^3"]);
        let m = CayleyMap::new(Arc::clone(&d4), rot).unwrap();
        assert_eq!(m.valence(), 3);

        // {a} alone: not inverse-closed (and not generating)
        let bad = CayleyMap::new(Arc::clone(&d4), elems(&d4, &["a"]));
        assert!(matches!(bad, Err(Error::NotInverseClosed(_))));

        let bad = CayleyMap::new(Arc::clone(&d4), elems(&d4, &["1", "a", "a^3"]));
        assert!(matches!(bad, Err(Error::IdentityInGeneratingSet)));

        // involutions only, not generating D_4
        let bad = CayleyMap::new(Arc::clone(&d4), elems(&d4, &["a^2"]));
        assert!(matches!(bad, Err(Error::NotGenerating)));

        // repeated entry
        let bad = CayleyMap::new(Arc::clone(&d4), elems(&d4, &["a", "b", "a^3", "a"]));
        assert!(matches!(bad, Err(Error::NotACycle)));
    }

    #[test]
    fn d6_four_valent_map_is_valid() {
        let d6 = d(6);
        let rot = elems(&d6, &["a", "a^5", "ab", "a^5b"]);
        let m = CayleyMap::new(d6, rot).unwrap();
        assert_eq!(m.valence(), 4);
    }

    #[test]
    fn chi_basics() {
        let d4 = d(4);
        let m = CayleyMap::new(Arc::clone(&d4), elems(&d4, &["a", "b", "a^3"])).unwrap();
        let a = d4.elem_by_label("a").unwrap();
        let b = d4.elem_by_label("b").unwrap();
        // involutions have chi = 0
        assert_eq!(m.chi(b), 0);
        // p(a) = b, p^2(a) = a^{-1}
        assert_eq!(m.chi(a), 2);
    }

    #[test]
    fn canonical_rotation_and_mirror() {
        let d4 = d(4);
        let m = CayleyMap::new(Arc::clone(&d4), elems(&d4, &["b", "a", "a^3"])).unwrap();
        let canon = m.canonical_rotation();
        assert_eq!(canon[0], 1); // element a has the least index among X
        let mm = m.mirror();
        let x = d4.elem_by_label("a").unwrap();
        assert_eq!(mm.p(m.p(x)), x);
    }
}
