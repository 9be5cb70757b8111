//! Skew-morphisms: recognition, power functions, kernels, and exhaustive
//! enumeration for small groups.
//!
//! A permutation psi of a group G (fixing the identity) is a skew-morphism
//! with power function pi when `psi(g h) = psi(g) psi^{pi(g)}(h)` for all
//! g, h. Power values live in `{1..r}` with r the order of psi, so the
//! kernel test is literally `pi(g) == 1`.

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, IDENTITY};
use crate::perm::Perm;
use crate::subgroup::Subgroup;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Default capacity bound for exhaustive enumeration.
pub const DEFAULT_ENUM_BOUND: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SkewMorphism {
    psi: Perm,
    /// Order of psi in the symmetric group.
    order: usize,
    /// `pi[g]` in `{1..order}`; `pi[identity] == 1`.
    pi: Vec<usize>,
}

impl SkewMorphism {
    pub fn psi(&self) -> &Perm {
        &self.psi
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn pi(&self, g: Elem) -> usize {
        self.pi[g]
    }

    pub fn pi_table(&self) -> &[usize] {
        &self.pi
    }

    /// `{g : pi(g) = 1}`, verified closed.
    pub fn kernel(&self, group: &FiniteGroup) -> Subgroup {
        let members: Vec<Elem> = group.elements().filter(|&g| self.pi[g] == 1).collect();
        Subgroup::from_members(group, members)
            .expect("kernel of a power function is a subgroup")
    }

    /// The congruence `pi(gh) = sum_{i=0}^{pi(g)-1} pi(psi^i(h)) (mod r)`.
    pub fn power_sum_check(&self, group: &FiniteGroup, g: Elem, h: Elem) -> bool {
        let r = self.order;
        let mut sum = 0usize;
        let mut cur = h;
        for _ in 0..self.pi[g] {
            sum += self.pi[cur];
            cur = self.psi.apply(cur);
        }
        sum % r == self.pi[group.mul(g, h)] % r
    }

    /// The cycle `(x, psi(x), psi^2(x), ...)`.
    pub fn orbit_of(&self, x: Elem) -> Vec<Elem> {
        self.psi.orbit(x)
    }

    /// Whether the power function is identically 1, i.e. psi is a group
    /// automorphism.
    pub fn is_automorphism(&self) -> bool {
        self.pi.iter().all(|&v| v == 1)
    }

    pub fn to_json(&self) -> SkewMorphismJson {
        SkewMorphismJson {
            psi: self.psi.images().to_vec(),
            order: self.order,
            pi: self.pi.clone(),
        }
    }
}

/// Wire format: `{"psi":[...],"order":r,"pi":[...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SkewMorphismJson {
    pub psi: Vec<usize>,
    pub order: usize,
    pub pi: Vec<usize>,
}

/// Decides whether `psi` is a skew-morphism of `group`; returns it with its
/// power function if so.
pub fn check_skew(group: &FiniteGroup, psi: &Perm) -> Option<SkewMorphism> {
    let n = group.order();
    assert_eq!(psi.degree(), n, "permutation degree must match group order");
    if psi.apply(IDENTITY) != IDENTITY {
        return None;
    }
    let r = psi.order();
    // power table: powers[k][h] = psi^k(h), k = 0..=r
    let mut powers: Vec<Vec<Elem>> = Vec::with_capacity(r + 1);
    powers.push((0..n).collect());
    for k in 1..=r {
        let prev = &powers[k - 1];
        powers.push((0..n).map(|h| psi.apply(prev[h])).collect());
    }
    let mut pi = vec![0usize; n];
    for g in 0..n {
        let pg = psi.apply(g);
        let mut valid = (1..=r).filter(|&k| {
            (0..n).all(|h| psi.apply(group.mul(g, h)) == group.mul(pg, powers[k][h]))
        });
        match valid.next() {
            None => return None,
            Some(k) => {
                // the exponent is unique modulo r
                debug_assert!(valid.next().is_none(), "pi({g}) ambiguous");
                pi[g] = k;
            }
        }
    }
    debug_assert_eq!(pi[IDENTITY], 1);
    Some(SkewMorphism {
        psi: psi.clone(),
        order: r,
        pi,
    })
}

const UNSET: usize = usize::MAX;

struct SearchState {
    img: Vec<usize>,
    used: Vec<bool>,
}

impl SearchState {
    fn assign(&mut self, x: usize, v: usize) -> bool {
        if self.img[x] != UNSET {
            return self.img[x] == v;
        }
        if self.used[v] || (x == IDENTITY) != (v == IDENTITY) {
            return false;
        }
        self.img[x] = v;
        self.used[v] = true;
        true
    }

    /// Closes the partial assignment under the commutation consequence of the
    /// defining identity: phi_g = psi(g)^{-1} psi(g .) must commute with psi,
    /// i.e. `psi(g psi(h)) = psi(g) psi(psi(g)^{-1} psi(gh))`.
    fn propagate(&mut self, group: &FiniteGroup) -> bool {
        let n = group.order();
        loop {
            let mut changed = false;
            for g in 0..n {
                let ig = self.img[g];
                if ig == UNSET {
                    continue;
                }
                let ig_inv = group.inv(ig);
                for h in 0..n {
                    let ih = self.img[h];
                    if ih == UNSET {
                        continue;
                    }
                    let igh = self.img[group.mul(g, h)];
                    if igh == UNSET {
                        continue;
                    }
                    let u = group.mul(g, ih);
                    let v = group.mul(ig_inv, igh);
                    match (self.img[u], self.img[v]) {
                        (UNSET, UNSET) => {}
                        (iu, UNSET) => {
                            if !self.assign(v, group.mul(ig_inv, iu)) {
                                return false;
                            }
                            changed = true;
                        }
                        (UNSET, iv) => {
                            if !self.assign(u, group.mul(ig, iv)) {
                                return false;
                            }
                            changed = true;
                        }
                        (iu, iv) => {
                            if iu != group.mul(ig, iv) {
                                return false;
                            }
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// For each assigned g, some exponent k with `psi(gh) = psi(g) psi^k(h)`
    /// must survive. Closed psi-cycles pin k modulo the cycle length; an empty
    /// residue intersection kills the branch.
    fn exponents_feasible(&self, group: &FiniteGroup) -> bool {
        let n = group.order();
        // closed cycles of the partial permutation
        let mut cycle_id = vec![usize::MAX; n];
        let mut cycle_pos = vec![0usize; n];
        let mut cycle_len = Vec::new();
        for start in 0..n {
            if cycle_id[start] != usize::MAX || self.img[start] == UNSET {
                continue;
            }
            let mut chain = vec![start];
            let mut cur = self.img[start];
            let mut closed = false;
            while cur != start {
                if self.img[cur] == UNSET || chain.contains(&cur) {
                    break;
                }
                chain.push(cur);
                cur = self.img[cur];
            }
            if cur == start {
                closed = true;
            }
            if closed {
                let id = cycle_len.len();
                for (pos, &x) in chain.iter().enumerate() {
                    cycle_id[x] = id;
                    cycle_pos[x] = pos;
                }
                cycle_len.push(chain.len());
            }
        }
        if cycle_len.is_empty() {
            return true;
        }
        for g in 0..n {
            let ig = self.img[g];
            if ig == UNSET {
                continue;
            }
            let ig_inv = group.inv(ig);
            // residues k mod L forced by entries of phi_g on closed cycles
            let mut constraints: Vec<(usize, usize)> = Vec::new(); // (len, residue)
            for h in 0..n {
                let igh = self.img[group.mul(g, h)];
                if igh == UNSET || cycle_id[h] == usize::MAX {
                    continue;
                }
                let v = group.mul(ig_inv, igh); // phi_g(h)
                if cycle_id[v] != cycle_id[h] {
                    // h's cycle is closed, hence final: phi_g, a power of psi,
                    // must keep h inside it
                    return false;
                }
                let len = cycle_len[cycle_id[h]];
                let shift = (cycle_pos[v] + len - cycle_pos[h]) % len;
                constraints.push((len, shift));
            }
            if !residues_compatible(&constraints) {
                return false;
            }
        }
        true
    }
}

/// Is there one k satisfying `k = shift (mod len)` for every constraint?
fn residues_compatible(constraints: &[(usize, usize)]) -> bool {
    // pairwise CRT compatibility is sufficient and cheap at this scale
    for (i, &(l1, s1)) in constraints.iter().enumerate() {
        for &(l2, s2) in &constraints[i + 1..] {
            let g = crate::perm::gcd(l1, l2);
            if s1 % g != s2 % g {
                return false;
            }
        }
    }
    true
}

fn assignment_order(group: &FiniteGroup) -> Vec<Elem> {
    // identity first, then the generators a and b for dihedral groups, then
    // index order
    let mut order = vec![IDENTITY];
    if let Some(n) = group.dihedral_n() {
        order.push(1); // a
        order.push(n); // b
    }
    for g in group.elements() {
        if !order.contains(&g) {
            order.push(g);
        }
    }
    order
}

fn dfs(
    group: &FiniteGroup,
    order: &[Elem],
    state: &SearchState,
    out: &mut Vec<SkewMorphism>,
) {
    let next = order.iter().copied().find(|&x| state.img[x] == UNSET);
    let Some(x) = next else {
        let psi = Perm::new(state.img.clone()).expect("complete assignment is a bijection");
        if let Some(s) = check_skew(group, &psi) {
            out.push(s);
        }
        return;
    };
    for v in group.elements() {
        if state.used[v] || v == IDENTITY {
            continue;
        }
        let mut branch = SearchState {
            img: state.img.clone(),
            used: state.used.clone(),
        };
        if !branch.assign(x, v) {
            continue;
        }
        if !branch.propagate(group) || !branch.exponents_feasible(group) {
            continue;
        }
        dfs(group, order, &branch, out);
    }
}

/// All skew-morphisms of `group`, in a deterministic order, by pruned
/// backtracking. The first image choice is partitioned across rayon workers.
pub fn enumerate_skew_morphisms(group: &FiniteGroup) -> Result<Vec<SkewMorphism>> {
    enumerate_skew_morphisms_bounded(group, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_skew_morphisms_bounded(
    group: &FiniteGroup,
    bound: usize,
) -> Result<Vec<SkewMorphism>> {
    let n = group.order();
    if n > bound {
        return Err(Error::Capacity { order: n, bound });
    }
    let order = assignment_order(group);
    let mut root = SearchState {
        img: vec![UNSET; n],
        used: vec![false; n],
    };
    assert!(root.assign(IDENTITY, IDENTITY));
    let first = order[1];
    let mut results: Vec<SkewMorphism> = (1..n)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut branch = SearchState {
                img: root.img.clone(),
                used: root.used.clone(),
            };
            let mut out = Vec::new();
            if branch.assign(first, v)
                && branch.propagate(group)
                && branch.exponents_feasible(group)
            {
                dfs(group, &order, &branch, &mut out);
            }
            out
        })
        .collect();
    results.sort();
    Ok(results)
}

/// Independent oracle: filter every permutation fixing the identity. Only
/// sensible for very small groups (|G| <= 8 keeps this under a minute).
pub fn enumerate_skew_morphisms_naive(group: &FiniteGroup) -> Result<Vec<SkewMorphism>> {
    let n = group.order();
    if n > 9 {
        return Err(Error::Capacity { order: n, bound: 9 });
    }
    let mut rest: Vec<usize> = (1..n).collect();
    let mut out = Vec::new();
    permute(&mut rest, 0, &mut |tail| {
        let mut images = Vec::with_capacity(n);
        images.push(IDENTITY);
        images.extend_from_slice(tail);
        let psi = Perm::new(images).expect("bijection by construction");
        if let Some(s) = check_skew(group, &psi) {
            out.push(s);
        }
    });
    out.sort();
    Ok(out)
}

fn permute(vals: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == vals.len() {
        f(vals);
        return;
    }
    for i in k..vals.len() {
        vals.swap(k, i);
        permute(vals, k + 1, f);
        vals.swap(k, i);
    }
}
