//! Subgroups, cosets, normality and cores, all by direct table computation.

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, IDENTITY};

/// A subgroup given by its sorted member set. Operations take the parent
/// group explicitly; constructors guarantee closure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<Elem>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The coset decomposition of a group by one of its subgroups.
#[derive(Clone, Debug)]
pub struct CosetPartition {
    pub side: Side,
    /// `blocks[i]` is sorted; block 0 contains the identity.
    pub blocks: Vec<Vec<Elem>>,
    /// `block_of[g]` is the index of the block containing `g`.
    pub block_of: Vec<usize>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup {
            members: vec![IDENTITY],
        }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup {
            members: group.elements().collect(),
        }
    }

    /// Wraps a member set after checking it really is a subgroup.
    pub fn from_members(group: &FiniteGroup, mut members: Vec<Elem>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let sub = Subgroup { members };
        if !sub.contains(IDENTITY) {
            return Err(Error::Invalid("subgroup must contain the identity".into()));
        }
        for &g in &sub.members {
            if g >= group.order() {
                return Err(Error::Invalid(format!("element {g} out of range")));
            }
            if !sub.contains(group.inv(g)) {
                return Err(Error::Invalid("set not closed under inverse".into()));
            }
            for &h in &sub.members {
                if !sub.contains(group.mul(g, h)) {
                    return Err(Error::Invalid("set not closed under product".into()));
                }
            }
        }
        Ok(sub)
    }

    /// Smallest subgroup containing `gens`: closure by repeated multiplication.
    pub fn generated(group: &FiniteGroup, gens: &[Elem]) -> Self {
        let mut in_set = vec![false; group.order()];
        in_set[IDENTITY] = true;
        let mut frontier: Vec<Elem> = vec![IDENTITY];
        for &g in gens {
            if !in_set[g] {
                in_set[g] = true;
                frontier.push(g);
            }
        }
        let mut members = frontier.clone();
        while let Some(g) = frontier.pop() {
            for &h in gens {
                for prod in [group.mul(g, h), group.mul(h, g)] {
                    if !in_set[prod] {
                        in_set[prod] = true;
                        frontier.push(prod);
                        members.push(prod);
                    }
                }
            }
        }
        members.sort_unstable();
        Subgroup { members }
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn index_in(&self, group: &FiniteGroup) -> usize {
        group.order() / self.order()
    }

    pub fn is_normal(&self, group: &FiniteGroup) -> bool {
        group
            .elements()
            .all(|g| self.members.iter().all(|&h| self.contains(group.conj(g, h))))
    }

    /// Largest normal subgroup of `group` contained in `self`: the
    /// intersection of all conjugates.
    pub fn core(&self, group: &FiniteGroup) -> Subgroup {
        let mut in_core = vec![false; group.order()];
        for &h in &self.members {
            in_core[h] = true;
        }
        for g in group.elements() {
            let mut keep = vec![false; group.order()];
            for &h in &self.members {
                keep[group.conj(g, h)] = true;
            }
            for v in 0..group.order() {
                in_core[v] &= keep[v];
            }
        }
        let members = (0..group.order()).filter(|&v| in_core[v]).collect();
        Subgroup { members }
    }

    pub fn cosets(&self, group: &FiniteGroup, side: Side) -> CosetPartition {
        let mut block_of = vec![usize::MAX; group.order()];
        let mut blocks = Vec::new();
        for g in group.elements() {
            if block_of[g] != usize::MAX {
                continue;
            }
            let idx = blocks.len();
            let mut block: Vec<Elem> = self
                .members
                .iter()
                .map(|&h| match side {
                    Side::Left => group.mul(g, h),
                    Side::Right => group.mul(h, g),
                })
                .collect();
            block.sort_unstable();
            for &v in &block {
                block_of[v] = idx;
            }
            blocks.push(block);
        }
        CosetPartition {
            side,
            blocks,
            block_of,
        }
    }

    /// Intersection of two subgroups of the same parent.
    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&g| other.contains(g))
            .collect();
        Subgroup { members }
    }
}

/// The rotation subgroup `C_n = <a>` of a dihedral group, together with a
/// flag telling whether it is the *unique* cyclic subgroup of order n
/// (true exactly when n > 2).
pub fn cyclic_part(group: &FiniteGroup) -> Result<(Subgroup, bool)> {
    let n = group.dihedral_n().ok_or(Error::NotDihedral)?;
    let sub = Subgroup {
        members: (0..n).collect(),
    };
    Ok((sub, n > 2))
}

/// All subgroups of a small group, by closure over generator subsets.
pub fn all_subgroups(group: &FiniteGroup, bound: usize) -> Result<Vec<Subgroup>> {
    if group.order() > bound {
        return Err(Error::Capacity {
            order: group.order(),
            bound,
        });
    }
    let mut found: std::collections::BTreeSet<Vec<Elem>> = std::collections::BTreeSet::new();
    found.insert(vec![IDENTITY]);
    let mut frontier: Vec<Subgroup> = vec![Subgroup::trivial()];
    while let Some(sub) = frontier.pop() {
        for g in group.elements() {
            if sub.contains(g) {
                continue;
            }
            let mut gens: Vec<Elem> = sub.members.clone();
            gens.push(g);
            let bigger = Subgroup::generated(group, &gens);
            if found.insert(bigger.members.clone()) {
                frontier.push(bigger);
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|members| Subgroup { members })
        .collect())
}
