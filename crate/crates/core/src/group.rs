//! Multiplication-table groups with a structured encoding for dihedral groups.
//!
//! Elements are indices into the table; index 0 is always the identity.
//! A dihedral group `D_n = <a, b | a^n = b^2 = baba = 1>` encodes the element
//! `a^j b^r` as the index `j + r*n`, so multiplication is O(1) and labels stay
//! readable.

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Index of an element inside a specific [`FiniteGroup`].
pub type Elem = usize;

/// The identity element of every table group.
pub const IDENTITY: Elem = 0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupTag {
    Dihedral(usize),
    Cyclic(usize),
    Product,
    SwapExtension(usize),
    Generic,
}

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    labels: Vec<String>,
    tag: GroupTag,
}

impl FiniteGroup {
    /// Builds a group from a raw multiplication table, checking every axiom.
    pub fn from_table(mul: Vec<Vec<Elem>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = mul.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in &mul {
            if row.len() != order {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            for &v in row {
                if v >= order {
                    return Err(Error::InvalidGroup(format!("entry {v} out of range")));
                }
                flat.push(v);
            }
        }
        let labels = match labels {
            Some(l) if l.len() == order => l,
            Some(_) => {
                return Err(Error::InvalidGroup("label count differs from order".into()));
            }
            None => (0..order).map(|i| format!("g{i}")).collect(),
        };
        let mut group = FiniteGroup {
            order,
            mul: flat,
            inv: vec![0; order],
            labels,
            tag: GroupTag::Generic,
        };
        group.fill_inverses()?;
        group.verify_axioms()?;
        Ok(group)
    }

    /// `D_n = <a, b | a^n = b^2 = baba = 1>` of order 2n.
    ///
    /// `(j, r)` denotes `a^j b^r`; the product rule is
    /// `(j, r)(k, s) = (j + (-1)^r k mod n, r xor s)`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DihedralParam(n));
        }
        let order = 2 * n;
        let mut mul = vec![0; order * order];
        for r in 0..2usize {
            for j in 0..n {
                let g = j + r * n;
                for s in 0..2usize {
                    for k in 0..n {
                        let h = k + s * n;
                        let jj = if r == 0 { (j + k) % n } else { (j + n - k % n) % n };
                        mul[g * order + h] = jj + ((r + s) % 2) * n;
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(order);
        for r in 0..2usize {
            for j in 0..n {
                labels.push(dihedral_label(j, r));
            }
        }
        let mut group = FiniteGroup {
            order,
            mul,
            inv: vec![0; order],
            labels,
            tag: GroupTag::Dihedral(n),
        };
        group.fill_inverses()?;
        debug_assert!(group.verify_axioms().is_ok());
        Ok(group)
    }

    /// Cyclic group of order n, generator `a` at index 1.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group needs n >= 1".into()));
        }
        let mut mul = vec![0; n * n];
        for j in 0..n {
            for k in 0..n {
                mul[j * n + k] = (j + k) % n;
            }
        }
        let labels = (0..n).map(|j| dihedral_label(j, 0)).collect();
        let mut group = FiniteGroup {
            order: n,
            mul,
            inv: vec![0; n],
            labels,
            tag: GroupTag::Cyclic(n),
        };
        group.fill_inverses()?;
        Ok(group)
    }

    /// Direct product with pair encoding `(g, h) -> g + |G| * h`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let order = a.order * b.order;
        let mut mul = vec![0; order * order];
        for g1 in 0..a.order {
            for h1 in 0..b.order {
                let e1 = g1 + a.order * h1;
                for g2 in 0..a.order {
                    for h2 in 0..b.order {
                        let e2 = g2 + a.order * h2;
                        mul[e1 * order + e2] = a.mul(g1, g2) + a.order * b.mul(h1, h2);
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(order);
        for h in 0..b.order {
            for g in 0..a.order {
                labels.push(format!("({},{})", a.labels[g], b.labels[h]));
            }
        }
        let mut group = FiniteGroup {
            order,
            mul,
            inv: vec![0; order],
            labels,
            tag: GroupTag::Product,
        };
        group.fill_inverses().expect("product of groups is a group");
        group
    }

    /// The order-8m^2 group obtained from `D_m x D_m` by adjoining the
    /// coordinate-swapping involution `sigma`; requires odd `m >= 3`.
    ///
    /// Elements are triples `(d1, d2, s)` with `d1, d2` in `D_m` and `s` the
    /// sigma-bit; the product is
    /// `(d1, d2; s)(e1, e2; t) = (d1*e', d2*e''; s xor t)` where the pair
    /// `(e', e'')` is `(e1, e2)` if `s = 0` and `(e2, e1)` otherwise.
    pub fn swap_extension(m: usize) -> Result<Self> {
        if m < 3 || m % 2 == 0 {
            return Err(Error::SwapExtensionParam(m));
        }
        let dm = FiniteGroup::dihedral(m)?;
        let k = dm.order; // 2m
        let order = 2 * k * k;
        let encode = |d1: Elem, d2: Elem, s: usize| d1 + k * d2 + k * k * s;
        let mut mul = vec![0; order * order];
        for s in 0..2usize {
            for d2 in 0..k {
                for d1 in 0..k {
                    let g = encode(d1, d2, s);
                    for t in 0..2usize {
                        for e2 in 0..k {
                            for e1 in 0..k {
                                let h = encode(e1, e2, t);
                                let (ep, epp) = if s == 0 { (e1, e2) } else { (e2, e1) };
                                mul[g * order + h] =
                                    encode(dm.mul(d1, ep), dm.mul(d2, epp), (s + t) % 2);
                            }
                        }
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(order);
        for s in 0..2usize {
            for d2 in 0..k {
                for d1 in 0..k {
                    let base = format!("({},{})", dm.labels[d1], dm.labels[d2]);
                    labels.push(if s == 0 { base } else { format!("{base}s") });
                }
            }
        }
        let mut group = FiniteGroup {
            order,
            mul,
            inv: vec![0; order],
            labels,
            tag: GroupTag::SwapExtension(m),
        };
        group.fill_inverses()?;
        Ok(group)
    }

    fn fill_inverses(&mut self) -> Result<()> {
        for g in 0..self.order {
            let mut found = None;
            for h in 0..self.order {
                if self.mul(g, h) == IDENTITY && self.mul(h, g) == IDENTITY {
                    found = Some(h);
                    break;
                }
            }
            match found {
                Some(h) => self.inv[g] = h,
                None => {
                    return Err(Error::InvalidGroup(format!(
                        "element {g} has no two-sided inverse"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Exhaustive check of the group axioms on the table.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        for g in 0..n {
            if self.mul(IDENTITY, g) != g || self.mul(g, IDENTITY) != g {
                return Err(Error::InvalidGroup(format!("index 0 is not an identity at {g}")));
            }
        }
        // each row and column must be a permutation
        for g in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for h in 0..n {
                row[self.mul(g, h)] = true;
                col[self.mul(h, g)] = true;
            }
            if row.iter().any(|&b| !b) || col.iter().any(|&b| !b) {
                return Err(Error::InvalidGroup(format!("row or column {g} not a permutation")));
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if self.mul(self.mul(g, h), k) != self.mul(g, self.mul(h, k)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({g}, {h}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn tag(&self) -> &GroupTag {
        &self.tag
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, g: Elem, h: Elem) -> Elem {
        self.mul[g * self.order + h]
    }

    #[inline]
    pub fn inv(&self, g: Elem) -> Elem {
        self.inv[g]
    }

    /// `h g h^{-1}`.
    #[inline]
    pub fn conj(&self, h: Elem, g: Elem) -> Elem {
        self.mul(self.mul(h, g), self.inv[h])
    }

    pub fn label(&self, g: Elem) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elem_order(&self, g: Elem) -> usize {
        let mut cur = g;
        let mut k = 1;
        while cur != IDENTITY {
            cur = self.mul(cur, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (0..g).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// The left multiplication `L_g : h -> gh` as a permutation of the element set.
    pub fn left_mul_perm(&self, g: Elem) -> Perm {
        Perm::new((0..self.order).map(|h| self.mul(g, h)).collect())
            .expect("rows of a group table are permutations")
    }

    /// `n` for a dihedral-tagged group.
    pub fn dihedral_n(&self) -> Option<usize> {
        match self.tag {
            GroupTag::Dihedral(n) => Some(n),
            _ => None,
        }
    }

    /// Index of `a^j b^r` in a dihedral group.
    pub fn dihedral_elem(&self, j: i64, r: usize) -> Result<Elem> {
        let n = self.dihedral_n().ok_or(Error::NotDihedral)? as i64;
        Ok(j.rem_euclid(n) as usize + (r % 2) * n as usize)
    }

    /// `(j, r)` with `g = a^j b^r` in a dihedral group.
    pub fn dihedral_parts(&self, g: Elem) -> Result<(usize, usize)> {
        let n = self.dihedral_n().ok_or(Error::NotDihedral)?;
        Ok((g % n, g / n))
    }

    /// Whether `g` is a reflection (element outside `C_n`) in a dihedral group.
    pub fn is_reflection(&self, g: Elem) -> Result<bool> {
        let n = self.dihedral_n().ok_or(Error::NotDihedral)?;
        Ok(g >= n)
    }

    /// Looks up the element carrying a given label.
    pub fn elem_by_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order={}, tag={:?})", self.order, self.tag)
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}
impl Eq for FiniteGroup {}

/// Renders `a^j b^r` in the generators `a`, `b`.
pub fn dihedral_label(j: usize, r: usize) -> String {
    match (j, r) {
        (0, 0) => "1".into(),
        (0, 1) => "b".into(),
        (1, 0) => "a".into(),
        (1, 1) => "ab".into(),
        (j, 0) => format!("a^{j}"),
        (j, _) => format!("a^{j}b"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relations_hold() {
        for n in 2..=8 {
            let g = FiniteGroup::dihedral(n).unwrap();
            g.verify_axioms().unwrap();
            let a = g.dihedral_elem(1, 0).unwrap();
            let b = g.dihedral_elem(0, 1).unwrap();
            // a^n = 1, b^2 = 1, (ba)^2 = 1
            let mut an = IDENTITY;
            for _ in 0..n {
                an = g.mul(an, a);
            }
            assert_eq!(an, IDENTITY);
            assert_eq!(g.mul(b, b), IDENTITY);
            let ba = g.mul(b, a);
            assert_eq!(g.mul(ba, ba), IDENTITY);
        }
    }

    #[test]
    fn dihedral_word_products() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let a = g.elem_by_label("a").unwrap();
        let b = g.elem_by_label("b").unwrap();
        assert_eq!(g.label(g.mul(a, b)), "ab");
        // baba = 1 forces ba = a^{-1} b
        assert_eq!(g.label(g.mul(b, a)), "a^3b");
    }

    #[test]
    fn dihedral_rejects_small_n() {
        assert!(FiniteGroup::dihedral(0).is_err());
        assert!(FiniteGroup::dihedral(1).is_err());
    }

    #[test]
    fn d8_center() {
        // a^4 is the unique central non-identity rotation of D_8 (order 16)
        let g = FiniteGroup::dihedral(8).unwrap();
        assert_eq!(g.order(), 16);
        let central: Vec<Elem> = g
            .elements()
            .filter(|&z| z != IDENTITY && g.elements().all(|h| g.mul(z, h) == g.mul(h, z)))
            .collect();
        assert_eq!(central, vec![g.dihedral_elem(4, 0).unwrap()]);
    }

    #[test]
    fn swap_extension_order_and_sigma_action() {
        let g = FiniteGroup::swap_extension(3).unwrap();
        assert_eq!(g.order(), 72);
        g.verify_axioms().unwrap();
        assert!(FiniteGroup::swap_extension(4).is_err());
        assert!(FiniteGroup::swap_extension(1).is_err());

        // sigma (c, 1) sigma = (1, c), where c is a rotation of D_3
        let k = 6;
        let sigma = k * k;
        let c_left = 1; // (c, 1, 0)
        let c_right = k; // (1, c, 0)
        assert_eq!(g.mul(g.mul(sigma, c_left), sigma), c_right);
    }

    #[test]
    fn from_table_validates() {
        // Z_2 x Z_2 by hand
        let t = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let g = FiniteGroup::from_table(t, None).unwrap();
        assert!(g.is_abelian());
        // broken associativity / identity
        let bad = vec![vec![1, 0], vec![0, 1]];
        assert!(FiniteGroup::from_table(bad, None).is_err());
    }

    #[test]
    fn elem_orders() {
        let g = FiniteGroup::dihedral(6).unwrap();
        assert_eq!(g.elem_order(IDENTITY), 1);
        assert_eq!(g.elem_order(g.elem_by_label("a").unwrap()), 6);
        assert_eq!(g.elem_order(g.elem_by_label("b").unwrap()), 2);
        assert_eq!(g.elem_order(g.dihedral_elem(2, 0).unwrap()), 3);
    }
}
