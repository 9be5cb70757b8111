//! Permutations of `{0, .., n-1}`, the carrier for skew-morphisms, group
//! automorphisms and dart actions alike.

use crate::error::{Error, Result};

/// A permutation stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Validates that `images` is a bijection on `{0, .., n-1}`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation(format!("image table {images:?}")));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Composition `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Perm { images: inv }
    }

    /// `self^k` for any integer exponent (negative means inverse powers).
    pub fn pow(&self, k: i64) -> Perm {
        let n = self.degree();
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut result = Perm::identity(n);
        for _ in 0..k.unsigned_abs() {
            result = base.compose(&result);
        }
        result
    }

    /// Cycle decomposition; singleton cycles included, ordered by least moved point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// The orbit of `x` as the ordered cycle `(x, p(x), p^2(x), ...)`.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut orbit = vec![x];
        let mut cur = self.images[x];
        while cur != x {
            orbit.push(cur);
            cur = self.images[cur];
        }
        orbit
    }

    /// Order in the symmetric group: lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles()
            .into_iter()
            .fold(1, |acc, c| lcm(acc, c.len()))
    }
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles() {
            if cycle.len() > 1 {
                write!(f, "(")?;
                for (i, v) in cycle.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")?;
                wrote = true;
            }
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
