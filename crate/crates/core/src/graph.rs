//! Small simple graphs and the handful of structural recognizers the
//! verification reports need (octahedron, complete bipartite, cube).

use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    pub adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Graph { n, adj }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_regular_of_degree(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// K_{2,2,2}, the octahedron: 6 vertices, 4-regular, and the complement
    /// is a perfect matching.
    pub fn is_octahedron(&self) -> bool {
        if self.n != 6 || !self.is_regular_of_degree(4) {
            return false;
        }
        (0..6).all(|v| {
            let non: Vec<usize> = (0..6).filter(|&w| w != v && !self.adj[v].contains(&w)).collect();
            non.len() == 1 && !self.adj[non[0]].contains(&v)
        })
    }

    /// Complete bipartite K_{m,m}.
    pub fn is_complete_bipartite(&self, m: usize) -> bool {
        if self.n != 2 * m || !self.is_regular_of_degree(m) {
            return false;
        }
        // part of vertex 0 = non-neighbors of 0 (plus 0 itself)
        let part_a: BTreeSet<usize> =
            (0..self.n).filter(|&v| v == 0 || !self.adj[0].contains(&v)).collect();
        if part_a.len() != m {
            return false;
        }
        (0..self.n).all(|u| {
            (0..u).all(|v| self.adj[u].contains(&v) == (part_a.contains(&u) != part_a.contains(&v)))
        })
    }

    /// The cube graph Q_3.
    pub fn is_cube(&self) -> bool {
        if self.n != 8 || !self.is_regular_of_degree(3) {
            return false;
        }
        let cube_edges: Vec<(usize, usize)> = (0..8usize)
            .flat_map(|u| (0..u).map(move |v| (v, u)))
            .filter(|&(u, v)| (u ^ v).count_ones() == 1)
            .collect();
        self.isomorphic(&Graph::from_edges(8, &cube_edges))
    }

    /// K_4.
    pub fn is_complete(&self) -> bool {
        self.is_regular_of_degree(self.n.saturating_sub(1))
    }

    /// Backtracking isomorphism test; intended for graphs with at most a few
    /// dozen vertices.
    pub fn isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut d1: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut d2: Vec<usize> = (0..other.n).map(|v| other.degree(v)).collect();
        d1.sort_unstable();
        d2.sort_unstable();
        if d1 != d2 {
            return false;
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.iso_search(other, 0, &mut map, &mut used)
    }

    fn iso_search(
        &self,
        other: &Graph,
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if v == self.n {
            return true;
        }
        for w in 0..self.n {
            if used[w] || self.degree(v) != other.degree(w) {
                continue;
            }
            let ok = (0..v).all(|u| self.adj[v].contains(&u) == other.adj[w].contains(&map[u]));
            if !ok {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.iso_search(other, v + 1, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> Graph {
        // complement of the matching {0-1, 2-3, 4-5}
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in 0..u {
                if !(u / 2 == v / 2) {
                    edges.push((v, u));
                }
            }
        }
        Graph::from_edges(6, &edges)
    }

    #[test]
    fn recognizers() {
        assert!(octahedron().is_octahedron());
        assert!(!octahedron().is_complete_bipartite(3));

        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        );
        assert!(k33.is_complete_bipartite(3));
        assert!(!k33.is_octahedron());

        let cube_edges: Vec<(usize, usize)> = (0..8usize)
            .flat_map(|u| (0..u).map(move |v| (v, u)))
            .filter(|&(u, v)| (u ^ v).count_ones() == 1)
            .collect();
        // relabel to exercise the iso search
        let relabeled: Vec<(usize, usize)> =
            cube_edges.iter().map(|&(u, v)| ((u + 3) % 8, (v + 3) % 8)).collect();
        assert!(Graph::from_edges(8, &relabeled).is_cube());
    }

    #[test]
    fn iso_rejects_different_graphs() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!path.isomorphic(&star));
        assert!(path.isomorphic(&Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)])));
    }
}
