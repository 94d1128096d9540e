//! Undirected simple graphs over dense vertex ids, plus the named families
//! and random sparse instances the solvers are exercised on.

use crate::bitset::VertexSet;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Dense vertex index, valid in `0..order` of the owning graph.
pub type VertexId = usize;

/// An undirected simple graph with per-vertex bitset adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts the edge `{u, v}`; no-op if already present. Loops are rejected.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "loops are not allowed");
        if self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        true
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.adj[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n
    }

    /// Edges as canonical pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::new(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Vertex sets of the connected components, each ascending; components
    /// ordered by their lowest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by `keep` (ascending), re-indexed densely.
    /// Returns the graph together with the original id of each new vertex.
    pub fn induced(&self, keep: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for w in self.adj[v].iter() {
                if w > v && pos[w] != usize::MAX {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        (g, keep.to_vec())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges().collect::<Vec<_>>())
    }
}

/// Named graph families with canonical vertex numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    /// `F_k`: k triangles sharing vertex 0; rim pairs `(2i+1, 2i+2)`.
    Fan(usize),
    /// `K_{1,n-1}` on `n` vertices with center 0.
    Star(usize),
    /// Path `0-1-…-(n-1)`.
    Path(usize),
    /// Cycle `0-1-…-(n-1)-0`.
    Cycle(usize),
    Complete(usize),
    /// `kK_2`: edges `(2i, 2i+1)`.
    Matching(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("family parameter must be at least 1")]
    ZeroParameter,
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("{0}")]
    Infeasible(String),
}

/// Builds a named family member. See [`GraphFamily`] for the numbering.
pub fn build_named(family: GraphFamily) -> Result<Graph, BuildError> {
    use GraphFamily::*;
    let param = match family {
        Fan(k) | Star(k) | Path(k) | Cycle(k) | Complete(k) | Matching(k) => k,
    };
    if param == 0 {
        return Err(BuildError::ZeroParameter);
    }
    Ok(match family {
        Fan(k) => {
            let mut g = Graph::new(2 * k + 1);
            for i in 0..k {
                let (a, b) = (2 * i + 1, 2 * i + 2);
                g.add_edge(0, a);
                g.add_edge(0, b);
                g.add_edge(a, b);
            }
            g
        }
        Star(n) => {
            let mut g = Graph::new(n);
            for v in 1..n {
                g.add_edge(0, v);
            }
            g
        }
        Path(n) => {
            let mut g = Graph::new(n);
            for v in 1..n {
                g.add_edge(v - 1, v);
            }
            g
        }
        Cycle(n) => {
            if n < 3 {
                return Err(BuildError::CycleTooSmall(n));
            }
            let mut g = Graph::new(n);
            for v in 1..n {
                g.add_edge(v - 1, v);
            }
            g.add_edge(n - 1, 0);
            g
        }
        Complete(n) => {
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
            g
        }
        Matching(k) => {
            let mut g = Graph::new(2 * k);
            for i in 0..k {
                g.add_edge(2 * i, 2 * i + 1);
            }
            g
        }
    })
}

/// A connected graph on `n` vertices with exactly `n + extra` edges,
/// deterministic for a fixed seed. `extra = -1` yields a random tree.
pub fn random_sparse_connected(n: usize, extra: i64, seed: u64) -> Result<Graph, BuildError> {
    if n == 0 {
        return Err(BuildError::ZeroParameter);
    }
    let max_edges = (n * (n - 1) / 2) as i64;
    let target = n as i64 + extra;
    if extra < -1 || target < n as i64 - 1 || target > max_edges {
        return Err(BuildError::Infeasible(format!(
            "cannot build a connected graph on {n} vertices with {target} edges"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for v in 1..n {
        let parent = rng.random_range(0..v);
        g.add_edge(parent, v);
    }
    while (g.size() as i64) < target {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan_shape() {
        let g = build_named(GraphFamily::Fan(2)).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 6);
        assert_eq!(g.degree(0), 4);
        assert!(g.has_edge(1, 2));
        assert!(g.has_edge(3, 4));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn fan_one_is_a_triangle() {
        let g = build_named(GraphFamily::Fan(1)).unwrap();
        let k3 = build_named(GraphFamily::Complete(3)).unwrap();
        assert_eq!(g, k3);
    }

    #[test]
    fn star_shape() {
        let g = build_named(GraphFamily::Star(4)).unwrap();
        assert_eq!((g.order(), g.size()), (4, 3));
        assert_eq!(g.degree(0), 3);
    }

    #[test]
    fn fan_has_one_vertex_of_degree_2k() {
        for k in 1..8 {
            let g = build_named(GraphFamily::Fan(k)).unwrap();
            assert_eq!(g.order(), 2 * k + 1);
            assert_eq!(g.size(), 3 * k);
            let hubs = g.vertices().filter(|&v| g.degree(v) == 2 * k).count();
            if k == 1 {
                // K_3: every vertex has degree 2.
                assert_eq!(hubs, 3);
            } else {
                assert_eq!(hubs, 1);
            }
        }
    }

    #[test]
    fn rejects_zero_parameter() {
        assert_eq!(build_named(GraphFamily::Fan(0)), Err(BuildError::ZeroParameter));
        assert_eq!(build_named(GraphFamily::Cycle(2)), Err(BuildError::CycleTooSmall(2)));
    }

    #[test]
    fn random_tree_and_unicyclic() {
        let t = random_sparse_connected(5, -1, 11).unwrap();
        assert_eq!((t.order(), t.size()), (5, 4));
        assert!(t.is_connected());

        let u = random_sparse_connected(6, 0, 12).unwrap();
        assert_eq!((u.order(), u.size()), (6, 6));
        assert!(u.is_connected());
    }

    #[test]
    fn random_sparse_is_deterministic() {
        let a = random_sparse_connected(8, 2, 42).unwrap();
        let b = random_sparse_connected(8, 2, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_sparse_rejects_infeasible() {
        assert!(random_sparse_connected(4, 3, 1).is_err()); // C(4,2)=6 < 7
        assert!(random_sparse_connected(3, -2, 1).is_err());
    }

    #[test]
    fn random_sparse_connectivity_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..1000 {
            let n = rng.random_range(1..30usize);
            let max_extra = (n * (n - 1) / 2) as i64 - n as i64;
            let extra = if max_extra <= -1 {
                -1
            } else {
                rng.random_range(-1..=max_extra.min(6))
            };
            let g = random_sparse_connected(n, extra, trial).unwrap();
            assert!(g.is_connected(), "disconnected for n={n} extra={extra}");
            assert_eq!(g.size() as i64, n as i64 + extra);
        }
    }

    #[test]
    fn components_and_induced() {
        let g = build_named(GraphFamily::Matching(3)).unwrap();
        assert_eq!(g.components().len(), 3);
        let (h, ids) = g.induced(&[2, 3, 4]);
        assert_eq!(h.order(), 3);
        assert_eq!(h.size(), 1);
        assert!(h.has_edge(0, 1));
        assert_eq!(ids, vec![2, 3, 4]);
    }
}
