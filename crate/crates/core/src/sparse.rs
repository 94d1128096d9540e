//! Sparse-graph anatomy: degree-1 peeling, suspended paths, end-edge
//! matchings, and the trichotomy that drives the case split of the solvers.
//!
//! A suspended path here is a path whose interior vertices all have degree 2
//! in the host graph, and which either joins two vertices of degree != 2 or
//! lies entirely on degree-2 vertices (a cycle, or the degree-2 interior of
//! a closed chain). A closed chain hanging off a single branch vertex only
//! counts through its degree-2 interior; its anchor is not usable as a path
//! endpoint.

use crate::bitset::VertexSet;
use crate::graph::{Graph, VertexId};
use thiserror::Error;

/// Order, size, and the surplus `ell = m - n` of a graph, always recomputed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SparseProfile {
    pub n: usize,
    pub m: usize,
    pub ell: i64,
}

impl SparseProfile {
    pub fn of(g: &Graph) -> Self {
        SparseProfile {
            n: g.order(),
            m: g.size(),
            ell: g.size() as i64 - g.order() as i64,
        }
    }
}

/// Thresholds for the trichotomy: suspended-path order `q`, end-edge matching
/// size `s`, and the derived constant `gamma = (q-2)(2s+3*ell-2)+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrichotomyParams {
    pub q: usize,
    pub s: usize,
    pub gamma: i64,
}

impl TrichotomyParams {
    pub fn new(q: usize, s: usize, profile: SparseProfile) -> Self {
        let gamma = (q as i64 - 2) * (2 * s as i64 + 3 * profile.ell - 2) + 1;
        TrichotomyParams { q, s, gamma }
    }
}

/// One of the three structures every sparse connected graph exhibits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrichotomyOutcome {
    /// An ordered suspended path of order at least `q`.
    SuspendedPath(Vec<VertexId>),
    /// `s` pairwise disjoint end-edges.
    EndEdgeMatching(Vec<(VertexId, VertexId)>),
    /// A vertex together with its degree-1 neighbors.
    StarVertex { center: VertexId, leaves: Vec<VertexId> },
}

impl TrichotomyOutcome {
    /// Checks the carried witness against `g`, independently of any search.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        match self {
            TrichotomyOutcome::SuspendedPath(path) => {
                if path.len() < 3 {
                    return Err("suspended path must have at least 3 vertices".into());
                }
                let distinct: std::collections::HashSet<_> = path.iter().collect();
                if distinct.len() != path.len() {
                    return Err("suspended path repeats a vertex".into());
                }
                for w in path.windows(2) {
                    if !g.has_edge(w[0], w[1]) {
                        return Err(format!("missing path edge {}-{}", w[0], w[1]));
                    }
                }
                for &v in &path[1..path.len() - 1] {
                    if g.degree(v) != 2 {
                        return Err(format!("interior vertex {v} has degree {}", g.degree(v)));
                    }
                }
                Ok(())
            }
            TrichotomyOutcome::EndEdgeMatching(edges) => {
                let mut seen = std::collections::HashSet::new();
                for &(u, v) in edges {
                    if !g.has_edge(u, v) {
                        return Err(format!("{u}-{v} is not an edge"));
                    }
                    if g.degree(u) != 1 && g.degree(v) != 1 {
                        return Err(format!("{u}-{v} is not an end-edge"));
                    }
                    if !seen.insert(u) || !seen.insert(v) {
                        return Err(format!("edge {u}-{v} overlaps another matching edge"));
                    }
                }
                Ok(())
            }
            TrichotomyOutcome::StarVertex { center, leaves } => {
                for &l in leaves {
                    if !g.has_edge(*center, l) {
                        return Err(format!("{l} is not adjacent to the center"));
                    }
                    if g.degree(l) != 1 {
                        return Err(format!("listed neighbor {l} has degree {}", g.degree(l)));
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SparseError {
    #[error("trichotomy requires a connected graph")]
    Disconnected,
    #[error("trichotomy requires n >= q >= 3, got n={n}, q={q}")]
    OrderBelowQ { n: usize, q: usize },
    #[error("trichotomy requires s >= 2, got s={s}")]
    MatchingSizeTooSmall { s: usize },
    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(VertexId),
    #[error("a suspended path of order {found} exceeds the assumed maximum {q}")]
    LongerSuspendedPath { q: usize, found: usize },
    #[error("a 2-regular component (cycle through {0}) is all suspended path")]
    CycleComponent(VertexId),
    #[error("structure guarantee failed: {0}")]
    GuaranteeFailed(String),
}

// ---------------------------------------------------------------------------
// Degree-2 chains
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ChainKind {
    /// Anchored at two distinct vertices of degree != 2 (listed first/last).
    Open,
    /// Walks out of one anchor and returns to it; `verts[0]` is the anchor.
    ClosedAnchored,
    /// A component in which every vertex has degree 2.
    PureCycle,
}

#[derive(Clone, Debug)]
pub(crate) struct Chain {
    pub kind: ChainKind,
    /// Walk order; see [`ChainKind`] for the anchor convention.
    pub verts: Vec<VertexId>,
}

impl Chain {
    /// The longest suspended path this chain yields, in order.
    pub fn suspended(&self) -> &[VertexId] {
        match self.kind {
            ChainKind::Open | ChainKind::PureCycle => &self.verts,
            ChainKind::ClosedAnchored => &self.verts[1..],
        }
    }
}

/// Enumerates all maximal degree-2 chains, walking out of every vertex of
/// degree != 2 and sweeping leftover pure cycles.
pub(crate) fn chains(g: &Graph) -> Vec<Chain> {
    let n = g.order();
    let mut used_edge = std::collections::HashSet::new();
    let mut on_chain = VertexSet::new(n.max(1));
    let mut out = Vec::new();
    let key = |u: usize, v: usize| (u.min(v), u.max(v));

    for a in 0..n {
        if g.degree(a) == 2 {
            continue;
        }
        for w0 in g.neighbors(a).to_vec() {
            if used_edge.contains(&key(a, w0)) {
                continue;
            }
            let mut verts = vec![a];
            let (mut prev, mut cur) = (a, w0);
            used_edge.insert(key(a, w0));
            while g.degree(cur) == 2 && cur != a {
                verts.push(cur);
                on_chain.insert(cur);
                let next = g.neighbors(cur).iter().find(|&x| x != prev).unwrap();
                used_edge.insert(key(cur, next));
                prev = cur;
                cur = next;
            }
            if cur == a {
                out.push(Chain { kind: ChainKind::ClosedAnchored, verts });
            } else {
                verts.push(cur);
                out.push(Chain { kind: ChainKind::Open, verts });
            }
        }
    }

    // Leftover degree-2 vertices are pure cycles.
    for s in 0..n {
        if g.degree(s) != 2 || on_chain.contains(s) {
            continue;
        }
        let mut verts = vec![s];
        on_chain.insert(s);
        let mut prev = s;
        let mut cur = g.neighbors(s).first().unwrap();
        while cur != s {
            verts.push(cur);
            on_chain.insert(cur);
            let next = g.neighbors(cur).iter().find(|&x| x != prev).unwrap();
            prev = cur;
            cur = next;
        }
        out.push(Chain { kind: ChainKind::PureCycle, verts });
    }
    out
}

/// Longest suspended path of order at least `q`, if any. Ties go to the
/// first chain in enumeration order.
pub fn find_suspended_path(g: &Graph, q: usize) -> Option<Vec<VertexId>> {
    assert!(q >= 3, "suspended path queries need q >= 3");
    let mut best: Option<Vec<VertexId>> = None;
    for c in chains(g) {
        let p = c.suspended();
        if p.len() >= q && best.as_ref().is_none_or(|b| p.len() > b.len()) {
            best = Some(p.to_vec());
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Peeling
// ---------------------------------------------------------------------------

/// One step of the degree-1 peel: the removed vertex and its sole neighbor
/// at removal time (`None` when it was already isolated).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RemovedVertex {
    pub vertex: VertexId,
    pub parent: Option<VertexId>,
}

/// Result of recursively deleting vertices of degree <= 1.
#[derive(Clone, Debug)]
pub struct Peeling {
    /// The kernel with minimum degree >= 2 (possibly empty), re-indexed.
    pub core: Graph,
    /// Original id of each core vertex, ascending.
    pub core_vertices: Vec<VertexId>,
    /// Removal order; replaying it in reverse reconstructs the vertex set.
    pub removed: Vec<RemovedVertex>,
}

/// Deletes vertices of degree <= 1 one at a time (lowest id first) until the
/// rest has minimum degree >= 2; a tree peels away completely.
pub fn peel_degree_one(g: &Graph) -> Peeling {
    let n = g.order();
    let mut alive = VertexSet::full(n.max(1));
    if n == 0 {
        alive.clear();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = Vec::new();
    loop {
        let Some(v) = alive.iter().find(|&v| deg[v] <= 1) else {
            break;
        };
        let parent = g.neighbors(v).iter().find(|&w| alive.contains(w));
        if let Some(p) = parent {
            deg[p] -= 1;
        }
        alive.remove(v);
        removed.push(RemovedVertex { vertex: v, parent });
    }
    let keep: Vec<VertexId> = alive.iter().collect();
    let (core, core_vertices) = g.induced(&keep);
    Peeling { core, core_vertices, removed }
}

// ---------------------------------------------------------------------------
// Shortening
// ---------------------------------------------------------------------------

/// A chain of the input graph and what survived the shortening.
#[derive(Clone, Debug)]
pub struct ChainTrace {
    pub(crate) kind: ChainKind,
    /// The chain's full vertex walk in the input graph.
    pub original: Vec<VertexId>,
    /// New ids (in the shortened graph) of the surviving walk, same order.
    pub kept: Vec<VertexId>,
    /// How many vertices were contracted out of this chain.
    pub removed: usize,
}

impl ChainTrace {
    /// The surviving suspended path (new ids, in order).
    pub fn kept_path(&self) -> &[VertexId] {
        match self.kind {
            ChainKind::ClosedAnchored => &self.kept[1..],
            _ => &self.kept,
        }
    }

    /// The original suspended path (input-graph ids, in order).
    pub fn original_path(&self) -> &[VertexId] {
        match self.kind {
            ChainKind::ClosedAnchored => &self.original[1..],
            _ => &self.original,
        }
    }

    pub fn original_path_len(&self) -> usize {
        self.original_path().len()
    }
}

/// Result of contracting long suspended paths down to `cap` vertices.
#[derive(Clone, Debug)]
pub struct Shortening {
    pub graph: Graph,
    /// Original id of each vertex of `graph`, ascending.
    pub orig_ids: Vec<VertexId>,
    pub chains: Vec<ChainTrace>,
}

impl Shortening {
    pub fn total_removed(&self) -> usize {
        self.chains.iter().map(|c| c.removed).sum()
    }
}

/// Contracts interior degree-2 vertices until no suspended path has more
/// than `cap` vertices. Within each chain the vertex next to the lower-id
/// endpoint of the current path goes first.
pub fn shorten_suspended_paths(g: &Graph, cap: usize) -> Shortening {
    assert!(cap >= 3, "shortening needs cap >= 3");
    let n = g.order();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut alive = VertexSet::full(n.max(1));
    if n == 0 {
        alive.clear();
    }

    let all_chains = chains(g);
    let mut traces = Vec::new();
    for chain in &all_chains {
        // Current suspended path of this chain, as a mutable list.
        let mut path: Vec<VertexId> = chain.suspended().to_vec();
        let mut removed = 0;
        while path.len() > cap {
            let idx = if path[0] < path[path.len() - 1] { 1 } else { path.len() - 2 };
            let victim = path[idx];
            let nbrs: Vec<VertexId> = adj[victim].to_vec();
            debug_assert_eq!(nbrs.len(), 2);
            let (a, b) = (nbrs[0], nbrs[1]);
            adj[a].remove(victim);
            adj[b].remove(victim);
            adj[victim].clear();
            debug_assert!(!adj[a].contains(b), "contraction would create a multi-edge");
            adj[a].insert(b);
            adj[b].insert(a);
            alive.remove(victim);
            path.remove(idx);
            removed += 1;
        }
        traces.push((chain, removed));
    }

    let keep: Vec<VertexId> = alive.iter().collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v] = i;
    }
    let mut graph = Graph::new(keep.len());
    for (i, &v) in keep.iter().enumerate() {
        for w in adj[v].iter() {
            if new_id[w] != usize::MAX && new_id[w] > i {
                graph.add_edge(i, new_id[w]);
            }
        }
    }
    let chains = traces
        .into_iter()
        .map(|(chain, removed)| ChainTrace {
            kind: chain.kind,
            original: chain.verts.clone(),
            kept: chain.verts.iter().filter(|&&v| alive.contains(v)).map(|&v| new_id[v]).collect(),
            removed,
        })
        .collect();
    Shortening { graph, orig_ids: keep, chains }
}

// ---------------------------------------------------------------------------
// End-edge matchings
// ---------------------------------------------------------------------------

/// A maximum set of pairwise disjoint end-edges. Every end-edge pairs a
/// degree-1 vertex with its support, so the end-edge graph is a disjoint
/// union of stars and the maximum is one edge per support (plus one per
/// isolated-edge component).
fn max_end_edge_matching(g: &Graph) -> Vec<(VertexId, VertexId)> {
    let mut edges = Vec::new();
    for v in g.vertices() {
        if g.degree(v) >= 2 {
            if let Some(leaf) = g.neighbors(v).iter().find(|&w| g.degree(w) == 1) {
                edges.push((v.min(leaf), v.max(leaf)));
            }
        } else if g.degree(v) == 1 {
            let w = g.neighbors(v).first().unwrap();
            if g.degree(w) == 1 && v < w {
                edges.push((v, w));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// `s` pairwise disjoint end-edges, or `None` if no such matching exists.
pub fn find_end_edge_matching(g: &Graph, s: usize) -> Option<Vec<(VertexId, VertexId)>> {
    assert!(s >= 1);
    let max = max_end_edge_matching(g);
    if max.len() >= s {
        Some(max[..s].to_vec())
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Trichotomy and the degree-1 bound
// ---------------------------------------------------------------------------

/// Case split of a sparse connected graph: a long suspended path, a large
/// end-edge matching, or a vertex with many degree-1 neighbors — tried in
/// that order.
pub fn trichotomy(g: &Graph, params: TrichotomyParams) -> Result<TrichotomyOutcome, SparseError> {
    let profile = SparseProfile::of(g);
    if !g.is_connected() {
        return Err(SparseError::Disconnected);
    }
    if params.q < 3 || profile.n < params.q {
        return Err(SparseError::OrderBelowQ { n: profile.n, q: params.q });
    }
    if params.s < 2 {
        return Err(SparseError::MatchingSizeTooSmall { s: params.s });
    }

    if let Some(path) = find_suspended_path(g, params.q) {
        return Ok(TrichotomyOutcome::SuspendedPath(path));
    }
    if let Some(edges) = find_end_edge_matching(g, params.s) {
        return Ok(TrichotomyOutcome::EndEdgeMatching(edges));
    }

    let (center, leaves) = g
        .vertices()
        .map(|v| {
            let leaves: Vec<VertexId> =
                g.neighbors(v).iter().filter(|&w| g.degree(w) == 1).collect();
            (v, leaves)
        })
        .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(&a.0)))
        .expect("nonempty graph");
    let bound = ceil_div(profile.n as i64 - params.gamma, params.s as i64 - 1).max(0) as usize;
    if leaves.len() < bound {
        return Err(SparseError::GuaranteeFailed(format!(
            "no vertex has {bound} degree-1 neighbors (best: {} at {center})",
            leaves.len()
        )));
    }
    Ok(TrichotomyOutcome::StarVertex { center, leaves })
}

/// The guaranteed number of degree-1 vertices, `max(0, ceil(n/(2q) - 3*ell/2))`,
/// for a graph with no isolated vertex and no suspended path of order above
/// `q`. A 2-regular component is rejected outright: a cycle is one closed
/// chain, which defeats the bound no matter how small it is.
pub fn degree_one_lower_bound(g: &Graph, q: usize) -> Result<usize, SparseError> {
    let profile = SparseProfile::of(g);
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(SparseError::IsolatedVertex(v));
    }
    if let Some(c) = chains(g).iter().find(|c| c.kind == ChainKind::PureCycle) {
        return Err(SparseError::CycleComponent(c.verts[0]));
    }
    if let Some(p) = find_suspended_path(g, q + 1) {
        return Err(SparseError::LongerSuspendedPath { q, found: p.len() });
    }
    let num = profile.n as i64 - 3 * profile.ell * q as i64;
    Ok(ceil_div(num, 2 * q as i64).max(0) as usize)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}
