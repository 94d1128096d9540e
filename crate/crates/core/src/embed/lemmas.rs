//! The small constructive dichotomies the solvers are assembled from: path
//! extension, the Hall red-matching/blue-biclique split, blue matchings and
//! fans inside neighborhoods, and "red copy of G or blue kK_2" regions.

use crate::bitset::VertexSet;
use crate::coloring::TwoColoring;
use crate::embed::{Fan, SolveError};
use crate::graph::{Graph, VertexId};
use crate::matching::{matching_of_size, max_bipartite_matching, max_matching_pairs};

/// Duplicate check without hashing: quadratic for short lists, mark vector
/// beyond that.
pub(crate) fn all_distinct(items: &[usize]) -> bool {
    if items.len() <= 32 {
        for (i, &a) in items.iter().enumerate() {
            if items[i + 1..].contains(&a) {
                return false;
            }
        }
        true
    } else {
        let cap = items.iter().max().map_or(0, |&m| m + 1);
        let mut seen = vec![false; cap];
        for &v in items {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }
}

/// Outcome of trying to lengthen a red path against a set `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathExtensionOutcome {
    /// The path with one vertex of `Y` spliced in (order `a + 1`).
    ExtendedPath(Vec<VertexId>),
    /// A blue clique of the requested size.
    BlueClique(Vec<VertexId>),
    /// `d` path vertices blue-complete to every vertex of `Y`.
    BlueDominated(Vec<VertexId>),
}

impl PathExtensionOutcome {
    /// Independent witness check against the original call.
    pub fn validate(
        &self,
        c: &TwoColoring,
        path: &[VertexId],
        ys: &[VertexId],
        clique_size: usize,
        dominated_count: usize,
    ) -> Result<(), String> {
        match self {
            PathExtensionOutcome::ExtendedPath(p) => {
                if p.len() != path.len() + 1 {
                    return Err("extended path has the wrong order".into());
                }
                if p.first() != path.first() || p.last() != path.last() {
                    return Err("extension moved the path endpoints".into());
                }
                if !all_distinct(p) {
                    return Err("extended path repeats a vertex".into());
                }
                for w in p.windows(2) {
                    if !c.is_red(w[0], w[1]) {
                        return Err(format!("pair {}-{} on the extended path is blue", w[0], w[1]));
                    }
                }
                Ok(())
            }
            PathExtensionOutcome::BlueClique(verts) => {
                if verts.len() != clique_size {
                    return Err("clique has the wrong size".into());
                }
                for (i, &u) in verts.iter().enumerate() {
                    for &v in &verts[i + 1..] {
                        if u == v || c.is_red(u, v) {
                            return Err(format!("clique pair {u}-{v} is not blue"));
                        }
                    }
                }
                Ok(())
            }
            PathExtensionOutcome::BlueDominated(doms) => {
                if doms.len() != dominated_count {
                    return Err("wrong number of dominated vertices".into());
                }
                for &x in doms {
                    if !path.contains(&x) {
                        return Err(format!("{x} is not a path vertex"));
                    }
                    for &y in ys {
                        if c.is_red(x, y) {
                            return Err(format!("{x}-{y} is red"));
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

/// On a red path `x_1..x_a` and disjoint outside vertices `Y` with
/// `a >= |Y|(c-1)+d`, produces one of: a red path of order `a + 1` joining
/// the same endpoints (a splice, or a rerouting through a chord), a blue
/// clique `K_c`, or `d` path vertices blue-complete to `Y`.
///
/// The clique branch is direct: when some `y` has at least `c - 1` red path
/// positions (none consecutive, no two adjacent after the splice scan),
/// each position's successor is blue to `y`; a red pair of successors makes
/// a rerouted path, and otherwise the successors plus `y` are a blue clique.
pub fn extend_path(
    c: &TwoColoring,
    path: &[VertexId],
    ys: &[VertexId],
    clique_size: usize,
    dominated_count: usize,
) -> Result<PathExtensionOutcome, SolveError> {
    let (a, b) = (path.len(), ys.len());
    if a < b * (clique_size.saturating_sub(1)) + dominated_count {
        return Err(SolveError::Hypothesis(format!(
            "path extension needs a >= b(c-1)+d, got a={a}, b={b}, c={clique_size}, d={dominated_count}"
        )));
    }
    for w in path.windows(2) {
        if !c.is_red(w[0], w[1]) {
            return Err(SolveError::Hypothesis(format!("path pair {}-{} is not red", w[0], w[1])));
        }
    }
    if ys.iter().any(|y| path.contains(y)) {
        return Err(SolveError::Hypothesis("Y intersects the path".into()));
    }
    if b == 0 {
        return Ok(PathExtensionOutcome::BlueDominated(path[..dominated_count].to_vec()));
    }
    if clique_size == 0 {
        return Ok(PathExtensionOutcome::BlueClique(Vec::new()));
    }
    if clique_size == 1 {
        return Ok(PathExtensionOutcome::BlueClique(vec![ys[0]]));
    }

    // 1. Splice a y between the first red-red consecutive pair.
    for i in 0..a.saturating_sub(1) {
        for &y in ys {
            if c.is_red(path[i], y) && c.is_red(path[i + 1], y) {
                let mut p = path.to_vec();
                p.insert(i + 1, y);
                return Ok(PathExtensionOutcome::ExtendedPath(p));
            }
        }
    }

    // 2. Red-rich y's: reroute or clique off the successor set.
    for &y in ys {
        // Red positions, excluding the last (it has no successor).
        let reds: Vec<usize> =
            (0..a - 1).filter(|&i| c.is_red(path[i], y)).collect();
        if reds.len() < clique_size - 1 {
            continue;
        }
        // No two red positions are adjacent (a splice would have fired), so
        // every successor is blue to y.
        for (s, &i) in reds.iter().enumerate() {
            for &j in &reds[s + 1..] {
                if c.is_red(path[i + 1], path[j + 1]) {
                    // Reroute: x_1..x_i, y, x_j..x_{i+1}, x_{j+1}..x_a.
                    let mut p = Vec::with_capacity(a + 1);
                    p.extend_from_slice(&path[..=i]);
                    p.push(y);
                    p.extend(path[i + 1..=j].iter().rev());
                    p.extend_from_slice(&path[j + 1..]);
                    debug_assert_eq!(p.len(), a + 1);
                    return Ok(PathExtensionOutcome::ExtendedPath(p));
                }
            }
        }
        let mut clique = vec![y];
        clique.extend(reds.iter().take(clique_size - 1).map(|&i| path[i + 1]));
        return Ok(PathExtensionOutcome::BlueClique(clique));
    }

    // 3. Every y now has at most c-1 red path positions, so at least
    // a - b(c-1) >= d path vertices are blue-complete to Y.
    let doms: Vec<VertexId> = path
        .iter()
        .copied()
        .filter(|&x| ys.iter().all(|&y| c.is_blue(x, y)))
        .take(dominated_count)
        .collect();
    if doms.len() == dominated_count {
        return Ok(PathExtensionOutcome::BlueDominated(doms));
    }
    Err(SolveError::Defect(format!(
        "no outcome on a path of order {a} against {b} outside vertices (c={clique_size}, d={dominated_count})"
    )))
}

/// Outcome of the red-matching / blue-biclique dichotomy on disjoint sides
/// `X` (size `a`) and `Y` (size `b >= a`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HallOutcome {
    /// `(x, y)` red pairs covering all of `X`.
    RedMatching(Vec<(VertexId, VertexId)>),
    /// `xs` (some `c+1` vertices of `X`) blue-complete to `ys` (`b-c`
    /// vertices of `Y`).
    BlueBiclique { xs: Vec<VertexId>, ys: Vec<VertexId> },
}

impl HallOutcome {
    pub fn validate(&self, c: &TwoColoring, xs: &[VertexId], ys: &[VertexId]) -> Result<(), String> {
        match self {
            HallOutcome::RedMatching(pairs) => {
                if pairs.len() != xs.len() {
                    return Err("matching does not cover X".into());
                }
                let mut used = std::collections::HashSet::new();
                for &(x, y) in pairs {
                    if !xs.contains(&x) || !ys.contains(&y) {
                        return Err(format!("pair {x}-{y} leaves the sides"));
                    }
                    if c.is_blue(x, y) {
                        return Err(format!("pair {x}-{y} is blue"));
                    }
                    if !used.insert(x) || !used.insert(y) {
                        return Err("matching reuses a vertex".into());
                    }
                }
                Ok(())
            }
            HallOutcome::BlueBiclique { xs: bx, ys: by } => {
                let c_param = bx.len().checked_sub(1).ok_or("empty X side")?;
                if by.len() + c_param != ys.len() {
                    return Err(format!(
                        "sides have {} and {} vertices; expected |Y side| = b - c",
                        bx.len(),
                        by.len()
                    ));
                }
                if !bx.iter().all(|v| xs.contains(v)) || !by.iter().all(|v| ys.contains(v)) {
                    return Err("biclique leaves the sides".into());
                }
                for &x in bx {
                    for &y in by {
                        if c.is_red(x, y) {
                            return Err(format!("cross pair {x}-{y} is red"));
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

/// Red matching covering `X`, or a blue `K_{c+1, b-c}` found through the
/// deficiency set of a maximum red matching.
pub fn hall_dichotomy(
    c: &TwoColoring,
    xs: &[VertexId],
    ys: &[VertexId],
) -> Result<HallOutcome, SolveError> {
    if xs.len() > ys.len() {
        return Err(SolveError::Hypothesis(format!(
            "need |X| <= |Y|, got {} > {}",
            xs.len(),
            ys.len()
        )));
    }
    if xs.iter().any(|x| ys.contains(x)) {
        return Err(SolveError::Hypothesis("X and Y intersect".into()));
    }
    let left_adj: Vec<Vec<usize>> = xs
        .iter()
        .map(|&x| (0..ys.len()).filter(|&j| c.is_red(x, ys[j])).collect())
        .collect();
    let out = max_bipartite_matching(&left_adj, ys.len());
    if out.violator.is_empty() {
        let pairs = out
            .pairs
            .iter()
            .enumerate()
            .map(|(i, p)| (xs[i], ys[p.expect("covered")]))
            .collect();
        return Ok(HallOutcome::RedMatching(pairs));
    }
    // The violator X0 has |N_red(X0)| < |X0|; everything outside the red
    // neighborhood is blue-complete to X0.
    let bx: Vec<VertexId> = out.violator.iter().map(|&i| xs[i]).collect();
    let blocked: std::collections::HashSet<usize> = out.violator_nbrs.iter().copied().collect();
    let want = ys.len() + 1 - bx.len();
    let by: Vec<VertexId> = (0..ys.len())
        .filter(|j| !blocked.contains(j))
        .take(want)
        .map(|j| ys[j])
        .collect();
    debug_assert_eq!(by.len(), want, "deficiency must free enough of Y");
    Ok(HallOutcome::BlueBiclique { xs: bx, ys: by })
}

/// Maximum matching of the blue graph induced on `within`, as canonical
/// sorted pairs.
pub fn max_blue_matching_in(c: &TwoColoring, within: &VertexSet) -> Vec<(VertexId, VertexId)> {
    let verts = within.to_vec();
    let adj = local_blue_adjacency(c, &verts);
    normalize_pairs(&verts, max_matching_pairs(&adj))
}

/// A blue matching of `k` pairs inside `within`, if one exists (early exit).
pub fn blue_matching_of_size(
    c: &TwoColoring,
    within: &VertexSet,
    k: usize,
) -> Option<Vec<(VertexId, VertexId)>> {
    if within.len() < 2 * k {
        return None;
    }
    let verts = within.to_vec();
    let adj = local_blue_adjacency(c, &verts);
    matching_of_size(&adj, k).map(|pairs| normalize_pairs(&verts, pairs))
}

fn local_blue_adjacency(c: &TwoColoring, verts: &[VertexId]) -> Vec<VertexSet> {
    let m = verts.len();
    let mut adj: Vec<VertexSet> = (0..m).map(|_| VertexSet::new(m.max(1))).collect();
    for i in 0..m {
        for j in i + 1..m {
            if c.is_blue(verts[i], verts[j]) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    adj
}

fn normalize_pairs(verts: &[VertexId], local: Vec<(usize, usize)>) -> Vec<(VertexId, VertexId)> {
    let mut pairs: Vec<(VertexId, VertexId)> = local
        .into_iter()
        .map(|(i, j)| {
            let (a, b) = (verts[i], verts[j]);
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

/// A blue fan centered at `v` avoiding `forbidden`: `k` disjoint blue pairs
/// inside the blue neighborhood of `v`.
pub fn find_blue_fan_at(
    c: &TwoColoring,
    v: VertexId,
    k: usize,
    forbidden: &VertexSet,
) -> Option<Fan> {
    let mut candidates = c.full_set();
    candidates.difference_with(forbidden);
    let pool = c.blue_in(v, &candidates);
    blue_matching_of_size(c, &pool, k).map(|pairs| Fan { center: v, pairs })
}

/// Lowest-id vertex with red degree at least `n - 1`, with its first `n - 1`
/// red neighbors.
pub fn find_red_star(c: &TwoColoring, n: usize) -> Option<(VertexId, Vec<VertexId>)> {
    (0..c.order()).find_map(|v| {
        if c.red_degree(v) >= n - 1 {
            Some((v, c.red_neighbors(v).iter().take(n - 1).collect()))
        } else {
            None
        }
    })
}

/// Fragment produced inside a region known to carry `r(G, kK_2)` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fragment {
    RedGraph(Vec<VertexId>),
    BlueMatching(Vec<(VertexId, VertexId)>),
}

impl Fragment {
    pub fn validate(
        &self,
        c: &TwoColoring,
        within: &VertexSet,
        g: &Graph,
        k: usize,
    ) -> Result<(), String> {
        match self {
            Fragment::RedGraph(map) => {
                if map.len() != g.order() {
                    return Err("embedding has the wrong order".into());
                }
                let mut seen = std::collections::HashSet::new();
                for &x in map {
                    if !within.contains(x) {
                        return Err(format!("{x} is outside the region"));
                    }
                    if !seen.insert(x) {
                        return Err(format!("{x} used twice"));
                    }
                }
                for (u, v) in g.edges() {
                    if !c.is_red(map[u], map[v]) {
                        return Err(format!("edge {u}-{v} maps to a blue pair"));
                    }
                }
                Ok(())
            }
            Fragment::BlueMatching(pairs) => {
                if pairs.len() != k {
                    return Err(format!("{} pairs given, {k} required", pairs.len()));
                }
                let mut seen = std::collections::HashSet::new();
                for &(a, b) in pairs {
                    if !within.contains(a) || !within.contains(b) {
                        return Err("matching leaves the region".into());
                    }
                    if c.is_red(a, b) {
                        return Err(format!("pair {a}-{b} is red"));
                    }
                    if !seen.insert(a) || !seen.insert(b) {
                        return Err("matching reuses a vertex".into());
                    }
                }
                Ok(())
            }
        }
    }
}

/// Inside `within` (at least `|G| + k - 1` vertices under the guarantee),
/// finds a blue `kK_2` or embeds a red copy of `g`. The blue side is tried
/// first; failing that the region's blue graph has a small vertex cover and
/// the red embedding is found by backtracking.
pub fn red_graph_or_blue_matching(
    c: &TwoColoring,
    within: &VertexSet,
    g: &Graph,
    k: usize,
) -> Result<Fragment, SolveError> {
    if let Some(pairs) = blue_matching_of_size(c, within, k) {
        return Ok(Fragment::BlueMatching(pairs));
    }
    let mut budget = DEFAULT_EMBED_BUDGET;
    if let Some(map) = embed_red(c, within, g, &[], &mut budget) {
        return Ok(Fragment::RedGraph(map));
    }
    Err(SolveError::Defect(format!(
        "region of {} vertices yields neither a blue {k}K_2 nor a red copy of a graph of order {} ({})",
        within.len(),
        g.order(),
        if budget <= 0 { "budget exhausted" } else { "search complete" },
    )))
}

/// Lowest-id center of a blue `K_{1,k}` inside `within`, with its `k`
/// lowest blue neighbors there.
pub(crate) fn find_blue_star(
    c: &TwoColoring,
    within: &VertexSet,
    k: usize,
) -> Option<(VertexId, Vec<VertexId>)> {
    within.iter().find_map(|v| {
        let nbrs = c.blue_in(v, within);
        if nbrs.len() >= k {
            Some((v, nbrs.iter().take(k).collect()))
        } else {
            None
        }
    })
}

/// `t` vertex-disjoint blue stars `K_{1,k}` inside `within`, greedily by
/// ascending center id with single-level retry over center choices.
pub(crate) fn find_disjoint_blue_stars(
    c: &TwoColoring,
    within: &VertexSet,
    k: usize,
    t: usize,
) -> Option<Vec<(VertexId, Vec<VertexId>)>> {
    fn rec(
        c: &TwoColoring,
        avail: &VertexSet,
        k: usize,
        t: usize,
        acc: &mut Vec<(VertexId, Vec<VertexId>)>,
    ) -> bool {
        if acc.len() == t {
            return true;
        }
        for v in avail.iter() {
            let nbrs = c.blue_in(v, avail);
            if nbrs.len() < k {
                continue;
            }
            let leaves: Vec<VertexId> = nbrs.iter().take(k).collect();
            let mut rest = avail.clone();
            rest.remove(v);
            for &l in &leaves {
                rest.remove(l);
            }
            acc.push((v, leaves));
            if rec(c, &rest, k, t, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::new();
    rec(c, within, k, t, &mut acc).then_some(acc)
}

pub(crate) const DEFAULT_EMBED_BUDGET: i64 = 4_000_000;

/// Backtracking red embedding of `g` into `region`, honoring `pins`
/// (pattern vertex, forced host). Pattern vertices are placed hardest-first
/// (most placed neighbors, then degree); hosts are tried by ascending blue
/// degree within the region. Returns `None` when the search space is
/// exhausted or the node budget runs out.
pub(crate) fn embed_red(
    c: &TwoColoring,
    region: &VertexSet,
    g: &Graph,
    pins: &[(VertexId, VertexId)],
    budget: &mut i64,
) -> Option<Vec<VertexId>> {
    let n = g.order();
    if n == 0 {
        return Some(Vec::new());
    }
    if region.len() < n {
        return None;
    }

    // Hosts by ascending blue degree inside the region.
    let mut hosts: Vec<VertexId> = region.to_vec();
    hosts.sort_by_key(|&v| (c.blue_count_in(v, region), v));

    let mut map = vec![usize::MAX; n];
    let mut used = VertexSet::new(c.order());
    for &(pv, host) in pins {
        if !region.contains(host) || used.contains(host) {
            return None;
        }
        map[pv] = host;
        used.insert(host);
    }
    // Pins must agree among themselves.
    for &(pv, host) in pins {
        for w in g.neighbors(pv).iter() {
            if map[w] != usize::MAX && !c.is_red(host, map[w]) {
                return None;
            }
        }
    }

    // Placement order: most placed neighbors first, then degree, then id.
    let mut order: Vec<VertexId> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for &(pv, _) in pins {
        placed[pv] = true;
    }
    let mut remaining: Vec<VertexId> = (0..n).filter(|&v| !placed[v]).collect();
    while !remaining.is_empty() {
        let (idx, &v) = remaining
            .iter()
            .enumerate()
            .max_by_key(|(_, &v)| {
                let anchored = g.neighbors(v).iter().filter(|&w| placed[w]).count();
                (anchored, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        order.push(v);
        placed[v] = true;
        remaining.swap_remove(idx);
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        c: &TwoColoring,
        g: &Graph,
        hosts: &[VertexId],
        order: &[VertexId],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut VertexSet,
        budget: &mut i64,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        *budget -= 1;
        if *budget < 0 {
            return false;
        }
        let v = order[depth];
        let anchors: Vec<VertexId> =
            g.neighbors(v).iter().filter(|&w| map[w] != usize::MAX).map(|w| map[w]).collect();
        for &h in hosts {
            if used.contains(h) {
                continue;
            }
            if anchors.iter().all(|&a| c.is_red(h, a)) {
                map[v] = h;
                used.insert(h);
                if rec(c, g, hosts, order, depth + 1, map, used, budget) {
                    return true;
                }
                map[v] = usize::MAX;
                used.remove(h);
            }
        }
        false
    }

    if rec(c, g, &hosts, &order, 0, &mut map, &mut used, budget) {
        Some(map)
    } else {
        None
    }
}
