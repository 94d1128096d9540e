//! Ground truth at small scale: exact red-subgraph and blue-fan detection,
//! arrowing by exhaustive coloring enumeration, and exact Ramsey numbers.
//!
//! The enumeration fixes the red/blue split of vertex 0's edge star up to
//! permutation (a prefix of red edges) and prunes any branch whose partial
//! red graph already contains the red target or whose partial blue graph
//! already contains the blue target; both prunes are monotone. Partitions of
//! the search space run in parallel and merge by logical AND plus the
//! lexicographically first witness.

use crate::bitset::VertexSet;
use crate::clique::max_independent_set;
use crate::coloring::{EdgeColor, FanSpec, TwoColoring};
use crate::embed::Fan;
use crate::graph::{Graph, VertexId};
use rayon::prelude::*;
use thiserror::Error;

/// Default exhaustive-enumeration ceiling: `2^28` colorings before symmetry.
pub const DEFAULT_CEILING: usize = 8;

/// Above this order exact independence search is refused.
pub const INDEPENDENCE_CEILING: usize = 40;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("order {n} exceeds the enumeration ceiling {ceiling}; refusing to sample")]
    AboveCeiling { n: usize, ceiling: usize },
    #[error("order {n} exceeds the exact independence ceiling {INDEPENDENCE_CEILING}")]
    TooLargeForIndependence { n: usize },
}

/// An arrowing question: does every coloring of `K_n` contain a red `graph`
/// or a blue `t F_k`?
#[derive(Clone, Debug)]
pub struct ArrowQuery {
    pub graph: Graph,
    pub spec: FanSpec,
    pub n: usize,
}

impl ArrowQuery {
    pub fn run(&self) -> Result<ArrowsResult, OracleError> {
        arrows(self.n, &self.graph, self.spec)
    }
}

/// Search-effort counters and the avoiding coloring, when one exists.
#[derive(Clone, Debug, Default)]
pub struct SearchStats {
    pub colorings_examined: u64,
    pub prune_hits: u64,
    pub witness: Option<TwoColoring>,
}

#[derive(Clone, Debug)]
pub struct ArrowsResult {
    pub arrows: bool,
    pub stats: SearchStats,
}

// ---------------------------------------------------------------------------
// Detection
// ---------------------------------------------------------------------------

/// An injective red-edge-preserving embedding of `g`, or `None` if none
/// exists (complete backtracking).
pub fn find_red_subgraph(c: &TwoColoring, g: &Graph) -> Option<Vec<VertexId>> {
    let host: Vec<VertexSet> = (0..c.order()).map(|v| c.red_neighbors(v).clone()).collect();
    find_subgraph(&host, c.order(), g)
}

/// `t` disjoint valid blue fans, or `None` if none exist (complete
/// backtracking over centers in descending blue degree, with exhaustive
/// matching search inside each candidate neighborhood).
pub fn find_blue_tfans(c: &TwoColoring, k: usize, t: usize) -> Option<Vec<Fan>> {
    let n = c.order();
    let blue: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = c.full_set();
            s.difference_with(c.red_neighbors(v));
            s.remove(v);
            s
        })
        .collect();
    find_tfans_in(&blue, n, k, t)
}

/// Non-induced subgraph embedding by backtracking on bitset adjacency.
pub(crate) fn find_subgraph(host: &[VertexSet], n_host: usize, g: &Graph) -> Option<Vec<VertexId>> {
    let n = g.order();
    if n > n_host {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    // Pattern order: most placed neighbors first, then degree.
    let mut order: Vec<VertexId> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut remaining: Vec<VertexId> = (0..n).collect();
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

    fn rec(
        host: &[VertexSet],
        n_host: usize,
        g: &Graph,
        order: &[VertexId],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut VertexSet,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        let anchors: Vec<usize> =
            g.neighbors(v).iter().filter(|&w| map[w] != usize::MAX).map(|w| map[w]).collect();
        for h in 0..n_host {
            if used.contains(h) {
                continue;
            }
            if anchors.iter().all(|&a| host[a].contains(h)) {
                map[v] = h;
                used.insert(h);
                if rec(host, n_host, g, order, depth + 1, map, used) {
                    return true;
                }
                map[v] = usize::MAX;
                used.remove(h);
            }
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    let mut used = VertexSet::new(n_host);
    rec(host, n_host, g, &order, 0, &mut map, &mut used).then_some(map)
}

fn find_tfans_in(blue: &[VertexSet], n: usize, k: usize, t: usize) -> Option<Vec<Fan>> {
    // Candidate centers in descending blue degree; fans use strictly
    // increasing center rank so each fan set is tried once.
    let mut rank: Vec<VertexId> = (0..n).collect();
    rank.sort_by_key(|&v| (std::cmp::Reverse(blue[v].len()), v));

    fn pairs_rec(
        blue: &[VertexSet],
        pool: &VertexSet,
        need: usize,
        acc: &mut Vec<(usize, usize)>,
    ) -> bool {
        if need == 0 {
            return true;
        }
        if pool.len() < 2 * need {
            return false;
        }
        let w = pool.first().expect("pool nonempty");
        // Branch 1: leave w out of the matching.
        let mut without = pool.clone();
        without.remove(w);
        // Branch 2: pair w with each blue neighbor in the pool.
        let mut partners = pool.clone();
        partners.intersect_with(&blue[w]);
        for v in partners.iter() {
            let mut rest = without.clone();
            rest.remove(v);
            acc.push((w, v));
            if pairs_rec(blue, &rest, need - 1, acc) {
                return true;
            }
            acc.pop();
        }
        pairs_rec(blue, &without, need, acc)
    }

    fn fans_rec(
        blue: &[VertexSet],
        rank: &[VertexId],
        from: usize,
        k: usize,
        left: usize,
        used: &mut VertexSet,
        acc: &mut Vec<Fan>,
    ) -> bool {
        if left == 0 {
            return true;
        }
        for i in from..rank.len() {
            let v = rank[i];
            if used.contains(v) {
                continue;
            }
            let mut pool = blue[v].clone();
            pool.difference_with(used);
            if pool.len() < 2 * k {
                continue;
            }
            let mut pairs = Vec::new();
            // Enumerate every matching of size k in the pool, recursing on
            // the remaining fans for each.
            let mut stack_found = false;
            let mut all_matchings = Vec::new();
            collect_matchings(blue, &pool, k, &mut pairs, &mut all_matchings);
            for pairing in all_matchings {
                used.insert(v);
                for &(a, b) in &pairing {
                    used.insert(a);
                    used.insert(b);
                }
                acc.push(Fan { center: v, pairs: pairing.clone() });
                if fans_rec(blue, rank, i + 1, k, left - 1, used, acc) {
                    stack_found = true;
                } else {
                    acc.pop();
                }
                if !stack_found {
                    used.remove(v);
                    for &(a, b) in &pairing {
                        used.remove(a);
                        used.remove(b);
                    }
                } else {
                    return true;
                }
            }
        }
        false
    }

    // Fast path for t = 1: no need to enumerate all matchings.
    if t == 1 {
        for &v in &rank {
            let pool = blue[v].clone();
            let mut acc = Vec::new();
            if pairs_rec(blue, &pool, k, &mut acc) {
                return Some(vec![Fan { center: v, pairs: acc }]);
            }
        }
        return None;
    }

    let mut used = VertexSet::new(n);
    let mut acc = Vec::new();
    fans_rec(blue, &rank, 0, k, t, &mut used, &mut acc).then_some(acc)
}

/// All matchings of exactly `need` pairs inside `pool` (complete).
fn collect_matchings(
    blue: &[VertexSet],
    pool: &VertexSet,
    need: usize,
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if need == 0 {
        out.push(acc.clone());
        return;
    }
    if pool.len() < 2 * need {
        return;
    }
    let w = match pool.first() {
        Some(w) => w,
        None => return,
    };
    let mut without = pool.clone();
    without.remove(w);
    let mut partners = pool.clone();
    partners.intersect_with(&blue[w]);
    for v in partners.iter() {
        let mut rest = without.clone();
        rest.remove(v);
        acc.push((w, v));
        collect_matchings(blue, &rest, need - 1, acc, out);
        acc.pop();
    }
    collect_matchings(blue, &without, need, acc, out);
}

// ---------------------------------------------------------------------------
// Arrowing by enumeration
// ---------------------------------------------------------------------------

/// Does every red/blue coloring of `K_n` contain a red `g` or a blue
/// `t F_k`? `false` comes with a canonicalized witness coloring.
pub fn arrows(n: usize, g: &Graph, spec: FanSpec) -> Result<ArrowsResult, OracleError> {
    arrows_with_ceiling(n, g, spec, DEFAULT_CEILING)
}

pub fn arrows_with_ceiling(
    n: usize,
    g: &Graph,
    spec: FanSpec,
    ceiling: usize,
) -> Result<ArrowsResult, OracleError> {
    if n > ceiling {
        return Err(OracleError::AboveCeiling { n, ceiling });
    }
    if n <= 1 {
        // K_0 / K_1 have no edges: the only "coloring" avoids both targets
        // unless a target is a single vertex or empty.
        let red_hit = g.order() <= n && g.size() == 0;
        return Ok(ArrowsResult {
            arrows: red_hit,
            stats: SearchStats {
                colorings_examined: 1,
                prune_hits: 0,
                witness: if red_hit { None } else { Some(TwoColoring::all_red(n)) },
            },
        });
    }

    // Edge order: vertex 0's star first, then the rest lexicographically.
    let mut edges: Vec<(usize, usize)> = (1..n).map(|j| (0, j)).collect();
    for u in 1..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }

    // Branch r = number of red edges at vertex 0 (prefix red, rest blue),
    // then split on the first few free edges for parallelism.
    let mut tasks = Vec::new();
    let free = edges.len() - (n - 1);
    let split = free.min(4);
    for r in 0..n {
        for mask in 0u32..(1 << split) {
            tasks.push((r, mask));
        }
    }

    let results: Vec<(Option<Vec<EdgeColor>>, u64, u64)> = tasks
        .par_iter()
        .map(|&(r, mask)| {
            let mut colors: Vec<Option<EdgeColor>> = vec![None; edges.len()];
            for (j, slot) in colors.iter_mut().enumerate().take(n - 1) {
                *slot = Some(if j < r { EdgeColor::Red } else { EdgeColor::Blue });
            }
            for b in 0..split {
                colors[n - 1 + b] = Some(if mask >> b & 1 == 1 {
                    EdgeColor::Red
                } else {
                    EdgeColor::Blue
                });
            }
            let mut state = EnumState::new(n, &edges, colors, g, spec);
            if !state.consistent_prefix() {
                // The fixed prefix already contains a target.
                return (None, 1, 1);
            }
            let witness = state.dfs(n - 1 + split);
            (witness, state.examined, state.prunes)
        })
        .collect();

    let mut stats = SearchStats::default();
    let mut best: Option<Vec<EdgeColor>> = None;
    for (w, examined, prunes) in results {
        stats.colorings_examined += examined;
        stats.prune_hits += prunes;
        if let Some(w) = w {
            if best.is_none() {
                best = Some(w);
            }
        }
    }
    let arrows = best.is_none();
    if let Some(colors) = best {
        let coloring = coloring_from_edge_list(n, &edges, &colors);
        let canonical = canonicalize(&coloring);
        debug_assert!(find_red_subgraph(&canonical, g).is_none());
        debug_assert!(find_blue_tfans(&canonical, spec.k, spec.t).is_none());
        stats.witness = Some(canonical);
    }
    Ok(ArrowsResult { arrows, stats })
}

struct EnumState<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    colors: Vec<Option<EdgeColor>>,
    red: Vec<VertexSet>,
    blue: Vec<VertexSet>,
    g: &'a Graph,
    spec: FanSpec,
    examined: u64,
    prunes: u64,
}

impl<'a> EnumState<'a> {
    fn new(
        n: usize,
        edges: &'a [(usize, usize)],
        colors: Vec<Option<EdgeColor>>,
        g: &'a Graph,
        spec: FanSpec,
    ) -> Self {
        let mut red: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        let mut blue: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        for (i, &(u, v)) in edges.iter().enumerate() {
            match colors[i] {
                Some(EdgeColor::Red) => {
                    red[u].insert(v);
                    red[v].insert(u);
                }
                Some(EdgeColor::Blue) => {
                    blue[u].insert(v);
                    blue[v].insert(u);
                }
                None => {}
            }
        }
        EnumState { n, edges, colors, red, blue, g, spec, examined: 0, prunes: 0 }
    }

    fn red_hit(&self) -> bool {
        find_subgraph(&self.red, self.n, self.g).is_some()
    }

    fn blue_hit(&self) -> bool {
        find_tfans_in(&self.blue, self.n, self.spec.k, self.spec.t).is_some()
    }

    fn consistent_prefix(&mut self) -> bool {
        !(self.red_hit() || self.blue_hit())
    }

    /// Explores all completions from edge `idx`; returns an avoiding
    /// assignment if one exists.
    fn dfs(&mut self, idx: usize) -> Option<Vec<EdgeColor>> {
        self.examined += 1;
        if idx == self.edges.len() {
            return Some(self.colors.iter().map(|c| c.unwrap()).collect());
        }
        let (u, v) = self.edges[idx];
        for color in [EdgeColor::Red, EdgeColor::Blue] {
            self.colors[idx] = Some(color);
            let hit = match color {
                EdgeColor::Red => {
                    self.red[u].insert(v);
                    self.red[v].insert(u);
                    self.red_hit()
                }
                EdgeColor::Blue => {
                    self.blue[u].insert(v);
                    self.blue[v].insert(u);
                    self.blue_hit()
                }
            };
            if hit {
                self.prunes += 1;
            } else if let Some(w) = self.dfs(idx + 1) {
                return Some(w);
            }
            match color {
                EdgeColor::Red => {
                    self.red[u].remove(v);
                    self.red[v].remove(u);
                }
                EdgeColor::Blue => {
                    self.blue[u].remove(v);
                    self.blue[v].remove(u);
                }
            }
            self.colors[idx] = None;
        }
        None
    }
}

fn coloring_from_edge_list(n: usize, edges: &[(usize, usize)], colors: &[EdgeColor]) -> TwoColoring {
    let mut lookup = std::collections::HashMap::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        lookup.insert((u, v), colors[i]);
    }
    TwoColoring::from_fn(n, |u, v| lookup[&(u, v)])
}

/// Lexicographically least relabeling of the coloring (red = 1 bits over the
/// canonical pair order, maximized first), by full permutation search.
/// Intended for witness storage at enumeration scale.
pub fn canonicalize(c: &TwoColoring) -> TwoColoring {
    let n = c.order();
    assert!(n <= 9, "canonical form by permutation search needs n <= 9");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    let mut best_perm: Vec<usize> = perm.clone();
    loop {
        let mut bits = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                bits.push(c.is_red(perm[u], perm[v]));
            }
        }
        if best.as_ref().is_none_or(|b| bits > *b) {
            best = Some(bits);
            best_perm = perm.clone();
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    TwoColoring::from_fn(n, |u, v| {
        if c.is_red(best_perm[u], best_perm[v]) {
            EdgeColor::Red
        } else {
            EdgeColor::Blue
        }
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The least `N <= n_max` with `arrows(N) = true`, exploiting monotonicity.
pub fn ramsey_exact(g: &Graph, spec: FanSpec, n_max: usize) -> Result<Option<usize>, OracleError> {
    ramsey_exact_with_ceiling(g, spec, n_max, DEFAULT_CEILING)
}

pub fn ramsey_exact_with_ceiling(
    g: &Graph,
    spec: FanSpec,
    n_max: usize,
    ceiling: usize,
) -> Result<Option<usize>, OracleError> {
    for n in 1..=n_max {
        if arrows_with_ceiling(n, g, spec, ceiling)?.arrows {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Exact independence number by branch and bound; refuses above order 40.
pub fn independence_number(g: &Graph) -> Result<usize, OracleError> {
    if g.order() > INDEPENDENCE_CEILING {
        return Err(OracleError::TooLargeForIndependence { n: g.order() });
    }
    let adj: Vec<VertexSet> = (0..g.order()).map(|v| g.neighbors(v).clone()).collect();
    Ok(max_independent_set(&adj).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, Graph, GraphFamily};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn red_subgraph_examples() {
        let c = TwoColoring::all_blue(5);
        let p3 = build_named(GraphFamily::Path(3)).unwrap();
        assert!(find_red_subgraph(&c, &p3).is_none());
        let k2 = build_named(GraphFamily::Path(2)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for _ in 0..50 {
            let c = TwoColoring::random(6, &mut rng);
            let has_red_edge = (0..6).any(|v| c.red_degree(v) > 0);
            assert_eq!(find_red_subgraph(&c, &k2).is_some(), has_red_edge);
        }
    }

    #[test]
    fn red_subgraph_matches_brute_force() {
        fn brute(c: &TwoColoring, g: &Graph) -> bool {
            fn inject(
                c: &TwoColoring,
                g: &Graph,
                map: &mut Vec<usize>,
                used: &mut Vec<bool>,
            ) -> bool {
                let v = map.len();
                if v == g.order() {
                    return g.edges().all(|(a, b)| c.is_red(map[a], map[b]));
                }
                for h in 0..c.order() {
                    if !used[h] {
                        used[h] = true;
                        map.push(h);
                        if inject(c, g, map, used) {
                            return true;
                        }
                        map.pop();
                        used[h] = false;
                    }
                }
                false
            }
            inject(c, g, &mut Vec::new(), &mut vec![false; c.order()])
        }
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let patterns: Vec<Graph> = vec![
            build_named(GraphFamily::Path(3)).unwrap(),
            build_named(GraphFamily::Path(4)).unwrap(),
            build_named(GraphFamily::Star(4)).unwrap(),
            build_named(GraphFamily::Cycle(4)).unwrap(),
            build_named(GraphFamily::Complete(3)).unwrap(),
            build_named(GraphFamily::Complete(4)).unwrap(),
        ];
        for _ in 0..60 {
            let c = TwoColoring::random(6, &mut rng);
            for g in &patterns {
                let got = find_red_subgraph(&c, g);
                assert_eq!(got.is_some(), brute(&c, g), "pattern {g:?}");
                if let Some(map) = got {
                    for (a, b) in g.edges() {
                        assert!(c.is_red(map[a], map[b]));
                    }
                }
            }
        }
    }

    #[test]
    fn blue_fans_examples() {
        // All-blue K_{t(2k+1)} has t fans.
        for (k, t) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let c = TwoColoring::all_blue(t * (2 * k + 1));
            let fans = find_blue_tfans(&c, k, t).unwrap();
            assert_eq!(fans.len(), t);
        }
        // Blue graph bipartite: triangle-free, no fans.
        let c = TwoColoring::from_fn(8, |u, v| {
            if (u < 4) == (v < 4) {
                EdgeColor::Red
            } else {
                EdgeColor::Blue
            }
        });
        assert!(find_blue_tfans(&c, 1, 1).is_none());
        assert!(find_blue_tfans(&c, 2, 1).is_none());
    }

    #[test]
    fn blue_fans_match_exhaustive_search() {
        fn brute_has_fans(c: &TwoColoring, k: usize, t: usize) -> bool {
            // Enumerate disjoint fan tuples over all center subsets and all
            // matchings, small boards only.
            fn rec(c: &TwoColoring, k: usize, left: usize, used: &mut Vec<bool>, min_center: usize) -> bool {
                if left == 0 {
                    return true;
                }
                let n = c.order();
                for center in min_center..n {
                    if used[center] {
                        continue;
                    }
                    let pool: Vec<usize> =
                        (0..n).filter(|&v| !used[v] && v != center && c.is_blue(center, v)).collect();
                    if pool.len() < 2 * k {
                        continue;
                    }
                    if try_matchings(c, k, &pool, &mut Vec::new(), used, center, left) {
                        return true;
                    }
                }
                false
            }
            fn try_matchings(
                c: &TwoColoring,
                k: usize,
                pool: &[usize],
                picked: &mut Vec<(usize, usize)>,
                used: &mut Vec<bool>,
                center: usize,
                left: usize,
            ) -> bool {
                if picked.len() == k {
                    used[center] = true;
                    for &(a, b) in picked.iter() {
                        used[a] = true;
                        used[b] = true;
                    }
                    let ok = rec(c, k, left - 1, used, 0);
                    used[center] = false;
                    for &(a, b) in picked.iter() {
                        used[a] = false;
                        used[b] = false;
                    }
                    return ok;
                }
                for i in 0..pool.len() {
                    for j in i + 1..pool.len() {
                        let (a, b) = (pool[i], pool[j]);
                        if picked.iter().any(|&(x, y)| x == a || y == a || x == b || y == b) {
                            continue;
                        }
                        if c.is_blue(a, b) {
                            picked.push((a, b));
                            if try_matchings(c, k, pool, picked, used, center, left) {
                                return true;
                            }
                            picked.pop();
                        }
                    }
                }
                false
            }
            rec(c, k, t, &mut vec![false; c.order()], 0)
        }

        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for trial in 0..120 {
            let n = rng.random_range(3..=9usize);
            let c = TwoColoring::random(n, &mut rng);
            for (k, t) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                let got = find_blue_tfans(&c, k, t);
                assert_eq!(
                    got.is_some(),
                    brute_has_fans(&c, k, t),
                    "trial {trial} k={k} t={t}"
                );
                if let Some(fans) = got {
                    let g = build_named(GraphFamily::Path(2)).unwrap();
                    crate::embed::verify_certificate(
                        &c,
                        &g,
                        k,
                        t,
                        &crate::embed::Certificate::BlueFans(fans),
                    )
                    .map_err(|e| panic!("invalid fans: {e}"))
                    .unwrap();
                }
            }
        }
    }

    #[test]
    fn arrows_small_known_values() {
        let p3 = build_named(GraphFamily::Path(3)).unwrap();
        let f1 = FanSpec::new(1, 1).unwrap();
        let r4 = arrows(4, &p3, f1).unwrap();
        assert!(!r4.arrows);
        let w = r4.stats.witness.unwrap();
        assert!(find_red_subgraph(&w, &p3).is_none());
        assert!(find_blue_tfans(&w, 1, 1).is_none());

        let r5 = arrows(5, &p3, f1).unwrap();
        assert!(r5.arrows);
    }

    #[test]
    fn arrows_monotone_for_p3_f1() {
        let p3 = build_named(GraphFamily::Path(3)).unwrap();
        let f1 = FanSpec::new(1, 1).unwrap();
        let seq: Vec<bool> = (1..=6).map(|n| arrows(n, &p3, f1).unwrap().arrows).collect();
        for w in seq.windows(2) {
            assert!(!w[0] || w[1], "arrowing must be monotone: {seq:?}");
        }
    }

    #[test]
    fn arrows_refuses_above_ceiling() {
        let p3 = build_named(GraphFamily::Path(3)).unwrap();
        let f1 = FanSpec::new(1, 1).unwrap();
        assert_eq!(
            arrows(9, &p3, f1).unwrap_err(),
            OracleError::AboveCeiling { n: 9, ceiling: 8 }
        );
    }

    #[test]
    fn extremal_orders_never_arrow() {
        // At order 2n+t-3 the two-clique witness avoids both targets, so
        // arrowing must fail there for every connected G of order n.
        for n in 3..=4usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u64..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges);
                if !g.is_connected() {
                    continue;
                }
                for (k, t) in [(1, 1), (2, 1), (1, 2)] {
                    let order = 2 * n + t - 3;
                    let res = arrows(order, &g, FanSpec::new(k, t).unwrap()).unwrap();
                    assert!(!res.arrows, "g={g:?} k={k} t={t} order={order}");
                }
            }
        }
    }

    #[test]
    fn arrows_monotone_on_acceptance_instances() {
        let star4 = build_named(GraphFamily::Star(4)).unwrap();
        for (g, spec, r) in [
            (build_named(GraphFamily::Path(4)).unwrap(), FanSpec::new(1, 1).unwrap(), 7),
            (star4.clone(), FanSpec::new(1, 1).unwrap(), 7),
            (star4, FanSpec::new(2, 1).unwrap(), 7),
        ] {
            let seq: Vec<bool> = (1..=8).map(|n| arrows(n, &g, spec).unwrap().arrows).collect();
            for w in seq.windows(2) {
                assert!(!w[0] || w[1], "not monotone: {seq:?}");
            }
            assert_eq!(seq.iter().position(|&b| b), Some(r - 1), "first true must be r");
        }
    }

    #[test]
    fn ramsey_exact_p3_f1_is_5() {
        let p3 = build_named(GraphFamily::Path(3)).unwrap();
        let f1 = FanSpec::new(1, 1).unwrap();
        assert_eq!(ramsey_exact(&p3, f1, 8).unwrap(), Some(5));
    }

    #[test]
    fn independence_examples() {
        let star = build_named(GraphFamily::Star(6)).unwrap();
        assert_eq!(independence_number(&star).unwrap(), 5);
        let c5 = build_named(GraphFamily::Cycle(5)).unwrap();
        assert_eq!(independence_number(&c5).unwrap(), 2);
        let big = build_named(GraphFamily::Path(41)).unwrap();
        assert!(independence_number(&big).is_err());
    }

    #[test]
    fn canonicalize_is_isomorphism_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..30 {
            let c = TwoColoring::random(6, &mut rng);
            // Relabel by a random permutation; canonical forms must agree.
            let mut perm: Vec<usize> = (0..6).collect();
            for i in (1..6).rev() {
                let j = rng.random_range(0..=i);
                perm.swap(i, j);
            }
            let relabeled = TwoColoring::from_fn(6, |u, v| {
                if c.is_red(perm[u], perm[v]) {
                    EdgeColor::Red
                } else {
                    EdgeColor::Blue
                }
            });
            let a = canonicalize(&c);
            let b = canonicalize(&relabeled);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn isomorph_reduction_agrees_with_full_enumeration() {
        // For n <= 5, compare the symmetry-broken enumeration against brute
        // force over all 2^C(n,2) colorings.
        let f1 = FanSpec::new(1, 1).unwrap();
        let patterns = [
            build_named(GraphFamily::Path(3)).unwrap(),
            build_named(GraphFamily::Path(4)).unwrap(),
            build_named(GraphFamily::Complete(3)).unwrap(),
        ];
        for g in &patterns {
            for n in 2..=5usize {
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                let mut full = true;
                'outer: for mask in 0u64..(1 << pairs.len()) {
                    let c = TwoColoring::from_fn(n, |u, v| {
                        let idx = pairs.iter().position(|&p| p == (u, v)).unwrap();
                        if mask >> idx & 1 == 1 {
                            EdgeColor::Red
                        } else {
                            EdgeColor::Blue
                        }
                    });
                    if find_red_subgraph(&c, g).is_none() && find_blue_tfans(&c, 1, 1).is_none() {
                        full = false;
                        break 'outer;
                    }
                }
                let reduced = arrows(n, g, f1).unwrap().arrows;
                assert_eq!(reduced, full, "n={n}, g={g:?}");
            }
        }
    }
}
