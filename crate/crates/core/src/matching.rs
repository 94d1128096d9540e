//! Exact matchings: Edmonds blossom on general graphs and augmenting-path
//! matching with deficiency extraction on bipartite red/blue sides.
//!
//! The blossom code is array-based in the classical style; index loops stay.
#![allow(clippy::needless_range_loop)]

use crate::bitset::VertexSet;

const NONE: usize = usize::MAX;

/// Maximum matching of the graph given by adjacency bitsets, as `mate[v]`
/// (`usize::MAX` when unmatched). Stops augmenting once `stop_at` pairs are
/// reached, so pass `usize::MAX` for a true maximum.
pub fn max_matching_mates(adj: &[VertexSet], stop_at: usize) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    let mut size = 0;

    // Cheap greedy seed.
    for v in 0..n {
        if mate[v] == NONE && size < stop_at {
            if let Some(w) = adj[v].iter().find(|&w| w != v && mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
                size += 1;
            }
        }
    }

    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut in_queue = vec![false; n];
    let mut in_blossom = vec![false; n];

    for root in 0..n {
        if mate[root] != NONE || size >= stop_at {
            continue;
        }
        // BFS for an augmenting path from `root`.
        for v in 0..n {
            parent[v] = NONE;
            base[v] = v;
            in_queue[v] = false;
        }
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        in_queue[root] = true;
        let mut augmented = false;

        'bfs: while let Some(v) = queue.pop_front() {
            for w in adj[v].iter() {
                if w == v || base[v] == base[w] || mate[v] == w {
                    continue;
                }
                if w == root || (mate[w] != NONE && parent[mate[w]] != NONE) {
                    // Odd cycle: contract the blossom.
                    let b = lca(&mate, &base, &parent, v, w);
                    for x in 0..n {
                        in_blossom[x] = false;
                    }
                    mark_path(&mate, &mut base, &mut parent, &mut in_blossom, v, b, w);
                    mark_path(&mate, &mut base, &mut parent, &mut in_blossom, w, b, v);
                    for x in 0..n {
                        if in_blossom[base[x]] {
                            base[x] = b;
                            if !in_queue[x] {
                                in_queue[x] = true;
                                queue.push_back(x);
                            }
                        }
                    }
                } else if parent[w] == NONE {
                    parent[w] = v;
                    if mate[w] == NONE {
                        // Augment along the alternating path ending at w.
                        let mut cur = w;
                        while cur != NONE {
                            let prev = parent[cur];
                            let next = mate[prev];
                            mate[cur] = prev;
                            mate[prev] = cur;
                            cur = next;
                        }
                        size += 1;
                        augmented = true;
                        break 'bfs;
                    } else {
                        let m = mate[w];
                        if !in_queue[m] {
                            in_queue[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        let _ = augmented;
    }
    mate
}

fn lca(mate: &[usize], base: &[usize], parent: &[usize], mut a: usize, mut b: usize) -> usize {
    let n = mate.len();
    let mut used = vec![false; n];
    loop {
        a = base[a];
        used[a] = true;
        if mate[a] == NONE {
            break;
        }
        a = parent[mate[a]];
    }
    loop {
        b = base[b];
        if used[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn mark_path(
    mate: &[usize],
    base: &mut [usize],
    parent: &mut [usize],
    in_blossom: &mut [bool],
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

/// Maximum matching as canonical pairs `(u, v)`, `u < v`, sorted.
pub fn max_matching_pairs(adj: &[VertexSet]) -> Vec<(usize, usize)> {
    mates_to_pairs(&max_matching_mates(adj, usize::MAX))
}

/// Some matching with at least `k` pairs, if one exists.
pub fn matching_of_size(adj: &[VertexSet], k: usize) -> Option<Vec<(usize, usize)>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let pairs = mates_to_pairs(&max_matching_mates(adj, k));
    if pairs.len() >= k {
        Some(pairs[..k].to_vec())
    } else {
        None
    }
}

pub fn mates_to_pairs(mate: &[usize]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for v in 0..mate.len() {
        if mate[v] != NONE && v < mate[v] {
            pairs.push((v, mate[v]));
        }
    }
    pairs
}

/// Result of maximum bipartite matching between `X` (left) and `Y` (right):
/// either every left vertex is matched, or the Hall violator reachable from
/// the unmatched left vertices is exposed.
pub struct BipartiteOutcome {
    /// `pairs[i] = Some(j)` matches left `i` with right `j` (indices local).
    pub pairs: Vec<Option<usize>>,
    /// Left vertices reachable from unmatched left vertices by alternating
    /// paths (includes the unmatched ones); empty iff the matching covers X.
    pub violator: Vec<usize>,
    /// Right vertices reachable along the same alternating paths; this is
    /// exactly the neighborhood of `violator`, and is smaller than it.
    pub violator_nbrs: Vec<usize>,
}

/// Kuhn's algorithm on an explicit left-to-right adjacency list.
pub fn max_bipartite_matching(left_adj: &[Vec<usize>], n_right: usize) -> BipartiteOutcome {
    let n_left = left_adj.len();
    let mut mate_right = vec![NONE; n_right];
    let mut mate_left = vec![NONE; n_left];

    fn try_augment(
        u: usize,
        left_adj: &[Vec<usize>],
        mate_right: &mut [usize],
        mate_left: &mut [usize],
        seen: &mut [bool],
    ) -> bool {
        for &y in &left_adj[u] {
            if !seen[y] {
                seen[y] = true;
                if mate_right[y] == NONE
                    || try_augment(mate_right[y], left_adj, mate_right, mate_left, seen)
                {
                    mate_right[y] = u;
                    mate_left[u] = y;
                    return true;
                }
            }
        }
        false
    }

    for u in 0..n_left {
        let mut seen = vec![false; n_right];
        try_augment(u, left_adj, &mut mate_right, &mut mate_left, &mut seen);
    }

    // Alternating reachability from unmatched left vertices.
    let mut left_reached = vec![false; n_left];
    let mut right_reached = vec![false; n_right];
    let mut stack: Vec<usize> = (0..n_left).filter(|&u| mate_left[u] == NONE).collect();
    for &u in &stack {
        left_reached[u] = true;
    }
    while let Some(u) = stack.pop() {
        for &y in &left_adj[u] {
            if !right_reached[y] {
                right_reached[y] = true;
                let m = mate_right[y];
                if m != NONE && !left_reached[m] {
                    left_reached[m] = true;
                    stack.push(m);
                }
            }
        }
    }

    let covered = mate_left.iter().all(|&m| m != NONE);
    BipartiteOutcome {
        pairs: mate_left.iter().map(|&m| if m == NONE { None } else { Some(m) }).collect(),
        violator: if covered {
            Vec::new()
        } else {
            (0..n_left).filter(|&u| left_reached[u]).collect()
        },
        violator_nbrs: if covered {
            Vec::new()
        } else {
            (0..n_right).filter(|&y| right_reached[y]).collect()
        },
    }
}
