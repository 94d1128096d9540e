//! Exact clique and independent-set search on bitset adjacency.

use crate::bitset::VertexSet;

/// Finds a clique of exactly `size` vertices inside `cand`, or `None` if no
/// such clique exists. Complete backtracking with a counting bound.
pub fn find_clique_of_size(adj: &[VertexSet], cand: &VertexSet, size: usize) -> Option<Vec<usize>> {
    if size == 0 {
        return Some(Vec::new());
    }
    let mut chosen = Vec::with_capacity(size);
    if extend_clique(adj, cand.clone(), size, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn extend_clique(adj: &[VertexSet], cand: VertexSet, size: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == size {
        return true;
    }
    if chosen.len() + cand.len() < size {
        return false;
    }
    for v in cand.iter() {
        let mut next = cand.clone();
        next.intersect_with(&adj[v]);
        // Only keep candidates above v: enumerates each clique once.
        for w in cand.iter() {
            if w > v {
                break;
            }
            next.remove(w);
        }
        chosen.push(v);
        if extend_clique(adj, next, size, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// A maximum independent set, exact branch and bound. Intended for graphs of
/// order at most a few dozen.
pub fn max_independent_set(adj: &[VertexSet]) -> Vec<usize> {
    let n = adj.len();
    let mut best = Vec::new();
    let mut cur = Vec::new();
    let all = VertexSet::full(n);
    branch_mis(adj, all, &mut cur, &mut best);
    best.sort_unstable();
    best
}

fn branch_mis(adj: &[VertexSet], pool: VertexSet, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cur.len() + pool.len() <= best.len() {
        return;
    }
    // Branch on a maximum-degree vertex within the pool; taking isolated
    // vertices is forced.
    let mut pick = None;
    let mut maxdeg = 0;
    for v in pool.iter() {
        let d = adj[v].intersection_len(&pool);
        if d == 0 {
            // Free vertex.
            cur.push(v);
            let mut rest = pool.clone();
            rest.remove(v);
            branch_mis(adj, rest, cur, best);
            cur.pop();
            return;
        }
        if pick.is_none() || d > maxdeg {
            pick = Some(v);
            maxdeg = d;
        }
    }
    let Some(v) = pick else {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        return;
    };
    // Include v.
    let mut without_nbrs = pool.clone();
    without_nbrs.difference_with(&adj[v]);
    without_nbrs.remove(v);
    cur.push(v);
    branch_mis(adj, without_nbrs, cur, best);
    cur.pop();
    // Exclude v.
    let mut rest = pool;
    rest.remove(v);
    branch_mis(adj, rest, cur, best);
}
