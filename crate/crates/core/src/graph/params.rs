use std::collections::VecDeque;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

pub const TREEWIDTH_LIMIT: usize = 14;

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Maximum independent set by branch and bound; returns `(alpha, witness)`.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    fn go(g: &Graph, cand: VertexSet, chosen: VertexSet, best: &mut VertexSet) {
        if chosen.len() + cand.len() <= best.len() {
            return;
        }
        // vertices with no candidate neighbour can always be taken
        let free: VertexSet = cand
            .iter()
            .filter(|&v| g.neighbors(v).is_disjoint(cand))
            .collect();
        let chosen = chosen.union(free);
        let cand = cand.difference(free);
        let Some(v) = cand
            .iter()
            .max_by_key(|&v| g.neighbors(v).intersection(cand).len())
        else {
            if chosen.len() > best.len() {
                *best = chosen;
            }
            return;
        };
        go(
            g,
            cand.difference(g.neighbors(v)).without(v),
            chosen.with(v),
            best,
        );
        go(g, cand.without(v), chosen, best);
    }
    let mut best = VertexSet::EMPTY;
    go(g, g.vertices(), VertexSet::EMPTY, &mut best);
    (best.len(), best)
}

/// Exact treewidth by dynamic programming over vertex subsets.
pub fn treewidth(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > TREEWIDTH_LIMIT {
        return Err(Error::UnsupportedSize {
            operation: "treewidth",
            n,
            limit: TREEWIDTH_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    // best[S]: minimum over orderings of S eliminated first of the largest
    // neighbourhood seen at elimination time
    let mut best = vec![i32::MAX; 1 << n];
    best[0] = -1;
    for s in 1u64..(1u64 << n) {
        let set = VertexSet(s);
        let mut value = i32::MAX;
        for v in set {
            let rest = set.without(v);
            let prev = best[rest.0 as usize];
            if prev >= value {
                continue;
            }
            let reach = g.reachable_within(v, rest.with(v));
            let mut boundary = VertexSet::EMPTY;
            for w in reach {
                boundary = boundary.union(g.neighbors(w));
            }
            let q = boundary.difference(set).len() as i32;
            value = value.min(prev.max(q));
        }
        best[s as usize] = value;
    }
    Ok(best[(1usize << n) - 1].max(0) as usize)
}
