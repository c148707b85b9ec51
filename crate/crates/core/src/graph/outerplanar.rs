//! Outerplanarity.
//!
//! `is_outerplanar` works block by block: a nonseparable graph on at least
//! three vertices is outerplanar iff it has a Hamiltonian cycle whose chords
//! pairwise do not cross (the cycle is then the outer face). `has_minor` is
//! an exhaustive delete/contract search used to cross-check it against the
//! forbidden-minor characterisation (no `K4`, no `K_{2,3}`).

use std::collections::HashSet;

use super::{block_decomposition, canonical_form, Graph, VertexSet};
use crate::error::{Error, Result};

pub const OUTERPLANAR_LIMIT: usize = 16;

pub fn is_outerplanar(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n > OUTERPLANAR_LIMIT {
        return Err(Error::UnsupportedSize {
            operation: "is_outerplanar",
            n,
            limit: OUTERPLANAR_LIMIT,
        });
    }
    if n >= 2 && g.size() > 2 * n - 3 {
        return Ok(false);
    }
    let blocks = block_decomposition(g).blocks;
    Ok(blocks
        .into_iter()
        .filter(|b| b.len() >= 3)
        .all(|b| block_is_outerplanar(&g.induced_subgraph(b).0)))
}

fn block_is_outerplanar(b: &Graph) -> bool {
    let k = b.order();
    if b.size() > 2 * k - 3 {
        return false;
    }
    let mut pos = [usize::MAX; 64];
    let mut path = vec![0usize];
    pos[0] = 0;
    let mut chords = Vec::new();
    extend(b, &mut path, &mut pos, &mut chords)
}

fn crosses(chords: &[(usize, usize)], i: usize, j: usize) -> bool {
    chords
        .iter()
        .any(|&(c, d)| (c < i && i < d && d < j) || (i < c && c < j && j < d))
}

/// Depth-first search for a Hamiltonian cycle through vertex 0 whose chords
/// are non-crossing; chords are recorded as pairs of path positions.
fn extend(
    b: &Graph,
    path: &mut Vec<usize>,
    pos: &mut [usize; 64],
    chords: &mut Vec<(usize, usize)>,
) -> bool {
    let k = b.order();
    let last = *path.last().expect("nonempty path");
    let visited: VertexSet = path.iter().copied().collect();
    for w in b.neighbors(last).difference(visited) {
        let at = path.len();
        let closing = at + 1 == k;
        if closing && !b.has_edge(w, path[0]) {
            continue;
        }
        let new_chords: Vec<(usize, usize)> = b
            .neighbors(w)
            .intersection(visited)
            .iter()
            .map(|u| pos[u])
            .filter(|&p| p + 1 != at && !(closing && p == 0))
            .map(|p| (p, at))
            .collect();
        if new_chords.iter().any(|&(i, j)| crosses(chords, i, j)) {
            continue;
        }
        if closing {
            return true;
        }
        let saved = chords.len();
        chords.extend(new_chords);
        path.push(w);
        pos[w] = at;
        if extend(b, path, pos, chords) {
            return true;
        }
        path.pop();
        pos[w] = usize::MAX;
        chords.truncate(saved);
    }
    false
}

fn contract(g: &Graph, u: usize, v: usize) -> Graph {
    let mut h = g.clone();
    for w in g.neighbors(v).without(u) {
        h.add_edge(u, w);
    }
    h.remove_vertex(v).0
}

/// Whether `h` is a minor of `g`, by exhaustive deletion and contraction.
/// Exponential; intended for small graphs.
pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    let target = canonical_form(h).graph;
    let mut dead = HashSet::new();
    minor_search(g, &target, &mut dead)
}

fn minor_search(g: &Graph, h: &Graph, dead: &mut HashSet<Graph>) -> bool {
    if g.order() < h.order() || g.size() < h.size() {
        return false;
    }
    let key = canonical_form(g).graph;
    if g.order() == h.order() && g.size() == h.size() {
        return key == *h;
    }
    if dead.contains(&key) {
        return false;
    }
    let g = key;
    let found = (0..g.order()).any(|v| minor_search(&g.remove_vertex(v).0, h, dead))
        || g.edges().into_iter().any(|(u, v)| {
            minor_search(&g.remove_edge(u, v), h, dead)
                || minor_search(&contract(&g, u, v), h, dead)
        });
    if !found {
        dead.insert(g);
    }
    found
}
