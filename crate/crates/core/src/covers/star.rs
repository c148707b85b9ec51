//! Removable stars and the `ceil(n/2)` cover.
//!
//! In a connected graph on at least three vertices some induced star
//! `K_{1,p}` can be deleted leaving a connected graph. Deleting one
//! repeatedly peels off trees of at least two vertices, which gives a tree
//! cover of size at most `ceil(n/2)`.

use super::{verify_cover, TreeCover};
use crate::error::{precondition, Result};
use crate::graph::{Graph, VertexSet};

/// Candidate stars examined by the direct search before it falls back to
/// the inductive construction.
const STAR_SEARCH_BUDGET: usize = 200_000;

/// Whether `set` induces a star with at least two vertices whose removal
/// leaves a nonempty connected graph.
pub fn is_removable_star(g: &Graph, set: VertexSet) -> bool {
    set.len() >= 2
        && set.is_subset(g.vertices())
        && g.induces_tree(set)
        && (set.len() == 2
            || set
                .iter()
                .any(|c| g.neighbors(c).intersection(set).len() == set.len() - 1))
        && {
            let rest = g.vertices().difference(set);
            !rest.is_empty() && g.is_connected_set(rest)
        }
}

fn check_star_input(g: &Graph, operation: &'static str) -> Result<()> {
    if g.order() < 3 {
        return precondition(operation, "graph must have at least 3 vertices");
    }
    if !g.is_connected() {
        return precondition(operation, "graph must be connected");
    }
    Ok(())
}

/// Smallest removable star: fewest vertices, then smallest centre, then the
/// lexicographically smallest leaf set.
pub fn find_removable_star(g: &Graph) -> Result<VertexSet> {
    check_star_input(g, "find_removable_star")?;
    match search_star(g, g.vertices(), STAR_SEARCH_BUDGET) {
        Some(h) => Ok(h),
        None => Ok(star_in(g, g.vertices())),
    }
}

/// Removable star built by following the inductive existence argument
/// (delete a non-cut vertex, find a star in the rest, repair it).
pub fn removable_star_constructive(g: &Graph) -> Result<VertexSet> {
    check_star_input(g, "removable_star_constructive")?;
    Ok(star_in(g, g.vertices()))
}

/// Calls `f` on each `k`-subset of `items` in lexicographic order until it
/// returns true.
fn for_each_combination(items: &[usize], k: usize, f: &mut impl FnMut(VertexSet) -> bool) -> bool {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        acc: VertexSet,
        f: &mut impl FnMut(VertexSet) -> bool,
    ) -> bool {
        if k == 0 {
            return f(acc);
        }
        for i in start..=items.len() - k {
            if go(items, k - 1, i + 1, acc.with(items[i]), f) {
                return true;
            }
        }
        false
    }
    k <= items.len() && go(items, k, 0, VertexSet::EMPTY, f)
}

fn search_star(g: &Graph, within: VertexSet, budget: usize) -> Option<VertexSet> {
    let mut tried = 0usize;
    for size in 2..within.len() {
        for c in within {
            let nb = g.neighbors(c).intersection(within).to_vec();
            let mut found = None;
            let hit = for_each_combination(&nb, size - 1, &mut |leaves| {
                tried += 1;
                if tried > budget {
                    return true;
                }
                if !g.is_independent(leaves) {
                    return false;
                }
                let rest = within.difference(leaves).without(c);
                if g.is_connected_set(rest) {
                    found = Some(leaves.with(c));
                    return true;
                }
                false
            });
            if found.is_some() {
                return found;
            }
            if hit {
                return None;
            }
        }
    }
    None
}

/// A vertex whose removal keeps `G[within]` connected: the last vertex
/// reached by a BFS is a leaf of the BFS tree.
fn non_cut_vertex(g: &Graph, within: VertexSet) -> usize {
    let mut seen = VertexSet::singleton(within.first().expect("nonempty"));
    let mut frontier = seen;
    let mut last = within.first().expect("nonempty");
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(g.neighbors(v).intersection(within));
        }
        next = next.difference(seen);
        if let Some(v) = next.iter().last() {
            last = v;
        }
        seen = seen.union(next);
        frontier = next;
    }
    last
}

fn star_centre(g: &Graph, h: VertexSet) -> usize {
    h.iter()
        .max_by_key(|&c| (g.neighbors(c).intersection(h).len(), usize::MAX - c))
        .expect("nonempty star")
}

fn star_in(g: &Graph, within: VertexSet) -> VertexSet {
    let connected_without = |s: VertexSet| {
        let rest = within.difference(s);
        !rest.is_empty() && g.is_connected_set(rest)
    };
    if within.len() == 3 {
        // G[within] is P3 or K3; some edge leaves one vertex behind
        for u in within {
            for w in g.neighbors(u).intersection(within) {
                let h = VertexSet::from_slice(&[u, w]);
                if connected_without(h) {
                    return h;
                }
            }
        }
        unreachable!("a connected graph on three vertices has a removable edge");
    }
    let v = non_cut_vertex(g, within);
    let inner = within.without(v);
    let h = star_in(g, inner);
    let rest = inner.difference(h);
    let nv = g.neighbors(v).intersection(within);
    if !nv.is_disjoint(rest) {
        return h;
    }
    if h.len() == 2 {
        let hv = h.to_vec();
        let (a, b) = (hv[0], hv[1]);
        match (nv.contains(a), nv.contains(b)) {
            (true, false) => return h.with(v),
            (false, true) => return h.with(v),
            _ => {
                // v sees both; keep whichever of a, b still reaches the rest
                let keep = if g.neighbors(a).is_disjoint(rest) {
                    b
                } else {
                    a
                };
                return VertexSet::from_slice(&[v, h.without(keep).first().expect("two")]);
            }
        }
    }
    let c = star_centre(g, h);
    if let Some(w) = nv.intersection(h.without(c)).first() {
        let pair = VertexSet::from_slice(&[v, w]);
        if g.is_connected_set(inner.without(w)) {
            return pair;
        }
        return h.without(w);
    }
    h.with(v)
}

/// Cover of size at most `ceil(n/2)` by repeatedly deleting a removable
/// star; the final one or two vertices form the last part.
pub fn half_order_cover(g: &Graph) -> Result<TreeCover> {
    if g.order() < 2 {
        return precondition("half_order_cover", "graph must have at least 2 vertices");
    }
    if !g.is_connected() {
        return precondition("half_order_cover", "graph must be connected");
    }
    let mut rest = g.vertices();
    let mut parts = Vec::new();
    while rest.len() >= 3 {
        let (h, map) = g.induced_subgraph(rest);
        let star = find_removable_star(&h)?;
        let star: VertexSet = star.iter().map(|v| map[v]).collect();
        parts.push(star);
        rest = rest.difference(star);
    }
    parts.push(rest);
    Ok(verify_cover(g, &parts).expect("removable stars are induced trees"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_connected;

    fn ladder() -> Graph {
        // two paths 0..4 and 5..9 with rungs 1-6, 2-7, 3-8
        let mut e: Vec<(usize, usize)> = (0..4).map(|i| (i, i + 1)).collect();
        e.extend((5..9).map(|i| (i, i + 1)));
        e.extend([(1, 6), (2, 7), (3, 8)]);
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn star_examples() {
        assert_eq!(
            find_removable_star(&Graph::path(4)).unwrap(),
            VertexSet::from_slice(&[0, 1])
        );
        assert!(is_removable_star(
            &Graph::path(4),
            VertexSet::from_slice(&[2, 3])
        ));
        let k4 = Graph::complete(4);
        let h = find_removable_star(&k4).unwrap();
        assert_eq!(h.len(), 2);
        assert!(is_removable_star(&k4, h));
        assert!(find_removable_star(&Graph::path(2)).is_err());
        assert!(find_removable_star(&Graph::empty(3)).is_err());
    }

    #[test]
    fn ladder_and_star_examples() {
        let g = ladder();
        assert_eq!(
            find_removable_star(&g).unwrap(),
            VertexSet::from_slice(&[0, 1])
        );
        let star = Graph::star(8);
        let other = VertexSet::full(9).without(1);
        assert!(is_removable_star(&star, other));
        let found = find_removable_star(&star).unwrap();
        assert_eq!(found.len(), 8);
        assert!(is_removable_star(&star, found));
    }

    #[test]
    fn both_constructions_give_removable_stars() {
        for n in 3..=7 {
            for g in enumerate_connected(n).unwrap() {
                let h = find_removable_star(&g).unwrap();
                assert!(is_removable_star(&g, h), "{g:?} {h:?}");
                let h = removable_star_constructive(&g).unwrap();
                assert!(is_removable_star(&g, h), "{g:?} {h:?}");
            }
        }
    }

    #[test]
    fn half_order_examples() {
        assert_eq!(half_order_cover(&Graph::complete(2)).unwrap().len(), 1);
        assert!(half_order_cover(&Graph::complete(5)).unwrap().len() <= 3);
        assert!(half_order_cover(&Graph::cycle(6)).unwrap().len() <= 3);
        assert!(half_order_cover(&Graph::empty(1)).is_err());
    }
}
