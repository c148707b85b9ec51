//! The `floor(n/3)` cover for connected graphs of girth at least five.
//!
//! Recursion on a connected vertex set `S` with `|S| >= 6`:
//!
//! 1. `|S| = 6`: solved exactly (a tree, `C6`, or `C5` plus a leaf).
//! 2. A leaf is deleted, the rest covered, and the leaf added back.
//! 3. Otherwise take the induced path `x - y - z` with `y` of maximum degree
//!    and `x`, `z` its two smallest neighbours, and look at the components
//!    of `G[S] - {x, y, z}` (none is a single vertex).
//!    - A component `H` of order 3, 4 or 5 that is a tree becomes a part and
//!      `S - H` is covered recursively; a `C5` component loses one vertex
//!      adjacent to the path and the remaining `P4` becomes a part. When the
//!      leftover has fewer than six vertices, `|S| <= 10` and `S` is solved
//!      exactly.
//!    - With no `K2` components the path is a part and each component is
//!      covered recursively.
//!    - With one `K2` component `{u, v}`, pick a large component `H` and a
//!      path vertex `r` adjacent to it; `{x, y, z, u, v} - r` is a path and
//!      `H + r` is covered recursively.
//!    - With two or more, `{x} + X` and `{y, z} + Z` are trees, where `X`
//!      (`Z`) are the `K2` endpoints adjacent to `x` (`z`).

use super::{search::tree_cover_exact, verify_cover, TreeCover};
use crate::error::{precondition, Result};
use crate::graph::{girth, Graph, VertexSet};

pub fn girth5_cover(g: &Graph) -> Result<TreeCover> {
    if g.order() < 6 {
        return precondition("girth5_cover", "graph must have at least 6 vertices");
    }
    if g.is_forest() {
        return Ok(verify_cover(g, &g.components()).expect("components of a forest are trees"));
    }
    if !g.is_connected() {
        return precondition("girth5_cover", "graph must be connected");
    }
    if girth(g).is_some_and(|l| l < 5) {
        return precondition("girth5_cover", "graph must have girth at least 5");
    }
    let parts = cover(g, g.vertices());
    Ok(verify_cover(g, &parts).expect("girth-five construction yields induced trees"))
}

fn exact(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let (h, map) = g.induced_subgraph(s);
    let (_, cover) = tree_cover_exact(&h).expect("pieces of at most ten vertices are solvable");
    cover
        .parts()
        .iter()
        .map(|p| p.iter().map(|v| map[v]).collect())
        .collect()
}

fn cover(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    debug_assert!(s.len() >= 6 && g.is_connected_set(s));
    if g.induces_tree(s) {
        return vec![s];
    }
    if s.len() == 6 {
        return exact(g, s);
    }
    let deg = |v: usize| g.neighbors(v).intersection(s).len();
    if let Some(leaf) = s.iter().find(|&v| deg(v) == 1) {
        let mut parts = cover(g, s.without(leaf));
        let nb = g
            .neighbors(leaf)
            .intersection(s)
            .first()
            .expect("leaf has a neighbour");
        let i = parts.iter().position(|p| p.contains(nb)).expect("covered");
        parts[i].insert(leaf);
        return parts;
    }

    let y = s
        .iter()
        .max_by_key(|&v| (deg(v), usize::MAX - v))
        .expect("nonempty");
    let ny = g.neighbors(y).intersection(s).to_vec();
    let (x, z) = (ny[0], ny[1]);
    let path = VertexSet::from_slice(&[x, y, z]);
    let comps = g.components_within(s.difference(path));

    if let Some(&h) = comps.iter().find(|c| (3..=5).contains(&c.len())) {
        let (piece, rest) = if g.induces_tree(h) {
            (h, s.difference(h))
        } else {
            // a 5-cycle: drop one vertex adjacent to the path
            let u1 = h
                .iter()
                .find(|&u| !g.neighbors(u).is_disjoint(path))
                .expect("components attach to the path");
            (h.without(u1), s.difference(h).with(u1))
        };
        if rest.len() >= 6 {
            let mut parts = cover(g, rest);
            parts.push(piece);
            return parts;
        }
        if rest.len() == 4 {
            // the 5-cycle case with nothing else: {x, y, z, u1} is a path
            return vec![piece, rest];
        }
        return exact(g, s);
    }

    let pairs: Vec<VertexSet> = comps.iter().copied().filter(|c| c.len() == 2).collect();
    let large: Vec<VertexSet> = comps.iter().copied().filter(|c| c.len() >= 6).collect();
    let mut parts = Vec::new();
    match pairs.len() {
        0 => {
            parts.push(path);
            for &c in &large {
                parts.extend(cover(g, c));
            }
        }
        1 => {
            let h = large[0];
            let r = path
                .iter()
                .find(|&r| !g.neighbors(r).is_disjoint(h))
                .expect("components attach to the path");
            parts.push(path.union(pairs[0]).without(r));
            parts.extend(cover(g, h.with(r)));
            for &c in &large[1..] {
                parts.extend(cover(g, c));
            }
        }
        _ => {
            let ends = pairs.iter().fold(VertexSet::EMPTY, |a, &p| a.union(p));
            let xs = ends.intersection(g.neighbors(x));
            let zs = ends.intersection(g.neighbors(z));
            debug_assert_eq!(xs.union(zs), ends);
            parts.push(xs.with(x));
            parts.push(zs.with(y).with(z));
            for &c in &large {
                parts.extend(cover(g, c));
            }
        }
    }
    parts
}
