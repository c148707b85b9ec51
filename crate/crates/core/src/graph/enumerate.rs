//! Isomorphism-free generation of connected graphs.
//!
//! Every connected graph on `n >= 2` vertices has a vertex whose removal
//! leaves it connected, so the connected graphs on `n` vertices are exactly
//! the one-vertex extensions (with a nonempty neighbourhood) of connected
//! graphs on `n - 1` vertices. Candidates are deduplicated by canonical form.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{canonical_form, Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by [`enumerate_connected`].
pub const ENUMERATION_LIMIT: usize = 9;
/// Largest order accepted by [`enumerate_connected_where`].
pub const FILTERED_ENUMERATION_LIMIT: usize = 12;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in canonical labelling, sorted by graph6.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::UnsupportedSize {
            operation: "enumerate_connected",
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(generate(n, &|_| true))
}

/// Like [`enumerate_connected`] restricted to graphs satisfying `keep`.
///
/// `keep` must be closed under taking connected induced subgraphs (true of
/// triangle-freeness, girth bounds and outerplanarity); the generator only
/// extends graphs that already satisfy it.
pub fn enumerate_connected_where<F>(n: usize, keep: F) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if n > FILTERED_ENUMERATION_LIMIT {
        return Err(Error::UnsupportedSize {
            operation: "enumerate_connected_where",
            n,
            limit: FILTERED_ENUMERATION_LIMIT,
        });
    }
    Ok(generate(n, &keep))
}

fn generate(n: usize, keep: &(dyn Fn(&Graph) -> bool + Sync)) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)]
        .into_iter()
        .filter(|g| keep(g))
        .collect();
    for k in 2..=n {
        let found: HashSet<Graph> = level
            .par_iter()
            .fold(HashSet::new, |mut acc, h| {
                for mask in 1u64..(1u64 << (k - 1)) {
                    let mut g = h.with_extra_vertices(1).expect("order within limit");
                    for v in VertexSet(mask) {
                        g.add_edge(v, k - 1);
                    }
                    if keep(&g) {
                        acc.insert(canonical_form(&g).graph);
                    }
                }
                acc
            })
            .reduce(HashSet::new, |mut a, b| {
                if a.len() < b.len() {
                    return b.into_iter().chain(a).collect();
                }
                a.extend(b);
                a
            });
        level = found.into_iter().collect();
    }
    let mut keyed: Vec<(String, Graph)> = level.into_iter().map(|g| (g.to_graph6(), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}
