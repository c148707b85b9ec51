//! Exact minimum partitions into induced trees or induced paths.
//!
//! Iterative deepening on the number of parts `k`. Vertices are placed in
//! BFS order, each into an existing part or (if fewer than `k` are open) a
//! new one, so part indices follow the order of their first vertex. A part
//! is rejected as soon as it contains a cycle (or, for paths, a vertex of
//! degree three), or when its pieces can no longer be joined through
//! unplaced vertices. When all `k` parts are open, every unplaced vertex
//! must still fit somewhere.

use super::{reduce, verify_cover, TreeCover};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph (or reduced kernel) handed to the partition search.
pub const COVER_ORDER_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartShape {
    Tree,
    Path,
}

struct Search<'a> {
    g: &'a Graph,
    shape: PartShape,
    order: Vec<usize>,
    k: usize,
    parts: Vec<VertexSet>,
}

impl Search<'_> {
    fn fits(&self, part: VertexSet, v: usize) -> bool {
        let nb = self.g.neighbors(v).intersection(part);
        if self.shape == PartShape::Path
            && (nb.len() > 2
                || nb
                    .iter()
                    .any(|u| self.g.neighbors(u).intersection(part).len() >= 2))
        {
            return false;
        }
        if nb.len() <= 1 {
            return true;
        }
        // each neighbour must sit in a different piece of G[part]
        let mut covered = VertexSet::EMPTY;
        for u in nb {
            if covered.contains(u) {
                return false;
            }
            covered = covered.union(self.g.reachable_within(u, part));
        }
        true
    }

    fn repairable(&self, free: VertexSet) -> bool {
        self.parts.iter().all(|&p| {
            let first = p.first().expect("parts are nonempty");
            p.is_subset(self.g.reachable_within(first, p.union(free)))
        })
    }

    fn forward_ok(&self, free: VertexSet) -> bool {
        self.parts.len() < self.k
            || free
                .iter()
                .all(|u| self.parts.iter().any(|&p| self.fits(p, u)))
    }

    fn run(&mut self, idx: usize, free: VertexSet) -> bool {
        if idx == self.order.len() {
            return self.parts.iter().all(|&p| self.g.is_connected_set(p));
        }
        let v = self.order[idx];
        let free = free.without(v);
        for i in 0..self.parts.len() {
            if !self.fits(self.parts[i], v) {
                continue;
            }
            self.parts[i].insert(v);
            if self.repairable(free) && self.forward_ok(free) && self.run(idx + 1, free) {
                return true;
            }
            self.parts[i].remove(v);
        }
        if self.parts.len() < self.k {
            self.parts.push(VertexSet::singleton(v));
            if self.repairable(free) && self.forward_ok(free) && self.run(idx + 1, free) {
                return true;
            }
            self.parts.pop();
        }
        false
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.order());
    let mut seen = VertexSet::EMPTY;
    for root in 0..g.order() {
        if seen.contains(root) {
            continue;
        }
        seen.insert(root);
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            for w in g.neighbors(v).difference(seen) {
                seen.insert(w);
                order.push(w);
            }
            i += 1;
        }
    }
    order
}

/// A greedy clique; every induced tree holds at most two of its vertices.
fn clique_lower_bound(g: &Graph) -> usize {
    let mut best = 0;
    for v in 0..g.order() {
        let mut clique = VertexSet::singleton(v);
        let mut cand = g.neighbors(v);
        while let Some(u) = cand
            .iter()
            .max_by_key(|&u| g.neighbors(u).intersection(cand).len())
        {
            clique.insert(u);
            cand = cand.intersection(g.neighbors(u));
        }
        best = best.max(clique.len());
    }
    best.div_ceil(2)
}

fn check_size(g: &Graph, operation: &'static str) -> Result<()> {
    if g.order() > COVER_ORDER_LIMIT {
        return Err(Error::UnsupportedSize {
            operation,
            n: g.order(),
            limit: COVER_ORDER_LIMIT,
        });
    }
    Ok(())
}

/// Minimum partition of `V(g)` into parts inducing the given shape, found by
/// direct search without reductions.
pub fn min_partition(g: &Graph, shape: PartShape) -> Result<Vec<VertexSet>> {
    check_size(g, "min_partition")?;
    let n = g.order();
    if n == 0 {
        return Ok(Vec::new());
    }
    let lower = clique_lower_bound(g).max(g.components().len());
    let order = bfs_order(g);
    for k in lower..=n {
        let mut s = Search {
            g,
            shape,
            order: order.clone(),
            k,
            parts: Vec::with_capacity(k),
        };
        if s.run(0, g.vertices()) {
            return Ok(s.parts);
        }
    }
    unreachable!("singletons always form a valid partition")
}

/// Minimum tree cover by direct partition search, without reductions.
pub fn tree_cover_direct(g: &Graph) -> Result<TreeCover> {
    let parts = min_partition(g, PartShape::Tree)?;
    Ok(verify_cover(g, &parts).expect("search returns induced trees"))
}

/// Tree cover number with a minimum witness cover.
///
/// Each component is reduced first (leaves, bridges, cut vertices and
/// subdivided edges); only the reduced kernels are searched, so the size
/// limit applies to kernels rather than to `g`.
pub fn tree_cover_exact(g: &Graph) -> Result<(usize, TreeCover)> {
    let mut parts = Vec::new();
    for comp in g.components() {
        let (h, map) = g.induced_subgraph(comp);
        let reduction = reduce(&h)?;
        let mut kernel_covers = Vec::with_capacity(reduction.kernels.len());
        for kernel in &reduction.kernels {
            if kernel.order() > COVER_ORDER_LIMIT {
                return Err(Error::UnsupportedSize {
                    operation: "tree_cover_exact",
                    n: kernel.order(),
                    limit: COVER_ORDER_LIMIT,
                });
            }
            kernel_covers.push(min_partition(kernel, PartShape::Tree)?);
        }
        let lifted = reduction.lift(&kernel_covers);
        parts.extend(
            lifted
                .into_iter()
                .map(|p| p.iter().map(|v| map[v]).collect::<VertexSet>()),
        );
    }
    let cover = verify_cover(g, &parts).expect("lifted kernel covers are tree covers");
    Ok((cover.len(), cover))
}

/// Minimum number of vertex-disjoint induced paths covering `V(g)`.
pub fn path_cover_exact(g: &Graph) -> Result<usize> {
    check_size(g, "path_cover_exact")?;
    Ok(min_partition(g, PartShape::Path)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        let k3 = Graph::complete(3);
        k3.vertex_sum(0, &k3, 0).unwrap()
    }

    #[test]
    fn tree_cover_examples() {
        for n in 1..10 {
            assert_eq!(tree_cover_exact(&Graph::path(n)).unwrap().0, 1);
        }
        assert_eq!(tree_cover_exact(&Graph::complete(4)).unwrap().0, 2);
        assert_eq!(tree_cover_exact(&bowtie()).unwrap().0, 3);
        assert_eq!(tree_cover_exact(&Graph::cycle(6)).unwrap().0, 2);
        assert_eq!(tree_cover_exact(&Graph::empty(3)).unwrap().0, 3);
        assert_eq!(tree_cover_exact(&Graph::empty(0)).unwrap().0, 0);
    }

    #[test]
    fn direct_search_examples() {
        assert_eq!(tree_cover_direct(&Graph::complete(7)).unwrap().len(), 4);
        assert_eq!(tree_cover_direct(&Graph::cycle(6)).unwrap().len(), 2);
        assert_eq!(tree_cover_direct(&bowtie()).unwrap().len(), 3);
    }

    #[test]
    fn path_cover_examples() {
        assert_eq!(path_cover_exact(&Graph::path(5)).unwrap(), 1);
        assert_eq!(path_cover_exact(&Graph::star(3)).unwrap(), 2);
        assert_eq!(path_cover_exact(&bowtie()).unwrap(), 3);
        assert_eq!(path_cover_exact(&Graph::star(5)).unwrap(), 4);
        assert_eq!(path_cover_exact(&Graph::cycle(7)).unwrap(), 2);
    }

    #[test]
    fn size_limits_are_enforced() {
        assert!(matches!(
            tree_cover_direct(&Graph::complete(17)),
            Err(Error::UnsupportedSize { .. })
        ));
        assert!(matches!(
            path_cover_exact(&Graph::path(17)),
            Err(Error::UnsupportedSize { .. })
        ));
        // a long path reduces to a single vertex, so the limit does not bite
        assert_eq!(tree_cover_exact(&Graph::path(40)).unwrap().0, 1);
        assert!(matches!(
            tree_cover_exact(&Graph::complete(17)),
            Err(Error::UnsupportedSize { .. })
        ));
    }
}
