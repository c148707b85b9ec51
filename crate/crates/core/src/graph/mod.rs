//! Simple undirected graphs on at most 64 vertices with bitset adjacency.

mod blocks;
mod canon;
mod enumerate;
mod io;
mod ops;
mod outerplanar;
mod params;
mod set;

pub use blocks::{block_decomposition, BlockDecomposition};
pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use enumerate::{enumerate_connected, enumerate_connected_where, ENUMERATION_LIMIT};
pub use io::{parse_edge_list, parse_graph6};
pub use ops::{complement, line_graph, triangle_augment, LineGraph, TriangleAugmentation};
pub use outerplanar::{has_minor, is_outerplanar, OUTERPLANAR_LIMIT};
pub use params::{girth, independence_number, treewidth, TREEWIDTH_LIMIT};
pub use set::VertexSet;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are limited to 64 vertices");
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        let m = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        Graph { n, adj, m }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        if self.adj[u].contains(v) {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
            self.m -= 1;
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The star `K_{1,p}` with center 0.
    pub fn star(p: usize) -> Self {
        let edges: Vec<_> = (1..=p).map(|i| (0, i)).collect();
        Graph::from_edges(p + 1, &edges).expect("star")
    }

    /// `K_{s,t}` with parts `0..s` and `s..s+t`.
    pub fn complete_bipartite(s: usize, t: usize) -> Self {
        let mut g = Graph::empty(s + t);
        for u in 0..s {
            for v in s..s + t {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).expect("petersen")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reachable_within(v, within);
            out.push(comp);
            rest = rest.difference(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Whether `G[set]` is connected; the empty set counts as connected.
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(v) => self.reachable_within(v, set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// Number of edges of `G[set]`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|v| self.adj[v].intersection(set).len())
            .sum::<usize>()
            / 2
    }

    /// Whether `G[set]` is a (nonempty) tree.
    pub fn induces_tree(&self, set: VertexSet) -> bool {
        !set.is_empty() && self.edges_within(set) + 1 == set.len() && self.is_connected_set(set)
    }

    /// Whether `G[set]` is a (nonempty) induced path.
    pub fn induces_path(&self, set: VertexSet) -> bool {
        self.induces_tree(set) && set.iter().all(|v| self.adj[v].intersection(set).len() <= 2)
    }

    pub fn is_tree(&self) -> bool {
        self.induces_tree(self.vertices())
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// `G[set]` relabelled to `0..|set|`, with the map from new to old indices.
    pub fn induced_subgraph(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let map = set.to_vec();
        let mut index = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(set)
                    .iter()
                    .map(|w| index[w])
                    .collect()
            })
            .collect();
        (Graph::from_adjacency(adj), map)
    }

    /// `G - S`, relabelled, with the map from new to old indices.
    pub fn remove_vertices(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertices().difference(set))
    }

    pub fn remove_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        self.remove_vertices(VertexSet::singleton(v))
    }

    /// `G - e`, keeping the vertex set.
    pub fn remove_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.delete_edge(u, v);
        g
    }

    /// Replaces edge `{u,v}` by a path through a new vertex with index `n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidArgument(format!(
                "{{{u},{v}}} is not an edge"
            )));
        }
        let mut g = self.with_extra_vertices(1)?;
        g.delete_edge(u, v);
        g.add_edge(u, self.n);
        g.add_edge(v, self.n);
        Ok(g)
    }

    /// Adds a new vertex `n` adjacent only to `v`.
    pub fn add_leaf(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut g = self.with_extra_vertices(1)?;
        g.add_edge(v, self.n);
        Ok(g)
    }

    /// Copy of `self` with `k` isolated vertices appended.
    pub fn with_extra_vertices(&self, k: usize) -> Result<Graph> {
        let n = self.n + k;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.resize(n, VertexSet::EMPTY);
        Ok(Graph { n, adj, m: self.m })
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.with_extra_vertices(other.n)?;
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Vertex-sum: glues vertex `b` of `other` onto vertex `a` of `self`.
    ///
    /// Vertices of `other` other than `b` keep their relative order and are
    /// numbered from `self.order()` upward.
    pub fn vertex_sum(&self, a: usize, other: &Graph, b: usize) -> Result<Graph> {
        if a >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: a,
                n: self.n,
            });
        }
        if b >= other.n {
            return Err(Error::VertexOutOfRange {
                vertex: b,
                n: other.n,
            });
        }
        let mut g = self.with_extra_vertices(other.n - 1)?;
        let map = |w: usize| match w.cmp(&b) {
            std::cmp::Ordering::Equal => a,
            std::cmp::Ordering::Less => self.n + w,
            std::cmp::Ordering::Greater => self.n + w - 1,
        };
        for (u, v) in other.edges() {
            g.add_edge(map(u), map(v));
        }
        Ok(g)
    }

    /// Joins vertex `a` of `self` and `b` of `other` by a new edge.
    pub fn bridge_union(&self, a: usize, other: &Graph, b: usize) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        g.add_edge(a, self.n + b);
        Ok(g)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Graph {
            n: self.n,
            adj,
            m: self.m,
        }
    }

    pub fn to_graph6(&self) -> String {
        io::to_graph6(self)
    }

    pub fn to_edge_list(&self) -> String {
        io::to_edge_list(self)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({} {:?})", self.to_graph6(), self.edges())
    }
}
