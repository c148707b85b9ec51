//! Derived-graph constructions.

use super::{Graph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

pub fn complement(g: &Graph) -> Graph {
    let all = g.vertices();
    let adj = (0..g.order())
        .map(|v| all.difference(g.neighbors(v)).without(v))
        .collect();
    Graph::from_adjacency(adj)
}

/// Line graph together with the source edge of each of its vertices.
#[derive(Debug, Clone)]
pub struct LineGraph {
    pub graph: Graph,
    pub edge_of: Vec<(usize, usize)>,
}

/// Vertex `i` of the line graph is the `i`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Result<LineGraph> {
    let edges = g.edges();
    if edges.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n: edges.len(),
            limit: MAX_VERTICES,
        });
    }
    let mut lg = Graph::empty(edges.len());
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                lg.add_edge(i, j);
            }
        }
    }
    Ok(LineGraph {
        graph: lg,
        edge_of: edges,
    })
}

/// `G` with one extra vertex per edge, adjacent to exactly the two endpoints.
#[derive(Debug, Clone)]
pub struct TriangleAugmentation {
    pub graph: Graph,
    /// Edge-vertex `n + i` belongs to `edges[i]`.
    pub edges: Vec<(usize, usize)>,
    pub edge_vertices: VertexSet,
}

pub fn triangle_augment(g: &Graph) -> Result<TriangleAugmentation> {
    let edges = g.edges();
    let n = g.order();
    let mut aug = g.with_extra_vertices(edges.len())?;
    for (i, &(u, v)) in edges.iter().enumerate() {
        aug.add_edge(u, n + i);
        aug.add_edge(v, n + i);
    }
    let edge_vertices = (n..n + edges.len()).collect();
    Ok(TriangleAugmentation {
        graph: aug,
        edges,
        edge_vertices,
    })
}
