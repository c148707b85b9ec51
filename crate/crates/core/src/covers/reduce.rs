//! Reductions that preserve the tree cover number up to a known offset.
//!
//! - deleting a leaf does not change `T`;
//! - suppressing a degree-two vertex whose neighbours are non-adjacent (the
//!   inverse of subdividing an edge) does not change `T`;
//! - over the blocks `B_1..B_b` of a connected graph,
//!   `T(G) = sum T(B_i) - (b - 1)`, which contains the bridge rule
//!   `T(G) = T(G_1) + T(G_2) - 1` since a bridge is a block with `T = 1`.
//!
//! Bridge blocks are not returned as kernels; they enter through the offset.

use serde::Serialize;

use crate::error::{precondition, Result};
use crate::graph::{block_decomposition, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    LeafDelete,
    SuppressDegree2Subdivision,
    BridgeSplit,
    CutVertexSplit,
}

/// One reduction; `vertices` are indices of the input graph.
///
/// - `LeafDelete`: `[leaf, neighbour]`
/// - `SuppressDegree2Subdivision`: `[suppressed, a, b]`, edge `ab` added
/// - `BridgeSplit`: `[u, v]`
/// - `CutVertexSplit`: `[cut vertex]`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    /// `T(G) = sum of T(kernel) + offset`.
    pub offset: i64,
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub kernels: Vec<Graph>,
    /// `kernel_maps[i][j]` is the input vertex behind vertex `j` of kernel `i`.
    pub kernel_maps: Vec<Vec<usize>>,
    /// Bridges left after leaf deletion; each is one part of the cover.
    pub bridges: Vec<(usize, usize)>,
    pub trace: ReductionTrace,
}

impl Reduction {
    pub fn tree_cover_number(&self, kernel_values: &[usize]) -> usize {
        let total = kernel_values.iter().sum::<usize>() as i64 + self.trace.offset;
        total as usize
    }

    /// Replays the trace backwards: turns minimum covers of the kernels into a
    /// minimum cover of the input graph.
    pub fn lift(&self, kernel_covers: &[Vec<VertexSet>]) -> Vec<VertexSet> {
        assert_eq!(kernel_covers.len(), self.kernels.len());
        let mut parts: Vec<VertexSet> = Vec::new();
        for (cover, map) in kernel_covers.iter().zip(&self.kernel_maps) {
            parts.extend(
                cover
                    .iter()
                    .map(|p| p.iter().map(|v| map[v]).collect::<VertexSet>()),
            );
        }
        // undo suppressions, latest first
        for step in self.trace.steps.iter().rev() {
            if step.kind == ReductionKind::SuppressDegree2Subdivision {
                let [x, a, _] = step.vertices[..] else {
                    unreachable!("suppression records three vertices")
                };
                let i = parts
                    .iter()
                    .position(|p| p.contains(a))
                    .expect("a is covered");
                parts[i].insert(x);
            }
        }
        parts.extend(
            self.bridges
                .iter()
                .map(|&(u, v)| VertexSet::from_slice(&[u, v])),
        );
        // glue the block covers at shared cut vertices
        let mut merged: Vec<VertexSet> = Vec::new();
        for p in parts {
            let mut acc = p;
            merged.retain(|&q| {
                if q.is_disjoint(acc) {
                    true
                } else {
                    acc = acc.union(q);
                    false
                }
            });
            merged.push(acc);
        }
        for step in self.trace.steps.iter().rev() {
            if step.kind == ReductionKind::LeafDelete {
                let (leaf, nb) = (step.vertices[0], step.vertices[1]);
                if let Some(p) = merged.iter_mut().find(|p| p.contains(nb)) {
                    p.insert(leaf);
                } else {
                    merged.push(VertexSet::singleton(leaf));
                }
            }
        }
        merged
    }
}

pub fn reduce(g: &Graph) -> Result<Reduction> {
    if !g.is_connected() {
        return precondition("reduce", "graph must be connected");
    }
    let mut steps = Vec::new();
    let mut alive = g.vertices();
    loop {
        if alive.len() <= 1 {
            break;
        }
        let Some(leaf) = alive
            .iter()
            .find(|&v| g.neighbors(v).intersection(alive).len() == 1)
        else {
            break;
        };
        let nb = g
            .neighbors(leaf)
            .intersection(alive)
            .first()
            .expect("leaf has a neighbour");
        steps.push(ReductionStep {
            kind: ReductionKind::LeafDelete,
            vertices: vec![leaf, nb],
        });
        alive.remove(leaf);
    }

    let mut kernels = Vec::new();
    let mut kernel_maps = Vec::new();
    let mut bridges = Vec::new();
    if alive.len() <= 1 {
        let (k, map) = g.induced_subgraph(alive);
        if k.order() == 1 {
            kernels.push(k);
            kernel_maps.push(map);
        }
        return Ok(Reduction {
            kernels,
            kernel_maps,
            bridges,
            trace: ReductionTrace { steps, offset: 0 },
        });
    }

    let (core, core_map) = g.induced_subgraph(alive);
    let blocks = block_decomposition(&core);
    for c in blocks.cut_vertices {
        steps.push(ReductionStep {
            kind: ReductionKind::CutVertexSplit,
            vertices: vec![core_map[c]],
        });
    }
    for &block in &blocks.blocks {
        if block.len() == 2 {
            let v = block.to_vec();
            let (a, b) = (core_map[v[0]], core_map[v[1]]);
            steps.push(ReductionStep {
                kind: ReductionKind::BridgeSplit,
                vertices: vec![a, b],
            });
            bridges.push((a, b));
            continue;
        }
        let (mut h, local) = core.induced_subgraph(block);
        let mut map: Vec<usize> = local.iter().map(|&v| core_map[v]).collect();
        while h.order() > 3 {
            let Some(x) = (0..h.order()).find(|&x| {
                let nb = h.neighbors(x);
                nb.len() == 2 && {
                    let v = nb.to_vec();
                    !h.has_edge(v[0], v[1])
                }
            }) else {
                break;
            };
            let nb = h.neighbors(x).to_vec();
            steps.push(ReductionStep {
                kind: ReductionKind::SuppressDegree2Subdivision,
                vertices: vec![map[x], map[nb[0]], map[nb[1]]],
            });
            h.add_edge(nb[0], nb[1]);
            let (next, keep) = h.remove_vertex(x);
            map = keep.iter().map(|&v| map[v]).collect();
            h = next;
        }
        kernels.push(h);
        kernel_maps.push(map);
    }
    let offset = bridges.len() as i64 - (blocks.blocks.len() as i64 - 1);
    Ok(Reduction {
        kernels,
        kernel_maps,
        bridges,
        trace: ReductionTrace { steps, offset },
    })
}
