use serde::Serialize;

use super::{Graph, VertexSet};

/// Blocks, cut vertices and bridges of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, sorted by their ascending vertex lists.
    /// Isolated vertices form singleton blocks.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    pub bridges: Vec<(usize, usize)>,
    /// Pairs `(i, j)`, `i < j`, of blocks sharing a cut vertex.
    pub block_adjacency: Vec<(usize, usize)>,
    /// False when the input had more than one component; blocks are then
    /// reported per component.
    pub connected: bool,
}

impl BlockDecomposition {
    /// Blocks adjacent to exactly one other block.
    pub fn pendant_blocks(&self) -> Vec<usize> {
        let mut count = vec![0usize; self.blocks.len()];
        for &(i, j) in &self.block_adjacency {
            count[i] += 1;
            count[j] += 1;
        }
        (0..self.blocks.len()).filter(|&b| count[b] == 1).collect()
    }

    /// Blocks containing exactly one cut vertex: the leaves of the
    /// block-cut tree. Several leaf blocks may share their cut vertex, so
    /// a leaf block need not be pendant.
    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].intersection(self.cut_vertices).len() == 1)
            .collect()
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].contains(v))
            .collect()
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cut: VertexSet,
}

impl Dfs<'_> {
    fn visit(&mut self, v: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        let mut children = 0;
        for w in self.g.neighbors(v) {
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push((v, w));
                self.visit(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent.is_some() || children > 1 {
                        self.cut.insert(v);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[v] {
                self.stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cut: VertexSet::EMPTY,
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            if g.degree(v) == 0 {
                dfs.blocks.push(VertexSet::singleton(v));
                dfs.disc[v] = usize::MAX;
            } else {
                dfs.visit(v, None);
            }
        }
    }
    let mut blocks = dfs.blocks;
    blocks.sort_by_key(|b| b.to_vec());
    let bridges = blocks
        .iter()
        .filter(|b| b.len() == 2)
        .map(|b| {
            let v = b.to_vec();
            (v[0], v[1])
        })
        .collect();
    let mut block_adjacency = Vec::new();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if !blocks[i].is_disjoint(blocks[j]) {
                block_adjacency.push((i, j));
            }
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices: dfs.cut,
        bridges,
        block_adjacency,
        connected: g.is_connected(),
    }
}
