//! Canonical labelling by equitable-partition refinement and individualisation.
//!
//! Every leaf of the search tree is a labelling; the canonical one is the leaf
//! whose relabelled adjacency rows are lexicographically smallest. The only
//! pruning is twin pruning: two vertices of a target cell with
//! `N(u) - v == N(v) - u` are exchanged by an automorphism, so their subtrees
//! give the same set of codes and one of them is skipped.

use super::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// The relabelled graph; equal for isomorphic inputs.
    pub graph: Graph,
    /// `labeling[v]` is the canonical label of input vertex `v`.
    pub labeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm {
            graph: g.clone(),
            labeling: Vec::new(),
        };
    }
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, &mut cells, &mut best);
    let (_, order) = best.expect("search visits at least one leaf");
    let mut labeling = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        labeling[v] = label;
    }
    CanonicalForm {
        graph: g.permute(&labeling),
        labeling,
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da: Vec<_> = (0..a.order()).map(|v| a.degree(v)).collect();
    let mut db: Vec<_> = (0..b.order()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a).graph == canonical_form(b).graph
}

fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let nb = g.neighbors(v);
                    let key = masks
                        .iter()
                        .map(|m| nb.intersection(*m).len() as u8)
                        .collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            if next.last().map(Vec::len) != Some(cell.len()) {
                changed = true;
            }
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn code_of(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut label = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        label[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |acc, w| acc | 1u64 << (63 - label[w]))
        })
        .collect()
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

fn search(g: &Graph, cells: &mut Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = cells[target].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cell.iter().copied().filter(|&w| w != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        search(g, &mut child, best);
    }
}
