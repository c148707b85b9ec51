//! Slow reference implementations written straight from the definitions.
//! They use only `order` and `has_edge` from the library.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use treecover::certificates::IntegerMatrix;
use treecover::Graph;

fn members(set: u64) -> Vec<usize> {
    (0..64).filter(|&v| set >> v & 1 == 1).collect()
}

fn connected(g: &Graph, vs: &[usize]) -> bool {
    let mut seen = vec![vs[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &w in vs {
            if !seen.contains(&w) && g.has_edge(u, w) {
                seen.push(w);
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

fn inner_degrees(g: &Graph, vs: &[usize]) -> Vec<usize> {
    vs.iter()
        .map(|&u| vs.iter().filter(|&&w| g.has_edge(u, w)).count())
        .collect()
}

pub fn induces_tree(g: &Graph, set: u64) -> bool {
    let vs = members(set);
    let edges: usize = inner_degrees(g, &vs).iter().sum::<usize>() / 2;
    !vs.is_empty() && edges + 1 == vs.len() && connected(g, &vs)
}

pub fn induces_path(g: &Graph, set: u64) -> bool {
    induces_tree(g, set) && inner_degrees(g, &members(set)).iter().all(|&d| d <= 2)
}

/// Minimum number of blocks over all set partitions of the vertices in which
/// every block satisfies `ok`. Partitions are walked as restricted growth
/// strings.
pub fn min_partition_naive(g: &Graph, ok: impl Fn(&Graph, u64) -> bool) -> usize {
    fn go(
        g: &Graph,
        v: usize,
        blocks: &mut Vec<u64>,
        best: &mut usize,
        ok: &impl Fn(&Graph, u64) -> bool,
    ) {
        if v == g.order() {
            if blocks.iter().all(|&b| ok(g, b)) {
                *best = (*best).min(blocks.len());
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i] |= 1 << v;
            go(g, v + 1, blocks, best, ok);
            blocks[i] &= !(1 << v);
        }
        blocks.push(1 << v);
        go(g, v + 1, blocks, best, ok);
        blocks.pop();
    }
    let mut best = usize::MAX;
    go(g, 0, &mut Vec::new(), &mut best, &ok);
    if g.order() == 0 {
        0
    } else {
        best
    }
}

pub fn tree_cover_naive(g: &Graph) -> usize {
    min_partition_naive(g, induces_tree)
}

pub fn path_cover_naive(g: &Graph) -> usize {
    min_partition_naive(g, induces_path)
}

/// Components of the subgraph induced by `set`, as bitmasks.
fn components(g: &Graph, set: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut left = set;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        loop {
            let mut grown = comp;
            for u in members(comp) {
                for w in members(set) {
                    if g.has_edge(u, w) {
                        grown |= 1 << w;
                    }
                }
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

/// Applies one force if any is available.
fn force_once(g: &Graph, filled: u64, psd: bool) -> Option<u64> {
    let all = (1u64 << g.order()) - 1;
    let unfilled = all & !filled;
    let regions = if psd {
        components(g, unfilled)
    } else {
        vec![unfilled]
    };
    for u in members(filled) {
        for &region in &regions {
            let open: Vec<usize> = members(region)
                .into_iter()
                .filter(|&w| g.has_edge(u, w))
                .collect();
            if open.len() == 1 {
                return Some(filled | 1 << open[0]);
            }
        }
    }
    None
}

pub fn closure_naive(g: &Graph, start: u64, psd: bool) -> u64 {
    let mut filled = start;
    while let Some(next) = force_once(g, filled, psd) {
        filled = next;
    }
    filled
}

/// Smallest forcing set size over all `2^n` subsets.
pub fn forcing_number_naive(g: &Graph, psd: bool) -> usize {
    let all = (1u64 << g.order()) - 1;
    (0..=all)
        .filter(|&s| closure_naive(g, s, psd) == all)
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Rank by Gaussian elimination over the rationals.
pub fn rational_rank(m: &IntegerMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| BigRational::from_integer(m.get(i, j).clone()))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[rank][col];
                let pivot = a[rank].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn matrix(rows: &[Vec<i64>]) -> IntegerMatrix {
    IntegerMatrix::from_rows(rows).expect("rectangular")
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}
