//! Zero forcing: the standard rule and the positive semidefinite rule.
//!
//! Standard: a filled vertex with exactly one unfilled neighbour forces it.
//! PSD: let `W_1..W_k` be the components of `G - filled`; a filled `u`
//! forces `w` in `W_i` when `w` is its only unfilled neighbour inside `W_i`.
//! Both rules only ever become easier to apply as more vertices are filled,
//! so the closure does not depend on the order forces are applied in.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const FORCING_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ForcingRule {
    Standard,
    Psd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcingState {
    pub filled: VertexSet,
    /// `(forcer, forced)` in the order the forces were applied.
    pub history: Vec<(usize, usize)>,
}

/// Every force that is legal from `filled`.
pub fn available_forces(g: &Graph, filled: VertexSet, rule: ForcingRule) -> Vec<(usize, usize)> {
    let unfilled = g.vertices().difference(filled);
    let mut out = Vec::new();
    match rule {
        ForcingRule::Standard => {
            for u in filled {
                let open = g.neighbors(u).intersection(unfilled);
                if open.len() == 1 {
                    out.push((u, open.first().expect("one neighbour")));
                }
            }
        }
        ForcingRule::Psd => {
            let comps = g.components_within(unfilled);
            for u in filled {
                let open = g.neighbors(u).intersection(unfilled);
                for &w in &comps {
                    let inside = open.intersection(w);
                    if inside.len() == 1 {
                        out.push((u, inside.first().expect("one neighbour")));
                    }
                }
            }
        }
    }
    out
}

/// Closure of `start`, always applying the first available force.
pub fn closure(g: &Graph, start: VertexSet, rule: ForcingRule) -> ForcingState {
    closure_with(g, start, rule, |_| 0)
}

/// Closure where `pick` selects which of the available forces to apply;
/// used to check that the schedule does not matter.
pub fn closure_with(
    g: &Graph,
    start: VertexSet,
    rule: ForcingRule,
    mut pick: impl FnMut(usize) -> usize,
) -> ForcingState {
    let mut filled = start.intersection(g.vertices());
    let mut history = Vec::new();
    loop {
        let forces = available_forces(g, filled, rule);
        if forces.is_empty() {
            break;
        }
        let (u, w) = forces[pick(forces.len()) % forces.len()];
        filled.insert(w);
        history.push((u, w));
    }
    ForcingState { filled, history }
}

pub fn psd_closure(g: &Graph, start: VertexSet) -> ForcingState {
    closure(g, start, ForcingRule::Psd)
}

pub fn standard_closure(g: &Graph, start: VertexSet) -> ForcingState {
    closure(g, start, ForcingRule::Standard)
}

/// Fast fixpoint without a history.
fn closes(g: &Graph, start: VertexSet, rule: ForcingRule) -> bool {
    let all = g.vertices();
    let mut filled = start;
    loop {
        let before = filled;
        let unfilled = all.difference(filled);
        match rule {
            ForcingRule::Standard => {
                for u in filled {
                    let open = g.neighbors(u).difference(filled);
                    if open.len() == 1 {
                        filled = filled.union(open);
                    }
                }
            }
            ForcingRule::Psd => {
                let comps = g.components_within(unfilled);
                for u in filled {
                    let open = g.neighbors(u).intersection(unfilled);
                    for &w in &comps {
                        let inside = open.intersection(w);
                        if inside.len() == 1 {
                            filled = filled.union(inside);
                        }
                    }
                }
            }
        }
        if filled == all {
            return true;
        }
        if filled == before {
            return false;
        }
    }
}

fn minimum_forcing_set(g: &Graph, rule: ForcingRule, lower: usize) -> Result<(usize, VertexSet)> {
    let n = g.order();
    if n > FORCING_LIMIT {
        return Err(Error::UnsupportedSize {
            operation: "zero forcing number",
            n,
            limit: FORCING_LIMIT,
        });
    }
    if n == 0 {
        return Ok((0, VertexSet::EMPTY));
    }
    for k in lower.max(1)..=n {
        // Gosper's hack over k-subsets of n bits
        let mut s: u64 = (1u64 << k) - 1;
        let end = 1u64 << n;
        while s < end {
            if closes(g, VertexSet(s), rule) {
                return Ok((k, VertexSet(s)));
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set forces")
}

/// `Z_+(G)` with a minimum PSD forcing set.
pub fn psd_zero_forcing_set(g: &Graph) -> Result<(usize, VertexSet)> {
    minimum_forcing_set(g, ForcingRule::Psd, g.components().len())
}

pub fn psd_zero_forcing_number(g: &Graph) -> Result<usize> {
    Ok(psd_zero_forcing_set(g)?.0)
}

/// `Z(G)` with a minimum standard forcing set. `Z(G) >= min degree`.
pub fn zero_forcing_set(g: &Graph) -> Result<(usize, VertexSet)> {
    let lower = g.min_degree().max(g.components().len());
    minimum_forcing_set(g, ForcingRule::Standard, lower)
}

pub fn zero_forcing_number(g: &Graph) -> Result<usize> {
    Ok(zero_forcing_set(g)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psd_closure_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(
            psd_closure(&c4, VertexSet::singleton(0)).filled,
            VertexSet::singleton(0)
        );
        let k3 = Graph::complete(3);
        assert_eq!(
            psd_closure(&k3, VertexSet::singleton(1)).filled,
            VertexSet::singleton(1)
        );
        let two = VertexSet::from_slice(&[0, 2]);
        let st = psd_closure(&k3, two);
        assert_eq!(st.filled, k3.vertices());
        assert_eq!(st.history, vec![(0, 1)]);
        let star = Graph::star(4);
        assert_eq!(
            psd_closure(&star, VertexSet::singleton(0)).filled,
            star.vertices()
        );
        assert_eq!(
            standard_closure(&star, VertexSet::singleton(0)).filled,
            VertexSet::singleton(0)
        );
    }

    #[test]
    fn forcing_numbers() {
        for n in 1..9 {
            assert_eq!(zero_forcing_number(&Graph::path(n)).unwrap(), 1);
            assert_eq!(psd_zero_forcing_number(&Graph::path(n)).unwrap(), 1);
            assert_eq!(
                psd_zero_forcing_number(&Graph::complete(n)).unwrap(),
                n.max(2) - 1
            );
        }
        for n in 3..10 {
            assert_eq!(zero_forcing_number(&Graph::cycle(n)).unwrap(), 2);
            assert_eq!(psd_zero_forcing_number(&Graph::cycle(n)).unwrap(), 2);
        }
        assert_eq!(zero_forcing_number(&Graph::complete(4)).unwrap(), 3);
        assert_eq!(psd_zero_forcing_number(&Graph::star(6)).unwrap(), 1);
        assert_eq!(zero_forcing_number(&Graph::star(6)).unwrap(), 5);
        assert_eq!(zero_forcing_number(&Graph::empty(3)).unwrap(), 3);
        assert!(zero_forcing_number(&Graph::path(17)).is_err());
    }

    #[test]
    fn history_records_legal_forces() {
        let g = Graph::petersen();
        let (_, set) = psd_zero_forcing_set(&g).unwrap();
        let st = psd_closure(&g, set);
        let mut filled = set;
        for &(u, w) in &st.history {
            assert!(available_forces(&g, filled, ForcingRule::Psd).contains(&(u, w)));
            filled.insert(w);
        }
        assert_eq!(filled, g.vertices());
    }
}
