use serde::Serialize;

use super::{half_order_cover, search::tree_cover_exact, verify_cover, TreeCover};
use crate::error::{precondition, Result};
use crate::forcing::{psd_zero_forcing_number, FORCING_LIMIT};
use crate::graph::{independence_number, Graph, VertexSet};

/// Cover built from an independent set `s`: every vertex outside `s` starts
/// a star and each vertex of `s` joins the part of its smallest neighbour.
/// Size `n - |s|` plus the isolated vertices of `s`.
pub fn independent_set_cover(g: &Graph, s: VertexSet) -> Result<TreeCover> {
    if !s.is_subset(g.vertices()) || !g.is_independent(s) {
        return precondition(
            "independent_set_cover",
            "set must be independent in the graph",
        );
    }
    let mut parts: Vec<VertexSet> = g
        .vertices()
        .difference(s)
        .iter()
        .map(VertexSet::singleton)
        .collect();
    for v in s {
        match g.neighbors(v).first() {
            Some(u) => {
                let i = parts
                    .iter()
                    .position(|p| p.contains(u))
                    .expect("neighbour outside s");
                parts[i].insert(v);
            }
            None => parts.push(VertexSet::singleton(v)),
        }
    }
    Ok(verify_cover(g, &parts).expect("stars centred outside an independent set"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub name: &'static str,
    pub kind: BoundKind,
    pub value: i64,
}

/// Bounds on `T(G)` that do not need `T(G)` itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub alpha: usize,
    pub bounds: Vec<Bound>,
}

impl BoundReport {
    pub fn upper(&self) -> Option<i64> {
        self.bounds
            .iter()
            .filter(|b| b.kind == BoundKind::Upper)
            .map(|b| b.value)
            .min()
    }

    pub fn lower(&self) -> Option<i64> {
        self.bounds
            .iter()
            .filter(|b| b.kind == BoundKind::Lower)
            .map(|b| b.value)
            .max()
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.bounds.iter().find(|b| b.name == name).map(|b| b.value)
    }
}

/// Upper bounds `n - alpha` (plus isolated vertices), `sum ceil(|C|/2)` over
/// components, `Z_+` when small enough, and `min T(G - v) + 1`,
/// `min T(G - e) + 1`; lower bounds `max T(G - v) - deg(v) + 1` and
/// `max T(G - e) - 1`. The deletion brackets need exact solves of every
/// vertex- and edge-deleted subgraph.
pub fn bound_report(g: &Graph) -> Result<BoundReport> {
    let n = g.order();
    let (alpha, witness) = independence_number(g);
    let mut bounds = vec![Bound {
        name: "n-alpha",
        kind: BoundKind::Upper,
        value: independent_set_cover(g, witness)?.len() as i64,
    }];
    let mut half = 0;
    for c in g.components() {
        half += if c.len() == 1 {
            1
        } else {
            half_order_cover(&g.induced_subgraph(c).0)?.len()
        };
    }
    bounds.push(Bound {
        name: "half-order-cover",
        kind: BoundKind::Upper,
        value: half as i64,
    });
    if n <= FORCING_LIMIT {
        bounds.push(Bound {
            name: "Zplus",
            kind: BoundKind::Upper,
            value: psd_zero_forcing_number(g)? as i64,
        });
    }
    if n > 0 {
        let mut up = i64::MAX;
        let mut low = i64::MIN;
        for v in g.vertices() {
            let t = tree_cover_exact(&g.remove_vertex(v).0)?.0 as i64;
            up = up.min(t + 1);
            low = low.max(t - g.degree(v) as i64 + 1);
        }
        bounds.push(Bound {
            name: "vertex-deletion-upper",
            kind: BoundKind::Upper,
            value: up,
        });
        bounds.push(Bound {
            name: "vertex-deletion-lower",
            kind: BoundKind::Lower,
            value: low,
        });
    }
    if g.size() > 0 {
        let mut up = i64::MAX;
        let mut low = i64::MIN;
        for (u, v) in g.edges() {
            let t = tree_cover_exact(&g.remove_edge(u, v))?.0 as i64;
            up = up.min(t + 1);
            low = low.max(t - 1);
        }
        bounds.push(Bound {
            name: "edge-deletion-upper",
            kind: BoundKind::Upper,
            value: up,
        });
        bounds.push(Bound {
            name: "edge-deletion-lower",
            kind: BoundKind::Lower,
            value: low,
        });
    }
    Ok(BoundReport { n, alpha, bounds })
}
