//! Exhaustive re-verification of the tree cover results over small graphs,
//! the triangle-free `ceil(n/3)` scan, and single-graph parameter queries.
//!
//! Each check runs over the connected graphs produced by the enumerator,
//! filtered by the hypothesis of the result, in parallel. Violations are
//! sorted by graph6 so reports do not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::certificates::incidence_gram;
use crate::covers::{
    bound_report, girth5_cover, half_order_cover, independent_set_cover, path_cover_exact, reduce,
    tree_cover_direct, tree_cover_exact,
};
use crate::error::{Error, Result};
use crate::extremal::{
    classify, classify_even_extremal, enumerate_family_f, generate_k_tree, is_family_f,
    ExtremalKind,
};
use crate::forcing::{psd_zero_forcing_number, zero_forcing_number};
use crate::graph::{
    block_decomposition, complement, enumerate_connected, enumerate_connected_where, girth,
    independence_number, is_outerplanar, line_graph, treewidth, triangle_augment, Graph, VertexSet,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    HalfOrder,
    Girth5,
    OddExtremal,
    EvenExtremal,
    Reductions,
    Bounds,
    FChain,
    Certificates,
    LineGraph,
    Complement,
    Treewidth,
    KTree,
    Forcing,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::HalfOrder,
        TheoremId::Girth5,
        TheoremId::OddExtremal,
        TheoremId::EvenExtremal,
        TheoremId::Reductions,
        TheoremId::Bounds,
        TheoremId::FChain,
        TheoremId::Certificates,
        TheoremId::LineGraph,
        TheoremId::Complement,
        TheoremId::Treewidth,
        TheoremId::KTree,
        TheoremId::Forcing,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::HalfOrder => "half-order",
            TheoremId::Girth5 => "girth5",
            TheoremId::OddExtremal => "odd-extremal",
            TheoremId::EvenExtremal => "even-extremal",
            TheoremId::Reductions => "reductions",
            TheoremId::Bounds => "bounds",
            TheoremId::FChain => "F-chain",
            TheoremId::Certificates => "certificates",
            TheoremId::LineGraph => "line-graph",
            TheoremId::Complement => "complement",
            TheoremId::Treewidth => "treewidth",
            TheoremId::KTree => "k-tree",
            TheoremId::Forcing => "forcing",
        }
    }

    /// `n_max` used when none is given.
    pub fn default_nmax(self) -> usize {
        match self {
            TheoremId::HalfOrder => 8,
            TheoremId::Girth5 => 10,
            TheoremId::OddExtremal => 9,
            TheoremId::EvenExtremal => 8,
            TheoremId::Reductions | TheoremId::Bounds | TheoremId::Forcing => 7,
            TheoremId::FChain => 11,
            TheoremId::Certificates | TheoremId::LineGraph => 6,
            TheoremId::Complement | TheoremId::Treewidth => 8,
            TheoremId::KTree => 12,
        }
    }

    /// Largest `n_max` accepted.
    pub fn max_nmax(self) -> usize {
        match self {
            TheoremId::HalfOrder
            | TheoremId::Reductions
            | TheoremId::Bounds
            | TheoremId::Complement
            | TheoremId::Treewidth
            | TheoremId::Forcing => 9,
            TheoremId::Girth5 | TheoremId::OddExtremal | TheoremId::EvenExtremal => 11,
            TheoremId::FChain => 15,
            TheoremId::Certificates => 7,
            TheoremId::LineGraph => 6,
            TheoremId::KTree => 16,
        }
    }

    pub fn family(self, n_max: usize) -> String {
        let what = match self {
            TheoremId::HalfOrder => "connected graphs, 2 <= n",
            TheoremId::Girth5 => "connected graphs of girth at least 5 (trees included), 6 <= n",
            TheoremId::OddExtremal => "connected outerplanar graphs of odd order, 3 <= n",
            TheoremId::EvenExtremal => "connected outerplanar graphs of even order, 4 <= n",
            TheoremId::Reductions | TheoremId::Bounds | TheoremId::Forcing => {
                "connected graphs, 1 <= n"
            }
            TheoremId::FChain => "all members of F (every block a triangle), 3 <= n",
            TheoremId::Certificates => "connected graphs, 2 <= n",
            TheoremId::LineGraph => "connected graphs with m >= 2n - 3, 2 <= n",
            TheoremId::Complement => "connected graphs with m <= 3n/2 - 4 and connected complement",
            TheoremId::Treewidth => {
                "connected graphs with tw <= (n - 4)/2 and connected complement"
            }
            TheoremId::KTree => "random 3-trees and 5-trees, 100 seeds each",
        };
        format!("{what}, up to n = {n_max}")
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown theorem id {s:?}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub observed: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub family: String,
    pub graphs_checked: usize,
    pub violations: Vec<Violation>,
    pub runtime_seconds: f64,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

type Observed = BTreeMap<String, i64>;

fn observed<const N: usize>(pairs: [(&str, i64); N]) -> Observed {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Runs `check` on every graph in parallel; `Some` marks a violation.
fn run_check<F>(graphs: &[Graph], check: F) -> Result<Vec<Violation>>
where
    F: Fn(&Graph) -> Result<Option<Observed>> + Sync,
{
    let found: Vec<Option<Violation>> = graphs
        .par_iter()
        .map(|g| {
            Ok(check(g)?.map(|observed| Violation {
                graph6: g.to_graph6(),
                observed,
            }))
        })
        .collect::<Result<_>>()?;
    let mut violations: Vec<Violation> = found.into_iter().flatten().collect();
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(violations)
}

fn connected_range(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(enumerate_connected(n)?);
    }
    Ok(out)
}

fn filtered_range(
    lo: usize,
    hi: usize,
    keep: impl Fn(&Graph) -> bool + Sync + Copy,
) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(enumerate_connected_where(n, keep)?);
    }
    Ok(out)
}

fn outerplanar(g: &Graph) -> bool {
    is_outerplanar(g).expect("enumerated graphs are within the outerplanarity limit")
}

fn t(g: &Graph) -> Result<i64> {
    Ok(tree_cover_exact(g)?.0 as i64)
}

fn half(n: usize) -> i64 {
    n.div_ceil(2) as i64
}

/// Pieces `G[C_i + v]` for the components `C_i` of `G - v`.
fn pieces_at(g: &Graph, v: usize) -> Vec<Graph> {
    g.components_within(g.vertices().without(v))
        .into_iter()
        .map(|c| g.induced_subgraph(c.with(v)).0)
        .collect()
}

fn check_half_order(g: &Graph) -> Result<Option<Observed>> {
    let cover = half_order_cover(g)?;
    let n = g.order();
    Ok((cover.len() as i64 > half(n))
        .then(|| observed([("n", n as i64), ("cover", cover.len() as i64)])))
}

fn check_girth5(g: &Graph) -> Result<Option<Observed>> {
    let n = g.order();
    let cover = girth5_cover(g)?.len() as i64;
    let exact = t(g)?;
    let bound = (n / 3) as i64;
    Ok((cover > bound || exact > bound)
        .then(|| observed([("n", n as i64), ("cover", cover), ("T", exact)])))
}

fn check_odd_extremal(g: &Graph) -> Result<Option<Observed>> {
    let n = g.order();
    let exact = t(g)?;
    let member = is_family_f(g)?;
    Ok(((exact == half(n)) != member)
        .then(|| observed([("n", n as i64), ("T", exact), ("in_F", member as i64)])))
}

fn check_even_extremal(g: &Graph) -> Result<Option<Observed>> {
    let n = g.order();
    let exact = t(g)?;
    let extremal = classify_even_extremal(g)?.kind != ExtremalKind::NotExtremal;
    Ok(((exact == half(n)) != extremal).then(|| {
        observed([
            ("n", n as i64),
            ("T", exact),
            ("classified", extremal as i64),
        ])
    }))
}

fn check_reductions(g: &Graph) -> Result<Option<Observed>> {
    let tg = t(g)?;
    let mut bad = Observed::new();
    let mut flag = |name: &str, value: i64| {
        bad.entry(name.to_string()).or_insert(value);
    };

    if tree_cover_direct(g)?.len() as i64 != tg {
        flag("direct", tree_cover_direct(g)?.len() as i64);
    }
    let r = reduce(g)?;
    let kernel_values: Vec<usize> = r
        .kernels
        .iter()
        .map(|k| Ok(tree_cover_direct(k)?.len()))
        .collect::<Result<_>>()?;
    if r.tree_cover_number(&kernel_values) as i64 != tg {
        flag("reduced", r.tree_cover_number(&kernel_values) as i64);
    }
    for v in g.leaves() {
        let without = t(&g.remove_vertex(v).0)?;
        if g.order() > 1 && without != tg {
            flag("leaf_deleted", without);
        }
    }
    for (u, v) in g.edges() {
        let sub = t(&g.subdivide_edge(u, v)?)?;
        if sub != tg {
            flag("subdivided", sub);
        }
        let te = t(&g.remove_edge(u, v))?;
        if te < tg - 1 || te > tg + 1 {
            flag("edge_deleted", te);
        }
    }
    for v in g.vertices() {
        let tv = t(&g.remove_vertex(v).0)?;
        if tv < tg - 1 || tv > tg + g.degree(v) as i64 - 1 {
            flag("vertex_deleted", tv);
        }
    }
    let blocks = block_decomposition(g);
    for &(u, v) in &blocks.bridges {
        let h = g.remove_edge(u, v);
        let side = h.reachable_within(u, h.vertices());
        let a = t(&g.induced_subgraph(side).0)?;
        let b = t(&g.induced_subgraph(g.vertices().difference(side)).0)?;
        if a + b - 1 != tg {
            flag("bridge_sum", a + b - 1);
        }
    }
    for c in blocks.cut_vertices {
        let pieces = pieces_at(g, c);
        let mut sum = 1 - pieces.len() as i64;
        for p in &pieces {
            sum += t(p)?;
        }
        if sum != tg {
            flag("cut_vertex_sum", sum);
        }
    }
    if bad.is_empty() {
        return Ok(None);
    }
    bad.insert("T".into(), tg);
    Ok(Some(bad))
}

fn check_bounds(g: &Graph) -> Result<Option<Observed>> {
    let tg = t(g)?;
    let n = g.order();
    let p = path_cover_exact(g)? as i64;
    let mut bad = Observed::new();
    if tg > p {
        bad.insert("P".into(), p);
    }
    if n >= 2 && tg > half(n) {
        bad.insert("half".into(), half(n));
    }
    if n >= 2 {
        let alpha = independence_number(g).0 as i64;
        if tg > n as i64 - alpha {
            bad.insert("n_minus_alpha".into(), n as i64 - alpha);
        }
    }
    let report = bound_report(g)?;
    if report.upper().is_some_and(|u| u < tg) {
        bad.insert("upper".into(), report.upper().unwrap_or_default());
    }
    if report.lower().is_some_and(|l| l > tg) {
        bad.insert("lower".into(), report.lower().unwrap_or_default());
    }
    if bad.is_empty() {
        return Ok(None);
    }
    bad.insert("T".into(), tg);
    Ok(Some(bad))
}

fn check_f_chain(g: &Graph) -> Result<Option<Observed>> {
    let n = g.order();
    let values = [
        ("T", t(g)?),
        ("P", path_cover_exact(g)? as i64),
        ("Z", zero_forcing_number(g)? as i64),
        ("Zplus", psd_zero_forcing_number(g)? as i64),
    ];
    Ok(values
        .iter()
        .any(|&(_, v)| v != half(n))
        .then(|| observed(values)))
}

fn check_certificate(g: &Graph) -> Result<Option<Observed>> {
    let cert = incidence_gram(g)?;
    let c = &cert.checks;
    let aug = triangle_augment(g)?;
    let cover = independent_set_cover(&aug.graph, aug.edge_vertices)?.len();
    let ok = c.passed() && c.alpha == c.m && cover == g.order();
    Ok((!ok).then(|| {
        observed([
            ("m", c.m as i64),
            ("rank", c.rank as i64),
            ("alpha", c.alpha as i64),
            ("pattern", c.pattern_matches as i64),
            ("cover", cover as i64),
        ])
    }))
}

fn check_line_graph(g: &Graph) -> Result<Option<Observed>> {
    let (n, m) = (g.order() as i64, g.size() as i64);
    let tl = t(&line_graph(g)?.graph)?;
    let mid = (m + 1) / 2;
    Ok((tl > mid || mid > m - n + 2).then(|| observed([("n", n), ("m", m), ("T_line", tl)])))
}

/// `T(complement) <= ceil(n/2) <= lower`, where `lower` bounds the maximum
/// semidefinite nullity of the complement.
fn complement_chain(g: &Graph, lower: i64) -> Result<Option<Observed>> {
    let n = g.order();
    let tc = t(&complement(g))?;
    Ok((tc > half(n) || half(n) > lower).then(|| {
        observed([
            ("n", n as i64),
            ("T_complement", tc),
            ("nullity_lower", lower),
        ])
    }))
}

fn complement_hypothesis(g: &Graph) -> bool {
    let (n, m) = (g.order(), g.size());
    2 * m + 8 <= 3 * n && complement(g).is_connected()
}

fn treewidth_hypothesis(g: &Graph) -> bool {
    let n = g.order();
    let tw = treewidth(g).expect("enumerated graphs are within the treewidth limit");
    n >= 4 && 2 * tw + 4 <= n && complement(g).is_connected()
}

fn check_forcing(g: &Graph) -> Result<Option<Observed>> {
    let tg = t(g)?;
    let zp = psd_zero_forcing_number(g)? as i64;
    let z = zero_forcing_number(g)? as i64;
    Ok((tg > zp || zp > z).then(|| observed([("T", tg), ("Zplus", zp), ("Z", z)])))
}

fn k_tree_cases(n_max: usize) -> Vec<(usize, usize, u64)> {
    let mut cases = Vec::new();
    for k in [3usize, 5] {
        if n_max < k + 1 {
            continue;
        }
        for seed in 0..100u64 {
            let n = k + 1 + (seed as usize) % (n_max - k);
            cases.push((k, n, seed));
        }
    }
    cases
}

fn check_budget(id: TheoremId, n_max: usize) -> Result<()> {
    if n_max > id.max_nmax() {
        return Err(Error::UnsupportedSize {
            operation: "verify_theorems",
            n: n_max,
            limit: id.max_nmax(),
        });
    }
    Ok(())
}

/// Verifies one result over its family up to `n_max`.
pub fn verify_theorem(id: TheoremId, n_max: usize) -> Result<VerificationReport> {
    check_budget(id, n_max)?;
    let start = Instant::now();
    let mut notes = Vec::new();
    let (checked, violations) = match id {
        TheoremId::HalfOrder => {
            let gs = connected_range(2, n_max)?;
            (gs.len(), run_check(&gs, check_half_order)?)
        }
        TheoremId::Girth5 => {
            let gs = filtered_range(6, n_max, |g| girth(g).is_none_or(|l| l >= 5))?;
            (gs.len(), run_check(&gs, check_girth5)?)
        }
        TheoremId::OddExtremal => {
            let gs: Vec<Graph> = (3..=n_max)
                .step_by(2)
                .map(|n| enumerate_connected_where(n, outerplanar))
                .collect::<Result<Vec<_>>>()?
                .concat();
            (gs.len(), run_check(&gs, check_odd_extremal)?)
        }
        TheoremId::EvenExtremal => {
            let gs: Vec<Graph> = (4..=n_max)
                .step_by(2)
                .map(|n| enumerate_connected_where(n, outerplanar))
                .collect::<Result<Vec<_>>>()?
                .concat();
            (gs.len(), run_check(&gs, check_even_extremal)?)
        }
        TheoremId::Reductions => {
            let gs = connected_range(1, n_max)?;
            (gs.len(), run_check(&gs, check_reductions)?)
        }
        TheoremId::Bounds => {
            let gs = connected_range(1, n_max)?;
            (gs.len(), run_check(&gs, check_bounds)?)
        }
        TheoremId::FChain => {
            let mut gs = Vec::new();
            for b in 1..=(n_max.saturating_sub(1)) / 2 {
                gs.extend(enumerate_family_f(b)?);
            }
            (gs.len(), run_check(&gs, check_f_chain)?)
        }
        TheoremId::Certificates => {
            notes.push(
                "alpha of the augmentation is compared with m directly; K1 is excluded since \
                 it has no edges and alpha = 1 > m = 0"
                    .into(),
            );
            let gs = connected_range(2, n_max)?;
            (gs.len(), run_check(&gs, check_certificate)?)
        }
        TheoremId::LineGraph => {
            notes.push(
                "checks T(L(G)) <= ceil(m/2) <= m - n + 2; the lower-bound reading of the \
                 first inequality is not used"
                    .into(),
            );
            let mut gs = connected_range(2, n_max)?;
            gs.retain(|g| g.size() + 3 >= 2 * g.order());
            (gs.len(), run_check(&gs, check_line_graph)?)
        }
        TheoremId::Complement => {
            let all = connected_range(1, n_max)?;
            let skipped = all
                .iter()
                .filter(|g| 2 * g.size() + 8 <= 3 * g.order() && !complement(g).is_connected())
                .count();
            notes.push(format!(
                "checks T(complement) <= ceil(n/2) <= 2n - 4 - m; {skipped} graphs with a \
                 disconnected complement are skipped"
            ));
            let gs: Vec<Graph> = all.into_iter().filter(complement_hypothesis).collect();
            let v = run_check(&gs, |g| {
                complement_chain(g, 2 * g.order() as i64 - 4 - g.size() as i64)
            })?;
            (gs.len(), v)
        }
        TheoremId::Treewidth => {
            let all = connected_range(1, n_max)?;
            let gs: Vec<Graph> = all.into_iter().filter(treewidth_hypothesis).collect();
            notes.push(
                "checks T(complement) <= ceil(n/2) <= n - tw - 2 on graphs with a connected \
                 complement"
                    .into(),
            );
            let v = run_check(&gs, |g| {
                let tw = treewidth(g)? as i64;
                complement_chain(g, g.order() as i64 - tw - 2)
            })?;
            (gs.len(), v)
        }
        TheoremId::KTree => {
            let cases = k_tree_cases(n_max);
            let found: Vec<Option<Violation>> = cases
                .par_iter()
                .map(|&(k, n, seed)| {
                    let g = generate_k_tree(k, n, seed)?;
                    let tg = t(&g)?;
                    let expected = (k as i64 + 1) / 2;
                    Ok((tg != expected).then(|| Violation {
                        graph6: g.to_graph6(),
                        observed: observed([("k", k as i64), ("seed", seed as i64), ("T", tg)]),
                    }))
                })
                .collect::<Result<_>>()?;
            let mut v: Vec<Violation> = found.into_iter().flatten().collect();
            v.sort_by(|a, b| a.graph6.cmp(&b.graph6));
            (cases.len(), v)
        }
        TheoremId::Forcing => {
            let gs = connected_range(1, n_max)?;
            (gs.len(), run_check(&gs, check_forcing)?)
        }
    };
    Ok(VerificationReport {
        theorem: id.to_string(),
        family: id.family(n_max),
        graphs_checked: checked,
        violations,
        runtime_seconds: start.elapsed().as_secs_f64(),
        notes,
    })
}

/// Runs each `(theorem, n_max)` pair in order.
pub fn verify_theorems(selection: &[(TheoremId, usize)]) -> Result<Vec<VerificationReport>> {
    for &(id, n_max) in selection {
        check_budget(id, n_max)?;
    }
    selection
        .iter()
        .map(|&(id, n_max)| verify_theorem(id, n_max))
        .collect()
}

pub const SCAN_LIMIT: usize = 9;

/// `T(G) <= ceil(n/3)` over connected triangle-free graphs with `n <= n_max`.
/// A violation here would be a counterexample, not a defect.
pub fn scan_conjecture_triangle_free(n_max: usize) -> Result<VerificationReport> {
    if n_max > SCAN_LIMIT {
        return Err(Error::UnsupportedSize {
            operation: "scan_conjecture_triangle_free",
            n: n_max,
            limit: SCAN_LIMIT,
        });
    }
    let start = Instant::now();
    let gs = filtered_range(1, n_max, |g| girth(g).is_none_or(|l| l >= 4))?;
    let violations = run_check(&gs, |g| {
        let tg = t(g)?;
        let bound = g.order().div_ceil(3) as i64;
        Ok((tg > bound).then(|| observed([("n", g.order() as i64), ("T", tg)])))
    })?;
    Ok(VerificationReport {
        theorem: "triangle-free-conjecture".into(),
        family: format!("connected triangle-free graphs, n <= {n_max}"),
        graphs_checked: gs.len(),
        violations,
        runtime_seconds: start.elapsed().as_secs_f64(),
        notes: vec!["report only: the statement is conjectured, not proved".into()],
    })
}

pub const PARAMETERS: [&str; 13] = [
    "n",
    "m",
    "girth",
    "alpha",
    "treewidth",
    "outerplanar",
    "T",
    "P",
    "Z",
    "Zplus",
    "blocks",
    "extremal",
    "bounds",
];

/// Computes the named parameters of one graph as a JSON object. `T` also
/// adds `T_witness`.
pub fn compute(g: &Graph, params: &[&str]) -> Result<Value> {
    let mut out = serde_json::Map::new();
    for &p in params {
        let value = match p {
            "n" => json!(g.order()),
            "m" => json!(g.size()),
            "girth" => json!(girth(g)),
            "alpha" => json!(independence_number(g).0),
            "treewidth" => json!(treewidth(g)?),
            "outerplanar" => json!(is_outerplanar(g)?),
            "T" => {
                let (value, cover) = tree_cover_exact(g)?;
                out.insert("T_witness".into(), json!(cover.to_lists()));
                json!(value)
            }
            "P" => json!(path_cover_exact(g)?),
            "Z" => json!(zero_forcing_number(g)?),
            "Zplus" => json!(psd_zero_forcing_number(g)?),
            "blocks" => {
                let b = block_decomposition(g);
                json!({
                    "blocks": b.blocks.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
                    "cut_vertices": b.cut_vertices.to_vec(),
                    "bridges": b.bridges,
                })
            }
            "extremal" => json!(classify(g)?.kind.name()),
            "bounds" => serde_json::to_value(bound_report(g)?).expect("bounds serialize"),
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown parameter {other:?}; expected one of {}",
                    PARAMETERS.join(", ")
                )))
            }
        };
        out.insert(p.to_string(), value);
    }
    Ok(Value::Object(out))
}

/// Vertex sets of the parts of a verified minimum cover, for reporting.
pub fn witness_lists(parts: &[VertexSet]) -> Vec<Vec<usize>> {
    parts.iter().map(|p| p.to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }

    #[test]
    fn compute_examples() {
        let c5 = parse_edge_list("5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
        let v = compute(&c5, &["T", "Zplus"]).unwrap();
        assert_eq!(v["T"], 2);
        assert_eq!(v["Zplus"], 2);
        let k3 = Graph::complete(3);
        let bowtie = k3.vertex_sum(0, &k3, 0).unwrap();
        let v = compute(&bowtie, &["T", "extremal"]).unwrap();
        assert_eq!(v["T"], 3);
        assert_eq!(v["extremal"], "OddF");
        let v = compute(&Graph::complete(4), &["outerplanar"]).unwrap();
        assert_eq!(v, json!({"outerplanar": false}));
        assert!(compute(&k3, &["colour"]).is_err());
    }

    #[test]
    fn small_scans() {
        let r = scan_conjecture_triangle_free(1).unwrap();
        assert_eq!(r.graphs_checked, 1);
        assert!(r.passed());
        let r = scan_conjecture_triangle_free(6).unwrap();
        assert!(r.passed());
        assert!(scan_conjecture_triangle_free(10).is_err());
        let r = verify_theorem(TheoremId::HalfOrder, 6).unwrap();
        assert!(r.passed());
        assert!(verify_theorem(TheoremId::LineGraph, 7).is_err());
    }
}
