//! Graphs whose tree cover number meets `ceil(n/2)`, and generators for the
//! example families.
//!
//! `F` is the set of connected graphs on an odd number `n >= 3` of vertices
//! in which every block is a triangle. Connected outerplanar graphs of even
//! order reach `n/2` through one of three shapes:
//!
//! 1. a member of `F` plus one leaf;
//! 2. two members of `F` joined by a bridge;
//! 3. a core `C4`, `K4 - e` or `C_r^triangle` with triangles glued on one
//!    at a time at single vertices.
//!
//! Shape 3 is recognised through the blocks: exactly one block is a core and
//! every other block is a triangle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::graph::{
    are_isomorphic, block_decomposition, canonical_form, triangle_augment, Graph, VertexSet,
    MAX_VERTICES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Core {
    C4,
    K4MinusE,
    /// `C_r^triangle`, on `2r` vertices.
    CycleTriangle(usize),
}

impl Core {
    pub fn graph(self) -> Result<Graph> {
        match self {
            Core::C4 => Ok(Graph::cycle(4)),
            Core::K4MinusE => Ok(Graph::complete(4).remove_edge(2, 3)),
            Core::CycleTriangle(r) => generate_cycle_triangle(r),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "core")]
pub enum ExtremalKind {
    OddF,
    EvenLeafOnF,
    EvenBridgeOfTwoF,
    EvenK3Chain(Core),
    NotExtremal,
}

impl ExtremalKind {
    pub fn name(self) -> String {
        match self {
            ExtremalKind::OddF => "OddF".into(),
            ExtremalKind::EvenLeafOnF => "EvenLeafOnF".into(),
            ExtremalKind::EvenBridgeOfTwoF => "EvenBridgeOfTwoF".into(),
            ExtremalKind::EvenK3Chain(Core::C4) => "EvenK3Chain(C4)".into(),
            ExtremalKind::EvenK3Chain(Core::K4MinusE) => "EvenK3Chain(K4minusE)".into(),
            ExtremalKind::EvenK3Chain(Core::CycleTriangle(r)) => {
                format!("EvenK3Chain(CycleTriangle({r}))")
            }
            ExtremalKind::NotExtremal => "NotExtremal".into(),
        }
    }
}

/// What the classification rests on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    /// Blocks of the input graph as sorted vertex lists.
    pub blocks: Vec<Vec<usize>>,
    /// Shape 1: the leaf whose removal leaves a member of `F`.
    pub leaf: Option<usize>,
    /// Shape 2: the bridge whose sides are members of `F`.
    pub bridge: Option<(usize, usize)>,
    /// Shape 3: index into `blocks` of the core block.
    pub core_block: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalClass {
    #[serde(flatten)]
    pub kind: ExtremalKind,
    pub evidence: Evidence,
}

fn block_lists(g: &Graph) -> Vec<VertexSet> {
    block_decomposition(g).blocks
}

fn all_blocks_triangles(g: &Graph, blocks: &[VertexSet]) -> bool {
    blocks.iter().all(|&b| b.len() == 3 && g.is_clique(b))
}

/// Membership in `F`: connected, odd `n >= 3`, every block a triangle.
pub fn is_family_f(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return precondition("is_family_f", "graph must be connected");
    }
    Ok(in_f(g, g.vertices()))
}

/// Membership in `F` of the subgraph induced by a connected set.
fn in_f(g: &Graph, set: VertexSet) -> bool {
    let n = set.len();
    if n < 3 || n.is_multiple_of(2) {
        return false;
    }
    let (h, _) = g.induced_subgraph(set);
    h.is_connected() && all_blocks_triangles(&h, &block_lists(&h))
}

/// The core type of a block, if it is one.
pub fn core_kind(block: &Graph) -> Option<Core> {
    let n = block.order();
    if n == 4 {
        if are_isomorphic(block, &Graph::cycle(4)) {
            return Some(Core::C4);
        }
        if are_isomorphic(block, &Core::K4MinusE.graph().ok()?) {
            return Some(Core::K4MinusE);
        }
    }
    if n >= 6 && n.is_multiple_of(2) && block.size() == 3 * n / 2 {
        let r = n / 2;
        if are_isomorphic(block, &generate_cycle_triangle(r).ok()?) {
            return Some(Core::CycleTriangle(r));
        }
    }
    None
}

/// Which of the three even shapes `g` has, checked in order 1, 2, 3.
pub fn classify_even_extremal(g: &Graph) -> Result<ExtremalClass> {
    let n = g.order();
    if n < 4 || n % 2 == 1 {
        return precondition(
            "classify_even_extremal",
            "order must be even and at least 4",
        );
    }
    if !g.is_connected() {
        return precondition("classify_even_extremal", "graph must be connected");
    }
    let decomposition = block_decomposition(g);
    let mut evidence = Evidence {
        blocks: decomposition.blocks.iter().map(|b| b.to_vec()).collect(),
        leaf: None,
        bridge: None,
        core_block: None,
    };
    let done = |kind, evidence| Ok(ExtremalClass { kind, evidence });

    if let Some(v) = g
        .leaves()
        .iter()
        .find(|&v| in_f(g, g.vertices().without(v)))
    {
        evidence.leaf = Some(v);
        return done(ExtremalKind::EvenLeafOnF, evidence);
    }
    for &(u, v) in &decomposition.bridges {
        let h = g.remove_edge(u, v);
        let side = h.reachable_within(u, h.vertices());
        if in_f(g, side) && in_f(g, g.vertices().difference(side)) {
            evidence.bridge = Some((u, v));
            return done(ExtremalKind::EvenBridgeOfTwoF, evidence);
        }
    }
    let mut core = None;
    for (i, &b) in decomposition.blocks.iter().enumerate() {
        if b.len() == 3 && g.is_clique(b) {
            continue;
        }
        match (core, core_kind(&g.induced_subgraph(b).0)) {
            (None, Some(kind)) => core = Some((i, kind)),
            _ => return done(ExtremalKind::NotExtremal, evidence),
        }
    }
    match core {
        Some((i, kind)) => {
            evidence.core_block = Some(i);
            done(ExtremalKind::EvenK3Chain(kind), evidence)
        }
        None => done(ExtremalKind::NotExtremal, evidence),
    }
}

/// `OddF` or `NotExtremal` for odd orders, the even classification for even
/// orders of at least 4.
pub fn classify(g: &Graph) -> Result<ExtremalClass> {
    if !g.is_connected() {
        return precondition("classify", "graph must be connected");
    }
    if g.order().is_multiple_of(2) && g.order() >= 4 {
        return classify_even_extremal(g);
    }
    let kind = if in_f(g, g.vertices()) {
        ExtremalKind::OddF
    } else {
        ExtremalKind::NotExtremal
    };
    Ok(ExtremalClass {
        kind,
        evidence: Evidence {
            blocks: block_lists(g).iter().map(|b| b.to_vec()).collect(),
            leaf: None,
            bridge: None,
            core_block: None,
        },
    })
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

/// Glues `count` triangles onto `g`, each at a vertex chosen by `rng`.
fn attach_triangles(mut g: Graph, count: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    check_order(g.order() + 2 * count)?;
    let k3 = Graph::complete(3);
    for _ in 0..count {
        let v = rng.gen_range(0..g.order());
        g = g.vertex_sum(v, &k3, 0)?;
    }
    Ok(g)
}

/// A member of `F` with `b` triangles and `2b + 1` vertices.
pub fn generate_family_f(b: usize, seed: u64) -> Result<Graph> {
    if b == 0 {
        return Err(Error::InvalidArgument("need at least one triangle".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    attach_triangles(Graph::complete(3), b - 1, &mut rng)
}

/// Every member of `F` with `b` triangles, one per isomorphism class,
/// sorted by graph6.
pub fn enumerate_family_f(b: usize) -> Result<Vec<Graph>> {
    if b == 0 {
        return Err(Error::InvalidArgument("need at least one triangle".into()));
    }
    check_order(2 * b + 1)?;
    let k3 = Graph::complete(3);
    let mut level = vec![k3.clone()];
    for _ in 1..b {
        let mut next: Vec<Graph> = level
            .iter()
            .flat_map(|g| (0..g.order()).map(|v| g.vertex_sum(v, &k3, 0).expect("within limit")))
            .map(|g| canonical_form(&g).graph)
            .collect();
        next.sort_by_key(|g| g.to_graph6());
        next.dedup();
        level = next;
    }
    level.sort_by_key(|g| g.to_graph6());
    Ok(level)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvenSpec {
    /// Shape 1: a leaf on a member of `F` with this many triangles.
    Leaf { triangles: usize },
    /// Shape 2: a bridge between two members of `F`.
    Bridge { left: usize, right: usize },
    /// Shape 3: a core with triangles glued on.
    K3Chain { core: Core, triangles: usize },
}

pub fn generate_even_extremal(spec: EvenSpec, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match spec {
        EvenSpec::Leaf { triangles } => {
            let f = generate_family_f(triangles, rng.gen())?;
            check_order(f.order() + 1)?;
            f.add_leaf(rng.gen_range(0..f.order()))
        }
        EvenSpec::Bridge { left, right } => {
            let a = generate_family_f(left, rng.gen())?;
            let b = generate_family_f(right, rng.gen())?;
            check_order(a.order() + b.order())?;
            let (u, v) = (rng.gen_range(0..a.order()), rng.gen_range(0..b.order()));
            a.bridge_union(u, &b, v)
        }
        EvenSpec::K3Chain { core, triangles } => {
            attach_triangles(core.graph()?, triangles, &mut rng)
        }
    }
}

/// A `k`-tree on `n` vertices: `K_{k+1}`, then each new vertex joined to a
/// randomly chosen existing `k`-clique.
pub fn generate_k_tree(k: usize, n: usize, seed: u64) -> Result<Graph> {
    if k == 0 || n < k + 1 {
        return Err(Error::InvalidArgument(format!(
            "a {k}-tree needs k >= 1 and at least k + 1 vertices, got n = {n}"
        )));
    }
    check_order(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let base = VertexSet::full(k + 1);
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    let mut cliques: Vec<VertexSet> = base.iter().map(|u| base.without(u)).collect();
    for w in k + 1..n {
        let c = cliques[rng.gen_range(0..cliques.len())];
        edges.extend(c.iter().map(|u| (u, w)));
        cliques.extend(c.iter().map(|u| c.without(u).with(w)));
    }
    Graph::from_edges(n, &edges)
}

/// `k` triangles sharing vertex 0.
pub fn generate_friendship(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument("need at least one triangle".into()));
    }
    check_order(2 * k + 1)?;
    let mut edges = Vec::new();
    for i in 0..k {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    Graph::from_edges(2 * k + 1, &edges)
}

/// `C_r` with a triangle on every edge: cycle vertices `0..r`, then the
/// added vertex of edge `i` in lexicographic edge order is `r + i`.
pub fn generate_cycle_triangle(r: usize) -> Result<Graph> {
    if r < 3 {
        return Err(Error::InvalidArgument(format!(
            "cycle length must be at least 3, got {r}"
        )));
    }
    check_order(2 * r)?;
    Ok(triangle_augment(&Graph::cycle(r))?.graph)
}
