//! Tree covers: verification, exact solvers, reductions and the constructive
//! `ceil(n/2)` and girth-five `floor(n/3)` covers.

mod bounds;
mod girth5;
mod reduce;
mod search;
mod star;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use bounds::{bound_report, independent_set_cover, Bound, BoundKind, BoundReport};
pub use girth5::girth5_cover;
pub use reduce::{reduce, Reduction, ReductionKind, ReductionStep, ReductionTrace};
pub use search::{
    min_partition, path_cover_exact, tree_cover_direct, tree_cover_exact, PartShape,
    COVER_ORDER_LIMIT,
};
pub use star::{
    find_removable_star, half_order_cover, is_removable_star, removable_star_constructive,
};

use crate::graph::{Graph, VertexSet};

/// A partition of the vertex set into parts that each induce a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCover {
    parts: Vec<VertexSet>,
    verified: bool,
}

impl TreeCover {
    /// Parts sorted by their smallest vertex.
    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn verified(&self) -> bool {
        self.verified
    }

    /// Part containing `v`.
    pub fn part_of(&self, v: usize) -> Option<VertexSet> {
        self.parts.iter().copied().find(|p| p.contains(v))
    }

    /// Sorted vertex lists, the JSON serialization.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(|p| p.to_vec()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_lists()).expect("vectors serialize")
    }

    /// Parses the JSON array-of-arrays form and verifies it against `g`.
    pub fn from_json(g: &Graph, text: &str) -> Result<TreeCover, CoverViolation> {
        let lists: Vec<Vec<usize>> =
            serde_json::from_str(text).map_err(|e| CoverViolation::Malformed(e.to_string()))?;
        verify_cover_lists(g, &lists)
    }
}

impl Serialize for TreeCover {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_lists().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TreeCover {
    /// Deserialized covers are unverified until passed through [`verify_cover`].
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let lists = Vec::<Vec<usize>>::deserialize(deserializer)?;
        let mut parts = Vec::with_capacity(lists.len());
        for l in lists {
            if let Some(&v) = l.iter().find(|&&v| v >= 64) {
                return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
            }
            parts.push(l.into_iter().collect());
        }
        Ok(TreeCover {
            parts,
            verified: false,
        })
    }
}

/// The first condition a proposed cover fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverViolation {
    OutOfRange { part: usize, vertex: usize },
    EmptyPart { part: usize },
    Overlap { part: usize, vertex: usize },
    Uncovered { vertex: usize },
    Cycle { part: usize },
    Disconnected { part: usize },
    Malformed(String),
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverViolation::OutOfRange { part, vertex } => {
                write!(f, "part {part}: vertex {vertex} out of range")
            }
            CoverViolation::EmptyPart { part } => write!(f, "part {part} is empty"),
            CoverViolation::Overlap { part, vertex } => {
                write!(f, "part {part}: vertex {vertex} already covered")
            }
            CoverViolation::Uncovered { vertex } => write!(f, "vertex {vertex} is not covered"),
            CoverViolation::Cycle { part } => write!(f, "part {part} induces a cycle"),
            CoverViolation::Disconnected { part } => {
                write!(f, "part {part} induces a disconnected subgraph")
            }
            CoverViolation::Malformed(e) => write!(f, "malformed cover: {e}"),
        }
    }
}

impl std::error::Error for CoverViolation {}

/// Checks that `parts` are disjoint, cover `V`, and each induce a tree.
pub fn verify_cover(g: &Graph, parts: &[VertexSet]) -> Result<TreeCover, CoverViolation> {
    let n = g.order();
    let mut seen = VertexSet::EMPTY;
    for (i, &p) in parts.iter().enumerate() {
        if let Some(v) = p.iter().find(|&v| v >= n) {
            return Err(CoverViolation::OutOfRange { part: i, vertex: v });
        }
        if p.is_empty() {
            return Err(CoverViolation::EmptyPart { part: i });
        }
        if let Some(v) = p.intersection(seen).first() {
            return Err(CoverViolation::Overlap { part: i, vertex: v });
        }
        seen = seen.union(p);
    }
    if let Some(v) = g.vertices().difference(seen).first() {
        return Err(CoverViolation::Uncovered { vertex: v });
    }
    for (i, &p) in parts.iter().enumerate() {
        if g.edges_within(p) >= p.len() {
            return Err(CoverViolation::Cycle { part: i });
        }
        if !g.is_connected_set(p) {
            return Err(CoverViolation::Disconnected { part: i });
        }
    }
    let mut parts = parts.to_vec();
    parts.sort_by_key(|p| p.first());
    Ok(TreeCover {
        parts,
        verified: true,
    })
}

fn verify_cover_lists(g: &Graph, lists: &[Vec<usize>]) -> Result<TreeCover, CoverViolation> {
    let mut parts = Vec::with_capacity(lists.len());
    for (i, l) in lists.iter().enumerate() {
        if let Some(&v) = l.iter().find(|&&v| v >= g.order()) {
            return Err(CoverViolation::OutOfRange { part: i, vertex: v });
        }
        let set: VertexSet = l.iter().copied().collect();
        if set.len() != l.len() {
            let dup = l
                .iter()
                .find(|&&v| l.iter().filter(|&&w| w == v).count() > 1);
            return Err(CoverViolation::Overlap {
                part: i,
                vertex: *dup.expect("duplicate exists"),
            });
        }
        parts.push(set);
    }
    verify_cover(g, &parts)
}
