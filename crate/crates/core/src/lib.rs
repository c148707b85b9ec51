//! Tree cover numbers of small graphs: exact solvers, the constructive
//! `ceil(n/2)` and girth-five `n/3` covers, zero forcing numbers, outerplanar
//! extremal families and exact rank certificates, plus a harness that checks
//! the associated inequalities over exhaustively enumerated graphs.

pub mod certificates;
pub mod covers;
pub mod error;
pub mod extremal;
pub mod forcing;
pub mod graph;
pub mod harness;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
