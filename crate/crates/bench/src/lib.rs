//! Fixed graphs shared by the benchmarks in `benches/`.

use treecover::extremal::{generate_cycle_triangle, generate_family_f, generate_k_tree};
use treecover::Graph;

/// Named graphs of 10 to 14 vertices, small enough for every exact solver.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("petersen", Graph::petersen()),
        ("cycle-12", Graph::cycle(12)),
        ("k-3-4", Graph::complete_bipartite(3, 4)),
        ("F-13", generate_family_f(6, 1).expect("13 vertices")),
        ("3-tree-12", generate_k_tree(3, 12, 7).expect("12 vertices")),
        (
            "C6-triangle",
            generate_cycle_triangle(6).expect("12 vertices"),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_connected_and_small() {
        for (name, g) in fixtures() {
            assert!(g.is_connected(), "{name}");
            assert!((7..=14).contains(&g.order()), "{name}");
        }
    }
}
