mod common;

use proptest::prelude::*;
use treecover::covers::{
    girth5_cover, half_order_cover, reduce, tree_cover_direct, tree_cover_exact, verify_cover,
    TreeCover,
};
use treecover::graph::{
    block_decomposition, enumerate_connected, enumerate_connected_where, girth, independence_number,
};
use treecover::{Graph, VertexSet};

fn t(g: &Graph) -> usize {
    tree_cover_exact(g).unwrap().0
}

#[test]
fn reduction_lifts_to_minimum_cover() {
    for n in 1..=8 {
        for g in enumerate_connected(n).unwrap() {
            let r = reduce(&g).unwrap();
            let covers: Vec<Vec<VertexSet>> = r
                .kernels
                .iter()
                .map(|k| tree_cover_direct(k).unwrap().parts().to_vec())
                .collect();
            let values: Vec<usize> = covers.iter().map(Vec::len).collect();
            let direct = tree_cover_direct(&g).unwrap().len();
            assert_eq!(r.tree_cover_number(&values), direct, "{g:?}");
            let lifted = r.lift(&covers);
            let cover = verify_cover(&g, &lifted).unwrap_or_else(|e| panic!("{g:?}: {e:?}"));
            assert_eq!(cover.len(), direct, "{g:?}");
        }
    }
}

#[test]
fn leaf_and_bridge_rules() {
    for n in 2..=8 {
        for g in enumerate_connected(n).unwrap() {
            let tg = t(&g);
            for v in g.leaves() {
                assert_eq!(t(&g.remove_vertex(v).0), tg, "{g:?} leaf {v}");
            }
            for (u, v) in block_decomposition(&g).bridges {
                let h = g.remove_edge(u, v);
                let side = h.reachable_within(u, h.vertices());
                let a = t(&g.induced_subgraph(side).0);
                let b = t(&g.induced_subgraph(g.vertices().difference(side)).0);
                assert_eq!(a + b - 1, tg, "{g:?} bridge {u}-{v}");
            }
        }
    }
}

#[test]
fn half_order_exhaustive() {
    for n in 2..=8 {
        for g in enumerate_connected(n).unwrap() {
            let c = half_order_cover(&g).unwrap();
            assert!(c.verified());
            assert!(c.len() <= n.div_ceil(2), "{g:?}");
        }
    }
}

#[test]
fn girth5_exhaustive() {
    for n in 6..=10 {
        let girth5 = |g: &Graph| girth(g).is_none_or(|l| l >= 5);
        for g in enumerate_connected_where(n, girth5).unwrap() {
            let c = girth5_cover(&g).unwrap();
            assert!(c.verified());
            assert!(c.len() <= n / 3, "{g:?}");
        }
    }
}

#[test]
fn cover_json_round_trip() {
    let g = Graph::petersen();
    let (_, cover) = tree_cover_exact(&g).unwrap();
    let back = TreeCover::from_json(&g, &cover.to_json()).unwrap();
    assert_eq!(back, cover);
    assert!(TreeCover::from_json(&g, "[[0,1,2,3,4],[5,6,7,8,9]]").is_err());
    assert!(TreeCover::from_json(&g, "[[0]]").is_err());
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        // a random spanning tree plus random extra edges
        let parents = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec((0..n, 0..n), 0..=n);
        (parents, extra).prop_map(move |(parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            edges.sort_by_key(|&(u, v)| (u.min(v), u.max(v)));
            edges.dedup_by_key(|&mut (u, v)| (u.min(v), u.max(v)));
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cover_bounds(g in arb_connected(11)) {
        let n = g.order();
        let tg = t(&g);
        prop_assert!(tg <= n.div_ceil(2));
        prop_assert!(tg <= n - independence_number(&g).0);
        let h = half_order_cover(&g).unwrap();
        prop_assert!(h.len() >= tg && h.len() <= n.div_ceil(2));
    }

    #[test]
    fn deletion_brackets(g in arb_connected(9)) {
        let tg = t(&g) as i64;
        for (u, v) in g.edges() {
            let te = t(&g.remove_edge(u, v)) as i64;
            prop_assert!((tg - 1..=tg + 1).contains(&te));
            prop_assert_eq!(t(&g.subdivide_edge(u, v).unwrap()) as i64, tg);
        }
        for v in g.vertices() {
            let tv = t(&g.remove_vertex(v).0) as i64;
            prop_assert!(tg - 1 <= tv && tv < tg + g.degree(v) as i64);
        }
    }

    #[test]
    fn exact_matches_oracle(g in arb_connected(8)) {
        prop_assert_eq!(t(&g), common::tree_cover_naive(&g));
    }
}
