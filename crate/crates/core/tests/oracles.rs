mod common;

use treecover::certificates::{incidence_gram, incidence_matrix, integer_rank};
use treecover::covers::{path_cover_exact, tree_cover_direct, tree_cover_exact};
use treecover::forcing::{psd_zero_forcing_number, zero_forcing_number};
use treecover::graph::{enumerate_connected, independence_number};
use treecover::Graph;

#[test]
fn tree_cover_matches_partition_oracle() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let naive = common::tree_cover_naive(&g);
            let (t, cover) = tree_cover_exact(&g).unwrap();
            assert_eq!(t, naive, "{g:?}");
            assert_eq!(cover.len(), t);
            assert!(cover.verified());
            assert_eq!(tree_cover_direct(&g).unwrap().len(), naive, "{g:?}");
        }
    }
}

#[test]
fn path_cover_matches_partition_oracle() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            assert_eq!(
                path_cover_exact(&g).unwrap(),
                common::path_cover_naive(&g),
                "{g:?}"
            );
        }
    }
}

#[test]
fn disconnected_inputs_match_oracle() {
    let g = Graph::cycle(4).disjoint_union(&Graph::complete(3)).unwrap();
    let g = g.with_extra_vertices(1).unwrap();
    assert_eq!(
        tree_cover_exact(&g).unwrap().0,
        common::tree_cover_naive(&g)
    );
    assert_eq!(tree_cover_exact(&g).unwrap().0, 5);
}

#[test]
fn forcing_numbers_match_subset_oracle() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            assert_eq!(
                zero_forcing_number(&g).unwrap(),
                common::forcing_number_naive(&g, false),
                "{g:?}"
            );
            assert_eq!(
                psd_zero_forcing_number(&g).unwrap(),
                common::forcing_number_naive(&g, true),
                "{g:?}"
            );
        }
    }
}

#[test]
fn independence_number_matches_subset_oracle() {
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            let naive = (0u64..1 << n)
                .filter(|&s| {
                    (0..n).all(|u| (0..n).all(|v| s >> u & s >> v & 1 == 0 || !g.has_edge(u, v)))
                })
                .map(|s| s.count_ones() as usize)
                .max()
                .unwrap();
            let (alpha, witness) = independence_number(&g);
            assert_eq!(alpha, naive);
            assert!(g.is_independent(witness) && witness.len() == alpha);
        }
    }
}

#[test]
fn ranks_match_rational_elimination() {
    for n in 2..=6 {
        for g in enumerate_connected(n).unwrap() {
            let b = incidence_matrix(&g);
            assert_eq!(integer_rank(&b), common::rational_rank(&b));
            let cert = incidence_gram(&g).unwrap();
            assert_eq!(cert.checks.rank, common::rational_rank(&cert.matrix));
        }
    }
}
