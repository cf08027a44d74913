mod common;

use common::any_graph;
use proptest::prelude::*;
use zforce::{parse_graph6, to_graph6, Graph, NamedFamily};

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_loop_free(g in any_graph(16)) {
        g.check_invariants().unwrap();
        for u in 0..g.n() {
            prop_assert!(!g.has_edge(u, u));
            for &v in g.neighbors(u) {
                prop_assert!(g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn acyclic_iff_forest_edge_count(g in any_graph(14)) {
        let forest = g.edge_count() == g.n() - g.components().len();
        prop_assert_eq!(g.girth().is_none(), forest);
    }

    #[test]
    fn graph6_round_trip(g in any_graph(70)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn girth_matches_shortest_cycle(g in any_graph(12)) {
        match g.shortest_cycle() {
            None => prop_assert!(g.girth().is_none()),
            Some(c) => {
                prop_assert_eq!(Some(c.len()), g.girth());
                for i in 0..c.len() {
                    prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
        }
    }
}

#[test]
fn complete_bipartite_has_girth_four() {
    for a in 2..6 {
        for b in a..6 {
            let g = NamedFamily::CompleteBipartite(a, b).generate().unwrap();
            assert_eq!(g.girth(), Some(4), "K_{a},{b}");
        }
    }
    assert_eq!(NamedFamily::CompleteBipartite(1, 5).generate().unwrap().girth(), None);
}

#[test]
fn from_edges_rejects_loops_and_bad_vertices() {
    assert!(Graph::from_edges(3, [(1, 1)]).is_err());
    assert!(Graph::from_edges(3, [(0, 3)]).is_err());
}
