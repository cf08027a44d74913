#![allow(dead_code)]

use proptest::prelude::*;
use zforce::random::{random_graph, RandomModel, RandomOptions};
use zforce::Graph;

/// Any simple graph on `1..=max_n` vertices.
pub fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A connected graph on `min_n..=max_n` vertices with density in `[0.25, 0.75]`.
pub fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, 25u32..=75, any::<u64>()).prop_map(|(n, pct, seed)| {
        let opts = RandomOptions {
            connected: true,
            ..Default::default()
        };
        random_graph(
            RandomModel::Gnp {
                n,
                p: f64::from(pct) / 100.0,
            },
            seed,
            opts,
        )
        .unwrap()
    })
}

/// Connected cubic graph of girth at least `girth` on `n` vertices.
pub fn cubic(n: usize, girth: usize, seed: u64) -> Graph {
    let opts = RandomOptions {
        connected: true,
        min_girth: Some(girth),
        ..Default::default()
    };
    random_graph(RandomModel::RegularPairing { n, r: 3 }, seed, opts).unwrap()
}
