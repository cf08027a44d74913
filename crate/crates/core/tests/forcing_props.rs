mod common;

use common::{any_graph, connected_graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zforce::{closure, is_zero_forcing_set, permutation_to_set, verify_trace, Graph, VertexSet};

fn subset(g: &Graph, bits: &[bool]) -> VertexSet {
    VertexSet::from_indices(g.n(), (0..g.n()).filter(|&v| bits[v % bits.len()]))
}

/// Closure computed by applying one randomly chosen available force at a time.
fn shuffled_closure(g: &Graph, z: &VertexSet, seed: u64) -> VertexSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut filled: Vec<bool> = (0..g.n()).map(|v| z.contains(v)).collect();
    loop {
        let mut forces: Vec<(usize, usize)> = (0..g.n())
            .filter(|&u| filled[u])
            .filter_map(|u| {
                let white: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !filled[w]).collect();
                (white.len() == 1).then(|| (u, white[0]))
            })
            .collect();
        if forces.is_empty() {
            break;
        }
        forces.shuffle(&mut rng);
        filled[forces[0].1] = true;
    }
    VertexSet::from_indices(g.n(), (0..g.n()).filter(|&v| filled[v]))
}

proptest! {
    #[test]
    fn monotone(g in any_graph(14), a in proptest::collection::vec(any::<bool>(), 14), b in proptest::collection::vec(any::<bool>(), 14)) {
        let z = subset(&g, &a);
        let z2 = z.union(&subset(&g, &b));
        let f = closure(&g, &z).unwrap().closure;
        let f2 = closure(&g, &z2).unwrap().closure;
        prop_assert!(f.is_subset(&f2));
    }

    #[test]
    fn idempotent(g in any_graph(14), a in proptest::collection::vec(any::<bool>(), 14)) {
        let f = closure(&g, &subset(&g, &a)).unwrap().closure;
        let again = closure(&g, &f).unwrap();
        prop_assert_eq!(&again.closure, &f);
        prop_assert!(again.steps.is_empty());
    }

    #[test]
    fn order_independent(g in any_graph(14), a in proptest::collection::vec(any::<bool>(), 14), seed in any::<u64>()) {
        let z = subset(&g, &a);
        let trace = closure(&g, &z).unwrap();
        prop_assert!(verify_trace(&g, &trace).is_ok());
        prop_assert_eq!(shuffled_closure(&g, &z, seed), trace.closure);
    }

    #[test]
    fn permutation_sets_force(g in connected_graph(7, 30), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rng);
        let z = permutation_to_set(&g, &order).unwrap();
        prop_assert!(is_zero_forcing_set(&g, &z).unwrap());
    }
}

/// Heap's algorithm over all orders of `0..n`.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut out = vec![a.clone()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            a.swap(if i % 2 == 0 { 0 } else { c[i] }, i);
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn every_permutation_forces_small_graphs(g in any_graph(6)) {
        for order in all_permutations(g.n()) {
            let z = permutation_to_set(&g, &order).unwrap();
            prop_assert!(is_zero_forcing_set(&g, &z).unwrap(), "{:?}", order);
        }
    }
}

#[test]
fn permutation_must_be_a_permutation() {
    let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    assert!(permutation_to_set(&g, &[0, 0, 1]).is_err());
    assert!(permutation_to_set(&g, &[0, 1]).is_err());
}
