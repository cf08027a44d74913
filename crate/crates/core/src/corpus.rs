//! Fixed and seeded graph collections used for batch verification.

use crate::random::{random_graph_with, rng_from_seed, RandomModel, RandomOptions};
use crate::{Graph, NamedFamily, Result};

/// A graph with a human-readable provenance label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
}

/// Named graphs of every family at small orders.
pub fn named_graphs() -> Vec<(NamedFamily, Graph)> {
    let mut fams = Vec::new();
    fams.extend((1..=7).map(NamedFamily::Complete));
    for a in 1..=4 {
        fams.extend((a..=4).map(|b| NamedFamily::CompleteBipartite(a, b)));
    }
    fams.extend((3..=12).map(NamedFamily::Cycle));
    fams.extend((1..=12).map(NamedFamily::Path));
    fams.extend([
        NamedFamily::Petersen,
        NamedFamily::Heawood,
        NamedFamily::ExceptionalFive,
        NamedFamily::ExceptionalSeven,
    ]);
    fams.into_iter()
        .map(|f| {
            let g = f.generate().expect("parameters are valid");
            (f, g)
        })
        .collect()
}

/// `g` minus one edge, for every edge whose removal keeps `g` connected.
pub fn edge_deletions(g: &Graph) -> Vec<((usize, usize), Graph)> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    edges
        .iter()
        .filter_map(|&e| {
            let h = Graph::from_edges(g.n(), edges.iter().copied().filter(|&x| x != e)).ok()?;
            h.is_connected().then_some((e, h))
        })
        .collect()
}

/// The named graphs plus every connected single-edge deletion of the named
/// graphs with maximum degree at least 3.
pub fn bundled_corpus() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    for (fam, g) in named_graphs() {
        if g.max_degree() >= 3 && g.n() >= 4 {
            for ((u, v), h) in edge_deletions(&g) {
                out.push(CorpusGraph {
                    name: format!("{fam} minus {u}-{v}"),
                    graph: h,
                });
            }
        }
        out.push(CorpusGraph {
            name: fam.to_string(),
            graph: g,
        });
    }
    out
}

/// `count` connected graphs drawn from `model` with a single seeded stream.
pub fn random_corpus(model: RandomModel, count: usize, seed: u64, opts: RandomOptions) -> Result<Vec<Graph>> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| {
            random_graph_with(
                model,
                &mut rng,
                RandomOptions {
                    connected: true,
                    ..opts
                },
            )
        })
        .collect()
}
