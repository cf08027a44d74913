//! Seeded random graph generators for building test corpora.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Graph, Result};

/// Which random model to sample from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RandomModel {
    /// Erdős–Rényi `G(n, p)`.
    Gnp { n: usize, p: f64 },
    /// Uniform `r`-regular graph via the pairing (configuration) model;
    /// pairings with loops or multi-edges are discarded.
    RegularPairing { n: usize, r: usize },
}

/// Rejection filters applied after sampling.
#[derive(Debug, Clone, Copy)]
pub struct RandomOptions {
    pub min_girth: Option<usize>,
    pub connected: bool,
    pub max_attempts: usize,
}

impl Default for RandomOptions {
    fn default() -> Self {
        Self {
            min_girth: None,
            connected: false,
            max_attempts: 1_000_000,
        }
    }
}

/// Deterministic RNG used throughout the crate.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Samples a graph, resampling until all filters pass.
pub fn random_graph(model: RandomModel, seed: u64, opts: RandomOptions) -> Result<Graph> {
    let mut rng = rng_from_seed(seed);
    random_graph_with(model, &mut rng, opts)
}

/// Like [`random_graph`], drawing from a caller-owned generator.
pub fn random_graph_with<R: Rng>(model: RandomModel, rng: &mut R, opts: RandomOptions) -> Result<Graph> {
    match model {
        RandomModel::Gnp { n, p } => {
            if n == 0 || !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParams(format!(
                    "gnp needs n >= 1 and 0 <= p <= 1 (n={n}, p={p})"
                )));
            }
        }
        RandomModel::RegularPairing { n, r } => {
            if n == 0 || r >= n || (n * r) % 2 != 0 {
                return Err(Error::InvalidParams(format!(
                    "regular graph needs r < n and n*r even (n={n}, r={r})"
                )));
            }
        }
    }
    for _ in 0..opts.max_attempts {
        let candidate = match model {
            RandomModel::Gnp { n, p } => Some(sample_gnp(n, p, rng)),
            RandomModel::RegularPairing { n, r } => sample_pairing(n, r, rng),
        };
        let Some(g) = candidate else { continue };
        if opts.connected && !g.is_connected() {
            continue;
        }
        if let Some(k) = opts.min_girth {
            if g.girth().is_some_and(|girth| girth < k) {
                continue;
            }
        }
        return Ok(g);
    }
    Err(Error::GenerationFailed {
        attempts: opts.max_attempts,
        reason: format!("no sample of {model:?} passed the filters"),
    })
}

fn sample_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid by construction")
}

fn sample_pairing<R: Rng>(n: usize, r: usize, rng: &mut R) -> Option<Graph> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    points.shuffle(rng);
    let mut seen = std::collections::HashSet::with_capacity(points.len() / 2);
    let mut edges = Vec::with_capacity(points.len() / 2);
    for pair in points.chunks(2) {
        let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
        if u == v || !seen.insert((u, v)) {
            return None;
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_seed() {
        let m = RandomModel::Gnp { n: 12, p: 0.3 };
        let a = random_graph(m, 7, RandomOptions::default()).unwrap();
        let b = random_graph(m, 7, RandomOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn regular_pairing_is_regular_and_simple() {
        for seed in 0..20 {
            let g = random_graph(
                RandomModel::RegularPairing { n: 12, r: 3 },
                seed,
                RandomOptions::default(),
            )
            .unwrap();
            assert_eq!(g.regularity(), Some(3));
            assert_eq!(g.edge_count(), 18);
        }
    }

    #[test]
    fn girth_filter() {
        let opts = RandomOptions {
            min_girth: Some(5),
            connected: true,
            ..Default::default()
        };
        let g = random_graph(RandomModel::RegularPairing { n: 16, r: 3 }, 3, opts).unwrap();
        assert!(g.girth().unwrap() >= 5);
        assert!(g.is_connected());
    }

    #[test]
    fn infeasible_params() {
        assert!(random_graph(RandomModel::RegularPairing { n: 5, r: 3 }, 0, RandomOptions::default()).is_err());
        let opts = RandomOptions {
            min_girth: Some(5),
            max_attempts: 10,
            ..Default::default()
        };
        // K4 is the only 3-regular graph on 4 vertices
        assert!(matches!(
            random_graph(RandomModel::RegularPairing { n: 4, r: 3 }, 0, opts),
            Err(Error::GenerationFailed { .. })
        ));
    }
}
