//! Zero forcing sets from uniformly random vertex orders, and the exact
//! expected size of the resulting set.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{HeuristicResult, Method};
use crate::bounds::rational::{self, Rational};
use crate::forcing::permutation_to_set_unchecked;
use crate::random::rng_from_seed;
use crate::{closure, Error, Graph, Result, VertexSet};

/// Largest degree for which the `2^d` inclusion-exclusion is evaluated.
pub const MAX_EXPECTATION_DEGREE: usize = 20;

/// Best set over the trials plus sample statistics of `|Z|`.
#[derive(Debug, Clone, Serialize)]
pub struct RandomRun {
    #[serde(flatten)]
    pub result: HeuristicResult,
    pub trials: u64,
    pub seed: u64,
    pub sample_mean: f64,
    /// Standard error of the sample mean.
    pub std_error: f64,
}

/// Generator for trial `trial`: the seeded stream, moved to its own substream.
fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = rng_from_seed(seed);
    rng.set_stream(trial);
    rng
}

/// Runs `trials` independent random orders and keeps the smallest set, ties
/// broken lexicographically. `bound_claim` is the exact sample mean, which the
/// best set never exceeds.
pub fn random_zfs(g: &Graph, trials: u64, seed: u64) -> Result<RandomRun> {
    if trials == 0 {
        return Err(Error::InvalidParams("trials must be at least 1".into()));
    }
    let n = g.n();
    let (best, sum, sum_sq) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut trial_rng(seed, t));
            let mut pos = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            let z = permutation_to_set_unchecked(g, &pos);
            let k = z.len() as u64;
            (z, k, k * k)
        })
        .reduce_with(|a, b| {
            let best = if (b.0.len(), &b.0) < (a.0.len(), &a.0) {
                b.0
            } else {
                a.0
            };
            (best, a.1 + b.1, a.2 + b.2)
        })
        .expect("at least one trial");
    let t = trials as f64;
    let mean = sum as f64 / t;
    let var = if trials > 1 {
        ((sum_sq as f64) - t * mean * mean).max(0.0) / (t - 1.0)
    } else {
        0.0
    };
    let trace = closure(g, &best)?;
    if !trace.is_complete() {
        return Err(Error::Invariant("random order produced a non-forcing set".into()));
    }
    Ok(RandomRun {
        result: HeuristicResult {
            set: best,
            method: Method::Random,
            bound_claim: Rational::new(BigInt::from(sum), BigInt::from(trials)),
            trace,
        },
        trials,
        seed,
        sample_mean: mean,
        std_error: (var / t).sqrt(),
    })
}

/// Adds `±1` to `counts[|{u} ∪ N[v] for v in I|]` for every subset `I` of
/// `N(u)`, signed by `(-1)^|I|`.
fn accumulate_vertex(g: &Graph, u: usize, counts: &mut [i64]) {
    fn walk(g: &Graph, nbrs: &[usize], i: usize, acc: &VertexSet, sign: i64, counts: &mut [i64]) {
        if i == nbrs.len() {
            counts[acc.len()] += sign;
            return;
        }
        walk(g, nbrs, i + 1, acc, sign, counts);
        let mut with = acc.clone();
        with.union_with(g.row(nbrs[i]));
        with.insert(nbrs[i]);
        walk(g, nbrs, i + 1, &with, -sign, counts);
    }
    let start = VertexSet::from_indices(g.n(), [u]);
    walk(g, g.neighbors(u), 0, &start, 1, counts);
}

fn check_degree(g: &Graph) -> Result<()> {
    let d = g.max_degree();
    if d > MAX_EXPECTATION_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: d,
            limit: MAX_EXPECTATION_DEGREE,
        });
    }
    Ok(())
}

fn weighted_sum(counts: &[i64]) -> Rational {
    counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(s, &c)| rational::ratio(c, s as i64))
        .sum()
}

/// Exact probability that `u` lands in the set built from a uniformly random
/// order: the inclusion-exclusion over subsets `I` of `N(u)` of
/// `(-1)^|I| / |{u} ∪ ⋃_{v∈I} N[v]|`.
pub fn inclusion_probability(g: &Graph, u: usize) -> Result<Rational> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
    }
    let d = g.degree(u);
    if d > MAX_EXPECTATION_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: d,
            limit: MAX_EXPECTATION_DEGREE,
        });
    }
    let mut counts = vec![0i64; g.n() + 1];
    accumulate_vertex(g, u, &mut counts);
    Ok(weighted_sum(&counts))
}

/// Exact expected size of the random construction; an upper bound on `Z(G)`.
pub fn expected_size(g: &Graph) -> Result<Rational> {
    check_degree(g)?;
    let n = g.n();
    let counts = (0..n)
        .into_par_iter()
        .fold(
            || vec![0i64; n + 1],
            |mut acc, u| {
                accumulate_vertex(g, u, &mut acc);
                acc
            },
        )
        .reduce(
            || vec![0i64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(weighted_sum(&counts))
}
