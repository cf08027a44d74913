//! Constructive and randomized procedures that produce zero forcing sets with
//! a size guarantee.

mod extension;
mod randomized;
mod seed;

use serde::{Serialize, Serializer};

use crate::bounds::rational::{self, Rational, RationalJson};
use crate::{ForcingStep, ForcingTrace, VertexSet};

pub use extension::{
    extension_zfs, extension_zfs_with_log, find_extension_subgraph, AugmentationStep, ExtensionKind, ExtensionRun,
    ExtensionSubgraph,
};
pub use randomized::{expected_size, inclusion_probability, random_zfs, RandomRun, MAX_EXPECTATION_DEGREE};
pub use seed::{find_seed, greedy_extend, seeded_greedy_zfs, SeedCertificate, SeedOutcome, SeedSource, SeededRun};

/// Which procedure produced a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Seed certificate followed by greedy extension.
    Greedy,
    /// Known minimum set of an exceptional graph.
    ExceptionalWitness,
    /// Repeated path, cycle and lollipop augmentations on subcubic graphs.
    Extension,
    /// Best of several random vertex orders.
    Random,
}

/// A zero forcing set, the procedure that built it, the size it promises,
/// and the forcing trace that certifies it.
#[derive(Debug, Clone, PartialEq)]
pub struct HeuristicResult {
    pub set: VertexSet,
    pub method: Method,
    pub bound_claim: Rational,
    pub trace: ForcingTrace,
}

impl HeuristicResult {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    /// `|set| <= bound_claim`.
    pub fn claim_held(&self) -> bool {
        rational::integer(self.set.len()) <= self.bound_claim
    }
}

#[derive(Serialize)]
struct HeuristicJson<'a> {
    initial: Vec<usize>,
    steps: &'a [ForcingStep],
    method: Method,
    size: usize,
    bound_claim: RationalJson,
    claim_held: bool,
}

impl Serialize for HeuristicResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        HeuristicJson {
            initial: self.trace.initial.to_vec(),
            steps: &self.trace.steps,
            method: self.method,
            size: self.size(),
            bound_claim: RationalJson::from(&self.bound_claim),
            claim_held: self.claim_held(),
        }
        .serialize(s)
    }
}
