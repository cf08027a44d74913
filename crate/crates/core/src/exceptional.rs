//! The five connected graphs with `Δ >= 3` whose zero forcing number exceeds
//! `(Δ-2)n/(Δ-1)`.

use serde::Serialize;

use crate::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExceptionalGraph {
    /// `K_{Δ+1}`
    Complete,
    /// `K_{Δ,Δ}`
    BalancedBipartite,
    /// `K_{Δ-1,Δ}`
    NearBalancedBipartite,
    /// Order 5, degree sequence `[2, 3, 3, 3, 3]`.
    ExceptionalFive,
    /// Order 7, 4-regular, complement `C_3 ∪ C_4`.
    ExceptionalSeven,
}

impl ExceptionalGraph {
    /// Zero forcing number of the family member with maximum degree `delta`.
    pub fn zero_forcing_number(self, delta: usize) -> usize {
        match self {
            ExceptionalGraph::Complete => delta,
            ExceptionalGraph::BalancedBipartite => 2 * delta - 2,
            ExceptionalGraph::NearBalancedBipartite => 2 * delta - 3,
            ExceptionalGraph::ExceptionalFive => 3,
            ExceptionalGraph::ExceptionalSeven => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ExceptionalGraph::Complete => "K_{Δ+1}",
            ExceptionalGraph::BalancedBipartite => "K_{Δ,Δ}",
            ExceptionalGraph::NearBalancedBipartite => "K_{Δ-1,Δ}",
            ExceptionalGraph::ExceptionalFive => "exceptional5",
            ExceptionalGraph::ExceptionalSeven => "exceptional7",
        }
    }
}

/// Recognizes the exceptional graphs among connected graphs with `Δ >= 3`.
///
/// The complete and complete bipartite cases are matched by parameters. An
/// order-5 graph with degree sequence `[2,3,3,3,3]` is unique up to
/// isomorphism (its complement is `P_3 ∪ K_2`), and a 4-regular order-7 graph
/// is the exceptional one exactly when its 2-regular complement has a triangle.
pub fn identify_exceptional(g: &Graph) -> Option<ExceptionalGraph> {
    let delta = g.max_degree();
    if delta < 3 || !g.is_connected() {
        return None;
    }
    let n = g.n();
    if n == delta + 1 && g.is_complete() {
        return Some(ExceptionalGraph::Complete);
    }
    if let Some((a, b)) = g.complete_bipartite_parts() {
        if a == delta && b == delta {
            return Some(ExceptionalGraph::BalancedBipartite);
        }
        if a + 1 == delta && b == delta {
            return Some(ExceptionalGraph::NearBalancedBipartite);
        }
    }
    if n == 5 && g.edge_count() == 7 {
        let mut d = g.degrees();
        d.sort_unstable();
        if d == [2, 3, 3, 3, 3] {
            return Some(ExceptionalGraph::ExceptionalFive);
        }
    }
    if n == 7 && g.regularity() == Some(4) && g.complement().girth() == Some(3) {
        return Some(ExceptionalGraph::ExceptionalSeven);
    }
    None
}

/// A minimum zero forcing set of a recognized exceptional graph.
pub fn exceptional_witness(g: &Graph, kind: ExceptionalGraph) -> VertexSet {
    let n = g.n();
    match kind {
        ExceptionalGraph::Complete => VertexSet::from_indices(n, 0..n - 1),
        ExceptionalGraph::BalancedBipartite | ExceptionalGraph::NearBalancedBipartite => {
            // all but one vertex from each side
            let u = 0;
            let w = g.neighbors(u)[0];
            let mut z = VertexSet::full(n);
            z.remove(u);
            z.remove(w);
            z
        }
        ExceptionalGraph::ExceptionalFive | ExceptionalGraph::ExceptionalSeven => {
            crate::exact::zero_forcing_number(g, None)
                .ok()
                .and_then(|o| o.into_exact())
                .map(|r| r.witness)
                .expect("order at most 7")
        }
    }
}
