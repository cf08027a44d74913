//! The forcing process: a filled vertex with exactly one unfilled neighbor
//! fills that neighbor. Computes closures, forcing traces and trace checks.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::ser::SerializeTuple;
use serde::{Deserialize, Serialize, Serializer};

use crate::{Error, Graph, Result, VertexSet};

/// One force `forcer -> forced`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(from = "(usize, usize)")]
pub struct ForcingStep {
    pub forcer: usize,
    pub forced: usize,
}

impl From<(usize, usize)> for ForcingStep {
    fn from((forcer, forced): (usize, usize)) -> Self {
        Self { forcer, forced }
    }
}

impl Serialize for ForcingStep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.forcer)?;
        t.serialize_element(&self.forced)?;
        t.end()
    }
}

/// A closure computation together with the forcing sequence that certifies it.
///
/// Serializes as `{"initial": [...], "steps": [[forcer, forced], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingTrace {
    pub initial: VertexSet,
    pub steps: Vec<ForcingStep>,
    pub closure: VertexSet,
}

#[derive(Serialize, Deserialize)]
struct TraceJson {
    initial: Vec<usize>,
    steps: Vec<ForcingStep>,
    /// Redundant with `initial` and `steps`; checked when present.
    #[serde(default)]
    closure: Option<Vec<usize>>,
}

impl Serialize for ForcingTrace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TraceJson {
            initial: self.initial.to_vec(),
            steps: self.steps.clone(),
            closure: Some(self.closure.to_vec()),
        }
        .serialize(s)
    }
}

impl ForcingTrace {
    /// Rebuilds a trace for a graph of order `n` from its serialized parts.
    /// The closure is taken to be the initial set plus every forced vertex.
    pub fn from_parts(n: usize, initial: &[usize], steps: Vec<ForcingStep>) -> Result<Self> {
        let initial = VertexSet::try_from_indices(n, initial.iter().copied())?;
        let mut closure = initial.clone();
        for s in &steps {
            for v in [s.forcer, s.forced] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            closure.insert(s.forced);
        }
        Ok(Self {
            initial,
            steps,
            closure,
        })
    }

    /// Parses the JSON certificate format for a graph of order `n`.
    pub fn from_json(n: usize, json: &str) -> Result<Self> {
        let t: TraceJson = serde_json::from_str(json).map_err(|e| Error::InvalidParams(format!("trace JSON: {e}")))?;
        let trace = Self::from_parts(n, &t.initial, t.steps)?;
        if let Some(c) = t.closure {
            if VertexSet::try_from_indices(n, c)? != trace.closure {
                return Err(Error::InvalidParams(
                    "trace JSON: closure does not match the steps".into(),
                ));
            }
        }
        Ok(trace)
    }

    pub fn is_complete(&self) -> bool {
        self.closure.is_full()
    }
}

/// Computes the closure of `z` and a forcing sequence for it.
///
/// Among the forces available at any moment the one with the smallest forcer
/// is applied (a forcer has exactly one candidate), so traces are reproducible.
pub fn closure(g: &Graph, z: &VertexSet) -> Result<ForcingTrace> {
    let n = g.n();
    let z = if z.capacity() == n {
        z.clone()
    } else {
        z.with_capacity(n)?
    };
    let mut filled = z.clone();
    // number of unfilled neighbors of each vertex
    let mut open: Vec<usize> = (0..n).map(|v| g.row(v).difference_len(&filled)).collect();
    let mut ready: BinaryHeap<Reverse<usize>> = filled.iter().filter(|&v| open[v] == 1).map(Reverse).collect();
    let mut steps = Vec::new();
    while let Some(Reverse(v)) = ready.pop() {
        if open[v] != 1 {
            continue;
        }
        let u = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&u| !filled.contains(u))
            .expect("count says one unfilled neighbor");
        filled.insert(u);
        steps.push(ForcingStep { forcer: v, forced: u });
        for &w in g.neighbors(u) {
            open[w] -= 1;
            if open[w] == 1 && filled.contains(w) {
                ready.push(Reverse(w));
            }
        }
        if open[u] == 1 {
            ready.push(Reverse(u));
        }
    }
    Ok(ForcingTrace {
        initial: z,
        steps,
        closure: filled,
    })
}

/// Closure on single-word bitsets (`n <= 64`). `rows[v]` is the neighbor mask of `v`.
#[inline]
pub fn closure_mask(rows: &[u64], z: u64) -> u64 {
    let mut filled = z;
    let mut active = z;
    loop {
        let mut changed = false;
        let mut it = active;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let out = rows[v] & !filled;
            if out == 0 {
                active &= !(1u64 << v);
            } else if out & (out - 1) == 0 {
                filled |= out;
                active |= out;
                active &= !(1u64 << v);
                changed = true;
            }
        }
        if !changed {
            return filled;
        }
    }
}

/// Whether the closure of `z` is the whole vertex set.
pub fn is_zero_forcing_set(g: &Graph, z: &VertexSet) -> Result<bool> {
    if let (Some(rows), Some(mask)) = (g.masks(), z.to_mask()) {
        if z.capacity() == g.n() {
            let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
            return Ok(closure_mask(&rows, mask) == full);
        }
    }
    Ok(closure(g, z)?.is_complete())
}

/// Why a trace failed to replay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceViolation {
    /// Index of the offending step; `None` for violations of the final state.
    pub step: Option<usize>,
    pub reason: String,
}

impl std::fmt::Display for TraceViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.step {
            Some(i) => write!(f, "step {i}: {}", self.reason),
            None => write!(f, "final state: {}", self.reason),
        }
    }
}

/// Replays a trace: every forcer must be filled, every forced vertex unfilled
/// and the forcer's only unfilled neighbor. At the end the recorded closure
/// must match and no filled vertex may have exactly one unfilled neighbor.
pub fn verify_trace(g: &Graph, trace: &ForcingTrace) -> std::result::Result<(), TraceViolation> {
    let n = g.n();
    let bad = |step, reason: String| TraceViolation { step, reason };
    if trace.initial.capacity() != n || trace.closure.capacity() != n {
        return Err(bad(None, format!("sets are not sized for a graph of order {n}")));
    }
    let mut filled = trace.initial.clone();
    for (i, s) in trace.steps.iter().enumerate() {
        if s.forcer >= n || s.forced >= n {
            return Err(bad(Some(i), "vertex out of range".into()));
        }
        if !filled.contains(s.forcer) {
            return Err(bad(Some(i), format!("forcer {} is not filled", s.forcer)));
        }
        if filled.contains(s.forced) {
            return Err(bad(Some(i), format!("vertex {} is already filled", s.forced)));
        }
        if !g.has_edge(s.forcer, s.forced) {
            return Err(bad(Some(i), format!("{} and {} are not adjacent", s.forcer, s.forced)));
        }
        let open = g.row(s.forcer).difference_len(&filled);
        if open != 1 {
            return Err(bad(
                Some(i),
                format!("forcer {} has {open} unfilled neighbors", s.forcer),
            ));
        }
        filled.insert(s.forced);
    }
    if filled != trace.closure {
        return Err(bad(None, "recorded closure differs from the replayed set".into()));
    }
    if let Some(w) = filled.iter().find(|&w| g.row(w).difference_len(&filled) == 1) {
        return Err(bad(None, format!("vertex {w} can still force")));
    }
    Ok(())
}

/// The set built from a vertex order: a vertex is left out exactly when it is
/// the last (rightmost) neighbor of some vertex placed before it.
pub fn permutation_to_set(g: &Graph, order: &[usize]) -> Result<VertexSet> {
    let n = g.n();
    if order.len() != n {
        return Err(Error::NotPermutation(format!(
            "length {} for {n} vertices",
            order.len()
        )));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n {
            return Err(Error::NotPermutation(format!("vertex {v} out of range")));
        }
        if pos[v] != usize::MAX {
            return Err(Error::NotPermutation(format!("vertex {v} repeated")));
        }
        pos[v] = i;
    }
    Ok(permutation_to_set_unchecked(g, &pos))
}

/// `pos[v]` is the position of vertex `v` in the order.
pub(crate) fn permutation_to_set_unchecked(g: &Graph, pos: &[usize]) -> VertexSet {
    let mut z = VertexSet::full(g.n());
    for v in 0..g.n() {
        if let Some(&last) = g.neighbors(v).iter().max_by_key(|&&u| pos[u]) {
            if pos[v] < pos[last] {
                z.remove(last);
            }
        }
    }
    z
}
