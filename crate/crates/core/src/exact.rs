//! Exact zero forcing number by pruned subset search, plus an unpruned
//! enumeration kept as an independent reference.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::forcing::closure_mask;
use crate::{Error, Graph, Result, VertexSet};

/// Largest component order the word-sized search handles.
pub const MAX_COMPONENT_ORDER: usize = 64;

/// Largest order accepted by [`brute_force_oracle`].
pub const ORACLE_MAX_N: usize = 20;

/// A minimum zero forcing set and its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub value: usize,
    pub witness: VertexSet,
    /// Closure evaluations performed.
    pub nodes_explored: u64,
}

/// Outcome of a budgeted exact search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ExactOutcome {
    Exact(ExactResult),
    /// The budget ran out; `Z(G)` lies in `[lower, upper]` and `best` is a
    /// zero forcing set of size `upper`.
    BudgetExhausted {
        lower: usize,
        upper: usize,
        best: VertexSet,
        nodes_explored: u64,
    },
}

impl ExactOutcome {
    pub fn exact(&self) -> Option<&ExactResult> {
        match self {
            ExactOutcome::Exact(r) => Some(r),
            ExactOutcome::BudgetExhausted { .. } => None,
        }
    }

    pub fn into_exact(self) -> Option<ExactResult> {
        match self {
            ExactOutcome::Exact(r) => Some(r),
            ExactOutcome::BudgetExhausted { .. } => None,
        }
    }
}

/// Lower bound used to start the search on a connected graph: the girth-5/6
/// bound `(g-2)(δ-2)+2` when it applies, otherwise 1.
pub fn search_lower_bound(g: &Graph) -> usize {
    let delta = g.min_degree();
    match g.girth() {
        Some(girth @ (5 | 6)) if delta >= 2 => ((girth - 2) * (delta - 2) + 2).max(1),
        _ => 1,
    }
}

/// Computes `Z(G)` with a lexicographically smallest minimum witness.
///
/// Components are solved separately. Within a component, sizes `k` are tried
/// upward from [`search_lower_bound`]; `k`-subsets are enumerated in
/// lexicographic order, never adding a vertex that already lies in the closure
/// of the chosen prefix (such a vertex could be dropped, giving a smaller
/// forcing set). `budget` caps the number of closure evaluations.
pub fn zero_forcing_number(g: &Graph, budget: Option<u64>) -> Result<ExactOutcome> {
    let counter = AtomicU64::new(0);
    let budget = budget.unwrap_or(u64::MAX);
    let mut witness = VertexSet::new(g.n());
    let mut value = 0;
    let mut lower = 0;
    let mut upper = 0;
    let mut exhausted = false;
    let mut best = VertexSet::new(g.n());

    for comp in g.components() {
        if comp.len() > MAX_COMPONENT_ORDER {
            return Err(Error::TooLarge {
                n: comp.len(),
                max: MAX_COMPONENT_ORDER,
            });
        }
        let h = g.induced_subgraph(&comp)?;
        match solve_connected(&h, budget, &counter)? {
            ComponentResult::Exact(mask) => {
                let k = mask.count_ones() as usize;
                value += k;
                lower += k;
                upper += k;
                for (i, &v) in comp.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        witness.insert(v);
                        best.insert(v);
                    }
                }
            }
            ComponentResult::Interval { lower: lo, best: mask } => {
                exhausted = true;
                lower += lo;
                upper += mask.count_ones() as usize;
                for (i, &v) in comp.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        best.insert(v);
                    }
                }
            }
        }
    }
    let nodes_explored = counter.load(Ordering::Relaxed);
    if exhausted {
        Ok(ExactOutcome::BudgetExhausted {
            lower,
            upper,
            best,
            nodes_explored,
        })
    } else {
        Ok(ExactOutcome::Exact(ExactResult {
            value,
            witness,
            nodes_explored,
        }))
    }
}

enum ComponentResult {
    Exact(u64),
    Interval { lower: usize, best: u64 },
}

enum Branch {
    Found(u64),
    Aborted,
}

fn solve_connected(h: &Graph, budget: u64, counter: &AtomicU64) -> Result<ComponentResult> {
    let n = h.n();
    if n == 1 {
        return Ok(ComponentResult::Exact(1));
    }
    let rows = h.masks().expect("component fits in a word");
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let lb = search_lower_bound(h);

    for k in lb..=n {
        let found = (0..n).into_par_iter().find_map_first(|first| {
            if n - first < k {
                return None;
            }
            let mut search = Search {
                rows: &rows,
                n,
                k,
                full,
                budget,
                counter,
                aborted: false,
                undersized: None,
            };
            let chosen = 1u64 << first;
            let Some(f) = search.close(chosen) else {
                return Some(Ok(Branch::Aborted));
            };
            let hit = if k == 1 {
                (f == full).then_some(chosen)
            } else {
                search.dfs(first + 1, 1, chosen, f)
            };
            if let Some(mask) = search.undersized {
                return Some(Err(mask));
            }
            match hit {
                Some(mask) => Some(Ok(Branch::Found(mask))),
                None if search.aborted => Some(Ok(Branch::Aborted)),
                None => None,
            }
        });
        match found {
            Some(Ok(Branch::Found(mask))) => return Ok(ComponentResult::Exact(mask)),
            Some(Ok(Branch::Aborted)) => {
                return Ok(ComponentResult::Interval {
                    lower: k,
                    best: fallback_upper(h),
                })
            }
            Some(Err(mask)) => {
                return Err(Error::Invariant(format!(
                    "forcing set of size {} found below the search start {lb}",
                    mask.count_ones()
                )))
            }
            None => {}
        }
    }
    unreachable!("the full vertex set always forces")
}

/// A cheap zero forcing set for reporting an interval after a budget abort.
fn fallback_upper(h: &Graph) -> u64 {
    let order: Vec<usize> = (0..h.n()).collect();
    let z = crate::forcing::permutation_to_set(h, &order).expect("identity order");
    z.to_mask().expect("component fits in a word")
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    k: usize,
    full: u64,
    budget: u64,
    counter: &'a AtomicU64,
    aborted: bool,
    undersized: Option<u64>,
}

impl Search<'_> {
    /// Closure of `z`, charged against the budget; `None` once the budget is spent.
    #[inline]
    fn close(&mut self, z: u64) -> Option<u64> {
        if self.counter.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.aborted = true;
            return None;
        }
        Some(closure_mask(self.rows, z))
    }

    fn dfs(&mut self, start: usize, depth: usize, chosen: u64, filled: u64) -> Option<u64> {
        if filled == self.full {
            // a forcing set smaller than k: the lower bound was wrong
            self.undersized = Some(chosen);
            return None;
        }
        let remaining = self.k - depth;
        for x in start..=self.n - remaining {
            if filled >> x & 1 == 1 {
                continue;
            }
            let next = chosen | 1u64 << x;
            let f = self.close(filled | 1u64 << x)?;
            if remaining == 1 {
                if f == self.full {
                    return Some(next);
                }
            } else if let Some(hit) = self.dfs(x + 1, depth + 1, next, f) {
                return Some(hit);
            }
            if self.aborted || self.undersized.is_some() {
                return None;
            }
        }
        None
    }
}

/// Plain enumeration of all subsets by increasing size, in lexicographic order
/// within each size, with its own naive closure. No pruning of any kind.
pub fn brute_force_oracle(g: &Graph) -> Result<ExactResult> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge { n, max: ORACLE_MAX_N });
    }
    let mut explored = 0u64;
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            explored += 1;
            let z = VertexSet::from_indices(n, combo.iter().copied());
            if naive_closure(g, &z).is_full() {
                return Ok(ExactResult {
                    value: k,
                    witness: z,
                    nodes_explored: explored,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set always forces")
}

/// Repeatedly scans all filled vertices until none can force.
fn naive_closure(g: &Graph, z: &VertexSet) -> VertexSet {
    let mut filled = z.clone();
    loop {
        let mut changed = false;
        for v in 0..g.n() {
            if !filled.contains(v) {
                continue;
            }
            let open: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| !filled.contains(u))
                .collect();
            if open.len() == 1 {
                filled.insert(open[0]);
                changed = true;
            }
        }
        if !changed {
            return filled;
        }
    }
}

/// Advances a sorted `k`-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
