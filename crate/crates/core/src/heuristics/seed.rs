//! Seed sets whose closure is large relative to their size, and the greedy
//! extension that turns such a seed into a zero forcing set of size at most
//! `(Δ-2)n/(Δ-1)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use super::{HeuristicResult, Method};
use crate::bounds::rational::{self, Rational};
use crate::exact::next_combination;
use crate::exceptional::{exceptional_witness, identify_exceptional, ExceptionalGraph};
use crate::{closure, Error, Graph, Result, VertexSet};

/// Closure evaluations allowed in each exhaustive seed search stage.
const SEARCH_BUDGET: u64 = 2_000_000;

/// How a seed was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedSource {
    /// `N[v] \ {u}` for a vertex of degree at most `Δ-2`.
    LowDegree,
    /// A fixed construction around a shortest cycle.
    Cycle,
    /// Exhaustive search among vertices within distance 2 of a shortest cycle.
    NeighborhoodSearch,
    /// Exhaustive search over all vertices.
    FullSearch,
    /// Given by the caller.
    Supplied,
}

/// A seed `Z0` with the two facts the greedy extension needs:
/// `|F(Z0)|(Δ-2) >= |Z0|(Δ-1)` and `F(Z0)` induces no isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeedCertificate {
    pub z0: VertexSet,
    pub closure_size: usize,
    pub ratio_ok: bool,
    pub no_isolated: bool,
    pub source: SeedSource,
}

impl SeedCertificate {
    /// Evaluates `z0` on `g`.
    pub fn new(g: &Graph, z0: VertexSet) -> Result<Self> {
        let f = closure(g, &z0)?.closure;
        Ok(Self::from_closure(g, z0, &f, SeedSource::Supplied))
    }

    fn from_closure(g: &Graph, z0: VertexSet, f: &VertexSet, source: SeedSource) -> Self {
        Self {
            closure_size: f.len(),
            ratio_ok: ratio_ok(g.max_degree(), f.len(), z0.len()),
            no_isolated: g.induces_no_isolated(f),
            z0,
            source,
        }
    }

    /// Nonempty, and both conditions hold.
    pub fn is_valid(&self) -> bool {
        !self.z0.is_empty() && self.ratio_ok && self.no_isolated
    }
}

fn ratio_ok(delta: usize, closure_size: usize, z_size: usize) -> bool {
    delta >= 2 && closure_size * (delta - 2) >= z_size * (delta - 1)
}

/// A seed certificate, or the exceptional graph that admits none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SeedOutcome {
    Certificate(SeedCertificate),
    Exceptional { graph: ExceptionalGraph },
}

fn check_connected_subcubic_or_more(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if g.max_degree() < 3 {
        return Err(Error::Precondition(format!(
            "maximum degree must be at least 3, got {}",
            g.max_degree()
        )));
    }
    Ok(())
}

/// Grows a valid seed into a zero forcing set.
///
/// While the closure `F` is not everything, the smallest vertex of `F` with
/// neighbors both inside and outside `F` gets all its outside neighbors but
/// the smallest added to the set. Both seed conditions are rechecked after
/// every step.
pub fn greedy_extend(g: &Graph, cert: &SeedCertificate) -> Result<HeuristicResult> {
    check_connected_subcubic_or_more(g)?;
    let fresh = SeedCertificate::new(g, cert.z0.clone())?;
    if !fresh.is_valid() {
        return Err(Error::Precondition(format!(
            "seed is not valid: ratio_ok={}, no_isolated={}, size={}",
            fresh.ratio_ok,
            fresh.no_isolated,
            fresh.z0.len()
        )));
    }
    let delta = g.max_degree();
    let n = g.n();
    let mut z = fresh.z0;
    let mut f = closure(g, &z)?.closure;
    loop {
        if !ratio_ok(delta, f.len(), z.len()) || !g.induces_no_isolated(&f) {
            return Err(Error::Invariant(format!(
                "seed conditions lost at |Z|={}, |F|={}",
                z.len(),
                f.len()
            )));
        }
        if f.is_full() {
            break;
        }
        let v = f
            .iter()
            .find(|&v| {
                let nb = g.row(v);
                nb.intersection_len(&f) > 0 && nb.difference_len(&f) > 0
            })
            .ok_or_else(|| Error::Invariant("no boundary vertex in a proper closure".into()))?;
        for w in g.row(v).difference(&f).iter().skip(1) {
            z.insert(w);
        }
        f = closure(g, &z)?.closure;
    }
    let bound = Rational::new(BigInt::from((delta - 2) * n), BigInt::from(delta - 1));
    if z.len() > rational::floor_usize(&bound) {
        return Err(Error::Invariant(format!(
            "greedy set of size {} exceeds {bound}",
            z.len()
        )));
    }
    let trace = closure(g, &z)?;
    Ok(HeuristicResult {
        set: z,
        method: Method::Greedy,
        bound_claim: bound,
        trace,
    })
}

/// Finds a valid seed, or recognizes one of the exceptional graphs.
///
/// Tries, in order: a vertex of degree at most `Δ-2`; recognition of the
/// exceptional graphs; fixed constructions around a shortest cycle; an
/// exhaustive search over sets of at most `Δ·g` vertices within distance 2 of
/// that cycle; and finally an exhaustive search over all vertices.
pub fn find_seed(g: &Graph) -> Result<SeedOutcome> {
    check_connected_subcubic_or_more(g)?;
    let delta = g.max_degree();
    let n = g.n();
    if let Some(v) = (0..n).find(|&v| g.degree(v) + 2 <= delta) {
        let mut z = g.closed_neighborhood(v);
        z.remove(g.neighbors(v)[0]);
        let f = closure(g, &z)?.closure;
        let cert = SeedCertificate::from_closure(g, z, &f, SeedSource::LowDegree);
        if !cert.is_valid() {
            return Err(Error::Invariant(format!("low-degree seed at {v} is not valid")));
        }
        return Ok(SeedOutcome::Certificate(cert));
    }
    if let Some(kind) = identify_exceptional(g) {
        return Ok(SeedOutcome::Exceptional { graph: kind });
    }
    let cycle = g
        .shortest_cycle()
        .ok_or_else(|| Error::Invariant("minimum degree at least 2 but no cycle".into()))?;
    let try_set = |z: VertexSet, source| -> Result<Option<SeedCertificate>> {
        let f = closure(g, &z)?.closure;
        let cert = SeedCertificate::from_closure(g, z, &f, source);
        Ok(cert.is_valid().then_some(cert))
    };
    for z in cycle_candidates(g, &cycle) {
        if let Some(cert) = try_set(z, SeedSource::Cycle)? {
            return Ok(SeedOutcome::Certificate(cert));
        }
    }

    // any valid seed has |Z0| <= (Δ-2)|F|/(Δ-1) <= (Δ-2)n/(Δ-1)
    let max_size = (delta - 2) * n / (delta - 1);
    let mut pool = VertexSet::new(n);
    for &c in &cycle {
        for (v, d) in g.distances_from(c).into_iter().enumerate() {
            if d <= 2 {
                pool.insert(v);
            }
        }
    }
    let pool = pool.to_vec();
    let limit = max_size.min(delta * cycle.len());
    if let Some(cert) = subset_search(g, &pool, limit, SeedSource::NeighborhoodSearch)? {
        return Ok(SeedOutcome::Certificate(cert));
    }
    log::warn!(
        "no seed among {} vertices near a shortest cycle (n={n}, Δ={delta}); searching all vertices",
        pool.len()
    );
    let all: Vec<usize> = (0..n).collect();
    if let Some(cert) = subset_search(g, &all, max_size, SeedSource::FullSearch)? {
        return Ok(SeedOutcome::Certificate(cert));
    }
    Err(Error::Invariant(format!(
        "no seed found for a non-exceptional graph (n={n}, Δ={delta}) within the search budget"
    )))
}

/// Subsets of `pool` by increasing size, lexicographic within a size.
fn subset_search(g: &Graph, pool: &[usize], max_size: usize, source: SeedSource) -> Result<Option<SeedCertificate>> {
    let delta = g.max_degree();
    let mut spent = 0u64;
    for k in 1..=max_size.min(pool.len()) {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            spent += 1;
            if spent > SEARCH_BUDGET {
                return Ok(None);
            }
            let z = VertexSet::from_indices(g.n(), combo.iter().map(|&i| pool[i]));
            let f = closure(g, &z)?.closure;
            if ratio_ok(delta, f.len(), k) && g.induces_no_isolated(&f) {
                return Ok(Some(SeedCertificate::from_closure(g, z, &f, source)));
            }
            if !next_combination(&mut combo, pool.len()) {
                break;
            }
        }
    }
    Ok(None)
}

/// Candidate seeds built around the cycle `cycle`, over all its rotations and
/// both orientations, without duplicates.
fn cycle_candidates(g: &Graph, cycle: &[usize]) -> Vec<VertexSet> {
    let n = g.n();
    let len = cycle.len();
    let on_cycle = VertexSet::from_indices(n, cycle.iter().copied());
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |z: VertexSet| {
        if !z.is_empty() && seen.insert(z.clone()) {
            out.push(z);
        }
    };
    for reflect in [false, true] {
        for rot in 0..len {
            let v: Vec<usize> = (0..len)
                .map(|i| {
                    let j = if reflect {
                        (rot + len - i) % len
                    } else {
                        (rot + i) % len
                    };
                    cycle[j]
                })
                .collect();

            // closed neighborhoods of a run of consecutive cycle vertices,
            // each minus one neighbor it alone can force
            for run in (2..=len).rev() {
                let chosen = &v[..run];
                let mut z = VertexSet::new(n);
                for &c in chosen {
                    z.union_with(&g.closed_neighborhood(c));
                }
                let mut removed = false;
                for &c in chosen {
                    let private = g.neighbors(c).iter().copied().find(|&u| {
                        !on_cycle.contains(u) && z.contains(u) && chosen.iter().all(|&o| o == c || !g.has_edge(o, u))
                    });
                    if let Some(u) = private {
                        z.remove(u);
                        removed = true;
                    }
                }
                if removed {
                    push(z);
                }
            }

            // one vertex after each degree-3 cycle vertex, plus the last one
            let mut z = VertexSet::from_indices(n, [v[len - 1]]);
            for i in 0..len {
                if g.degree(v[i]) >= 3 {
                    z.insert(v[(i + 1) % len]);
                }
            }
            push(z);

            // the cycle minus its second vertex, and its short prefixes
            let mut z = on_cycle.clone();
            z.remove(v[1]);
            push(z);
            for k in 2..len {
                push(VertexSet::from_indices(n, v[..k].iter().copied()));
            }
        }
    }
    out
}

/// Result of the seeded greedy construction.
#[derive(Debug, Clone, Serialize)]
pub struct SeededRun {
    #[serde(flatten)]
    pub result: HeuristicResult,
    pub seed: Option<SeedCertificate>,
    pub exceptional: Option<ExceptionalGraph>,
}

/// Zero forcing set of size at most `(Δ-2)n/(Δ-1)` for a connected graph with
/// `Δ >= 3`, or the known minimum set when the graph is exceptional.
pub fn seeded_greedy_zfs(g: &Graph) -> Result<SeededRun> {
    match find_seed(g)? {
        SeedOutcome::Certificate(cert) => {
            let result = greedy_extend(g, &cert)?;
            Ok(SeededRun {
                result,
                seed: Some(cert),
                exceptional: None,
            })
        }
        SeedOutcome::Exceptional { graph: kind } => {
            let set = exceptional_witness(g, kind);
            let trace = closure(g, &set)?;
            Ok(SeededRun {
                result: HeuristicResult {
                    set,
                    method: Method::ExceptionalWitness,
                    bound_claim: rational::integer(kind.zero_forcing_number(g.max_degree())),
                    trace,
                },
                seed: None,
                exceptional: Some(kind),
            })
        }
    }
}
