//! Zero forcing sets for connected subcubic graphs of girth at least 5, built
//! by repeatedly attaching a small path, cycle or lollipop to the filled set.
//!
//! With `F` the current closure and `R` the rest, an extension subgraph is
//! one of:
//!
//! * [`ExtensionKind::PathToDegreeTwo`]: a path `v0..vk`, `v0 ∈ F`, the rest in
//!   `R`, `d(vk) = 2`;
//! * [`ExtensionKind::PathToLeaf`]: the same with `d(vk) = 1` and `k >= 2`;
//! * [`ExtensionKind::PathBetween`]: a path with both ends in `F`, interior in
//!   `R`, `k >= 2`;
//! * [`ExtensionKind::Cycle`]: a cycle `u1..ul` with only `u1 ∈ F`;
//! * [`ExtensionKind::Lollipop`]: a path `v0..vk` with `v0 ∈ F` joined at
//!   `vk = u1` to a cycle `u1..ul`, everything but `v0` in `R`.
//!
//! A minimum one (by order, then by number of `R` vertices) has order at most
//! `2 log2(n) + 1`, and each kind has a fixed recipe adding at most
//! `2 log2(n)` vertices that grow the closure by at least twice that plus one.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{HeuristicResult, Method};
use crate::bounds::log2::{log2_at_least, log2_at_most};
use crate::bounds::{subcubic_girth5_bound, subcubic_girth5_holds};
use crate::{closure, Error, Graph, Result, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionKind {
    PathToDegreeTwo,
    PathToLeaf,
    PathBetween,
    Cycle,
    Lollipop,
}

/// A path and/or cycle straddling `F` and `R`, with the private neighbors
/// `p(v)` of its vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionSubgraph {
    pub kind: ExtensionKind,
    /// `v0..vk`; empty for [`ExtensionKind::Cycle`].
    pub path_vertices: Vec<usize>,
    /// `u1..ul`; empty for the three path kinds. For a lollipop `u1 = vk`.
    pub cycle_vertices: Vec<usize>,
    /// `p(v)`: for `v ∈ F`, its second `R`-neighbor when only one lies on the
    /// subgraph; for `v ∈ R` of degree 3 on the subgraph with two subgraph
    /// neighbors, its third neighbor when that one lies in `R`.
    pub private_neighbors: BTreeMap<usize, usize>,
}

impl ExtensionSubgraph {
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.path_vertices.iter().chain(&self.cycle_vertices).copied().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn order(&self) -> usize {
        self.vertices().len()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self.path_vertices.windows(2).map(|w| (w[0], w[1])).collect();
        let c = &self.cycle_vertices;
        for i in 0..c.len() {
            e.push((c[i], c[(i + 1) % c.len()]));
        }
        e
    }

    fn private(&self, v: usize) -> Result<usize> {
        self.private_neighbors
            .get(&v)
            .copied()
            .ok_or_else(|| Error::Invariant(format!("vertex {v} of a {:?} has no private neighbor", self.kind)))
    }
}

fn check_preconditions(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if g.max_degree() != 3 {
        return Err(Error::Precondition(format!(
            "maximum degree must be 3, got {}",
            g.max_degree()
        )));
    }
    if let Some(girth) = g.girth() {
        if girth < 5 {
            return Err(Error::Precondition(format!("girth must be at least 5, got {girth}")));
        }
    }
    Ok(())
}

/// (order, R-count, kind, path, cycle)
type Candidate = (usize, usize, ExtensionKind, Vec<usize>, Vec<usize>);

struct Finder<'a> {
    g: &'a Graph,
    f: &'a VertexSet,
    max_order: usize,
    path: Vec<usize>,
    on_path: VertexSet,
    best: Option<Candidate>,
}

impl Finder<'_> {
    fn offer(&mut self, order: usize, r: usize, kind: ExtensionKind, path: Vec<usize>, cycle: Vec<usize>) {
        if order > self.max_order {
            return;
        }
        if self.best.as_ref().is_none_or(|b| (order, r) < (b.0, b.1)) {
            self.best = Some((order, r, kind, path, cycle));
        }
    }

    /// Records the patterns ending at the current path `v0..vj` (`j >= 1`).
    fn inspect(&mut self) {
        let g = self.g;
        let j = self.path.len() - 1;
        let last = self.path[j];
        let v0 = self.path[0];
        match g.degree(last) {
            2 => self.offer(j + 1, j, ExtensionKind::PathToDegreeTwo, self.path.clone(), vec![]),
            1 if j >= 2 => self.offer(j + 1, j, ExtensionKind::PathToLeaf, self.path.clone(), vec![]),
            _ => {}
        }
        for &w in g.neighbors(last) {
            if w == self.path[j - 1] {
                continue;
            }
            if w == v0 {
                if j >= 2 {
                    self.offer(j + 1, j, ExtensionKind::Cycle, vec![], self.path.clone());
                }
            } else if self.f.contains(w) {
                let mut p = self.path.clone();
                p.push(w);
                self.offer(j + 2, j, ExtensionKind::PathBetween, p, vec![]);
            } else if self.on_path.contains(w) {
                let i = self.path.iter().position(|&x| x == w).expect("on path");
                if i >= 1 && i + 2 <= j {
                    self.offer(
                        j + 1,
                        j,
                        ExtensionKind::Lollipop,
                        self.path[..=i].to_vec(),
                        self.path[i..].to_vec(),
                    );
                }
            }
        }
    }

    fn extend(&mut self) {
        let last = *self.path.last().expect("nonempty");
        for &w in self.g.neighbors(last) {
            if self.f.contains(w) || self.on_path.contains(w) {
                continue;
            }
            self.path.push(w);
            self.on_path.insert(w);
            self.inspect();
            if self.path.len() < self.max_order {
                self.extend();
            }
            self.on_path.remove(w);
            self.path.pop();
        }
    }
}

/// Finds an extension subgraph of minimum order, then fewest `R` vertices.
///
/// `f` must be a closure inducing a connected subgraph of order at least 3,
/// and `V \ f` must contain a vertex of degree at least 2. Ties are broken by
/// the order of discovery: start vertices ascending, neighbors ascending.
pub fn find_extension_subgraph(g: &Graph, f: &VertexSet) -> Result<ExtensionSubgraph> {
    check_preconditions(g)?;
    let n = g.n();
    let f = if f.capacity() == n {
        f.clone()
    } else {
        f.with_capacity(n)?
    };
    if f.len() < 3 || !g.induces_connected(&f) {
        return Err(Error::Precondition(
            "filled set must induce a connected graph of order >= 3".into(),
        ));
    }
    if closure(g, &f)?.closure != f {
        return Err(Error::Precondition("filled set must be closed under forcing".into()));
    }
    if !(0..n).any(|v| !f.contains(v) && g.degree(v) >= 2) {
        return Err(Error::Precondition("no unfilled vertex of degree at least 2".into()));
    }
    let starts: Vec<usize> = f
        .iter()
        .filter(|&v| g.neighbors(v).iter().any(|&u| !f.contains(u)))
        .collect();
    for max_order in 2..=n {
        let mut finder = Finder {
            g,
            f: &f,
            max_order,
            path: Vec::with_capacity(max_order),
            on_path: VertexSet::new(n),
            best: None,
        };
        for &v0 in &starts {
            finder.path.push(v0);
            finder.on_path.insert(v0);
            finder.extend();
            finder.on_path.remove(v0);
            finder.path.pop();
        }
        if let Some((_, _, kind, path, cycle)) = finder.best {
            let mut h = ExtensionSubgraph {
                kind,
                path_vertices: path,
                cycle_vertices: cycle,
                private_neighbors: BTreeMap::new(),
            };
            h.private_neighbors = private_neighbors(g, &f, &h);
            return Ok(h);
        }
    }
    Err(Error::Invariant("no extension subgraph exists".into()))
}

fn private_neighbors(g: &Graph, f: &VertexSet, h: &ExtensionSubgraph) -> BTreeMap<usize, usize> {
    let vs = h.vertices();
    let in_h = VertexSet::from_indices(g.n(), vs.iter().copied());
    let mut deg_h: BTreeMap<usize, usize> = BTreeMap::new();
    for (a, b) in h.edges() {
        *deg_h.entry(a).or_default() += 1;
        *deg_h.entry(b).or_default() += 1;
    }
    let mut p = BTreeMap::new();
    for &v in &vs {
        let outside: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| !in_h.contains(u)).collect();
        if f.contains(v) {
            let r_nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| !f.contains(u)).collect();
            let on_h = r_nbrs.iter().filter(|&&u| in_h.contains(u)).count();
            if r_nbrs.len() == 2 && on_h == 1 {
                let other = r_nbrs
                    .into_iter()
                    .find(|&u| !in_h.contains(u))
                    .expect("one off the subgraph");
                p.insert(v, other);
            }
        } else if deg_h.get(&v) == Some(&2) && g.degree(v) == 3 && outside.len() == 1 && !f.contains(outside[0]) {
            p.insert(v, outside[0]);
        }
    }
    p
}

/// Vertices added to `Z` for the subgraph `h`, per its kind.
fn augmentation(g: &Graph, f: &VertexSet, h: &ExtensionSubgraph) -> Result<Vec<usize>> {
    let path = &h.path_vertices;
    let cycle = &h.cycle_vertices;
    let mut add = Vec::new();
    // {u_l} ∪ {p(u_j) : 2 <= j <= l-2}, with u_1 = cycle[0]
    let cycle_part = |add: &mut Vec<usize>| -> Result<()> {
        let l = cycle.len();
        add.push(cycle[l - 1]);
        for &u in &cycle[1..l - 2] {
            add.push(h.private(u)?);
        }
        Ok(())
    };
    match h.kind {
        ExtensionKind::PathToDegreeTwo => {
            let k = path.len() - 1;
            let vk = path[k];
            let u = g
                .neighbors(vk)
                .iter()
                .copied()
                .find(|&u| u != path[k - 1])
                .ok_or_else(|| Error::Invariant("degree-2 end has one neighbor".into()))?;
            if f.contains(u) {
                add.push(vk);
            } else {
                for &v in &path[..k] {
                    add.push(h.private(v)?);
                }
            }
        }
        ExtensionKind::PathToLeaf => {
            let k = path.len() - 1;
            add.push(path[k]);
            if k >= 3 {
                for &v in &path[..=k - 3] {
                    add.push(h.private(v)?);
                }
            }
        }
        ExtensionKind::PathBetween => {
            let k = path.len() - 1;
            for &v in &path[..=k - 2] {
                add.push(h.private(v)?);
            }
        }
        ExtensionKind::Cycle => cycle_part(&mut add)?,
        ExtensionKind::Lollipop => {
            let k = path.len() - 1;
            for &v in &path[..k] {
                add.push(h.private(v)?);
            }
            cycle_part(&mut add)?;
        }
    }
    add.sort_unstable();
    add.dedup();
    Ok(add)
}

/// `(|Z|-2)/|F| <= 1/2 - 1/(8 log2(n) + 2)`, exactly.
fn density_holds(n: usize, z: usize, f: usize) -> bool {
    // equivalent to a <= log2(n) * b with a = |Z|-2, b = 2|F| - 4a
    let a = z as i64 - 2;
    let b = 2 * f as i64 - 4 * a;
    match b {
        b if b > 0 => log2_at_least(n as u64, a, b as u64),
        0 => a <= 0,
        b => log2_at_most(n as u64, -a, (-b) as u64),
    }
}

/// One augmentation and the quantities of its contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugmentationStep {
    pub subgraph: ExtensionSubgraph,
    pub added: Vec<usize>,
    /// `|Z' \ Z|`
    pub cost: usize,
    /// `|F(Z') \ F(Z)|`
    pub gain: usize,
    pub set_size: usize,
    pub closure_size: usize,
}

/// Result of [`extension_zfs_with_log`].
#[derive(Debug, Clone, Serialize)]
pub struct ExtensionRun {
    #[serde(flatten)]
    pub result: HeuristicResult,
    pub start: VertexSet,
    pub steps: Vec<AugmentationStep>,
    /// One unfilled neighbor per boundary vertex, added last.
    pub final_additions: Vec<usize>,
}

/// See [`extension_zfs_with_log`].
pub fn extension_zfs(g: &Graph) -> Result<HeuristicResult> {
    extension_zfs_with_log(g).map(|r| r.result)
}

/// Builds a zero forcing set of size at most `n/2 - n/(24 log2(n) + 6) + 2`
/// for a connected graph with maximum degree 3 and girth at least 5.
///
/// Starts from `N[v] \ {u}` for the smallest degree-3 vertex `v` and its
/// smallest neighbor `u`. While an unfilled vertex of degree at least 2
/// remains, applies the recipe of a minimum extension subgraph and checks
/// its contract: order at most `2 log2(n) + 1`, cost at most `2 log2(n)`, gain
/// at least `2 cost + 1`, connected closure, and the running density bound.
/// Finally every filled vertex with unfilled neighbors (it has exactly two)
/// gets the smaller one added.
pub fn extension_zfs_with_log(g: &Graph) -> Result<ExtensionRun> {
    check_preconditions(g)?;
    let n = g.n();
    let nn = n as u64;
    let v = (0..n).find(|&v| g.degree(v) == 3).expect("maximum degree is 3");
    let mut z = g.closed_neighborhood(v);
    z.remove(g.neighbors(v)[0]);
    let start = z.clone();
    let mut f = closure(g, &z)?.closure;
    if !density_holds(n, z.len(), f.len()) {
        return Err(Error::Invariant("density bound fails for the starting set".into()));
    }
    let mut steps = Vec::new();
    while (0..n).any(|u| !f.contains(u) && g.degree(u) >= 2) {
        let h = find_extension_subgraph(g, &f)?;
        let order = h.order();
        if !log2_at_least(nn, order as i64 - 1, 2) {
            return Err(Error::Invariant(format!(
                "extension subgraph of order {order} is too large"
            )));
        }
        let added = augmentation(g, &f, &h)?;
        let mut z2 = z.clone();
        for &x in &added {
            z2.insert(x);
        }
        let f2 = closure(g, &z2)?.closure;
        let cost = z2.len() - z.len();
        let gain = f2.len() - f.len();
        let fail = |what: &str| {
            Error::Invariant(format!(
                "{:?} augmentation {what} (cost {cost}, gain {gain}, n {n})",
                h.kind
            ))
        };
        if cost == 0 || !log2_at_least(nn, cost as i64, 2) {
            return Err(fail("costs more than 2 log2(n)"));
        }
        if gain < 2 * cost + 1 {
            return Err(fail("gains less than 2 cost + 1"));
        }
        if !g.induces_connected(&f2) {
            return Err(fail("leaves a disconnected closure"));
        }
        if !density_holds(n, z2.len(), f2.len()) {
            return Err(fail("breaks the density bound"));
        }
        steps.push(AugmentationStep {
            subgraph: h,
            added,
            cost,
            gain,
            set_size: z2.len(),
            closure_size: f2.len(),
        });
        z = z2;
        f = f2;
    }
    let mut final_additions = Vec::new();
    for v in f.iter() {
        let r: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| !f.contains(u)).collect();
        match r.len() {
            0 => {}
            2 => final_additions.push(r[0].min(r[1])),
            k => {
                return Err(Error::Invariant(format!(
                    "boundary vertex {v} has {k} unfilled neighbors"
                )))
            }
        }
    }
    for &x in &final_additions {
        z.insert(x);
    }
    let trace = closure(g, &z)?;
    if !trace.is_complete() {
        return Err(Error::Invariant("final set does not force the graph".into()));
    }
    if !subcubic_girth5_holds(n, z.len()) {
        return Err(Error::Invariant(format!(
            "final set of size {} exceeds the size bound",
            z.len()
        )));
    }
    Ok(ExtensionRun {
        result: HeuristicResult {
            set: z,
            method: Method::Extension,
            bound_claim: subcubic_girth5_bound(n)?,
            trace,
        },
        start,
        steps,
        final_additions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{is_zero_forcing_set, zero_forcing_number, NamedFamily};

    #[test]
    fn petersen() {
        let g = NamedFamily::Petersen.generate().unwrap();
        let run = extension_zfs_with_log(&g).unwrap();
        let z = &run.result.set;
        assert!(is_zero_forcing_set(&g, z).unwrap());
        assert!(z.len() <= 6 && z.len() >= 5, "{}", z.len());
        for s in &run.steps {
            assert!(s.gain > 2 * s.cost);
            assert!(s.subgraph.order() <= 7);
        }
    }

    #[test]
    fn petersen_first_subgraph() {
        let g = NamedFamily::Petersen.generate().unwrap();
        let mut z = g.closed_neighborhood(0);
        z.remove(g.neighbors(0)[0]);
        let f = closure(&g, &z).unwrap().closure;
        let h = find_extension_subgraph(&g, &f).unwrap();
        assert!(h.order() <= 7);
        // every path vertex after v0 and every cycle vertex after u1 is unfilled
        let path_tail = h.path_vertices.iter().skip(1);
        let cycle_tail = h.cycle_vertices.iter().skip(1);
        assert!(path_tail
            .chain(cycle_tail)
            .all(|&v| !f.contains(v) || h.kind == ExtensionKind::PathBetween));
    }

    #[test]
    fn pendant_degree_two_vertex() {
        // claw at 0; 1 also has a leaf 4 and a degree-2 neighbor 5
        let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (5, 6)]).unwrap();
        let f = closure(&g, &VertexSet::from_indices(7, [0, 1, 2, 3])).unwrap().closure;
        assert_eq!(f.len(), 4);
        let h = find_extension_subgraph(&g, &f).unwrap();
        assert_eq!(h.kind, ExtensionKind::PathToDegreeTwo);
        assert_eq!(h.path_vertices, vec![1, 5]);
        assert_eq!(h.private_neighbors.get(&1), Some(&4));
        let run = extension_zfs_with_log(&g).unwrap();
        assert!(is_zero_forcing_set(&g, &run.result.set).unwrap());
    }

    #[test]
    fn pentagon_hanging_off_filled_set() {
        // claw at 0; 1 lies on the 5-cycle 1-4-5-6-7
        let g = Graph::from_edges(8, [(0, 1), (0, 2), (0, 3), (1, 4), (4, 5), (5, 6), (6, 7), (7, 1)]).unwrap();
        let f = closure(&g, &VertexSet::from_indices(8, [0, 1, 2, 3])).unwrap().closure;
        assert_eq!(f.len(), 4);
        let h = find_extension_subgraph(&g, &f).unwrap();
        assert_eq!((h.kind, h.order()), (ExtensionKind::PathToDegreeTwo, 2));
    }

    #[test]
    fn density_check_matches_floats() {
        for n in 4..200usize {
            let l = (n as f64).log2();
            for z in 0..n {
                for f in z.max(1)..=n {
                    let lhs = (z as f64 - 2.0) / f as f64;
                    let rhs = 0.5 - 1.0 / (8.0 * l + 2.0);
                    if (lhs - rhs).abs() > 1e-9 {
                        assert_eq!(density_holds(n, z, f), lhs <= rhs, "{n} {z} {f}");
                    }
                }
            }
        }
    }

    #[test]
    fn preconditions() {
        let k4 = NamedFamily::Complete(4).generate().unwrap();
        assert!(matches!(extension_zfs(&k4), Err(Error::Precondition(_))));
        let c5 = NamedFamily::Cycle(5).generate().unwrap();
        assert!(matches!(extension_zfs(&c5), Err(Error::Precondition(_))));
    }

    #[test]
    fn heawood_sandwich() {
        let g = NamedFamily::Heawood.generate().unwrap();
        let r = extension_zfs(&g).unwrap();
        let exact = zero_forcing_number(&g, None).unwrap().into_exact().unwrap().value;
        assert!(exact <= r.set.len() && r.set.len() < g.n());
        assert!(r.claim_held());
    }

    /// `R` hangs off `F = {y, x, v0}` through `v0` alone: `b` minus the edge
    /// `ab`, with `v0` joined to `a` and `b`.
    fn pendant_block(b: &Graph, v0: usize) -> (Graph, VertexSet) {
        let (a, c) = b.edges().next().unwrap();
        let mut e: Vec<(usize, usize)> = b.edges().filter(|&x| x != (a, c)).collect();
        e.extend([(v0, a), (v0, c), (v0, v0 + 1), (v0 + 1, v0 + 2)]);
        let n = v0 + 3;
        (
            Graph::from_edges(n, e).unwrap(),
            VertexSet::from_indices(n, [v0, v0 + 1, v0 + 2]),
        )
    }

    fn check_augmentation(g: &Graph, f: &VertexSet, h: &ExtensionSubgraph) -> (usize, usize) {
        let added = augmentation(g, f, h).unwrap();
        let mut z = f.clone();
        for &x in &added {
            z.insert(x);
        }
        let f2 = closure(g, &z).unwrap().closure;
        assert!(h.vertices().iter().all(|&v| f2.contains(v)));
        let (cost, gain) = (added.len(), f2.len() - f.len());
        assert!(gain > 2 * cost, "cost {cost} gain {gain}");
        (cost, gain)
    }

    #[test]
    fn lollipop_into_pentagon() {
        let (g, f) = pendant_block(&NamedFamily::Petersen.generate().unwrap(), 10);
        assert_eq!(g.girth(), Some(5));
        let h = find_extension_subgraph(&g, &f).unwrap();
        assert_eq!(h.kind, ExtensionKind::Lollipop);
        assert_eq!(h.path_vertices, vec![10, 0]);
        assert_eq!(h.cycle_vertices, vec![0, 8, 2, 4, 9]);
        // fills all of R
        assert_eq!(check_augmentation(&g, &f, &h), (4, 10));
    }

    #[test]
    fn cycle_through_single_boundary_vertex() {
        let (g, f) = pendant_block(&NamedFamily::Heawood.generate().unwrap(), 14);
        assert_eq!(g.girth(), Some(6));
        let h = find_extension_subgraph(&g, &f).unwrap();
        assert_eq!(h.kind, ExtensionKind::Cycle);
        assert_eq!(h.cycle_vertices, vec![14, 0, 11, 4, 8, 1, 7]);
        assert!(h.path_vertices.is_empty());
        assert_eq!(check_augmentation(&g, &f, &h), (5, 14));
    }
}
