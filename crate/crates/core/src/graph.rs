//! Immutable simple undirected graphs on dense vertex indices.

use std::collections::VecDeque;

use crate::{Error, Result, VertexSet};

/// A finite simple undirected graph with vertices `0..n`.
///
/// Both a bitset row and a sorted neighbor list are kept for every vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    nbrs: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected; repeated edges collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut rows = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    fn from_rows(rows: Vec<VertexSet>) -> Self {
        let n = rows.len();
        let nbrs = rows.iter().map(|r| r.to_vec()).collect();
        let g = Self {
            n,
            rows,
            nbrs,
            labels: None,
        };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    /// Attaches a label table (one label per vertex) recorded from an input file.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Symmetry and loop-freeness of the adjacency rows.
    pub fn check_invariants(&self) -> Result<()> {
        for v in 0..self.n {
            if self.rows[v].contains(v) {
                return Err(Error::InvalidGraph(format!("loop at vertex {v}")));
            }
            for u in &self.rows[v] {
                if !self.rows[u].contains(v) {
                    return Err(Error::InvalidGraph(format!("asymmetric edge {v}-{u}")));
                }
            }
        }
        Ok(())
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Open neighborhood `N(v)` as a bitset.
    #[inline]
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Open neighborhood `N(v)` as a sorted list.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.nbrs[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nbrs.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degree(0);
        self.nbrs.iter().all(|a| a.len() == d).then_some(d)
    }

    /// Bitset rows as single words, when `n <= 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        self.rows.iter().map(VertexSet::to_mask).collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &self.nbrs[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Whether the subgraph induced by `set` is connected. The empty set is not.
    pub fn induces_connected(&self, set: &VertexSet) -> bool {
        let Some(start) = set.min() else {
            return false;
        };
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in &self.nbrs[v] {
                if set.contains(u) && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == set.len()
    }

    /// Whether every vertex of `set` has a neighbor inside `set`.
    pub fn induces_no_isolated(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.rows[v].is_disjoint(set))
    }

    /// Subgraph induced by `vertices` (in the given order) with new indices `0..k`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.nbrs[v] {
                let j = index[u];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let rows = (0..self.n)
            .map(|v| {
                let mut r = full.difference(&self.rows[v]);
                r.remove(v);
                r
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// BFS distances from `s`; `usize::MAX` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &u in &self.nbrs[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        self.shortest_cycle().map(|c| c.len())
    }

    /// A shortest cycle as a vertex sequence `v_1 … v_g` (consecutive
    /// vertices adjacent, and `v_g` adjacent to `v_1`).
    ///
    /// Runs a BFS from every root and closes cycles on non-tree edges. At the
    /// global minimum the two tree paths cannot share more than the root,
    /// otherwise a strictly shorter cycle would exist.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut best: Option<Vec<usize>> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut q = VecDeque::new();
        for r in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[r] = 0;
            q.clear();
            q.push_back(r);
            let mut found: Option<(usize, usize)> = None;
            let mut found_len = best.as_ref().map_or(usize::MAX, Vec::len);
            while let Some(v) = q.pop_front() {
                if 2 * dist[v] + 1 >= found_len {
                    break;
                }
                for &u in &self.nbrs[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        q.push_back(u);
                    } else if u != parent[v] {
                        let len = dist[u] + dist[v] + 1;
                        if len < found_len {
                            found_len = len;
                            found = Some((v, u));
                        }
                    }
                }
            }
            if let Some((v, u)) = found {
                let path = |mut x: usize| {
                    let mut p = vec![x];
                    while parent[x] != usize::MAX {
                        x = parent[x];
                        p.push(x);
                    }
                    p.reverse();
                    p
                };
                let mut cycle = path(v);
                cycle.extend(path(u).into_iter().skip(1).rev());
                debug_assert_eq!(cycle.len(), found_len);
                best = Some(cycle);
            }
        }
        best
    }

    /// Whether some connected component is exactly `K_{3,3}`.
    pub fn has_k33_component(&self) -> bool {
        self.components().iter().any(|c| {
            if c.len() != 6 {
                return false;
            }
            let h = self.induced_subgraph(c).expect("component indices are valid");
            h.edge_count() == 9 && h.complete_bipartite_parts() == Some((3, 3))
        })
    }

    /// If the graph is a complete bipartite graph `K_{a,b}` (with `1 <= a <= b`),
    /// returns `(a, b)`.
    pub fn complete_bipartite_parts(&self) -> Option<(usize, usize)> {
        let mut side = vec![u8::MAX; self.n];
        side[0] = 0;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &u in &self.nbrs[v] {
                if side[u] == u8::MAX {
                    side[u] = 1 - side[v];
                    stack.push(u);
                } else if side[u] == side[v] {
                    return None;
                }
            }
        }
        if side.contains(&u8::MAX) {
            return None;
        }
        let a = side.iter().filter(|&&s| s == 0).count();
        let b = self.n - a;
        if a == 0 || b == 0 || self.edge_count() != a * b {
            return None;
        }
        Some((a.min(b), a.max(b)))
    }

    /// Whether the graph is complete.
    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_and_empty() {
        assert!(Graph::from_edges(2, [(1, 1)]).is_err());
        assert!(Graph::from_edges(0, []).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn degrees_and_connectivity() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!((k4.max_degree(), k4.min_degree()), (3, 3));
        assert!(k4.is_connected());
        assert_eq!(k4.regularity(), Some(3));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn girth_of_cycles_and_paths() {
        for n in 3..12 {
            let g = cycle(n);
            assert_eq!(g.girth(), Some(n));
            let c = g.shortest_cycle().unwrap();
            assert_eq!(c.len(), n);
        }
        let p5 = Graph::from_edges(5, (0..4).map(|i| (i, i + 1))).unwrap();
        assert_eq!(p5.girth(), None);
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        // two triangles sharing nothing, joined by a long path, plus a 4-cycle
        let g = Graph::from_edges(
            9,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 5),
                (7, 8),
            ],
        )
        .unwrap();
        let c = g.shortest_cycle().unwrap();
        assert_eq!(c.len(), 3);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn complete_bipartite_detection() {
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(k23.complete_bipartite_parts(), Some((2, 3)));
        assert_eq!(cycle(5).complete_bipartite_parts(), None);
        assert_eq!(cycle(4).complete_bipartite_parts(), Some((2, 2)));
    }
}
