//! Named graph families, including the two small exceptional graphs of the
//! `(Δ-2)/(Δ-1)` upper bound.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Graph, Result};

/// A named graph with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFamily {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Petersen,
    Heawood,
    /// Order 5, seven edges, degree sequence `[2, 3, 3, 3, 3]`.
    ExceptionalFive,
    /// Order 7, 4-regular; the complement of a triangle plus a 4-cycle.
    ExceptionalSeven,
}

impl NamedFamily {
    /// Builds a family from a name and integer parameters, as used on the command line.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let fam = match name {
            "complete" | "K" => {
                want(1)?;
                NamedFamily::Complete(params[0])
            }
            "complete_bipartite" | "K2" => {
                want(2)?;
                NamedFamily::CompleteBipartite(params[0], params[1])
            }
            "cycle" | "C" => {
                want(1)?;
                NamedFamily::Cycle(params[0])
            }
            "path" | "P" => {
                want(1)?;
                NamedFamily::Path(params[0])
            }
            "petersen" => {
                want(0)?;
                NamedFamily::Petersen
            }
            "heawood" => {
                want(0)?;
                NamedFamily::Heawood
            }
            "exceptional5" => {
                want(0)?;
                NamedFamily::ExceptionalFive
            }
            "exceptional7" => {
                want(0)?;
                NamedFamily::ExceptionalSeven
            }
            other => return Err(Error::InvalidParams(format!("unknown family {other:?}"))),
        };
        fam.validate()?;
        Ok(fam)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidParams(m.to_string()));
        match *self {
            NamedFamily::Complete(n) if n < 1 => bad("complete graph needs n >= 1"),
            NamedFamily::CompleteBipartite(a, b) if a < 1 || b < 1 => {
                bad("complete bipartite graph needs both parts non-empty")
            }
            NamedFamily::Cycle(n) if n < 3 => bad("cycle needs n >= 3"),
            NamedFamily::Path(n) if n < 1 => bad("path needs n >= 1"),
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            NamedFamily::Complete(n) => Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
            NamedFamily::CompleteBipartite(a, b) => {
                Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            }
            NamedFamily::Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
            NamedFamily::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
            NamedFamily::Petersen => petersen(),
            NamedFamily::Heawood => heawood(),
            NamedFamily::ExceptionalFive => exceptional_five(),
            NamedFamily::ExceptionalSeven => exceptional_seven(),
        }
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedFamily::Complete(n) => write!(f, "complete {n}"),
            NamedFamily::CompleteBipartite(a, b) => write!(f, "complete_bipartite {a} {b}"),
            NamedFamily::Cycle(n) => write!(f, "cycle {n}"),
            NamedFamily::Path(n) => write!(f, "path {n}"),
            NamedFamily::Petersen => f.write_str("petersen"),
            NamedFamily::Heawood => f.write_str("heawood"),
            NamedFamily::ExceptionalFive => f.write_str("exceptional5"),
            NamedFamily::ExceptionalSeven => f.write_str("exceptional7"),
        }
    }
}

impl FromStr for NamedFamily {
    type Err = Error;

    /// Parses `"name p1 p2 ..."`.
    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.split_whitespace();
        let name = it.next().ok_or_else(|| Error::InvalidParams("empty family".into()))?;
        let params = it
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidParams(format!("bad parameter {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        NamedFamily::from_name(name, &params)
    }
}

/// Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
fn petersen() -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, edges)
}

/// Point-line incidence graph of the Fano plane (points 0..7, lines 7..14).
fn heawood() -> Result<Graph> {
    let mut edges = Vec::new();
    for line in 0..7 {
        for off in [0, 1, 3] {
            edges.push(((line + off) % 7, 7 + line));
        }
    }
    Graph::from_edges(14, edges)
}

// a is the degree-2 vertex; b and e are its neighbors.
fn exceptional_five() -> Result<Graph> {
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    const E: usize = 4;
    Graph::from_edges(5, [(E, C), (C, D), (C, B), (D, B), (D, E), (E, A), (A, B)])
}

// The non-edges form the triangle 0-4-6 and the 4-cycle 1-3-2-5.
fn exceptional_seven() -> Result<Graph> {
    Graph::from_edges(
        7,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (2, 4),
            (1, 4),
            (0, 3),
            (3, 4),
            (1, 6),
            (2, 6),
            (4, 5),
            (5, 6),
            (3, 6),
            (3, 5),
            (0, 5),
        ],
    )
}
