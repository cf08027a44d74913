//! Edge-list and DOT text formats, plus input sniffing.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::graph6::{self, parse_graph6};
use crate::{Error, Graph, Result};

/// Parses an edge list: an optional first line holding just the vertex count,
/// followed by whitespace-separated integer pairs. `#` starts a comment.
///
/// Without a count line, the distinct endpoint labels are sorted and mapped
/// onto `0..k`; the original labels are kept on the graph.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();

    let mut declared_n = None;
    if let Some(&(lineno, first)) = lines.peek() {
        let toks: Vec<&str> = first.split_whitespace().collect();
        if toks.len() == 1 {
            let n: usize = toks[0].parse().map_err(|_| Error::EdgeList {
                line: lineno,
                reason: format!("expected a vertex count, found {:?}", toks[0]),
            })?;
            declared_n = Some(n);
            lines.next();
        }
    }

    let mut tokens = Vec::new();
    for (lineno, l) in lines {
        for t in l.split_whitespace() {
            let v: i64 = t.parse().map_err(|_| Error::EdgeList {
                line: lineno,
                reason: format!("expected an integer, found {t:?}"),
            })?;
            tokens.push((lineno, v));
        }
    }
    if tokens.len() % 2 != 0 {
        let line = tokens.last().map_or(0, |t| t.0);
        return Err(Error::EdgeList {
            line,
            reason: "odd number of endpoints".into(),
        });
    }

    match declared_n {
        Some(n) => {
            let mut edges = Vec::with_capacity(tokens.len() / 2);
            for pair in tokens.chunks(2) {
                let (line, a) = pair[0];
                let b = pair[1].1;
                for x in [a, b] {
                    if x < 0 || x as usize >= n {
                        return Err(Error::EdgeList {
                            line,
                            reason: format!("vertex {x} out of range for n = {n}"),
                        });
                    }
                }
                if a == b {
                    return Err(Error::EdgeList {
                        line,
                        reason: format!("loop at vertex {a}"),
                    });
                }
                edges.push((a as usize, b as usize));
            }
            Graph::from_edges(n, edges)
        }
        None => {
            let labels: BTreeSet<i64> = tokens.iter().map(|t| t.1).collect();
            if labels.is_empty() {
                return Err(Error::EdgeList {
                    line: 0,
                    reason: "no vertices".into(),
                });
            }
            let index: Vec<i64> = labels.into_iter().collect();
            let lookup = |x: i64| index.binary_search(&x).expect("label collected above");
            let mut edges = Vec::new();
            for pair in tokens.chunks(2) {
                if pair[0].1 == pair[1].1 {
                    return Err(Error::EdgeList {
                        line: pair[0].0,
                        reason: format!("loop at vertex {}", pair[0].1),
                    });
                }
                edges.push((lookup(pair[0].1), lookup(pair[1].1)));
            }
            let g = Graph::from_edges(index.len(), edges)?;
            let identity = index.iter().enumerate().all(|(i, &l)| l == i as i64);
            if identity {
                Ok(g)
            } else {
                g.with_labels(index.iter().map(i64::to_string).collect())
            }
        }
    }
}

/// Edge-list text with a leading vertex-count line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Graphviz DOT rendering, for visualization only.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut s = format!("graph {name} {{\n");
    for v in 0..g.n() {
        match g.labels() {
            Some(l) => {
                let _ = writeln!(s, "  {v} [label=\"{}\"];", l[v]);
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

fn looks_like_graph6(line: &str) -> bool {
    let line = line.strip_prefix(graph6::HEADER).unwrap_or(line);
    !line.is_empty() && line.bytes().all(|b| (63..=126).contains(&b))
}

/// Reads a single graph from text holding either one graph6 line or an edge list.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(l) if looks_like_graph6(l) => parse_graph6(l),
        Some(_) => parse_edge_list(text),
        None => Err(Error::EdgeList {
            line: 0,
            reason: "empty input".into(),
        }),
    }
}
