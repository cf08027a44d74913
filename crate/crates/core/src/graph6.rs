//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed into 6-bit printable bytes
//! (value + 63).

use crate::{Error, Graph, Result};

const BIAS: u8 = 63;
const MAX_N: usize = 68_719_476_735; // 2^36 - 1

/// Optional file header some tools emit before each graph.
pub const HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(g6_err(offset, "unexpected end of input")),
        Some(&b) if (BIAS..=BIAS + 63).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(g6_err(
            offset,
            format!("byte 0x{b:02x} outside the printable range 63..=126"),
        )),
    }
}

/// Decodes the vertex-count header; returns `(n, header_len)`.
fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = sextet(bytes, 0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    let second = sextet(bytes, 1)?;
    if second < 63 {
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i)? as usize;
        }
        if n < 63 {
            return Err(g6_err(1, format!("non-canonical 4-byte header for n = {n}")));
        }
        return Ok((n, 4));
    }
    let mut n = 0usize;
    for i in 2..8 {
        n = (n << 6) | sextet(bytes, i)? as usize;
    }
    if n < 258_048 {
        return Err(g6_err(2, format!("non-canonical 8-byte header for n = {n}")));
    }
    Ok((n, 8))
}

/// Parses one graph6 line. A leading `>>graph6<<` and surrounding whitespace
/// are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(0, "empty input"));
    }
    let (n, start) = decode_size(bytes)?;
    if n == 0 {
        return Err(g6_err(0, "graph with zero vertices"));
    }
    let bits = n * (n - 1) / 2;
    let body = bits.div_ceil(6);
    let end = start + body;
    for i in start..end.min(bytes.len()) {
        sextet(bytes, i)?;
    }
    if bytes.len() < end {
        return Err(g6_err(bytes.len(), format!("expected {body} body bytes for n = {n}")));
    }
    if bytes.len() > end {
        return Err(g6_err(end, "trailing bytes after graph"));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[start + k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = bytes[end - 1] - BIAS;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(end - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph as canonical graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_N {
        return Err(Error::TooLarge { n, max: MAX_N });
    }
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            acc = (acc << 1) | row.contains(i) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference encoder written from the format definition: build the full bit
    /// vector first, then chunk it.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let mut bits = Vec::new();
        for j in 0..n {
            for row in adj.iter().take(j) {
                bits.push(row[j]);
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        assert!(n < 63);
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| (a << 1) | b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(to_graph6(&g).unwrap(), "@");
    }

    #[test]
    fn known_codes_match_reference_encoder() {
        let k4_edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert_eq!(reference_encode(4, &k4_edges), "C~");
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), k4_edges.to_vec());

        // the five-vertex example from the petgraph tests
        let e = [(0, 2), (0, 4), (1, 3), (3, 4)];
        assert_eq!(reference_encode(5, &e), "DQc");
        let g = Graph::from_edges(5, e).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");

        let e = [(0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)];
        let code = reference_encode(5, &e);
        assert_eq!(code, "DFw");
        let g = parse_graph6(&code).unwrap();
        let mut got: Vec<_> = g.edges().collect();
        got.sort();
        let mut want = e.to_vec();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn large_header_roundtrip() {
        let n = 70;
        let g = Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_graph6("C") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("C~~") {
            Err(Error::Graph6 { offset: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("C \u{7f}") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        // 'D' has 10 bits -> 2 body bytes; last byte has 2 padding bits
        assert!(matches!(parse_graph6("D?@"), Err(Error::Graph6 { offset: 2, .. })));
    }

    #[test]
    fn optional_header_accepted() {
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap().edge_count(), 6);
    }
}
