//! The graph6 ASCII format and a plain edge-list format.
//!
//! graph6 encodes the vertex count, then the upper triangle of the
//! adjacency matrix read column by column -- (0,1), (0,2), (1,2),
//! (0,3), ... -- packed into 6-bit groups, each offset by 63 to land in
//! printable ASCII. Sizes up to 62 use one byte; larger sizes (up to
//! 258047) use a 126 marker plus three bytes.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graphs::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_LONG_N: usize = 258_047; // 2^18 - 1, the 3-byte size limit

pub(crate) fn parse_graph6(text: &str) -> Result<Graph> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!(
            "graph6 byte {b} outside printable range 63..=126"
        )));
    }

    // Split off the size field.
    let (n, rest) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Parse(
                "unsupported graph6 size field (only n <= 258047)".into(),
            ));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected_bytes = bit_count.div_ceil(6);
    if rest.len() != expected_bytes {
        return Err(Error::Parse(format!(
            "graph6 body for n={n} needs {expected_bytes} bytes, found {}",
            rest.len()
        )));
    }

    let mut bits = Vec::with_capacity(expected_bytes * 6);
    for &b in rest {
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    if bits[bit_count..].iter().any(|&b| b) {
        return Err(Error::Parse("nonzero padding bits in graph6 body".into()));
    }

    let mut g = Graph::empty(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                g.set_edge(i, j).expect("in range by construction");
            }
            idx += 1;
        }
    }
    Ok(g)
}

pub(crate) fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_LONG_N, "graph too large for graph6 output");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let bits = g.upper_bits();
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        out.push(v + 63);
    }
    String::from_utf8(out).expect("all bytes printable ASCII")
}

pub(crate) fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace();
    let mut next_usize = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("edge list ended early, expected {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad {what} {tok:?} in edge list")))
    };
    let n = next_usize("vertex count")?;
    let m = next_usize("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = next_usize("endpoint")?;
        let v = next_usize("endpoint")?;
        edges.push((u, v));
    }
    if tokens.next().is_some() {
        return Err(Error::Parse("trailing tokens after edge list".into()));
    }
    Graph::from_edges(n, &edges)
}

pub(crate) fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;

    #[test]
    fn known_encodings() {
        // "A_" is K2.
        let k2 = Graph::from_graph6("A_").unwrap();
        assert_eq!(k2, Graph::complete(2));
        assert_eq!(Graph::complete(2).to_graph6(), "A_");

        // The empty graph on 5 vertices: size byte 'D', ten zero bits.
        let e5 = Graph::from_graph6("D??").unwrap();
        assert_eq!(e5, Graph::empty(5));
        assert_eq!(Graph::empty(5).to_graph6(), "D??");

        // C4 with path labeling 0-1-2-3-0: bits 101101 -> 45 + 63 = 'l'.
        assert_eq!(Graph::cycle(4).to_graph6(), "Cl");
        // "Cr" (bits 110011) is the same cycle labeled differently.
        let cr = Graph::from_graph6("Cr").unwrap();
        assert_ne!(cr, Graph::cycle(4));
        assert!(cr.is_isomorphic(&Graph::cycle(4)).unwrap());
    }

    #[test]
    fn header_and_whitespace_tolerated() {
        let g = Graph::from_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn malformed_inputs_rejected() {
        assert!(Graph::from_graph6("").is_err());
        // Too few body bytes for n=5.
        assert!(Graph::from_graph6("D?").is_err());
        // Too many.
        assert!(Graph::from_graph6("D???").is_err());
        // Byte outside the printable range.
        assert!(Graph::from_graph6("A ").is_err());
        // Nonzero padding: K2 has one data bit; the other five must be 0.
        assert!(Graph::from_graph6("A?").is_ok()); // 000000 -> no edge
        assert!(Graph::from_graph6("A`").is_err()); // 100001 -> padding set
        assert!(Graph::from_graph6("AA").is_err()); // 000010 -> padding set
    }

    #[test]
    fn round_trip_random_graphs() {
        // Deterministic pseudo-random edge sets over several sizes,
        // including one past the 62-vertex single-byte boundary.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rand = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in [0usize, 1, 2, 3, 8, 20, 62, 63, 70] {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rand() % 3 == 0 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let enc = g.to_graph6();
            if n <= 62 {
                assert_eq!(enc.len(), 1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
            } else {
                assert_eq!(enc.as_bytes()[0], 126);
            }
            assert_eq!(Graph::from_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);

        // Isolated vertices survive the round trip.
        let iso = Graph::from_edges(6, &[(2, 4)]).unwrap();
        assert_eq!(Graph::from_edge_list(&iso.to_edge_list()).unwrap(), iso);

        assert!(Graph::from_edge_list("4 2\n0 1\n").is_err()); // short
        assert!(Graph::from_edge_list("4 1\n0 1\n9 9\n").is_err()); // trailing
        assert!(Graph::from_edge_list("4 1\n0 4\n").is_err()); // range
        assert!(Graph::from_edge_list("a 1\n0 1\n").is_err()); // not a number
    }
}
