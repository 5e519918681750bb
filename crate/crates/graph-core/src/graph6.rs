//! The graph6 format: a size prefix followed by the upper triangle of the adjacency matrix,
//! column by column, packed six bits per printable byte (value + 63).

use crate::{DartGraph, GraphError};

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(msg.into())
}

pub fn parse_graph6(line: &str) -> Result<DartGraph, GraphError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty record"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(malformed(format!("expected {need} data bytes, found {}", body.len())));
    }
    if body.len() > need {
        return Err(malformed("trailing bytes after adjacency data"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if k % 6 != 0 && (body[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(malformed("nonzero padding bits"));
    }
    DartGraph::new(n, &edges)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let six = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(malformed("truncated 8-byte size"));
        }
        return Ok((six(&bytes[2..8]), &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(malformed("truncated 4-byte size"));
    }
    Ok((six(&bytes[1..4]), &bytes[4..]))
}

pub fn encode_graph6(g: &DartGraph) -> String {
    let n = g.n_vertices();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Parses every non-empty line of a graph6 file.
pub fn parse_graph6_file(text: &str) -> Result<Vec<DartGraph>, GraphError> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_c_tilde() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n_vertices(), 4);
        assert_eq!(g.n_edges(), 6);
        assert_eq!(encode_graph6(&g), "C~");
    }

    #[test]
    fn six_cycle() {
        // 0-1-2-3-4-5-0: bits for (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),(0,4),...,(4,5)
        let c6 = DartGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        let s = encode_graph6(&c6);
        assert_eq!(s, "EhEG");
        let back = parse_graph6(&s).unwrap();
        assert_eq!(back, c6);
        assert_eq!(back.valency(), Some(2));
    }

    #[test]
    fn header_is_optional() {
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), parse_graph6("C~").unwrap());
    }

    #[test]
    fn errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C\x10").is_err());
        // 'A' = 2 vertices, one data bit; padding bits must be clear.
        assert!(parse_graph6("A_").is_ok());
        assert!(parse_graph6("A`").is_err());
    }

    #[test]
    fn large_size_prefix_round_trip() {
        let edges: Vec<_> = (0..69).map(|i| (i, i + 1)).collect();
        let g = DartGraph::new(70, &edges).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
