//! graph6 and plain edge-list text formats.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses a single graph6 line. A leading `>>graph6<<` header and a trailing
/// newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let (bytes, base) = match text.strip_prefix(">>graph6<<") {
        Some(rest) => (rest.as_bytes(), 10),
        None => (text.as_bytes(), 0),
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(base + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let (n, header) = match bytes {
        [] => return Err(g6_err(base, "empty input")),
        [126, 126, ..] => return Err(g6_err(base, "8-byte order form exceeds 64 vertices")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6_err(base + bytes.len(), "truncated 4-byte order field"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(g6_err(base, format!("order {n} exceeds {MAX_VERTICES}")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = header + pairs.div_ceil(6);
    if bytes.len() < expected {
        return Err(g6_err(
            base + bytes.len(),
            format!(
                "expected {} bytes for order {n}, found {}",
                expected,
                bytes.len()
            ),
        ));
    }
    if bytes.len() > expected {
        return Err(g6_err(
            base + expected,
            "trailing bytes after adjacency data",
        ));
    }
    let payload = &bytes[header..];
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = payload[payload.len() - 1] - 63;
        let pad = 6 - pairs % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(g6_err(base + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub(crate) fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses `n` on the first line followed by one `u v` pair per line.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, first) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        reason: "missing vertex count".into(),
    })?;
    let n: usize = first.parse().map_err(|_| Error::EdgeList {
        line,
        reason: format!("invalid vertex count {first:?}"),
    })?;
    if n > MAX_VERTICES {
        return Err(Error::EdgeList {
            line,
            reason: format!("order {n} exceeds {MAX_VERTICES}"),
        });
    }
    let mut g = Graph::empty(n);
    for (line, l) in lines {
        let err = |reason: String| Error::EdgeList { line, reason };
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(err(format!(
                "expected two vertices, found {}",
                tokens.len()
            )));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok
                .parse()
                .map_err(|_| err(format!("invalid vertex {tok:?}")))?;
            if *slot >= n {
                return Err(err(format!("vertex {} out of range for order {n}", *slot)));
            }
        }
        if ends[0] == ends[1] {
            return Err(err(format!("loop at vertex {} rejected", ends[0])));
        }
        g.add_edge(ends[0], ends[1]);
    }
    Ok(g)
}

pub(crate) fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_small_examples() {
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!((e2.order(), e2.size()), (2, 0));
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(Graph::complete(3).to_graph6(), "Bw");
    }

    #[test]
    fn graph6_matches_reference_strings() {
        // hand-encoded from the graph6 bit layout
        assert_eq!(Graph::path(4).to_graph6(), "Ch");
        assert_eq!(Graph::cycle(5).to_graph6(), "Dhc");
        assert_eq!(Graph::petersen().to_graph6().len(), 1 + 8);
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
    }

    #[test]
    fn graph6_large_orders_use_four_byte_header() {
        let g = Graph::path(64);
        let s = g.to_graph6();
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g = Graph::cycle(62);
        assert_eq!(parse_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn graph6_errors_name_offsets() {
        match parse_graph6("Bw?") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("B") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("B\u{7f}") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_graph6("").is_err());
        // bits past the three adjacency pairs of K3 must be zero
        assert!(parse_graph6("Bx").is_err());
        // order 65 in the 4-byte form
        assert!(parse_graph6("~??\u{80}").is_err());
        assert!(parse_graph6("~?@@").is_err());
    }

    #[test]
    fn edge_list_examples() {
        let k3 = parse_edge_list("3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(k3, Graph::complete(3));
        let p4 = parse_edge_list("4\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(p4, Graph::path(4));
        let dup = parse_edge_list("3\n0 1\n1 0\n0 1\n").unwrap();
        assert_eq!(dup.size(), 1);
        match parse_edge_list("2\n0 0") {
            Err(Error::EdgeList { line, reason }) => {
                assert_eq!(line, 2);
                assert!(reason.contains("loop"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_edge_list("2\n0 2"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("2\n0 x"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("two"),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1 2"),
            Err(Error::EdgeList { line: 2, .. })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::petersen();
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}
