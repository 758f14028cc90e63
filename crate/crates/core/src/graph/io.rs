//! graph6 and plain edge-list text formats.

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &[u8] = b">>graph6<<";

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut data = text;
    while let Some((&last, rest)) = data.split_last() {
        if last == b'\n' || last == b'\r' {
            data = rest;
        } else {
            break;
        }
    }
    let base = if data.starts_with(GRAPH6_HEADER) { GRAPH6_HEADER.len() } else { 0 };
    let data = &data[base..];

    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(base + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    if data.is_empty() {
        return Err(g6_err(base, "missing size header"));
    }

    let six = |i: usize| (data[i] - 63) as usize;
    let (n, mut pos) = if data[0] != 126 {
        (six(0), 1)
    } else if data.len() >= 2 && data[1] != 126 {
        if data.len() < 4 {
            return Err(g6_err(base + data.len(), "truncated 18-bit size header"));
        }
        ((six(1) << 12) | (six(2) << 6) | six(3), 4)
    } else {
        if data.len() < 8 {
            return Err(g6_err(base + data.len(), "truncated 36-bit size header"));
        }
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | six(i);
        }
        (n, 8)
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    let body = &data[pos..];
    if body.len() != needed {
        let at = base + pos + body.len().min(needed);
        return Err(g6_err(
            at,
            format!("expected {needed} data bytes for n = {n}, found {}", body.len()),
        ));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = six(pos + bit / 6);
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.set(u, v, true);
            }
            bit += 1;
        }
    }
    // padding bits must be zero
    if pairs % 6 != 0 {
        let last = six(data.len() - 1);
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            pos = data.len() - 1;
            return Err(g6_err(base + pos, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6 (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the edge-list format: a line `n m` followed by `m` lines `u v`.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace();
        let mut next = || -> Result<usize> {
            let tok = it.next().ok_or_else(|| Error::EdgeList {
                line,
                message: "expected two integers".into(),
            })?;
            tok.parse().map_err(|_| Error::EdgeList {
                line,
                message: format!("invalid integer `{tok}`"),
            })
        };
        let a = next()?;
        let b = next()?;
        if let Some(extra) = it.next() {
            return Err(Error::EdgeList { line, message: format!("unexpected token `{extra}`") });
        }
        Ok((a, b))
    };

    let (hline, header) = lines
        .next()
        .ok_or(Error::EdgeList { line: 1, message: "missing `n m` header".into() })?;
    let (n, m) = parse_pair(hline, header)?;
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n {
            return Err(Error::EdgeList {
                line,
                message: format!("vertex {} out of range for n = {n}", u.max(v)),
            });
        }
        if u == v {
            return Err(Error::EdgeList { line, message: format!("self-loop at vertex {u}") });
        }
        g.set(u, v, true);
        seen += 1;
    }
    if seen != m {
        return Err(Error::EdgeList {
            line: hline,
            message: format!("header announces {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_decoded_five_vertex_string() {
        // 'D' -> n = 5; '?' = 000000, '{' = 111100 over x01 x02 x12 x03 x13 x23 x04 x14 x24 x34
        let g = parse_graph6(b"D?{").unwrap();
        let expected = Graph::from_edge_list(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn small_encodings() {
        assert_eq!(to_graph6(&Graph::complete(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        // K_4: 6 ones -> 63 + 63
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(parse_graph6(b">>graph6<<C~\n").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::cycle(70);
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_graph6("Dé".as_bytes()) {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_graph6(b"D?"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6(b""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6(b"~?"), Err(Error::Graph6 { .. })));
        // K_3 is "Bw"; "Bx" sets a padding bit
        assert_eq!(parse_graph6(b"Bw").unwrap(), Graph::complete(3).unwrap());
        assert!(matches!(parse_graph6(b"Bx"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(to_edge_list(&g), "3 2\n0 1\n1 2\n");
        match parse_edge_list("3 2\n0 1\n1 x\n") {
            Err(Error::EdgeList { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 1\n2 2\n"), Err(Error::EdgeList { line: 2, .. })));
    }
}
