//! Edge-list text and graph6 interchange.

use super::{Connectivity, Graph};
use crate::error::{Error, Result};
use crate::MAX_VERTICES;

/// Parses whitespace-separated `u v` pairs, one edge per line. `#` starts a
/// comment; blank lines are skipped. The vertex count is the largest id + 1.
pub fn parse_edge_list(text: &str, connectivity: Connectivity) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let ids = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("`{tok}` is not a vertex id"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let [u, v] = ids[..] else {
            return Err(Error::Parse {
                line,
                msg: format!("expected two vertex ids, found {}", ids.len()),
            });
        };
        if u == v {
            return Err(Error::Loop(u));
        }
        n = n.max(u + 1).max(v + 1);
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "no edges".into(),
        });
    }
    Graph::with_connectivity(n, &edges, connectivity)
}

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 record; the `>>graph6<<` header is optional.
pub fn parse_graph6(text: &str, connectivity: Connectivity) -> Result<Graph> {
    let body = text.trim();
    let body = body.strip_prefix(HEADER).unwrap_or(body).as_bytes();
    if let Some(&c) = body.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(Error::Graph6(format!("character {:?} out of range 63..126", c as char)));
    }
    let (n, rest) = match body {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => {
            return Err(Error::Graph6(format!("more than {MAX_VERTICES} vertices")))
        }
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(Error::Graph6("bad length: truncated size field".into())),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(Error::Graph6(format!(
            "bad length: {n} vertices need {expected} data bytes, found {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::with_connectivity(n, &edges, connectivity)
}

/// Encodes a graph as graph6 without header.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    #[test]
    fn edge_list_examples() {
        let p3 = parse_edge_list("0 1\n1 2", Connectivity::Require).unwrap();
        assert_eq!(p3, g(3, &[(0, 1), (1, 2)]));

        let t = parse_edge_list("0 1\n0 2\n2 3\n2 4", Connectivity::Require).unwrap();
        assert_eq!(t.n(), 5);
        assert_eq!(t.edge_count(), 4);

        assert_eq!(parse_edge_list("0 0", Connectivity::Require), Err(Error::Loop(0)));
    }

    #[test]
    fn edge_list_comments_and_errors() {
        let text = "# a triangle\n0 1  # first\n\n1 2\n2 0\n";
        assert_eq!(parse_edge_list(text, Connectivity::Require).unwrap().edge_count(), 3);
        assert!(matches!(
            parse_edge_list("0 1 2", Connectivity::Require),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n1 x", Connectivity::Require),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(
            parse_edge_list("0 1\n2 3", Connectivity::Require),
            Err(Error::Disconnected)
        );
        assert!(parse_edge_list("0 1\n2 3", Connectivity::Allow).is_ok());
    }

    // Expected strings were produced by networkx's graph6 writer.
    #[test]
    fn graph6_reference_strings() {
        let k3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(parse_graph6("Bw", Connectivity::Require).unwrap(), k3);
        assert_eq!(encode_graph6(&g(3, &[(0, 1), (1, 2)])), "Bg");
        assert_eq!(encode_graph6(&g(5, &[(0, 1), (0, 2), (2, 3), (2, 4)])), "DpG");
        let t33 = g(
            10,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)],
        );
        assert_eq!(encode_graph6(&t33), "IsP@@?OC?");
        let c6: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        assert_eq!(encode_graph6(&g(6, &c6)), "EhEG");
        let p63: Vec<_> = (0..62).map(|i| (i, i + 1)).collect();
        let enc = encode_graph6(&g(63, &p63));
        assert!(enc.starts_with("~??~hCGGC@?G?_@?@??_?G?@"));
        assert!(enc.ends_with("?????????G"));
        assert_eq!(parse_graph6(&enc, Connectivity::Require).unwrap(), g(63, &p63));
    }

    #[test]
    fn graph6_header_and_errors() {
        assert_eq!(
            parse_graph6(">>graph6<<Bw\n", Connectivity::Require).unwrap().edge_count(),
            3
        );
        assert!(matches!(
            parse_graph6("~?", Connectivity::Require),
            Err(Error::Graph6(m)) if m.contains("bad length")
        ));
        assert!(matches!(
            parse_graph6("IsP@", Connectivity::Require),
            Err(Error::Graph6(m)) if m.contains("bad length")
        ));
        assert!(matches!(
            parse_graph6("B\x7f", Connectivity::Require),
            Err(Error::Graph6(m)) if m.contains("out of range")
        ));
        // two isolated vertices
        assert_eq!(parse_graph6("A?", Connectivity::Require), Err(Error::Disconnected));
    }
}
