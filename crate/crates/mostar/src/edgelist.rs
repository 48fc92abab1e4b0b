//! Canonical edge-list text format.
//!
//! Line 1 is `"s t"` (order and size); then `t` lines `"u v"` with
//! `0 <= u < v < s`, ASCII decimal, LF-terminated. The parser is more
//! permissive than the writer: pairs may come in either orientation,
//! blank lines are ignored, and lines starting with `#` are comments.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected {expected}, got {got:?}")]
    Malformed {
        line: usize,
        expected: &'static str,
        got: String,
    },
    #[error("missing header line")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn split_pair(line: &str, lineno: usize, expected: &'static str) -> Result<(u64, u64), ParseError> {
    let mut it = line.split_ascii_whitespace();
    let err = || ParseError::Malformed {
        line: lineno,
        expected,
        got: line.to_string(),
    };
    let a = it
        .next()
        .ok_or_else(err)?
        .parse::<u64>()
        .map_err(|_| err())?;
    let b = it
        .next()
        .ok_or_else(err)?
        .parse::<u64>()
        .map_err(|_| err())?;
    if it.next().is_some() {
        return Err(err());
    }
    Ok((a, b))
}

/// Parses the edge-list format into a validated [`Graph`].
pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lineno, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (order, declared) = split_pair(header, lineno, "header \"s t\"")?;
    if order == 0 || order > u64::from(u32::MAX) {
        return Err(ParseError::Malformed {
            line: lineno,
            expected: "order in 1..=2^32-1",
            got: header.to_string(),
        });
    }

    let mut edges = Vec::with_capacity(declared as usize);
    for (lineno, line) in lines {
        let (u, v) = split_pair(line, lineno, "edge \"u v\"")?;
        if u >= order || v >= order {
            return Err(ParseError::Graph(GraphError::VertexOutOfRange {
                vertex: u.max(v) as u32,
                order: order as u32,
            }));
        }
        edges.push((u as u32, v as u32));
    }
    if edges.len() != declared as usize {
        return Err(ParseError::EdgeCountMismatch {
            declared: declared as usize,
            found: edges.len(),
        });
    }
    Ok(Graph::build(order as usize, edges)?)
}

/// Renders a graph in the canonical format (edges with `u < v`, sorted).
pub fn render(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * g.size() as usize + 16);
    out.push_str(&format!("{} {}\n", g.order(), g.size()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_p4() {
        let g = Graph::build(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = render(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn accepts_comments_and_unordered_pairs() {
        let text = "# a triangle\n3 3\n1 0\n\n2 1\n# middle comment\n0 2\n";
        let g = parse(text).unwrap();
        assert_eq!((g.order(), g.size()), (3, 3));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse(""), Err(ParseError::MissingHeader)));
        assert!(matches!(parse("x y\n"), Err(ParseError::Malformed { .. })));
        assert!(matches!(
            parse("3 1\n0 1\n1 2\n"),
            Err(ParseError::EdgeCountMismatch {
                declared: 1,
                found: 2
            })
        ));
        assert!(matches!(
            parse("2 1\n0 5\n"),
            Err(ParseError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
        assert!(matches!(
            parse("2 1\n1 1\n"),
            Err(ParseError::Graph(GraphError::SelfLoop(1)))
        ));
        assert!(matches!(parse("0 0\n"), Err(ParseError::Malformed { .. })));
    }
}
