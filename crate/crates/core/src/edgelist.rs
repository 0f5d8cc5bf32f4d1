//! Plain-text edge-list format.
//!
//! ```text
//! # optional comment lines
//! p <order> <edges>
//! e <u> <v>
//! c <id>
//! ```
//!
//! Vertices are 0-indexed. `e` lines are written with `u < v` in
//! lexicographic order; `c` lines mark cycle vertices of an H-graph and are
//! written in ascending order after all edges. Output uses LF endings only.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p <order> <edges>` header")]
    MissingHeader,
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: cycle vertex {id} out of range")]
    RoleOutOfRange { line: usize, id: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListFile {
    pub graph: Graph,
    /// Vertices listed on `c` lines, sorted and deduplicated.
    pub cycle_vertices: Vec<Vertex>,
}

pub fn parse(text: &str) -> Result<EdgeListFile, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut cycle = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let nums: Vec<usize> = fields
            .map(|f| {
                f.parse().map_err(|_| ParseError::Syntax {
                    line,
                    msg: format!("expected a non-negative integer, got `{f}`"),
                })
            })
            .collect::<Result<_, _>>()?;
        let arity = |want: usize| {
            if nums.len() == want {
                Ok(())
            } else {
                Err(ParseError::Syntax {
                    line,
                    msg: format!("`{tag}` takes {want} fields, got {}", nums.len()),
                })
            }
        };
        match tag {
            "p" => {
                arity(2)?;
                if header.is_some() {
                    return Err(ParseError::Syntax {
                        line,
                        msg: "duplicate header".into(),
                    });
                }
                header = Some((nums[0], nums[1]));
            }
            "e" | "c" if header.is_none() => return Err(ParseError::MissingHeader),
            "e" => {
                arity(2)?;
                edges.push((nums[0], nums[1]));
            }
            "c" => {
                arity(1)?;
                let order = header.map(|h| h.0).unwrap_or_default();
                if nums[0] >= order {
                    return Err(ParseError::RoleOutOfRange { line, id: nums[0] });
                }
                cycle.push(nums[0]);
            }
            other => {
                return Err(ParseError::Syntax {
                    line,
                    msg: format!("unknown line tag `{other}`"),
                })
            }
        }
    }

    let (order, expected) = header.ok_or(ParseError::MissingHeader)?;
    let graph = Graph::from_edges(order, edges)?;
    if graph.edge_count() != expected {
        return Err(ParseError::EdgeCount {
            expected,
            found: graph.edge_count(),
        });
    }
    cycle.sort_unstable();
    cycle.dedup();
    Ok(EdgeListFile {
        graph,
        cycle_vertices: cycle,
    })
}

/// Serializes `graph`, with optional leading comment lines and `c` lines.
pub fn write(graph: &Graph, comments: &[String], cycle_vertices: &[Vertex]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "p {} {}", graph.order(), graph.edge_count());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    let mut cycle = cycle_vertices.to_vec();
    cycle.sort_unstable();
    cycle.dedup();
    for c in cycle {
        let _ = writeln!(out, "c {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_sorted_edges() {
        let g = Graph::from_edges(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(write(&g, &[], &[]), "p 3 2\ne 0 1\ne 1 2\n");
        assert_eq!(
            write(&g, &["tri".into()], &[2, 0]),
            "# tri\np 3 2\ne 0 1\ne 1 2\nc 0\nc 2\n"
        );
    }

    #[test]
    fn parses_comments_and_roles() {
        let f = parse("# hello\np 3 2\ne 1 0\n\ne 2 1\nc 1\n").unwrap();
        assert_eq!(f.graph, Graph::path(3));
        assert_eq!(f.cycle_vertices, vec![1]);
    }

    #[test]
    fn round_trip_is_byte_stable() {
        let g = Graph::cycle(11);
        let text = write(&g, &["C11".into()], &[3]);
        let back = parse(&text).unwrap();
        assert_eq!(
            write(&back.graph, &["C11".into()], &back.cycle_vertices),
            text
        );
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse("e 0 1\n"), Err(ParseError::MissingHeader));
        assert_eq!(parse(""), Err(ParseError::MissingHeader));
        assert!(matches!(
            parse("p 2 1\ne 0 x\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse("p 2 1\nq 0 1\n"),
            Err(ParseError::Syntax { .. })
        ));
        assert_eq!(
            parse("p 2 2\ne 0 1\n"),
            Err(ParseError::EdgeCount {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse("p 2 1\ne 0 2\n"),
            Err(ParseError::Graph(GraphError::OutOfRange {
                u: 0,
                v: 2,
                order: 2
            }))
        );
        assert_eq!(
            parse("p 2 1\ne 0 1\nc 5\n"),
            Err(ParseError::RoleOutOfRange { line: 3, id: 5 })
        );
    }
}
