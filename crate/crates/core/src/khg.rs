//! The `.khg` text format.
//!
//! ```text
//! # optional comments
//! 3 4        <- k n
//! 0 1 2      <- one edge per line, k vertex indices from 0
//! 0 1 3
//! ```
//!
//! Blank lines and text after `#` are ignored. [`to_khg`] writes edges in
//! colex order with increasing indices, so output is canonical per labeling.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::hypergraph::KHypergraph;
use crate::vertex_set::VertexSet;

pub fn parse_khg(text: &str) -> Result<KHypergraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let nums = content
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("`{t}` is not a non-negative integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let Some((k, n)) = header else {
            let [k, n] = nums[..] else {
                return Err(Error::Parse {
                    line,
                    msg: "header must be `k n`".into(),
                });
            };
            if k == 0 {
                return Err(Error::Parse {
                    line,
                    msg: "uniformity must be at least 1".into(),
                });
            }
            header = Some((k, n));
            continue;
        };
        if nums.len() != k {
            return Err(Error::Parse {
                line,
                msg: format!("expected {k} vertices, found {}", nums.len()),
            });
        }
        if let Some(&v) = nums.iter().find(|&&v| v >= n) {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} out of range for {n} vertices"),
            });
        }
        let e = VertexSet::from_slice(&nums);
        if e.len() != k {
            return Err(Error::Parse {
                line,
                msg: "repeated vertex in edge".into(),
            });
        }
        edges.push(e);
    }
    let (k, n) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing `k n` header".into(),
    })?;
    KHypergraph::from_edge_sets(k, n, edges).map_err(|e| Error::Parse {
        line: 1,
        msg: e.to_string(),
    })
}

pub fn to_khg(g: &KHypergraph) -> String {
    let mut out = format!("{} {}\n", g.k(), g.n());
    for e in g.edges() {
        let line = e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(out, "{line}").expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_any_order() {
        let g = parse_khg("# tetra\n3 4\n\n2 1 0 # first\n0 1 3\n").unwrap();
        assert_eq!((g.k(), g.n(), g.edge_count()), (3, 4, 2));
        assert_eq!(to_khg(&g), "3 4\n0 1 2\n0 1 3\n");
    }

    #[test]
    fn errors_carry_lines() {
        let cases = [
            ("", 0),
            ("3\n", 1),
            ("3 4\n0 1\n", 2),
            ("3 4\n0 1 4\n", 2),
            ("3 4\n0 0 1\n", 2),
            ("3 4\n0 1 x\n", 2),
            ("0 4\n", 1),
        ];
        for (text, line) in cases {
            match parse_khg(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn empty_and_complete() {
        let e = KHypergraph::empty(3, 0).unwrap();
        assert_eq!(parse_khg(&to_khg(&e)).unwrap(), e);
        let c = KHypergraph::complete(4, 7).unwrap();
        assert_eq!(parse_khg(&to_khg(&c)).unwrap(), c);
    }
}
