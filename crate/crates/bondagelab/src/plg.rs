//! The `.plg` text format.
//!
//! ```text
//! # comment
//! planegraph <n>
//! v <id>: <neighbor ids in clockwise order, space-separated>
//! ```
//!
//! Ids are decimal and 0-based. Parser errors mirror build errors with line
//! numbers.

use crate::error::{GraphError, PlgError};
use crate::graph::PlaneGraph;
use std::fmt::Write as _;

pub fn parse(text: &str) -> Result<PlaneGraph, PlgError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or(PlgError::Syntax { line: 1, msg: "empty file".into() })?;
    let n: usize = header
        .strip_prefix("planegraph")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| PlgError::Syntax {
            line: hline,
            msg: format!("expected 'planegraph <n>', got '{header}'"),
        })?;

    let mut rotations: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        let rest = line.strip_prefix('v').map(str::trim).ok_or_else(|| PlgError::Syntax {
            line: lineno,
            msg: format!("expected 'v <id>: <neighbors>', got '{line}'"),
        })?;
        let (id_part, nbr_part) = rest.split_once(':').ok_or_else(|| PlgError::Syntax {
            line: lineno,
            msg: "missing ':' after vertex id".into(),
        })?;
        let id: usize = id_part.trim().parse().map_err(|_| PlgError::Syntax {
            line: lineno,
            msg: format!("bad vertex id '{}'", id_part.trim()),
        })?;
        if id >= n {
            return Err(PlgError::Build { line: lineno, source: GraphError::InvalidId(id) });
        }
        if rotations[id].is_some() {
            return Err(PlgError::Syntax {
                line: lineno,
                msg: format!("vertex {id} listed twice"),
            });
        }
        let mut nbrs = Vec::new();
        for tok in nbr_part.split_whitespace() {
            let u: usize = tok.parse().map_err(|_| PlgError::Syntax {
                line: lineno,
                msg: format!("bad neighbor id '{tok}'"),
            })?;
            nbrs.push(u);
        }
        rotations[id] = Some(nbrs);
    }

    for (id, r) in rotations.iter().enumerate() {
        if r.is_none() {
            return Err(PlgError::Syntax {
                line: last_line,
                msg: format!("vertex {id} has no rotation line"),
            });
        }
    }
    let rotations: Vec<Vec<usize>> = rotations.into_iter().map(Option::unwrap).collect();
    PlaneGraph::build(rotations).map_err(|source| PlgError::Build { line: last_line, source })
}

pub fn write(g: &PlaneGraph) -> String {
    let mut out = String::new();
    writeln!(out, "planegraph {}", g.n()).unwrap();
    for v in 0..g.n() {
        let nbrs: Vec<String> = g.rotation(v).iter().map(|u| u.to_string()).collect();
        writeln!(out, "v {}: {}", v, nbrs.join(" ")).unwrap();
    }
    out
}
