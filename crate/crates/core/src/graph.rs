//! Undirected simple graphs on dense `0..n` vertex labels, the three
//! standard generators, and the edge-list text format.
//!
//! The edge-list format is a header line `n m` followed by exactly `m`
//! lines `u v` (0-based, whitespace separated). Serialization emits every
//! edge once with `u < v`, in lexicographic order, joined by `\n` without a
//! trailing newline.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// An undirected simple graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges (in either orientation) and out-of-range labels.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) has a label outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if !g.insert_edge(u, v) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge ({u}, {v})"
                )));
            }
        }
        Ok(g)
    }

    /// Inserts `{u, v}`; returns false if it was already present.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.adj.len() && v < self.adj.len());
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        fresh
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Full scan of the structural invariants: no self-loops, symmetric
    /// adjacency, labels in range.
    pub fn is_valid(&self) -> bool {
        let n = self.order();
        self.adj.iter().enumerate().all(|(u, nbrs)| {
            nbrs.iter()
                .all(|&v| v < n && v != u && self.adj[v].contains(&u))
        })
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter(
                "relabeling is not a permutation of the vertex set".into(),
            ));
        }
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        Ok(g)
    }
}

/// The path `P_n`.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "path needs at least 1 vertex".into(),
        ));
    }
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.insert_edge(i - 1, i);
    }
    Ok(g)
}

/// The cycle `C_n`. Requires `n >= 3`; shorter cycles are not simple.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.insert_edge(i, (i + 1) % n);
    }
    Ok(g)
}

/// The complete graph `K_n`.
pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "complete graph needs at least 1 vertex".into(),
        ));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edge(u, v);
        }
    }
    Ok(g)
}

pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    g.degree_sequence()
}

/// Renders `g` in the canonical edge-list format (no trailing newline).
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = write!(out, "\n{u} {v}");
    }
    out
}

/// Parses the edge-list format. Line numbers in errors are 1-based.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines: Vec<&str> = text.split('\n').collect();
    // A single terminating LF is allowed.
    if lines.len() > 1 && lines.last() == Some(&"") {
        lines.pop();
    }

    let header = lines.first().copied().unwrap_or("");
    let (n, m) = parse_pair(header, 1, "header")?;
    let body = &lines[1..];
    if body.len() != m {
        let line = if body.len() < m {
            body.len() + 2
        } else {
            m + 2
        };
        return Err(Error::Parse {
            line,
            message: format!(
                "header declares {m} edges but {} edge lines follow",
                body.len()
            ),
        });
    }

    let mut g = Graph::empty(n);
    for (i, raw) in body.iter().enumerate() {
        let line = i + 2;
        let (u, v) = parse_pair(raw, line, "edge")?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                message: format!("vertex label out of range 0..{n} in edge ({u}, {v})"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop at vertex {u}"),
            });
        }
        if !g.insert_edge(u, v) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge ({u}, {v})"),
            });
        }
    }
    Ok(g)
}

fn parse_pair(raw: &str, line: usize, what: &str) -> Result<(usize, usize)> {
    let malformed = || Error::Parse {
        line,
        message: format!("malformed {what} line '{raw}': expected two non-negative integers"),
    };
    let mut fields = raw.split_whitespace();
    let a = fields.next().ok_or_else(malformed)?;
    let b = fields.next().ok_or_else(malformed)?;
    if fields.next().is_some() {
        return Err(malformed());
    }
    Ok((
        a.parse().map_err(|_| malformed())?,
        b.parse().map_err(|_| malformed())?,
    ))
}
