//! Join and corona products.
//!
//! Labels are deterministic: the left operand keeps its labels, the right
//! operand (or each corona copy) is shifted past it.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `g1 + g2`: disjoint union plus every edge between the two vertex sets.
/// Vertices of `g2` are shifted by `g1.order()`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.order(), g2.order());
    let mut g = Graph::empty(n1 + n2);
    for (u, v) in g1.edges() {
        g.insert_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.insert_edge(n1 + u, n1 + v);
    }
    for u in 0..n1 {
        for w in 0..n2 {
            g.insert_edge(u, n1 + w);
        }
    }
    g
}

/// `g ⊙ h`: one copy of `h` per vertex of `g`, vertex `i` joined to every
/// vertex of copy `i`. Copy `i` occupies labels
/// `n + i·|h| .. n + (i+1)·|h|` in `h`'s label order.
///
/// Not commutative. `g` need not be connected.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    let (n, k) = (g.order(), h.order());
    if n == 0 {
        return Err(Error::InvalidParameter(
            "corona: base graph must have at least 1 vertex".into(),
        ));
    }
    if k == 0 {
        return Err(Error::InvalidParameter(
            "corona: attached graph must have at least 1 vertex".into(),
        ));
    }
    let mut out = Graph::empty(n * (1 + k));
    for (u, v) in g.edges() {
        out.insert_edge(u, v);
    }
    for i in 0..n {
        let base = n + i * k;
        for (u, v) in h.edges() {
            out.insert_edge(base + u, base + v);
        }
        for w in 0..k {
            out.insert_edge(i, base + w);
        }
    }
    Ok(out)
}
