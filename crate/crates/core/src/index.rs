//! Degree-pair edge partitions and direct evaluation of the Sombor,
//! elliptic Sombor and Euler Sombor indices.
//!
//! Direct summation over the edges of a constructed graph is the reference
//! value every closed form is judged against.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::radical::{normalize_radical, Radical, RadicalSum, Rational};

/// A degree-based index of the form `Σ_{uv ∈ E} f(d_u, d_v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexKind {
    /// Elliptic Sombor: `(a+b)·√(a²+b²)`.
    Eso,
    /// Euler Sombor: `√(a²+b²+ab)`.
    Eu,
    /// Sombor: `√(a²+b²)`.
    So,
}

impl IndexKind {
    pub const ALL: [IndexKind; 3] = [IndexKind::Eso, IndexKind::Eu, IndexKind::So];

    pub fn as_str(self) -> &'static str {
        match self {
            IndexKind::Eso => "eso",
            IndexKind::Eu => "eu",
            IndexKind::So => "so",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndexKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "eso" => Ok(IndexKind::Eso),
            "eu" => Ok(IndexKind::Eu),
            "so" => Ok(IndexKind::So),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// Edge counts keyed by unordered degree pair `(a, b)` with `a <= b`.
/// Only positive counts are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeClassPartition {
    classes: BTreeMap<(u64, u64), u64>,
}

impl EdgeClassPartition {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` edges to class `{a, b}`; zero counts are ignored.
    pub fn add(&mut self, a: u64, b: u64, count: u64) {
        if count > 0 {
            *self.classes.entry((a.min(b), a.max(b))).or_insert(0) += count;
        }
    }

    /// Classes sorted by `(a, b)`.
    pub fn iter(&self) -> impl Iterator<Item = ((u64, u64), u64)> + '_ {
        self.classes.iter().map(|(&k, &c)| (k, c))
    }

    pub fn count(&self, a: u64, b: u64) -> u64 {
        self.classes
            .get(&(a.min(b), a.max(b)))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.classes.values().sum()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `Σ count·weight(a, b)` over all classes.
    pub fn weighted_sum(&self, kind: IndexKind) -> Result<RadicalSum> {
        let mut total = RadicalSum::zero();
        for ((a, b), count) in self.iter() {
            let w = edge_weight(kind, a, b)?;
            total += Radical {
                coef: w.coef * Rational::from_integer(i128::from(count)),
                radicand: w.radicand,
            };
        }
        Ok(total)
    }
}

impl FromIterator<((u64, u64), u64)> for EdgeClassPartition {
    fn from_iter<I: IntoIterator<Item = ((u64, u64), u64)>>(iter: I) -> Self {
        let mut p = EdgeClassPartition::new();
        for ((a, b), c) in iter {
            p.add(a, b, c);
        }
        p
    }
}

pub fn edge_partition(g: &Graph) -> EdgeClassPartition {
    let mut p = EdgeClassPartition::new();
    for (u, v) in g.edges() {
        p.add(g.degree(u) as u64, g.degree(v) as u64, 1);
    }
    p
}

/// Contribution of a single edge with end degrees `a`, `b`, normalized.
pub fn edge_weight(kind: IndexKind, a: u64, b: u64) -> Result<Radical> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidDegree(a, b));
    }
    let sq = a * a + b * b;
    let (coef, radicand) = match kind {
        IndexKind::Eso => (a + b, sq),
        IndexKind::Eu => (1, sq + a * b),
        IndexKind::So => (1, sq),
    };
    normalize_radical(Rational::from_integer(i128::from(coef)), radicand)
}

/// Exact index value by direct edge summation. The partition-weighted sum
/// is computed as well and must agree.
pub fn index_exact(g: &Graph, kind: IndexKind) -> RadicalSum {
    let mut by_edge = RadicalSum::zero();
    for (u, v) in g.edges() {
        // degrees on an edge are at least 1
        by_edge += edge_weight(kind, g.degree(u) as u64, g.degree(v) as u64)
            .expect("edge endpoints have positive degree");
    }
    let by_class = edge_partition(g)
        .weighted_sum(kind)
        .expect("edge endpoints have positive degree");
    assert_eq!(by_edge, by_class, "edge sum and partition sum disagree");
    by_edge
}

pub fn index_float(g: &Graph, kind: IndexKind) -> f64 {
    index_exact(g, kind).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_path};
    use crate::ops::{corona, join};

    fn q(n: i128) -> Rational {
        Rational::from_integer(n)
    }

    fn rs(pairs: &[(i128, u64)]) -> RadicalSum {
        pairs
            .iter()
            .map(|&(c, n)| RadicalSum::term(q(c), n).unwrap())
            .sum()
    }

    fn part(entries: &[((u64, u64), u64)]) -> EdgeClassPartition {
        entries.iter().copied().collect()
    }

    #[test]
    fn partition_examples() {
        let p4 = make_path(4).unwrap();
        assert_eq!(edge_partition(&p4), part(&[((1, 2), 2), ((2, 2), 1)]));

        let p2 = make_path(2).unwrap();
        let p3 = make_path(3).unwrap();
        assert_eq!(
            edge_partition(&join(&p2, &p3)),
            part(&[((3, 4), 6), ((4, 4), 3)])
        );
        assert_eq!(
            edge_partition(&corona(&p2, &p3).unwrap()),
            part(&[((2, 3), 4), ((2, 4), 4), ((3, 4), 2), ((4, 4), 1)])
        );
    }

    #[test]
    fn weight_examples() {
        let w = edge_weight(IndexKind::Eso, 3, 3).unwrap();
        assert_eq!((w.coef, w.radicand), (q(18), 2));
        let w = edge_weight(IndexKind::Eu, 2, 3).unwrap();
        assert_eq!((w.coef, w.radicand), (q(1), 19));
        let w = edge_weight(IndexKind::Eu, 3, 2).unwrap();
        assert_eq!((w.coef, w.radicand), (q(1), 19));
        let w = edge_weight(IndexKind::So, 1, 1).unwrap();
        assert_eq!((w.coef, w.radicand), (q(1), 2));
        assert_eq!(
            edge_weight(IndexKind::So, 0, 2),
            Err(Error::InvalidDegree(0, 2))
        );
        assert!(edge_weight(IndexKind::Eso, 4, 0).is_err());
    }

    #[test]
    fn exact_examples() {
        let k4 = make_complete(4).unwrap();
        assert_eq!(index_exact(&k4, IndexKind::Eso), rs(&[(108, 2)]));
        let p2 = make_path(2).unwrap();
        let c22 = corona(&p2, &p2).unwrap();
        assert_eq!(index_exact(&c22, IndexKind::Eso), rs(&[(34, 2), (20, 13)]));
        assert_eq!(index_exact(&c22, IndexKind::Eu), rs(&[(7, 3), (4, 19)]));
        assert_eq!(
            index_exact(&make_cycle(3).unwrap(), IndexKind::Eu),
            rs(&[(6, 3)])
        );
    }

    #[test]
    fn float_examples() {
        let k4 = make_complete(4).unwrap();
        assert!((index_float(&k4, IndexKind::Eso) - 152.735065).abs() < 1e-6);
        let p2 = make_path(2).unwrap();
        let c22 = corona(&p2, &p2).unwrap();
        assert!((index_float(&c22, IndexKind::Eu) - 29.559951).abs() < 1e-6);
        assert!((index_float(&p2, IndexKind::So) - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn edgeless_graph_has_zero_index() {
        let p1 = make_path(1).unwrap();
        for kind in IndexKind::ALL {
            assert!(index_exact(&p1, kind).is_zero());
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("ESO".parse::<IndexKind>().unwrap(), IndexKind::Eso);
        assert_eq!("eu".parse::<IndexKind>().unwrap(), IndexKind::Eu);
        assert!("abc".parse::<IndexKind>().is_err());
    }
}
