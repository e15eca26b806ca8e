//! Parametric closed forms for the six product families.
//!
//! Each family is described by a symbolic edge partition: a list of degree
//! pairs and edge counts, each an integer function of `(r, s)`, with case
//! dispatch on `r = 2` / `s = 2` for the path families. Evaluating that
//! partition through the exact edge weights gives the closed-form index.
//!
//! Corrections relative to the published tables (each one is the unique
//! reading that matches the constructed graphs):
//! - join of paths: the second `(s+2, s+2)` row with count `s-3` is the
//!   `(r+2, r+2)` class; the `(s+2, s+1)` row with count `2(r-2)` is the
//!   `(s+2, r+1)` class.
//! - corona of paths: the `n-3` count is `r-3`; the `(s+1, s+1)` and
//!   `(s+1, s+2)` conditions refer to `r`, not `s`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{make_complete, make_cycle, make_path, Graph};
use crate::index::{EdgeClassPartition, IndexKind};
use crate::ops::{corona, join};
use crate::radical::RadicalSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `P_r + P_s`
    #[serde(rename = "join-paths")]
    JoinPaths,
    /// `C_r + C_s`
    #[serde(rename = "join-cycles")]
    JoinCycles,
    /// `K_r + K_s`
    #[serde(rename = "join-complete")]
    JoinComplete,
    /// `C_r + K_s`
    #[serde(rename = "cycle-complete")]
    JoinCycleComplete,
    /// `P_r ⊙ P_s`
    #[serde(rename = "corona-paths")]
    CoronaPaths,
    /// `C_r ⊙ C_s`
    #[serde(rename = "corona-cycles")]
    CoronaCycles,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::JoinPaths,
        Family::JoinCycles,
        Family::JoinComplete,
        Family::JoinCycleComplete,
        Family::CoronaPaths,
        Family::CoronaCycles,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::JoinPaths => "join-paths",
            Family::JoinCycles => "join-cycles",
            Family::JoinComplete => "join-complete",
            Family::JoinCycleComplete => "cycle-complete",
            Family::CoronaPaths => "corona-paths",
            Family::CoronaCycles => "corona-cycles",
        }
    }

    /// Smallest admissible `(r, s)`.
    pub fn domain_min(self) -> (u64, u64) {
        match self {
            Family::JoinPaths | Family::CoronaPaths => (2, 2),
            Family::JoinCycles | Family::CoronaCycles => (3, 3),
            Family::JoinComplete => (1, 1),
            Family::JoinCycleComplete => (3, 1),
        }
    }

    /// Lower corner of the verification grid: the domain minimum, but never
    /// below 2.
    pub fn grid_min(self) -> (u64, u64) {
        let (r, s) = self.domain_min();
        (r.max(2), s.max(2))
    }

    fn constraint(self) -> &'static str {
        match self {
            Family::JoinPaths | Family::CoronaPaths => "r >= 2 and s >= 2",
            Family::JoinCycles | Family::CoronaCycles => "r >= 3 and s >= 3",
            Family::JoinComplete => "r >= 1 and s >= 1",
            Family::JoinCycleComplete => "r >= 3 and s >= 1",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family plus its parameters, validated against the family's domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    family: Family,
    r: u64,
    s: u64,
}

impl FamilySpec {
    pub fn new(family: Family, r: u64, s: u64) -> Result<Self> {
        let (rmin, smin) = family.domain_min();
        if r < rmin || s < smin {
            return Err(Error::Domain {
                family: family.as_str(),
                r,
                s,
                constraint: family.constraint(),
            });
        }
        Ok(FamilySpec { family, r, s })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    /// Expected `|V|` of the product.
    pub fn order(&self) -> u64 {
        let (r, s) = (self.r, self.s);
        match self.family {
            Family::CoronaPaths | Family::CoronaCycles => r * s + r,
            _ => r + s,
        }
    }

    /// Expected `|E|` of the product.
    pub fn size(&self) -> u64 {
        let (r, s) = (self.r, self.s);
        match self.family {
            Family::JoinPaths => r + s + r * s - 2,
            Family::JoinCycles => r + s + r * s,
            Family::JoinComplete => (r + s) * (r + s - 1) / 2,
            Family::JoinCycleComplete => r + r * s + s * (s - 1) / 2,
            Family::CoronaPaths => 2 * r * s - 1,
            Family::CoronaCycles => 2 * r * s + r,
        }
    }

    /// Constructs the product graph.
    pub fn build(&self) -> Graph {
        let (r, s) = (self.r as usize, self.s as usize);
        // parameters were validated against the generator domains in `new`
        let built = match self.family {
            Family::JoinPaths => make_path(r).and_then(|a| Ok(join(&a, &make_path(s)?))),
            Family::JoinCycles => make_cycle(r).and_then(|a| Ok(join(&a, &make_cycle(s)?))),
            Family::JoinComplete => make_complete(r).and_then(|a| Ok(join(&a, &make_complete(s)?))),
            Family::JoinCycleComplete => {
                make_cycle(r).and_then(|a| Ok(join(&a, &make_complete(s)?)))
            }
            Family::CoronaPaths => make_path(r).and_then(|a| corona(&a, &make_path(s)?)),
            Family::CoronaCycles => make_cycle(r).and_then(|a| corona(&a, &make_cycle(s)?)),
        };
        built.expect("family parameters lie inside generator domains")
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(r={}, s={})", self.family, self.r, self.s)
    }
}

/// One evaluated row of a symbolic partition. Signed so that a bad case
/// split shows up as a negative count instead of wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionRow {
    pub a: i64,
    pub b: i64,
    pub count: i64,
}

fn row(a: i64, b: i64, count: i64) -> PartitionRow {
    PartitionRow { a, b, count }
}

/// The rows of the family's table that apply at `(r, s)`, before merging
/// coincident degree pairs.
pub fn symbolic_rows(spec: &FamilySpec) -> Vec<PartitionRow> {
    let (r, s) = (spec.r as i64, spec.s as i64);
    let mut rows = Vec::new();
    match spec.family {
        Family::JoinPaths => {
            // edges of P_r (degrees s+1 at the ends, s+2 inside)
            if r == 2 {
                rows.push(row(s + 1, s + 1, 1));
            } else {
                rows.push(row(s + 1, s + 2, 2));
                rows.push(row(s + 2, s + 2, r - 3));
            }
            // edges of P_s
            if s == 2 {
                rows.push(row(r + 1, r + 1, 1));
            } else {
                rows.push(row(r + 1, r + 2, 2));
                rows.push(row(r + 2, r + 2, s - 3));
            }
            // cross edges
            rows.push(row(s + 1, r + 1, 4));
            rows.push(row(s + 1, r + 2, 2 * (s - 2)));
            rows.push(row(s + 2, r + 1, 2 * (r - 2)));
            rows.push(row(s + 2, r + 2, (r - 2) * (s - 2)));
        }
        Family::JoinCycles => {
            rows.push(row(s + 2, s + 2, r));
            rows.push(row(s + 2, r + 2, r * s));
            rows.push(row(r + 2, r + 2, s));
        }
        Family::JoinComplete => {
            let d = r + s - 1;
            rows.push(row(d, d, (r + s) * d / 2));
        }
        Family::JoinCycleComplete => {
            let d = r + s - 1;
            rows.push(row(s + 2, s + 2, r));
            rows.push(row(s + 2, d, r * s));
            rows.push(row(d, d, s * (s - 1) / 2));
        }
        Family::CoronaPaths => {
            // edges inside the copies of P_s (degrees 2 at the ends, 3 inside)
            if s == 2 {
                rows.push(row(2, 2, r));
            } else {
                rows.push(row(2, 3, 2 * r));
                rows.push(row(3, 3, r * (s - 3)));
            }
            // edges of P_r (degrees s+1 at the ends, s+2 inside)
            if r == 2 {
                rows.push(row(s + 1, s + 1, 1));
            } else {
                rows.push(row(s + 1, s + 2, 2));
                rows.push(row(s + 2, s + 2, r - 3));
            }
            // attachment edges
            rows.push(row(2, s + 1, 4));
            rows.push(row(2, s + 2, 2 * (r - 2)));
            rows.push(row(3, s + 1, 2 * (s - 2)));
            rows.push(row(3, s + 2, (r - 2) * (s - 2)));
        }
        Family::CoronaCycles => {
            rows.push(row(3, 3, r * s));
            rows.push(row(3, s + 2, r * s));
            rows.push(row(s + 2, s + 2, r));
        }
    }
    rows
}

/// Evaluates the family's symbolic partition at `(r, s)`.
pub fn symbolic_partition(spec: &FamilySpec) -> EdgeClassPartition {
    let mut p = EdgeClassPartition::new();
    for PartitionRow { a, b, count } in symbolic_rows(spec) {
        assert!(count >= 0, "{spec}: negative count for ({a}, {b})");
        if count > 0 {
            p.add(a as u64, b as u64, count as u64);
        }
    }
    p
}

/// Closed-form index: the symbolic partition weighted by the exact edge
/// weights.
pub fn closed_index(spec: &FamilySpec, kind: IndexKind) -> RadicalSum {
    symbolic_partition(spec)
        .weighted_sum(kind)
        .expect("symbolic partitions only contain positive degrees")
}
