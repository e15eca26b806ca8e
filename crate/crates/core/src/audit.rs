//! Literal floating-point transcriptions of the published index formulas,
//! compared against the normative closed forms.
//!
//! The statements are transcribed as printed, typos included; where the
//! printed text is not well formed the reading is noted next to it. The
//! curated errata list (`data/errata.csv`) names every statement case that
//! is known to disagree with the constructed graphs.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::closed_form::{closed_index, Family, FamilySpec};
use crate::error::{Error, Result};
use crate::index::IndexKind;

/// Relative tolerance under which a statement counts as matching.
pub const AUDIT_REL_TOL: f64 = 1e-9;

const ERRATA_CSV: &str = include_str!("../data/errata.csv");

/// Which branch of a piecewise statement applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    /// `r = s = 2`
    #[serde(rename = "case1")]
    BothTwo,
    /// `r = 2, s > 2`
    #[serde(rename = "case2")]
    LeftTwo,
    /// `r > 2, s = 2`
    #[serde(rename = "case3")]
    RightTwo,
    /// `r, s > 2`
    #[serde(rename = "case4")]
    Generic,
    /// Families whose statement has a single branch.
    #[serde(rename = "general")]
    General,
}

impl CaseId {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::BothTwo => "case1",
            CaseId::LeftTwo => "case2",
            CaseId::RightTwo => "case3",
            CaseId::Generic => "case4",
            CaseId::General => "general",
        }
    }

    fn for_paths(r: u64, s: u64) -> Self {
        match (r == 2, s == 2) {
            (true, true) => CaseId::BothTwo,
            (true, false) => CaseId::LeftTwo,
            (false, true) => CaseId::RightTwo,
            (false, false) => CaseId::Generic,
        }
    }
}

/// One entry of the errata list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub family: Family,
    pub kind: IndexKind,
    pub case: CaseId,
    pub description: String,
    /// First grid point (r-major order) where the statement diverges,
    /// written `r=R;s=S`.
    pub first_divergent: String,
}

impl Erratum {
    pub fn first_divergent_point(&self) -> Result<(u64, u64)> {
        let bad = || Error::Errata(format!("bad example '{}'", self.first_divergent));
        let (r, s) = self.first_divergent.split_once(';').ok_or_else(bad)?;
        let r = r.trim().strip_prefix("r=").ok_or_else(bad)?;
        let s = s.trim().strip_prefix("s=").ok_or_else(bad)?;
        Ok((r.parse().map_err(|_| bad())?, s.parse().map_err(|_| bad())?))
    }
}

/// Parses an errata document (CSV with header
/// `family,kind,case,description,first_divergent`).
pub fn parse_errata(text: &str) -> Result<Vec<Erratum>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .deserialize()
        .map(|row| row.map_err(|e| Error::Errata(e.to_string())))
        .collect()
}

/// The shipped errata list.
pub fn errata() -> &'static [Erratum] {
    static ERRATA: OnceLock<Vec<Erratum>> = OnceLock::new();
    ERRATA.get_or_init(|| parse_errata(ERRATA_CSV).expect("shipped errata list parses"))
}

pub fn lookup_erratum(family: Family, kind: IndexKind, case: CaseId) -> Option<&'static Erratum> {
    errata()
        .iter()
        .find(|e| e.family == family && e.kind == kind && e.case == case)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRecord {
    pub family: Family,
    pub kind: IndexKind,
    pub r: u64,
    pub s: u64,
    pub case: CaseId,
    pub statement_value: f64,
    pub normative_value: f64,
    /// `|statement − normative| / max(|normative|, 1)`.
    pub delta: f64,
    /// The statement value is off by more than [`AUDIT_REL_TOL`].
    pub diverges: bool,
    /// This statement case is on the errata list.
    pub known_discrepancy: bool,
}

/// Evaluates the printed statement for `spec` and compares it with the
/// normative closed form.
pub fn audit_statement(spec: &FamilySpec, kind: IndexKind) -> Result<AuditRecord> {
    let (case, statement_value) = statement_value(spec, kind)?;
    let normative_value = closed_index(spec, kind).to_f64();
    let delta = (statement_value - normative_value).abs() / normative_value.abs().max(1.0);
    Ok(AuditRecord {
        family: spec.family(),
        kind,
        r: spec.r(),
        s: spec.s(),
        case,
        statement_value,
        normative_value,
        delta,
        diverges: delta.is_nan() || delta > AUDIT_REL_TOL,
        known_discrepancy: lookup_erratum(spec.family(), kind, case).is_some(),
    })
}

/// The statement case that governs `spec`.
pub fn statement_case(spec: &FamilySpec) -> CaseId {
    match spec.family() {
        Family::JoinPaths | Family::CoronaPaths => CaseId::for_paths(spec.r(), spec.s()),
        _ => CaseId::General,
    }
}

/// Literal value of the printed statement at `spec`.
pub fn statement_value(spec: &FamilySpec, kind: IndexKind) -> Result<(CaseId, f64)> {
    let case = statement_case(spec);
    let (r, s) = (spec.r() as f64, spec.s() as f64);
    let sq = f64::sqrt;
    let (r2, r3) = (sq(2.0), sq(3.0));
    let p2 = |x: f64| x * x;

    let value = match (spec.family(), kind) {
        (_, IndexKind::So) => {
            return Err(Error::NoStatement {
                family: spec.family().as_str(),
                kind: kind.as_str(),
            })
        }

        (Family::JoinPaths, IndexKind::Eso) => match case {
            CaseId::BothTwo => 108.0 * r2,
            CaseId::LeftTwo => {
                70.0 + 2.0 * r2 * p2(s + 1.0)
                    + 32.0 * r2 * (s - 3.0)
                    + 4.0 * (s + 4.0) * sq(9.0 + p2(s + 1.0))
                    + 2.0 * (s - 2.0) * (s + 5.0) * sq(16.0 + p2(s + 1.0))
            }
            // printed with (s+5) in the last term
            CaseId::RightTwo => {
                70.0 + 2.0 * r2 * p2(r + 1.0)
                    + 32.0 * r2 * (r - 3.0)
                    + 4.0 * (r + 4.0) * sq(9.0 + p2(r + 1.0))
                    + 2.0 * (r - 2.0) * (s + 5.0) * sq(16.0 + p2(r + 1.0))
            }
            // printed as "(r-3)(2s+4(s+2)√2" with an unclosed parenthesis,
            // read as (r-3)(2s+4)(s+2)√2; the statement stops after the
            // (r+1, s+1) cross term
            _ => {
                2.0 * (2.0 * s + 3.0) * sq(p2(s + 1.0) + p2(s + 2.0))
                    + (r - 3.0) * (2.0 * s + 4.0) * (s + 2.0) * r2
                    + 2.0 * (2.0 * r + 3.0) * sq(p2(r + 1.0) + p2(r + 2.0))
                    + (s - 3.0) * (2.0 * r + 4.0) * (r + 2.0) * r2
                    + 4.0 * (r + s + 2.0) * sq(p2(r + 1.0) + p2(s + 1.0))
            }
        },

        (Family::JoinPaths, IndexKind::Eu) => match case {
            CaseId::BothTwo => 18.0 * r3,
            CaseId::LeftTwo => {
                2.0 * sq(37.0)
                    + (5.0 * s - 11.0) * r3
                    + 4.0 * sq(p2(s + 1.0) + 3.0 * s + 12.0)
                    + 2.0 * (s - 2.0) * sq(p2(s + 1.0) + 4.0 * s + 20.0)
            }
            // printed with (5s-11) rather than (5r-11)
            CaseId::RightTwo => {
                2.0 * sq(37.0)
                    + (5.0 * s - 11.0) * r3
                    + 4.0 * sq(p2(r + 1.0) + 3.0 * r + 12.0)
                    + 2.0 * (r - 2.0) * sq(p2(r + 1.0) + 4.0 * r + 20.0)
            }
            _ => {
                2.0 * sq(p2(s + 1.0) + p2(s + 2.0) + (s + 1.0) * (s + 2.0))
                    + (r - 3.0) * sq(3.0 * p2(s + 2.0))
                    + 2.0 * sq(p2(r + 1.0) + p2(r + 2.0) + (r + 1.0) * (r + 2.0))
                    + (s - 3.0) * sq(3.0 * p2(r + 2.0))
                    + 4.0 * sq(p2(r + 1.0) + p2(s + 1.0) + (r + 1.0) * (s + 1.0))
                    + 2.0 * (s - 2.0) * sq(p2(r + 2.0) + p2(s + 1.0) + (r + 2.0) * (s + 1.0))
                    + (r - 2.0) * (s - 2.0) * sq(p2(r + 2.0) + p2(s + 2.0) + (r + 2.0) * (s + 2.0))
                    + 2.0 * (r - 2.0) * sq(p2(r + 1.0) + p2(s + 2.0) + (r + 1.0) * (s + 2.0))
            }
        },

        // printed as "2√2(s+2)²+s(r+2)²]+..." with a stray bracket; read
        // literally, without the missing r factor and opening bracket
        (Family::JoinCycles, IndexKind::Eso) => {
            2.0 * r2 * p2(s + 2.0)
                + s * p2(r + 2.0)
                + r * s * (r + s + 4.0) * sq(p2(r + 2.0) + p2(s + 2.0))
        }
        (Family::JoinCycles, IndexKind::Eu) => {
            2.0 * r3 * (r + s + r * s)
                + r * s * sq(p2(r + 2.0) + p2(s + 2.0) + (r + 2.0) * (s + 2.0))
        }

        (Family::JoinComplete, IndexKind::Eso) => r2 * (r + s) * (r + s - 1.0).powi(3),
        (Family::JoinComplete, IndexKind::Eu) => r3 / 2.0 * (r + s) * p2(r + s - 1.0),

        (Family::JoinCycleComplete, IndexKind::Eso) => {
            let c = s * (s - 1.0) / 2.0;
            2.0 * r2 * r * p2(s + 2.0)
                + r * s * (r + 2.0 * s + 1.0) * sq(p2(s + 2.0) + p2(r + s - 1.0))
                + c * (r + s - 1.0) * r2
        }
        (Family::JoinCycleComplete, IndexKind::Eu) => {
            let c = s * (s - 1.0) / 2.0;
            r * (s + 2.0) * r3
                + r * s * sq(p2(s + 2.0) + p2(r + s - 1.0) + (s + 2.0) * (r + s - 1.0))
                + c * (r + s - 1.0) * r3
        }

        (Family::CoronaPaths, IndexKind::Eso) => match case {
            CaseId::BothTwo => 34.0 * r2 + 20.0 * sq(13.0),
            CaseId::LeftTwo => {
                20.0 * sq(13.0)
                    + 2.0 * r2 * p2(s + 1.0)
                    + 4.0 * (s + 3.0) * sq(4.0 + p2(s + 1.0))
                    + 2.0 * (s - 2.0) * (s + 4.0) * sq(9.0 + p2(s + 1.0))
            }
            CaseId::RightTwo => {
                70.0 + 20.0 * sq(13.0)
                    + 8.0 * r2 * r
                    + 32.0 * r2 * (r - 3.0)
                    + 24.0 * (r - 2.0) * sq(5.0)
            }
            _ => {
                18.0 * r2 * r * (s - 3.0)
                    + 2.0 * r2 * (r - 3.0) * p2(s + 2.0)
                    + 10.0 * sq(13.0) * r
                    + 4.0 * (s + 3.0) * sq(4.0 + p2(s + 1.0))
                    + 2.0 * (r - 1.0) * (s + 4.0) * sq(4.0 + p2(s + 2.0))
                    + 2.0 * (s - 2.0) * (s + 4.0) * sq(9.0 + p2(s + 1.0))
                    + (r - 2.0) * (s - 2.0) * (s + 5.0) * sq(9.0 + p2(s + 2.0))
                    + 2.0 * (2.0 * s + 3.0) * sq(p2(s + 1.0) + p2(s + 2.0))
            }
        },

        (Family::CoronaPaths, IndexKind::Eu) => match case {
            CaseId::BothTwo => 7.0 * r3 + 4.0 * sq(19.0),
            CaseId::LeftTwo => {
                4.0 * sq(19.0)
                    + (s + 1.0) * r3
                    + 4.0 * sq(4.0 + p2(s + 1.0) + 2.0 * (s + 1.0))
                    + 2.0 * (s - 2.0) * sq(9.0 + p2(s + 1.0) + 3.0 * (s + 1.0))
            }
            CaseId::RightTwo => {
                4.0 * sq(19.0)
                    + 2.0 * r3 * r
                    + 8.0 * r2 * r
                    + 32.0 * r2 * (r - 3.0)
                    + 24.0 * (r - 2.0) * sq(5.0)
            }
            _ => {
                3.0 * r3 * r * (s - 3.0)
                    + r3 * (r - 3.0) * (s + 2.0)
                    + 2.0 * sq(19.0) * r
                    + 4.0 * sq(4.0 + p2(s + 1.0) + 2.0 * (s + 1.0))
                    + 2.0 * (r - 1.0) * sq(4.0 + p2(s + 2.0) + 2.0 * (s + 2.0))
                    + 2.0 * (s - 2.0) * sq(9.0 + p2(s + 1.0) + 3.0 * (s + 1.0))
                    + (r - 2.0) * (s - 2.0) * sq(9.0 + p2(s + 2.0) + 3.0 * (s + 2.0))
                    + 2.0 * sq(p2(s + 1.0) + p2(s + 2.0) + (s + 1.0) * (s + 2.0))
            }
        },

        (Family::CoronaCycles, IndexKind::Eso) => {
            18.0 * r * s * r2
                + r * s * (s + 5.0) * sq(9.0 + p2(s + 2.0))
                + 2.0 * r2 * r * p2(s + 2.0)
        }
        (Family::CoronaCycles, IndexKind::Eu) => {
            3.0 * r3 + r * s * sq(9.0 + p2(s + 2.0) + 3.0 * (s + 2.0)) + r3 * r * (s + 2.0)
        }
    };
    Ok((case, value))
}
