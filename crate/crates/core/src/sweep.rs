//! Parameter sweeps comparing closed forms against direct summation on the
//! constructed products.

use rayon::prelude::*;
use serde::Serialize;

use crate::audit::{audit_statement, AuditRecord};
use crate::closed_form::{closed_index, Family, FamilySpec};
use crate::error::{Error, Result};
use crate::index::{index_exact, IndexKind};
use crate::radical::RadicalSum;

/// Environment variable capping the number of sweep workers.
pub const THREADS_ENV: &str = "TOPOLAB_THREADS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub kinds: Vec<IndexKind>,
    pub r_max: u64,
    pub s_max: u64,
    pub audit: bool,
    /// Worker cap; `None` falls back to [`THREADS_ENV`], then to rayon's
    /// default.
    pub threads: Option<usize>,
}

impl SweepConfig {
    pub fn new(families: Vec<Family>, kinds: Vec<IndexKind>, r_max: u64, s_max: u64) -> Self {
        SweepConfig {
            families,
            kinds,
            r_max,
            s_max,
            audit: false,
            threads: None,
        }
    }

    fn validate(&self) -> Result<()> {
        for &family in &self.families {
            let (rmin, smin) = family.grid_min();
            if self.r_max < rmin || self.s_max < smin {
                return Err(Error::InvalidParameter(format!(
                    "{family}: --r-max/--s-max must be at least {rmin}/{smin}, got {}/{}",
                    self.r_max, self.s_max
                )));
            }
        }
        Ok(())
    }

    /// Grid points in `(family, r, s)` order.
    pub fn points(&self) -> Vec<FamilySpec> {
        let mut families = self.families.clone();
        families.sort();
        families.dedup();
        families
            .into_iter()
            .flat_map(|family| {
                let (rmin, smin) = family.grid_min();
                (rmin..=self.r_max).flat_map(move |r| {
                    (smin..=self.s_max).filter_map(move |s| FamilySpec::new(family, r, s).ok())
                })
            })
            .collect()
    }

    fn sorted_kinds(&self) -> Vec<IndexKind> {
        let mut kinds = self.kinds.clone();
        kinds.sort();
        kinds.dedup();
        kinds
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub family: Family,
    pub kind: IndexKind,
    pub r: u64,
    pub s: u64,
    pub oracle: String,
    pub closed: String,
    pub exact_equal: bool,
    /// `|oracle − closed| / max(|oracle|, 1)` in double precision.
    pub float_delta: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub family: Family,
    pub kind: IndexKind,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub records: Vec<VerificationRecord>,
    pub summary: Vec<SummaryRow>,
    /// Audited statement values that diverge from the normative value.
    pub errata_hits: Vec<AuditRecord>,
    #[serde(skip)]
    pub audit: Vec<AuditRecord>,
}

impl SweepReport {
    pub fn all_exact(&self) -> bool {
        self.records.iter().all(|r| r.exact_equal)
    }

    /// Diverging statements that are not on the errata list.
    pub fn unknown_discrepancies(&self) -> impl Iterator<Item = &AuditRecord> {
        self.errata_hits.iter().filter(|a| !a.known_discrepancy)
    }

    /// Exit-status contract: every record exact and every audit
    /// discrepancy accounted for by the errata list.
    pub fn passed(&self) -> bool {
        self.all_exact() && self.unknown_discrepancies().next().is_none()
    }
}

/// Runs the sweep with the normative closed forms.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    run_sweep_with(config, closed_index)
}

/// Runs the sweep with a caller-supplied closed-form evaluator.
pub fn run_sweep_with<F>(config: &SweepConfig, closed: F) -> Result<SweepReport>
where
    F: Fn(&FamilySpec, IndexKind) -> RadicalSum + Sync,
{
    config.validate()?;
    let threads = config.threads.or_else(threads_from_env);
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(|| sweep(config, &closed)),
        None => sweep(config, &closed),
    }
}

fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok()
}

fn sweep<F>(config: &SweepConfig, closed: &F) -> Result<SweepReport>
where
    F: Fn(&FamilySpec, IndexKind) -> RadicalSum + Sync,
{
    let kinds = config.sorted_kinds();
    let points = config.points();

    // one graph build per point; collect preserves point order
    let per_point: Vec<Vec<VerificationRecord>> = points
        .par_iter()
        .map(|spec| {
            let g = spec.build();
            kinds
                .iter()
                .map(|&kind| compare(spec, kind, index_exact(&g, kind), closed(spec, kind)))
                .collect()
        })
        .collect();

    let mut records: Vec<VerificationRecord> = per_point.into_iter().flatten().collect();
    records.sort_by_key(|r| (r.family, r.kind, r.r, r.s));

    let mut audit = Vec::new();
    if config.audit {
        let audited: Vec<(FamilySpec, IndexKind)> = points
            .iter()
            .flat_map(|&spec| {
                kinds
                    .iter()
                    .filter(|&&k| k != IndexKind::So)
                    .map(move |&k| (spec, k))
            })
            .collect();
        audit = audited
            .par_iter()
            .map(|(spec, kind)| audit_statement(spec, *kind))
            .collect::<Result<Vec<_>>>()?;
        audit.sort_by_key(|a| (a.family, a.kind, a.r, a.s));
    }
    let errata_hits = audit.iter().filter(|a| a.diverges).cloned().collect();

    Ok(SweepReport {
        summary: summarize(&records),
        records,
        errata_hits,
        audit,
    })
}

fn compare(
    spec: &FamilySpec,
    kind: IndexKind,
    oracle: RadicalSum,
    closed: RadicalSum,
) -> VerificationRecord {
    let (a, b) = (oracle.to_f64(), closed.to_f64());
    VerificationRecord {
        family: spec.family(),
        kind,
        r: spec.r(),
        s: spec.s(),
        exact_equal: oracle == closed,
        float_delta: (a - b).abs() / a.abs().max(1.0),
        oracle: oracle.to_string(),
        closed: closed.to_string(),
    }
}

fn summarize(records: &[VerificationRecord]) -> Vec<SummaryRow> {
    let mut rows: Vec<SummaryRow> = Vec::new();
    for rec in records {
        match rows.last_mut() {
            Some(row) if row.family == rec.family && row.kind == rec.kind => {
                if rec.exact_equal {
                    row.passed += 1;
                } else {
                    row.failed += 1;
                }
            }
            _ => rows.push(SummaryRow {
                family: rec.family,
                kind: rec.kind,
                passed: usize::from(rec.exact_equal),
                failed: usize::from(!rec.exact_equal),
            }),
        }
    }
    rows
}
