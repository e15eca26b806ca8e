//! CSV and JSON rendering of sweep reports and partitions.
//!
//! Output is a pure function of the report, so identical sweeps give
//! byte-identical documents.

use std::fmt::Write as _;

use crate::index::EdgeClassPartition;
use crate::sweep::SweepReport;

pub const RECORD_COLUMNS: &str = "family,kind,r,s,exact_equal,float_delta,oracle,closed";
pub const AUDIT_COLUMNS: &str =
    "family,kind,r,s,case,statement_value,normative_value,delta,known_discrepancy";

/// Records table; when the report carries audit hits, a blank line and
/// the audit table follow.
pub fn sweep_csv(report: &SweepReport) -> String {
    let mut out = String::new();
    out.push_str(RECORD_COLUMNS);
    out.push('\n');
    for rec in &report.records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{:.9e},{},{}",
            rec.family,
            rec.kind,
            rec.r,
            rec.s,
            rec.exact_equal,
            rec.float_delta,
            csv_field(&rec.oracle),
            csv_field(&rec.closed),
        );
    }
    if !report.errata_hits.is_empty() {
        out.push('\n');
        out.push_str(AUDIT_COLUMNS);
        out.push('\n');
        for a in &report.errata_hits {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{:.9},{:.9},{:.9e},{}",
                a.family,
                a.kind,
                a.r,
                a.s,
                a.case.as_str(),
                a.statement_value,
                a.normative_value,
                a.delta,
                a.known_discrepancy,
            );
        }
    }
    out
}

pub fn sweep_json(report: &SweepReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes") + "\n"
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `(a,b),count` lines sorted by `(a, b)`.
pub fn partition_text(p: &EdgeClassPartition) -> String {
    p.iter()
        .map(|((a, b), c)| format!("({a},{b}),{c}"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// `a,b,count` with a header row.
pub fn partition_csv(p: &EdgeClassPartition) -> String {
    let mut out = String::from("a,b,count");
    for ((a, b), c) in p.iter() {
        let _ = write!(out, "\n{a},{b},{c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::Family;
    use crate::graph::make_path;
    use crate::index::{edge_partition, IndexKind};
    use crate::sweep::{run_sweep, SweepConfig};

    #[test]
    fn partition_renderings() {
        let p = edge_partition(&make_path(4).unwrap());
        assert_eq!(partition_text(&p), "(1,2),2\n(2,2),1");
        assert_eq!(partition_csv(&p), "a,b,count\n1,2,2\n2,2,1");
    }

    #[test]
    fn csv_layout() {
        let cfg = SweepConfig::new(vec![Family::JoinPaths], vec![IndexKind::Eso], 2, 2);
        let csv = sweep_csv(&run_sweep(&cfg).unwrap());
        assert_eq!(
            csv,
            "family,kind,r,s,exact_equal,float_delta,oracle,closed\n\
             join-paths,eso,2,2,true,0.000000000e0,108*sqrt(2),108*sqrt(2)\n"
        );
    }

    #[test]
    fn json_mirrors_record_fields() {
        let cfg = SweepConfig::new(vec![Family::JoinPaths], vec![IndexKind::Eu], 2, 2);
        let json: serde_json::Value =
            serde_json::from_str(&sweep_json(&run_sweep(&cfg).unwrap())).unwrap();
        let rec = &json["records"][0];
        assert_eq!(rec["family"], "join-paths");
        assert_eq!(rec["kind"], "eu");
        assert_eq!(rec["oracle"], "18*sqrt(3)");
        assert_eq!(rec["exact_equal"], true);
        assert_eq!(json["summary"][0]["passed"], 1);
    }

    #[test]
    fn quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("1*sqrt(2)"), "1*sqrt(2)");
    }
}
