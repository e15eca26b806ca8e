//! `topolab`: build graphs and products, compute indices, and verify the
//! closed forms against direct summation.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use topolab_core::report::{partition_csv, partition_text, sweep_csv, sweep_json};
use topolab_core::{
    corona, edge_partition, index_exact, join, make_complete, make_cycle, make_path, parse_graph,
    run_sweep_with, serialize_graph, symbolic_partition, Family, FamilySpec, Graph, IndexKind,
    SweepConfig,
};

#[derive(Parser, Debug)]
#[command(
    name = "topolab",
    version,
    about = "Sombor-family indices of join and corona products"
)]
struct Cli {
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a path, cycle or complete graph as an edge list.
    Generate { kind: GraphKind, n: usize },
    /// Join or corona product of two edge-list files.
    Product {
        op: ProductOp,
        g1: PathBuf,
        g2: PathBuf,
    },
    /// Exact and floating-point index values of a graph.
    Compute {
        file: PathBuf,
        /// Index kinds (eso, eu, so); may also be given with --kinds.
        #[arg(value_parser = parse_kind)]
        kinds: Vec<IndexKind>,
        #[arg(long = "kinds", value_delimiter = ',', value_parser = parse_kind)]
        kinds_flag: Vec<IndexKind>,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Degree-pair edge partition of a graph.
    Partition {
        file: PathBuf,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Compare closed forms with direct summation over a parameter grid.
    Verify {
        /// Comma-separated family names, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        families: Vec<String>,
        #[arg(long = "r-max", default_value_t = 10)]
        r_max: u64,
        #[arg(long = "s-max", default_value_t = 10)]
        s_max: u64,
        #[arg(long, value_delimiter = ',', value_parser = parse_kind, default_value = "eso,eu")]
        kinds: Vec<IndexKind>,
        #[arg(long, default_value = "csv")]
        format: Format,
        /// Also evaluate the published formulas against the errata list.
        #[arg(long)]
        audit: bool,
        /// Add one edge to the closed-form partition at FAMILY:R:S.
        #[arg(long, hide = true, value_name = "FAMILY:R:S")]
        inject_fault: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphKind {
    Path,
    Cycle,
    Complete,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProductOp {
    Join,
    Corona,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

fn parse_kind(s: &str) -> std::result::Result<IndexKind, String> {
    s.parse().map_err(|e: topolab_core::Error| e.to_string())
}

fn parse_families(names: &[String]) -> Result<Vec<Family>> {
    let mut out = Vec::new();
    for name in names {
        if name == "all" {
            out.extend(Family::ALL);
        } else {
            out.push(name.parse::<Family>()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn parse_fault(text: &str) -> Result<FamilySpec> {
    let parts: Vec<&str> = text.split(':').collect();
    let [family, r, s] = parts[..] else {
        bail!("--inject-fault expects FAMILY:R:S, got '{text}'");
    };
    Ok(FamilySpec::new(family.parse()?, r.parse()?, s.parse()?)?)
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("{}", path.display()))
}

fn compute(g: &Graph, kinds: &[IndexKind], format: Format) -> Result<String> {
    match format {
        Format::Text => {
            let lines: Vec<String> = kinds
                .iter()
                .map(|&kind| {
                    let v = index_exact(g, kind);
                    let line = format!("{v} ≈ {:.6}", v.to_f64());
                    if kinds.len() == 1 {
                        line
                    } else {
                        format!("{kind}: {line}")
                    }
                })
                .collect();
            Ok(lines.join("\n"))
        }
        Format::Json => {
            let indices: Vec<_> = kinds
                .iter()
                .map(|&kind| {
                    let v = index_exact(g, kind);
                    json!({ "kind": kind, "exact": v.to_string(), "value": v.to_f64() })
                })
                .collect();
            let doc = json!({ "order": g.order(), "size": g.size(), "indices": indices });
            Ok(serde_json::to_string_pretty(&doc)?)
        }
        Format::Csv => bail!("compute supports --format text or json"),
    }
}

/// Runs one command, returning the document to emit and whether the run
/// met its success contract.
fn run(command: &Command) -> Result<(String, bool)> {
    let doc = match command {
        Command::Generate { kind, n } => {
            let g = match kind {
                GraphKind::Path => make_path(*n),
                GraphKind::Cycle => make_cycle(*n),
                GraphKind::Complete => make_complete(*n),
            }?;
            serialize_graph(&g)
        }
        Command::Product { op, g1, g2 } => {
            let (a, b) = (read_graph(g1)?, read_graph(g2)?);
            let g = match op {
                ProductOp::Join => join(&a, &b),
                ProductOp::Corona => corona(&a, &b)?,
            };
            serialize_graph(&g)
        }
        Command::Compute {
            file,
            kinds,
            kinds_flag,
            format,
        } => {
            let mut all: Vec<IndexKind> = kinds.iter().chain(kinds_flag).copied().collect();
            if all.is_empty() {
                all = IndexKind::ALL.to_vec();
            }
            all.sort();
            all.dedup();
            compute(&read_graph(file)?, &all, *format)?
        }
        Command::Partition { file, format } => {
            let p = edge_partition(&read_graph(file)?);
            match format {
                Format::Text => partition_text(&p),
                Format::Csv => partition_csv(&p),
                Format::Json => bail!("partition supports --format text or csv"),
            }
        }
        Command::Verify {
            families,
            r_max,
            s_max,
            kinds,
            format,
            audit,
            inject_fault,
        } => {
            if *format == Format::Text {
                bail!("verify supports --format csv or json");
            }
            let mut cfg =
                SweepConfig::new(parse_families(families)?, kinds.clone(), *r_max, *s_max);
            cfg.audit = *audit;
            let fault = inject_fault.as_deref().map(parse_fault).transpose()?;
            let report = run_sweep_with(&cfg, |spec, kind| {
                let mut p = symbolic_partition(spec);
                if Some(*spec) == fault {
                    let first = p.iter().next();
                    if let Some(((a, b), _)) = first {
                        p.add(a, b, 1);
                    }
                }
                p.weighted_sum(kind)
                    .expect("partition degrees are positive")
            })?;
            let failed = report.records.iter().filter(|r| !r.exact_equal).count();
            let unknown = report.unknown_discrepancies().count();
            eprintln!(
                "verify: {} records, {failed} not exact; {} audit discrepancies, {unknown} unlisted",
                report.records.len(),
                report.errata_hits.len()
            );
            let doc = match format {
                Format::Json => sweep_json(&report),
                _ => sweep_csv(&report),
            };
            return Ok((doc.trim_end_matches('\n').to_string(), report.passed()));
        }
    };
    Ok((doc, true))
}

fn emit(out: Option<&Path>, doc: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{doc}\n"))
            .with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            writeln!(stdout, "{doc}")?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command).and_then(|(doc, ok)| emit(cli.out.as_deref(), &doc).map(|_| ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
