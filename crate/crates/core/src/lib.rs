//! Join and corona products of paths, cycles and complete graphs, with
//! exact elliptic Sombor, Euler Sombor and Sombor indices.
//!
//! Index values are kept exact as sums of rational multiples of square
//! roots ([`RadicalSum`]), so a closed form and a direct edge summation can
//! be compared with `==`.
//!
//! ```
//! use topolab_core::{index_exact, make_path, join, IndexKind};
//!
//! let p2 = make_path(2).unwrap();
//! let k4 = join(&p2, &p2);
//! assert_eq!(index_exact(&k4, IndexKind::Eso).to_string(), "108*sqrt(2)");
//! ```

pub mod audit;
pub mod closed_form;
pub mod error;
pub mod graph;
pub mod index;
pub mod ops;
pub mod radical;
pub mod report;
pub mod sweep;

pub use audit::{audit_statement, errata, AuditRecord, CaseId, Erratum};
pub use closed_form::{closed_index, symbolic_partition, Family, FamilySpec};
pub use error::{Error, Result};
pub use graph::{
    degree_sequence, make_complete, make_cycle, make_path, parse_graph, serialize_graph, Graph,
};
pub use index::{
    edge_partition, edge_weight, index_exact, index_float, EdgeClassPartition, IndexKind,
};
pub use ops::{corona, join};
pub use radical::{normalize_radical, Radical, RadicalSum, Rational};
pub use sweep::{run_sweep, run_sweep_with, SweepConfig, SweepReport, VerificationRecord};
