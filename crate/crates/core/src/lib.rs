//! Exact enumeration of C-trees: connected loopless graphs, double edges
//! allowed, in which no two cycles share a node.
//!
//! The [`pipeline`] derives the counting series from cycle indices and the
//! multiset transform; the [`oracle`] counts the same objects by brute-force
//! enumeration of small multigraphs, so the two can be checked against each
//! other ([`verify`]).

pub mod cycle_index;
pub mod error;
pub mod oracle;
pub mod pipeline;
pub mod series;
pub mod verify;

pub use cycle_index::{z_cyclic, z_dihedral, z_s2, CycleIndexPoly, Monomial};
pub use error::{Error, Result};
pub use oracle::{Census, MultiGraph, OracleCounts};
pub use pipeline::{SeriesBundle, VariantFlag};
pub use series::PowerSeries;
pub use verify::VerificationReport;

pub use num_bigint::BigInt;
