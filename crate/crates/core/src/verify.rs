//! Side-by-side comparison of series coefficients with oracle counts.

use std::fmt::Write;

use num_bigint::BigInt;

use crate::error::Result;
use crate::oracle::{check_limit, Census, OracleCounts};
use crate::pipeline::{SeriesBundle, VariantFlag};

/// Counting schemes compared by [`VerificationReport`], in table order.
pub const SEQUENCES: [&str; 6] = [
    "c",
    "p",
    "node-rooted",
    "skeleton-rooted",
    "bridge-unoriented",
    "bridge-oriented",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRow {
    pub sequence: &'static str,
    pub n: usize,
    pub series: BigInt,
    pub oracle: u64,
}

impl VerificationRow {
    pub fn passed(&self) -> bool {
        self.series == BigInt::from(self.oracle)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub variant: VariantFlag,
    pub n_max: usize,
    pub rows: Vec<VerificationRow>,
}

fn oracle_value(counts: &OracleCounts, sequence: &str) -> u64 {
    match sequence {
        "c" => counts.ctrees,
        "p" => counts.planted,
        "node-rooted" => counts.node_rooted,
        "skeleton-rooted" => counts.skeleton_rooted,
        "bridge-unoriented" => counts.bridge_unoriented,
        "bridge-oriented" => counts.bridge_oriented,
        other => unreachable!("unknown sequence {other}"),
    }
}

impl VerificationReport {
    /// Compares `bundle` (order at least the largest census size) against
    /// oracle counts, one census per `n = 1, 2, ..`.
    pub fn build(bundle: &SeriesBundle, counts: &[OracleCounts]) -> Result<Self> {
        let (unoriented, oriented) = bundle.bridge_rooted()?;
        let mut rows = Vec::new();
        for sequence in SEQUENCES {
            let series = match sequence {
                "c" => &bundle.ctree,
                "p" => &bundle.planted,
                "node-rooted" => &bundle.decapitated,
                "skeleton-rooted" => &bundle.skeleton_rooted,
                "bridge-unoriented" => &unoriented,
                _ => &oriented,
            };
            for (k, c) in counts.iter().enumerate() {
                rows.push(VerificationRow {
                    sequence,
                    n: k + 1,
                    series: series.coeff(k + 1).clone(),
                    oracle: oracle_value(c, sequence),
                });
            }
        }
        Ok(Self {
            variant: bundle.variant,
            n_max: counts.len(),
            rows,
        })
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(VerificationRow::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRow> {
        self.rows.iter().filter(|r| !r.passed())
    }

    /// Plain-text table, one block per sequence.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "variant: {}, n = 1..{}", self.variant, self.n_max).unwrap();
        for sequence in SEQUENCES {
            writeln!(out).unwrap();
            writeln!(out, "{sequence}").unwrap();
            writeln!(
                out,
                "{:>3}  {:>12}  {:>12}  status",
                "n", "series", "oracle"
            )
            .unwrap();
            for row in self.rows.iter().filter(|r| r.sequence == sequence) {
                let status = if row.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{:>3}  {:>12}  {:>12}  {status}",
                    row.n, row.series, row.oracle
                )
                .unwrap();
            }
        }
        let failed = self.failures().count();
        writeln!(out).unwrap();
        if failed == 0 {
            writeln!(out, "all {} checks PASS", self.rows.len()).unwrap();
        } else {
            writeln!(out, "{failed} of {} checks FAIL", self.rows.len()).unwrap();
        }
        out
    }
}

/// Oracle counts for `n = 1..=n_max`.
pub fn oracle_counts(n_max: usize, variant: VariantFlag) -> Result<Vec<OracleCounts>> {
    check_limit(n_max, variant)?;
    (1..=n_max)
        .map(|n| Ok(Census::enumerate(n, variant)?.counts()))
        .collect()
}

/// Runs the pipeline and the oracle up to `n_max` and compares them. The
/// oracle limit is checked before any work is done.
pub fn verify(n_max: usize, variant: VariantFlag) -> Result<VerificationReport> {
    check_limit(n_max, variant)?;
    let bundle = SeriesBundle::compute(n_max, variant)?;
    VerificationReport::build(&bundle, &oracle_counts(n_max, variant)?)
}
