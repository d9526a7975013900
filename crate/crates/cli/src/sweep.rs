//! Exhaustive verification over every valid input with `l <= max_l`.

use std::fmt::Write as _;
use std::io;

use rayon::prelude::*;

use schubert_ic::geometry::valid_inputs;
use schubert_ic::verify::{check_input, kernel_checks, CheckOutcome, Status, VerifyOptions};
use schubert_ic::{Regime, SchubertInput};

#[derive(Debug, Clone)]
pub struct SweepRow {
    /// `None` for the input-independent kernel checks.
    pub input: Option<SchubertInput>,
    pub outcome: CheckOutcome,
}

#[derive(Debug, Clone)]
pub struct Sweep {
    pub max_l: i64,
    pub inputs: usize,
    pub non_small: usize,
    /// Kernel rows first, then inputs in `(l, k, j, i)` order.
    pub rows: Vec<SweepRow>,
}

impl Sweep {
    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.outcome.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let all_small = self.inputs - self.non_small;
        let _ = writeln!(
            out,
            "inputs with l <= {}: {} ({} non-small, {} all-small)",
            self.max_l, self.inputs, self.non_small, all_small
        );
        if self.non_small == 0 {
            let _ = writeln!(out, "note: no non-small inputs exist with l <= {}", self.max_l);
        }
        let _ = writeln!(
            out,
            "checks: {} run, {} passed, {} skipped, {} failed",
            self.rows.len(),
            self.count(Status::Pass),
            self.count(Status::Skip),
            self.count(Status::Fail)
        );
        for row in self.rows.iter().filter(|r| r.outcome.status != Status::Pass) {
            let who = row.input.map_or_else(|| String::from("kernel"), |s| s.to_string());
            let _ = writeln!(
                out,
                "{} {who} {}: {}",
                row.outcome.status.as_str().to_uppercase(),
                row.outcome.name,
                row.outcome.detail
            );
        }
        out
    }

    pub fn write_csv<W: io::Write>(&self, w: W) -> csv::Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        wtr.write_record(["i", "j", "k", "l", "check", "status", "detail"])?;
        for row in &self.rows {
            let ijkl = row
                .input
                .map(|s| [s.i(), s.j(), s.k(), s.l()].map(|v| v.to_string()))
                .unwrap_or_default();
            wtr.write_record([
                ijkl[0].as_str(),
                &ijkl[1],
                &ijkl[2],
                &ijkl[3],
                row.outcome.name,
                row.outcome.status.as_str(),
                &row.outcome.detail,
            ])?;
        }
        wtr.flush()?;
        Ok(())
    }
}

/// Runs on the current rayon pool. Row order does not depend on scheduling.
pub fn run_sweep(max_l: i64, opts: &VerifyOptions) -> Sweep {
    let inputs = valid_inputs(max_l);
    let non_small = inputs.iter().filter(|s| s.regime() == Regime::NonSmall).count();
    let per_input: Vec<Vec<CheckOutcome>> = inputs.par_iter().map(|s| check_input(s, opts)).collect();

    let mut rows: Vec<SweepRow> = kernel_checks(opts)
        .into_iter()
        .map(|outcome| SweepRow { input: None, outcome })
        .collect();
    for (s, outcomes) in inputs.iter().zip(per_input) {
        rows.extend(outcomes.into_iter().map(|outcome| SweepRow {
            input: Some(*s),
            outcome,
        }));
    }
    Sweep {
        max_l,
        inputs: inputs.len(),
        non_small,
        rows,
    }
}
