mod crosscheck;
mod sharpness;
mod sweep;

use std::time::Instant;

use adhc_core::solver::{find_adhc, Budget, SolveResult, SolverError, Verdict};
use adhc_core::walk::validate_antidirected;
use adhc_core::OrientedGraph;
use serde::Serialize;

pub use crosscheck::{run_crosscheck, run_crosscheck_exhaustive, CrosscheckRow};
pub use sharpness::{default_scales, run_sharpness, SharpnessRow};
pub use sweep::{run_sweep, SweepConfig, SweepRow};

/// Solver verdict as it appears in report rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RowVerdict {
    Found,
    None,
    /// The search budget ran out before a decision.
    Inconclusive,
}

impl From<Verdict> for RowVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Found => RowVerdict::Found,
            Verdict::None => RowVerdict::None,
        }
    }
}

pub(crate) struct Solved {
    pub verdict: RowVerdict,
    pub states: u64,
    pub witness_valid: bool,
    pub millis: u128,
}

/// Runs the exact solver, turning an exhausted budget into an inconclusive
/// verdict and re-validating any witness.
pub(crate) fn solve(g: &OrientedGraph, budget: Budget) -> Result<Solved, SolverError> {
    let started = Instant::now();
    match find_adhc(g, budget) {
        Ok(SolveResult { verdict, witness, stats }) => {
            let witness_valid = match &witness {
                Some(w) => validate_antidirected(g, w).is_ok() && w.is_spanning_cycle(g.n()),
                None => verdict == Verdict::None,
            };
            Ok(Solved { verdict: verdict.into(), states: stats.states, witness_valid, millis: started.elapsed().as_millis() })
        }
        Err(SolverError::BudgetExceeded { states }) => Ok(Solved {
            verdict: RowVerdict::Inconclusive,
            states,
            witness_valid: true,
            millis: started.elapsed().as_millis(),
        }),
        Err(e) => Err(e),
    }
}
