use adhc_core::generators::{generate_extremal, sharp_threshold_minus_one, ExtremalSpec, Family};
use adhc_core::graph::{sigma_plus_minus, SigmaPm};
use adhc_core::solver::Budget;
use rayon::prelude::*;
use serde::Serialize;

use super::{solve, RowVerdict};
use crate::pool::current_threads;
use crate::report::{ExperimentConfig, ExperimentKind, Outcome, Report, Row};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessRow {
    pub family: Family,
    pub s: usize,
    pub n: usize,
    pub sigma_pm_expected: usize,
    pub sigma_pm_actual: SigmaPm,
    /// ⌈(3n+2)/4⌉ − 1.
    pub threshold: usize,
    pub degenerate: bool,
    pub adhc_verdict: RowVerdict,
    pub states: u64,
    pub outcome: Outcome,
}

impl Row for SharpnessRow {
    fn outcome(&self) -> Outcome {
        self.outcome
    }
}

/// Family C at `s = 1..=4`, family B at `s = 2..=5`, family A at `s = 1`.
pub fn default_scales() -> Vec<ExtremalSpec> {
    let mk = |f, s| ExtremalSpec::new(f, s).expect("default scales are valid");
    let mut v: Vec<_> = (1..=4).map(|s| mk(Family::C, s)).collect();
    v.extend((2..=5).map(|s| mk(Family::B, s)));
    v.push(mk(Family::A, 1));
    v
}

/// A row passes when measured σ₊₋, the designed value and the threshold all
/// coincide and the solver proves there is no antidirected Hamilton cycle.
pub fn run_sharpness(specs: &[ExtremalSpec], budget: Budget) -> anyhow::Result<Report<SharpnessRow>> {
    let config = ExperimentConfig::new(ExperimentKind::Sharpness)
        .with("instances", specs.iter().map(|s| format!("{}{}", s.family, s.s)).collect::<Vec<_>>())
        .with("budget_states", budget.max_states);
    let results: Vec<anyhow::Result<(SharpnessRow, u128)>> = specs
        .par_iter()
        .map(|&spec| {
            let e = generate_extremal(spec)?;
            let n = spec.n();
            let sigma = sigma_plus_minus(&e.graph);
            let threshold = sharp_threshold_minus_one(n);
            let solved = solve(&e.graph, budget)?;
            let sigma_ok = sigma == SigmaPm::Finite(spec.expected_sigma()) && spec.expected_sigma() == threshold;
            let outcome = match solved.verdict {
                RowVerdict::Inconclusive => Outcome::Inconclusive,
                RowVerdict::None if sigma_ok => Outcome::Pass,
                _ => Outcome::Fail,
            };
            let outcome = if !sigma_ok { Outcome::Fail } else { outcome };
            Ok((
                SharpnessRow {
                    family: spec.family,
                    s: spec.s,
                    n,
                    sigma_pm_expected: spec.expected_sigma(),
                    sigma_pm_actual: sigma,
                    threshold,
                    degenerate: spec.is_degenerate(),
                    adhc_verdict: solved.verdict,
                    states: solved.states,
                    outcome,
                },
                solved.millis,
            ))
        })
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    let mut millis = Vec::with_capacity(results.len());
    for r in results {
        let (row, ms) = r?;
        rows.push(row);
        millis.push(ms);
    }
    Ok(Report { config, rows, millis, threads: current_threads() })
}
