use adhc_core::generators::{all_labeled_oriented, derive_seed, random_oriented, RandomModel};
use adhc_core::solver::{adhc_oracle, Budget, MAX_ORACLE_VERTICES};
use adhc_core::walk::validate_antidirected;
use adhc_core::OrientedGraph;
use rayon::prelude::*;
use serde::Serialize;

use super::{solve, RowVerdict};
use crate::pool::current_threads;
use crate::report::{ExperimentConfig, ExperimentKind, Outcome, Report, Row};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrosscheckRow {
    pub index: usize,
    pub n: usize,
    /// Arc probability, for sampled instances.
    pub p: Option<f64>,
    /// Instance seed, for sampled instances.
    pub seed: Option<u64>,
    pub arcs: usize,
    pub solver: RowVerdict,
    pub oracle: RowVerdict,
    pub witness_valid: bool,
    pub states: u64,
    pub outcome: Outcome,
}

impl Row for CrosscheckRow {
    fn outcome(&self) -> Outcome {
        self.outcome
    }
}

fn compare(index: usize, g: &OrientedGraph, p: Option<f64>, seed: Option<u64>) -> anyhow::Result<(CrosscheckRow, u128)> {
    let solved = solve(g, Budget::unlimited())?;
    let oracle = adhc_oracle(g)?;
    let oracle_valid = oracle.witness.as_ref().map_or(true, |w| validate_antidirected(g, w).is_ok());
    let oracle_verdict = RowVerdict::from(oracle.verdict);
    let witness_valid = solved.witness_valid && oracle_valid;
    let outcome = if solved.verdict == oracle_verdict && witness_valid { Outcome::Pass } else { Outcome::Fail };
    Ok((
        CrosscheckRow {
            index,
            n: g.n(),
            p,
            seed,
            arcs: g.arc_count(),
            solver: solved.verdict,
            oracle: oracle_verdict,
            witness_valid,
            states: solved.states,
            outcome,
        },
        solved.millis,
    ))
}

fn finish(config: ExperimentConfig, results: Vec<anyhow::Result<(CrosscheckRow, u128)>>) -> anyhow::Result<Report<CrosscheckRow>> {
    let mut rows = Vec::with_capacity(results.len());
    let mut millis = Vec::with_capacity(results.len());
    for r in results {
        let (row, ms) = r?;
        rows.push(row);
        millis.push(ms);
    }
    Ok(Report { config, rows, millis, threads: current_threads() })
}

/// Solver against permutation oracle on `count` random graphs; instance `i`
/// uses `p_grid[i mod |p_grid|]` and seed `derive_seed(seed, i)`.
pub fn run_crosscheck(n: usize, count: usize, p_grid: &[f64], seed: u64) -> anyhow::Result<Report<CrosscheckRow>> {
    anyhow::ensure!(n <= MAX_ORACLE_VERTICES, "oracle limited to n <= {MAX_ORACLE_VERTICES}");
    anyhow::ensure!(!p_grid.is_empty(), "p grid must not be empty");
    let config = ExperimentConfig::new(ExperimentKind::Crosscheck)
        .with("mode", "sampled")
        .with("n", n)
        .with("count", count)
        .with("p_grid", p_grid)
        .with("seed", seed);
    let results = (0..count)
        .into_par_iter()
        .map(|i| {
            let model = RandomModel { n, arc_probability: p_grid[i % p_grid.len()], seed: derive_seed(seed, i as u64) };
            let g = random_oriented(&model)?;
            compare(i, &g, Some(model.arc_probability), Some(model.seed))
        })
        .collect();
    finish(config, results)
}

/// Solver against oracle on every labelled oriented graph on `n ≤ 5`
/// vertices, in base-3 enumeration order.
pub fn run_crosscheck_exhaustive(n: usize) -> anyhow::Result<Report<CrosscheckRow>> {
    anyhow::ensure!(n <= 5, "exhaustive cross-check limited to n <= 5");
    let config = ExperimentConfig::new(ExperimentKind::Crosscheck).with("mode", "exhaustive").with("n", n);
    let graphs: Vec<OrientedGraph> = all_labeled_oriented(n).collect();
    let results = graphs.par_iter().enumerate().map(|(i, g)| compare(i, g, None, None)).collect();
    finish(config, results)
}
