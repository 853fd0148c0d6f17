//! Experiment orchestration for the antidirected Hamilton cycle lab:
//! sharpness verification, solver/oracle cross-checks, degree sweeps,
//! single-graph analyses, and deterministic JSON Lines / CSV reports.

pub mod analyze;
pub mod experiments;
pub mod params;
pub mod pool;
pub mod report;

pub use experiments::{
    default_scales, run_crosscheck, run_crosscheck_exhaustive, run_sharpness, run_sweep, CrosscheckRow, RowVerdict,
    SharpnessRow, SweepConfig, SweepRow,
};
pub use report::{ExperimentConfig, ExperimentKind, Outcome, Report, Row, Summary, SCHEMA_VERSION};
