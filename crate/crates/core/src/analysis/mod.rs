//! Structural analysis of oriented graphs relative to a four-part partition:
//! robust outexpansion, nice partitions, good/bad vertices, special arcs,
//! proper paths, the long `B`–`D` path, sampling and condition validators.

use thiserror::Error;

use crate::partition::PartitionError;
use crate::walk::WalkError;

mod conditions;
mod expander;
mod good_bad;
mod long_path;
mod nice;
mod outliers;
mod proper_path;
mod sampling;
mod semidegree;
mod special;

pub use crate::partition::{Part, Partition4};
pub use conditions::{check_cp_conditions, check_l_conditions, CpReport, LConstants, LReport};
pub use expander::{
    is_robust_outexpander, robust_out_neighborhood, ExpanderMode, ExpanderParams, ExpanderReport, EXACT_CAP,
};
pub use good_bad::{
    acceptable, classify_good_bad, reassign_by_acceptability, GoodBadLabels, Label, DEFAULT_ACCEPTABLE_FRACTION,
};
pub use long_path::{build_bd_path, min_degree_subgraph, BdPathOptions};
pub use nice::{check_nice_partition, derive_nice_partition, NiceDerivation, NiceReport};
pub use outliers::{degree_outlier_report, OutlierReport, OutlierSide};
pub use proper_path::{extend_to_proper_path, is_proper_path, ProperPath, MAX_AVOID};
pub use sampling::{balanced_random_subset, max_balance_deviation, BalancedSubset};
pub use semidegree::{ore_semidegree_holds, semidegree_gamma_grid, OreSemidegreeCheck};
pub use special::{find_special_arcs, find_two_disjoint_special_arcs, special_class, SpecialClass};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("exact expander check limited to n <= {cap}, got n = {n}")]
    ExactAboveCap { n: usize, cap: usize },
    #[error("supplied set is not a genuine expansion violation: {0}")]
    NotAViolation(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("labels cover {labels} vertices but the graph has {n}")]
    LabelMismatch { labels: usize, n: usize },
    #[error("bad vertex {v} matches no reassignment rule")]
    Unassignable { v: usize },
    #[error("arc {u} -> {v} is not special for the partition")]
    NotSpecial { u: usize, v: usize },
    #[error("no candidate at choice point {choice}")]
    ExtensionFailed { choice: String },
    #[error("no path of order {target} found (best order {best})")]
    TargetUnreachable { target: usize, best: usize },
    #[error("no balanced subset within {attempts} attempts (best deviation {best_deviation})")]
    BalanceUnreachable { best_deviation: f64, attempts: usize },
    #[error("emitted walk failed validation: {0}")]
    InvalidOutput(#[from] WalkError),
    #[error("sets overlap at vertex {v}")]
    Overlap { v: usize },
}
