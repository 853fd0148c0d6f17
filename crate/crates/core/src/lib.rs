//! Oriented graphs, antidirected walks, and the tools used to study
//! antidirected Hamilton cycles: degree statistics, extremal constructions,
//! an exact cycle/path solver with permutation oracles, and structural
//! analysis relative to four-part partitions.

pub mod analysis;
pub mod generators;
pub mod graph;
pub mod io;
pub mod partition;
pub mod solver;
pub mod vertex_set;
pub mod walk;

pub use graph::{degree_profile, sigma_plus_minus, DegreeProfile, GraphBuilder, GraphError, OrientedGraph, SigmaPm};
pub use partition::{Part, Partition4, PartitionError};
pub use solver::{find_adhc, find_adhp_between, Budget, SolveResult, SolverError, Verdict};
pub use vertex_set::{VertexSet, MAX_VERTICES};
pub use walk::{validate_antidirected, AntidirectedWalk, Direction, WalkError};
