use serde::Serialize;

use super::expander::{robust_out_neighborhood, ExpanderReport};
use super::AnalysisError;
use crate::graph::OrientedGraph;
use crate::partition::Partition4;

/// Result of turning an expansion violation into a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NiceDerivation {
    pub partition: Partition4,
    /// Whether arcs were reversed (and `A`, `C` swapped) to get `|A| ≤ |C|`.
    pub reversed: bool,
    /// The graph the partition refers to: `g`, or its reversal.
    #[serde(skip)]
    pub working_graph: OrientedGraph,
}

/// `A = RN⁺∩S`, `B = RN⁺\S`, `C = V\(RN⁺∪S)`, `D = S\RN⁺` for the witness
/// `S`. Every vertex outside `RN⁺` has fewer than `νn` in-neighbours in `S`,
/// so `e(A∪D, C∪D) ≤ νn²`; reversing all arcs and swapping `A`, `C` keeps
/// that count unchanged.
pub fn derive_nice_partition(
    g: &OrientedGraph,
    witness: &ExpanderReport,
    nu: f64,
) -> Result<NiceDerivation, AnalysisError> {
    if witness.verdict {
        return Err(AnalysisError::NotAViolation("report has a positive verdict".into()));
    }
    let s = witness.witness.ok_or_else(|| AnalysisError::NotAViolation("report carries no witness set".into()))?;
    if s.universe() != g.n() {
        return Err(AnalysisError::NotAViolation(format!(
            "witness universe {} differs from n = {}",
            s.universe(),
            g.n()
        )));
    }
    let n = g.n();
    let rn = robust_out_neighborhood(g, &s, nu);
    if (rn.len() as f64) >= s.len() as f64 + nu * n as f64 {
        return Err(AnalysisError::NotAViolation(format!(
            "|RN| = {} is not below |S| + nu*n = {}",
            rn.len(),
            s.len() as f64 + nu * n as f64
        )));
    }
    let a = rn.intersection(&s);
    let b = rn.difference(&s);
    let c = rn.union(&s).complement();
    let d = s.difference(&rn);
    let partition = Partition4::new(n, a, b, c, d)?;
    if a.len() > c.len() {
        Ok(NiceDerivation { partition: partition.swap_a_c(), reversed: true, working_graph: g.reversed() })
    } else {
        Ok(NiceDerivation { partition, reversed: false, working_graph: g.clone() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NiceReport {
    pub np1: bool,
    pub np2: bool,
    pub np3: bool,
    /// e(A∪D, C∪D).
    pub sparse_arcs: usize,
}

impl NiceReport {
    pub fn all(&self) -> bool {
        self.np1 && self.np2 && self.np3
    }
}

/// Size balance and near-emptiness of `E(A∪D, C∪D)`; `k` stands in for the
/// unspecified constant of every `O(εn)` bound.
pub fn check_nice_partition(g: &OrientedGraph, p: &Partition4, epsilon: f64, k: f64) -> NiceReport {
    let n = g.n() as f64;
    let slack = k * epsilon * n;
    let [a, b, c, d] = p.sizes().map(|x| x as f64);
    let sparse_arcs = g.arcs_between(&p.a.union(&p.d), &p.c.union(&p.d));
    NiceReport {
        np1: a <= c && (a + c - n / 2.0).abs() <= slack,
        np2: (b - n / 4.0).abs() <= slack && (d - n / 4.0).abs() <= slack,
        np3: sparse_arcs as f64 <= epsilon * epsilon * n * n,
        sparse_arcs,
    }
}
