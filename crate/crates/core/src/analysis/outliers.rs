use serde::Serialize;

use super::AnalysisError;
use crate::graph::OrientedGraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum OutlierSide {
    /// `E(X, Y)` is nearly complete; outliers miss many arcs.
    Dense,
    /// `E(X, Y)` is nearly empty; outliers have many arcs.
    Sparse,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutlierReport {
    pub side: OutlierSide,
    pub x_outliers: VertexSet,
    pub y_outliers: VertexSet,
    /// e(X, Y).
    pub arcs: usize,
    /// DENSE: `e(X,Y) ≥ |X||Y| − Kεn²`; SPARSE: `e(X,Y) ≤ Kεn²`.
    pub hypothesis: bool,
    /// Both outlier sets have at most `ε^{1/3}·n` vertices.
    pub conclusion: bool,
}

impl OutlierReport {
    pub fn implication_holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

/// Vertices of `x` (resp. `y`) whose out-degree into `y` (resp. in-degree
/// from `x`) is at least `√ε·n` away from the extreme for `side`.
pub fn degree_outlier_report(
    g: &OrientedGraph,
    x: &VertexSet,
    y: &VertexSet,
    epsilon: f64,
    side: OutlierSide,
    k: f64,
) -> Result<OutlierReport, AnalysisError> {
    if let Some(v) = x.intersection(y).first() {
        return Err(AnalysisError::Overlap { v });
    }
    let n = g.n() as f64;
    let cut = epsilon.sqrt() * n;
    let (xs, ys) = (x.len() as f64, y.len() as f64);
    let (x_outliers, y_outliers) = match side {
        OutlierSide::Dense => (
            VertexSet::from_ids(g.n(), x.iter().filter(|&v| g.out_degree_in(v, y) as f64 <= ys - cut)),
            VertexSet::from_ids(g.n(), y.iter().filter(|&v| g.in_degree_in(v, x) as f64 <= xs - cut)),
        ),
        OutlierSide::Sparse => (
            VertexSet::from_ids(g.n(), x.iter().filter(|&v| g.out_degree_in(v, y) as f64 >= cut)),
            VertexSet::from_ids(g.n(), y.iter().filter(|&v| g.in_degree_in(v, x) as f64 >= cut)),
        ),
    };
    let arcs = g.arcs_between(x, y);
    let slack = k * epsilon * n * n;
    let hypothesis = match side {
        OutlierSide::Dense => arcs as f64 >= xs * ys - slack,
        OutlierSide::Sparse => arcs as f64 <= slack,
    };
    let bound = epsilon.cbrt() * n;
    let conclusion = x_outliers.len() as f64 <= bound && y_outliers.len() as f64 <= bound;
    Ok(OutlierReport { side, x_outliers, y_outliers, arcs, hypothesis, conclusion })
}
