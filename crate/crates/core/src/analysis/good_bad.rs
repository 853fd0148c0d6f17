use serde::Serialize;

use super::AnalysisError;
use crate::graph::OrientedGraph;
use crate::partition::{Part, Partition4};
use crate::vertex_set::VertexSet;

/// Default fraction of `n` required by [`acceptable`].
pub const DEFAULT_ACCEPTABLE_FRACTION: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Label {
    Good,
    Bad,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoodBadLabels {
    pub delta: f64,
    pub labels: Vec<Label>,
}

impl GoodBadLabels {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_good(&self, v: usize) -> bool {
        self.labels[v] == Label::Good
    }

    pub fn good(&self) -> VertexSet {
        VertexSet::from_ids(self.n(), (0..self.n()).filter(|&v| self.is_good(v)))
    }

    pub fn bad(&self) -> VertexSet {
        self.good().complement()
    }
}

/// Per-part degree lower bounds; a vertex is good when every bound for its
/// part holds (equality counts as good).
fn is_good(g: &OrientedGraph, p: &Partition4, v: usize, slack: f64) -> bool {
    let size = |x: &VertexSet| x.len() as f64;
    let out = |x: &VertexSet| g.out_degree_in(v, x) as f64;
    let inn = |x: &VertexSet| g.in_degree_in(v, x) as f64;
    let Partition4 { a, b, c, d } = p;
    match p.part_of(v).expect("partition covers every vertex") {
        Part::A => {
            out(a) >= size(a) / 2.0 - slack
                && inn(a) >= size(a) / 2.0 - slack
                && out(b) >= size(b) - slack
                && inn(d) >= size(d) - slack
        }
        Part::B => out(c) >= size(c) - slack && inn(a) >= size(a) - slack,
        Part::C => {
            out(c) >= size(c) / 2.0 - slack
                && inn(c) >= size(c) / 2.0 - slack
                && out(d) >= size(d) - slack
                && inn(b) >= size(b) - slack
        }
        Part::D => {
            out(b) >= size(c) / 2.0 - slack
                && inn(b) >= size(a) / 2.0 - slack
                && out(a) >= size(a) - slack
                && inn(c) >= size(c) - slack
        }
    }
}

pub fn classify_good_bad(g: &OrientedGraph, p: &Partition4, delta: f64) -> GoodBadLabels {
    let slack = delta * g.n() as f64;
    let labels = (0..g.n()).map(|v| if is_good(g, p, v, slack) { Label::Good } else { Label::Bad }).collect();
    GoodBadLabels { delta, labels }
}

/// `d⁻(v, U₁) ≥ fraction·n` and `d⁺(v, U₂) ≥ fraction·n`.
pub fn acceptable(g: &OrientedGraph, v: usize, u1: &VertexSet, u2: &VertexSet, fraction: f64) -> bool {
    let bound = fraction * g.n() as f64;
    g.in_degree_in(v, u1) as f64 >= bound && g.out_degree_in(v, u2) as f64 >= bound
}

/// Moves every bad vertex to the first part whose acceptability rule it
/// meets, in the order `A, B, C, D`; the rules are evaluated against `p` as
/// given, so the result does not depend on the order vertices are visited.
pub fn reassign_by_acceptability(
    g: &OrientedGraph,
    p: &Partition4,
    labels: &GoodBadLabels,
    fraction: f64,
) -> Result<Partition4, AnalysisError> {
    p.validate(g.n())?;
    if labels.n() != g.n() {
        return Err(AnalysisError::LabelMismatch { labels: labels.n(), n: g.n() });
    }
    let rules = [
        (Part::A, p.join(Part::A, Part::D), p.join(Part::A, Part::B)),
        (Part::B, p.join(Part::A, Part::D), p.join(Part::C, Part::D)),
        (Part::C, p.join(Part::B, Part::C), p.join(Part::C, Part::D)),
        (Part::D, p.join(Part::B, Part::C), p.join(Part::A, Part::B)),
    ];
    let mut out = *p;
    for v in labels.bad().iter() {
        let target = rules
            .iter()
            .find(|(_, u1, u2)| acceptable(g, v, u1, u2, fraction))
            .map(|&(part, _, _)| part)
            .ok_or(AnalysisError::Unassignable { v })?;
        out.move_vertex(v, target);
    }
    out.validate(g.n())?;
    Ok(out)
}
