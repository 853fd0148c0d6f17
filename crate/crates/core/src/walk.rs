//! Antidirected paths and cycles.

use serde::Serialize;
use thiserror::Error;

use crate::graph::OrientedGraph;
use crate::vertex_set::VertexSet;

/// Orientation of one step of a walk relative to the order of its vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// The arc goes from `vertices[i]` to `vertices[i + 1]`.
    Forward,
    /// The arc goes from `vertices[i + 1]` to `vertices[i]`.
    Backward,
}

impl Direction {
    #[inline]
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("walk has {vertices} vertices but {directions} directions (expected {expected})")]
    LengthMismatch { vertices: usize, directions: usize, expected: usize },
    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex {v} repeated at position {position}")]
    RepeatedVertex { v: usize, position: usize },
    #[error("closed walk has odd length {len}")]
    OddClosedLength { len: usize },
    #[error("closed walk of length {len} is too short to be a cycle")]
    ClosedTooShort { len: usize },
    #[error("step {step}: missing arc {tail} -> {head}")]
    MissingArc { step: usize, tail: usize, head: usize },
    #[error("steps {step} and {next} have the same direction")]
    AlternationBreak { step: usize, next: usize },
}

/// A sequence of distinct vertices with the direction of each step.
///
/// Open walks have `vertices.len() - 1` directions; closed walks carry one more
/// direction for the step from the last vertex back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AntidirectedWalk {
    pub vertices: Vec<usize>,
    pub directions: Vec<Direction>,
    pub closed: bool,
}

impl AntidirectedWalk {
    pub fn new(vertices: Vec<usize>, directions: Vec<Direction>, closed: bool) -> Self {
        AntidirectedWalk { vertices, directions, closed }
    }

    /// The empty open walk.
    pub fn empty() -> Self {
        AntidirectedWalk { vertices: Vec::new(), directions: Vec::new(), closed: false }
    }

    /// Builds a walk from a vertex order, reading each step's direction off `g`.
    /// Returns `None` when two consecutive vertices are not adjacent.
    pub fn from_vertices(g: &OrientedGraph, vertices: Vec<usize>, closed: bool) -> Option<Self> {
        let k = vertices.len();
        let steps = if closed { k } else { k.saturating_sub(1) };
        let mut directions = Vec::with_capacity(steps);
        for i in 0..steps {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            if g.has_arc(a, b) {
                directions.push(Direction::Forward);
            } else if g.has_arc(b, a) {
                directions.push(Direction::Backward);
            } else {
                return None;
            }
        }
        Some(AntidirectedWalk { vertices, directions, closed })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_ids(n, self.vertices.iter().copied())
    }

    /// Tail and head of step `i`.
    pub fn arc(&self, i: usize) -> (usize, usize) {
        let k = self.vertices.len();
        let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
        match self.directions[i] {
            Direction::Forward => (a, b),
            Direction::Backward => (b, a),
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.directions.len()).map(move |i| self.arc(i))
    }

    fn incident_steps(&self, position: usize) -> Vec<usize> {
        let k = self.vertices.len();
        let steps = self.directions.len();
        let mut out = Vec::with_capacity(2);
        if position < steps {
            out.push(position);
        }
        if position > 0 && position - 1 < steps {
            out.push(position - 1);
        } else if position == 0 && self.closed && steps == k && k > 0 {
            out.push(k - 1);
        }
        out
    }

    /// A vertex with no outgoing arc inside the walk.
    pub fn is_sink_at(&self, position: usize) -> bool {
        let v = self.vertices[position];
        self.incident_steps(position).into_iter().all(|s| self.arc(s).0 != v)
    }

    /// A vertex with no incoming arc inside the walk.
    pub fn is_source_at(&self, position: usize) -> bool {
        let v = self.vertices[position];
        self.incident_steps(position).into_iter().all(|s| self.arc(s).1 != v)
    }

    pub fn ends(&self) -> Option<(usize, usize)> {
        Some((*self.vertices.first()?, *self.vertices.last()?))
    }

    /// True for a closed walk through all `n` vertices.
    pub fn is_spanning_cycle(&self, n: usize) -> bool {
        self.closed && self.vertices.len() == n
    }
}

/// Checks every [`AntidirectedWalk`] invariant against `g`, reporting the
/// first violation found.
pub fn validate_antidirected(g: &OrientedGraph, walk: &AntidirectedWalk) -> Result<(), WalkError> {
    let k = walk.vertices.len();
    let expected = if walk.closed { k } else { k.saturating_sub(1) };
    if walk.directions.len() != expected {
        return Err(WalkError::LengthMismatch {
            vertices: k,
            directions: walk.directions.len(),
            expected,
        });
    }
    let n = g.n();
    let mut seen = VertexSet::empty(n);
    for (position, &v) in walk.vertices.iter().enumerate() {
        if v >= n {
            return Err(WalkError::VertexOutOfRange { v, n });
        }
        if seen.contains(v) {
            return Err(WalkError::RepeatedVertex { v, position });
        }
        seen.insert(v);
    }
    if walk.closed {
        if k % 2 == 1 {
            return Err(WalkError::OddClosedLength { len: k });
        }
        if k < 4 {
            return Err(WalkError::ClosedTooShort { len: k });
        }
    }
    for step in 0..walk.directions.len() {
        let (tail, head) = walk.arc(step);
        if !g.has_arc(tail, head) {
            return Err(WalkError::MissingArc { step, tail, head });
        }
    }
    let steps = walk.directions.len();
    let pairs = if walk.closed { steps } else { steps.saturating_sub(1) };
    for step in 0..pairs {
        let next = (step + 1) % steps;
        if walk.directions[step] == walk.directions[next] {
            return Err(WalkError::AlternationBreak { step, next });
        }
    }
    Ok(())
}
