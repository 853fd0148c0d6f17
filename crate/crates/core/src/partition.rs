//! Labelled four-part vertex partitions `(A, B, C, D)`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Part {
    A,
    B,
    C,
    D,
}

impl Part {
    pub const ALL: [Part; 4] = [Part::A, Part::B, Part::C, Part::D];

    pub fn letter(self) -> char {
        match self {
            Part::A => 'A',
            Part::B => 'B',
            Part::C => 'C',
            Part::D => 'D',
        }
    }

    pub fn from_letter(c: char) -> Option<Part> {
        match c.to_ascii_uppercase() {
            'A' => Some(Part::A),
            'B' => Some(Part::B),
            'C' => Some(Part::C),
            'D' => Some(Part::D),
            _ => None,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts {first} and {second} share vertex {v}")]
    Overlap { first: Part, second: Part, v: usize },
    #[error("vertex {v} is in no part")]
    Uncovered { v: usize },
    #[error("parts have universe {found}, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("invalid part label {label:?} at position {position}")]
    BadLabel { label: char, position: usize },
}

/// Pairwise disjoint sets covering `V(G)`; `a` or `c` may be empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Partition4 {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    pub d: VertexSet,
}

impl Partition4 {
    pub fn new(
        n: usize,
        a: VertexSet,
        b: VertexSet,
        c: VertexSet,
        d: VertexSet,
    ) -> Result<Self, PartitionError> {
        let p = Partition4 { a, b, c, d };
        p.validate(n)?;
        Ok(p)
    }

    /// Every vertex in one part.
    pub fn all_in(part: Part, n: usize) -> Self {
        let e = VertexSet::empty(n);
        let mut p = Partition4 { a: e, b: e, c: e, d: e };
        *p.part_mut(part) = VertexSet::full(n);
        p
    }

    pub fn from_labels(labels: &[Part]) -> Self {
        let n = labels.len();
        let mut p = Partition4::all_in(Part::A, n);
        p.a = VertexSet::empty(n);
        for (v, &part) in labels.iter().enumerate() {
            p.part_mut(part).insert(v);
        }
        p
    }

    /// Parses a string of `A`/`B`/`C`/`D` letters, one per vertex.
    pub fn from_letters(s: &str) -> Result<Self, PartitionError> {
        let labels = s
            .chars()
            .enumerate()
            .map(|(position, c)| Part::from_letter(c).ok_or(PartitionError::BadLabel { label: c, position }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Partition4::from_labels(&labels))
    }

    pub fn to_letters(&self) -> String {
        (0..self.n()).map(|v| self.part_of(v).map_or('?', Part::letter)).collect()
    }

    pub fn n(&self) -> usize {
        self.a.universe()
    }

    pub fn validate(&self, n: usize) -> Result<(), PartitionError> {
        for part in Part::ALL {
            let found = self.part(part).universe();
            if found != n {
                return Err(PartitionError::UniverseMismatch { expected: n, found });
            }
        }
        for (i, &x) in Part::ALL.iter().enumerate() {
            for &y in &Part::ALL[i + 1..] {
                if let Some(v) = self.part(x).intersection(&self.part(y)).first() {
                    return Err(PartitionError::Overlap { first: x, second: y, v });
                }
            }
        }
        let union = self.a.union(&self.b).union(&self.c).union(&self.d);
        if let Some(v) = union.complement().first() {
            return Err(PartitionError::Uncovered { v });
        }
        Ok(())
    }

    pub fn part(&self, part: Part) -> VertexSet {
        match part {
            Part::A => self.a,
            Part::B => self.b,
            Part::C => self.c,
            Part::D => self.d,
        }
    }

    pub fn part_mut(&mut self, part: Part) -> &mut VertexSet {
        match part {
            Part::A => &mut self.a,
            Part::B => &mut self.b,
            Part::C => &mut self.c,
            Part::D => &mut self.d,
        }
    }

    pub fn part_of(&self, v: usize) -> Option<Part> {
        Part::ALL.into_iter().find(|&p| self.part(p).contains(v))
    }

    /// Union of two parts.
    pub fn join(&self, x: Part, y: Part) -> VertexSet {
        self.part(x).union(&self.part(y))
    }

    /// Moves `v` into `part`, removing it from wherever it was.
    pub fn move_vertex(&mut self, v: usize, part: Part) {
        for p in Part::ALL {
            self.part_mut(p).remove(v);
        }
        self.part_mut(part).insert(v);
    }

    /// Relabels `A <-> C`; used together with arc reversal.
    pub fn swap_a_c(&self) -> Partition4 {
        Partition4 { a: self.c, b: self.b, c: self.a, d: self.d }
    }

    pub fn sizes(&self) -> [usize; 4] {
        [self.a.len(), self.b.len(), self.c.len(), self.d.len()]
    }
}
