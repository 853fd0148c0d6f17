//! Exact search for antidirected Hamilton cycles and for antidirected
//! Hamilton paths between fixed endpoints.
//!
//! The search is a depth-first walk over states `(visited, last, entered)`
//! where `entered` is the direction of the arc that reached `last`. Since
//! directions alternate, the next vertex must be an in-neighbour of `last`
//! after a forward step and an out-neighbour after a backward one. States
//! that failed once are remembered in a bit table of `2^(n-1) · n · 2` bits,
//! which turns the search into a memoised reachability computation; only the
//! branch that succeeds is kept on the stack, so the witness is read off the
//! stack rather than a parent table.
//!
//! With the start vertex fixed, `entered` is determined by the first step
//! direction and the number of visited vertices, so the same table serves
//! both initial phases without collisions.

use std::time::{Duration, Instant};

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::graph::OrientedGraph;
use crate::walk::{validate_antidirected, AntidirectedWalk, Direction};

/// Largest `n` accepted by the exact search (memo table ≈ `n · 2^n` bits).
pub const MAX_SOLVER_VERTICES: usize = 26;

/// Largest `n` accepted by the permutation oracles.
pub const MAX_ORACLE_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("search budget exhausted after {states} states")]
    BudgetExceeded { states: u64 },
    #[error("path endpoints must differ (got {v} twice)")]
    SameEndpoints { v: usize },
    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("n = {n} exceeds the exact solver limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("n = {n} exceeds the oracle limit of {max}")]
    OracleTooLarge { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Found,
    /// Exhaustive: no such cycle or path exists.
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SolveStats {
    /// State expansions (search) or candidate orders checked (oracle).
    pub states: u64,
    pub millis: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub verdict: Verdict,
    pub witness: Option<AntidirectedWalk>,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn found(&self) -> bool {
        self.verdict == Verdict::Found
    }

    fn none(states: u64, started: Instant) -> Self {
        SolveResult {
            verdict: Verdict::None,
            witness: None,
            stats: SolveStats { states, millis: started.elapsed().as_millis() },
        }
    }
}

/// Limits on a single search. Exhausting either raises
/// [`SolverError::BudgetExceeded`], never a `None` verdict.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_states: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn states(max_states: u64) -> Self {
        Budget { max_states: Some(max_states), max_time: None }
    }
}

#[derive(Clone, Copy)]
enum Target {
    Cycle,
    PathTo(usize),
}

struct Search<'g> {
    g: &'g OrientedGraph,
    n: usize,
    full: u64,
    start: usize,
    target: Target,
    dead: Vec<u64>,
    states: u64,
    budget: Budget,
    started: Instant,
    stack: Vec<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g OrientedGraph, start: usize, target: Target, budget: Budget, started: Instant) -> Self {
        let n = g.n();
        let slots = (1usize << (n - 1)) * n * 2;
        Search {
            g,
            n,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            start,
            target,
            dead: vec![0; slots.div_ceil(64)],
            states: 0,
            budget,
            started,
            stack: Vec::with_capacity(n),
        }
    }

    #[inline]
    fn slot(&self, mask: u64, last: usize, entered: Direction) -> usize {
        // Drop the start bit, which every visited set contains.
        let low = mask & ((1u64 << self.start) - 1);
        let high = (mask >> (self.start + 1)) << self.start;
        let compressed = (low | high) as usize;
        (compressed * self.n + last) * 2 + (entered == Direction::Backward) as usize
    }

    fn charge(&mut self) -> Result<(), SolverError> {
        self.states += 1;
        if let Some(max) = self.budget.max_states {
            if self.states > max {
                return Err(SolverError::BudgetExceeded { states: self.states });
            }
        }
        if let Some(max) = self.budget.max_time {
            if self.states % 4096 == 0 && self.started.elapsed() > max {
                return Err(SolverError::BudgetExceeded { states: self.states });
            }
        }
        Ok(())
    }

    fn complete(&self, last: usize, entered: Direction) -> bool {
        match self.target {
            Target::PathTo(end) => last == end,
            // The closing step runs last -> start and must flip direction.
            Target::Cycle => match entered.flip() {
                Direction::Forward => self.g.has_arc(last, self.start),
                Direction::Backward => self.g.has_arc(self.start, last),
            },
        }
    }

    fn dfs(&mut self, mask: u64, last: usize, entered: Direction) -> Result<bool, SolverError> {
        if mask == self.full {
            return Ok(self.complete(last, entered));
        }
        let slot = self.slot(mask, last, entered);
        if (self.dead[slot / 64] >> (slot % 64)) & 1 == 1 {
            return Ok(false);
        }
        self.charge()?;
        let mut candidates = match entered {
            Direction::Forward => self.g.in_bits(last),
            Direction::Backward => self.g.out_bits(last),
        } & !mask;
        if let Target::PathTo(end) = self.target {
            if mask | (1u64 << end) != self.full {
                candidates &= !(1u64 << end);
            }
        }
        while candidates != 0 {
            let next = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.stack.push(next);
            if self.dfs(mask | (1u64 << next), next, entered.flip())? {
                return Ok(true);
            }
            self.stack.pop();
        }
        self.dead[slot / 64] |= 1u64 << (slot % 64);
        Ok(false)
    }

    /// Tries every first step from `start` in the given phase.
    fn run_phase(&mut self, phase: Direction) -> Result<bool, SolverError> {
        let mut first = match phase {
            Direction::Forward => self.g.out_bits(self.start),
            Direction::Backward => self.g.in_bits(self.start),
        };
        if let Target::PathTo(end) = self.target {
            if self.n > 2 {
                first &= !(1u64 << end);
            }
        }
        while first != 0 {
            let v = first.trailing_zeros() as usize;
            first &= first - 1;
            self.stack.clear();
            self.stack.push(self.start);
            self.stack.push(v);
            if self.dfs((1u64 << self.start) | (1u64 << v), v, phase)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn check_size(n: usize) -> Result<(), SolverError> {
    if n > MAX_SOLVER_VERTICES {
        return Err(SolverError::TooLarge { n, max: MAX_SOLVER_VERTICES });
    }
    Ok(())
}

/// Every vertex of an antidirected cycle is a source or a sink of it, so it
/// needs two out-neighbours or two in-neighbours.
fn degree_obstruction(g: &OrientedGraph) -> bool {
    (0..g.n()).any(|v| g.out_degree(v) < 2 && g.in_degree(v) < 2)
}

/// Decides whether `g` has an antidirected Hamilton cycle.
///
/// Odd `n` and `n < 4` return `None` immediately with zero states. The start
/// vertex is fixed to 0 and both directions of its first arc are tried.
pub fn find_adhc(g: &OrientedGraph, budget: Budget) -> Result<SolveResult, SolverError> {
    let started = Instant::now();
    let n = g.n();
    if n < 4 || n % 2 == 1 || degree_obstruction(g) {
        return Ok(SolveResult::none(0, started));
    }
    check_size(n)?;
    let mut search = Search::new(g, 0, Target::Cycle, budget, started);
    for phase in [Direction::Forward, Direction::Backward] {
        if search.run_phase(phase)? {
            let walk = AntidirectedWalk::from_vertices(g, search.stack.clone(), true)
                .expect("search only follows arcs");
            validate_antidirected(g, &walk).expect("search produced an invalid cycle");
            return Ok(SolveResult {
                verdict: Verdict::Found,
                witness: Some(walk),
                stats: SolveStats { states: search.states, millis: started.elapsed().as_millis() },
            });
        }
    }
    Ok(SolveResult::none(search.states, started))
}

/// Decides whether `g` has an antidirected Hamilton path from `x` to `y`
/// whose first arc has direction `pattern` (forward means `x -> v₂`).
pub fn find_adhp_between(
    g: &OrientedGraph,
    x: usize,
    y: usize,
    pattern: Direction,
    budget: Budget,
) -> Result<SolveResult, SolverError> {
    let started = Instant::now();
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(SolverError::VertexOutOfRange { v, n });
        }
    }
    if x == y {
        return Err(SolverError::SameEndpoints { v: x });
    }
    check_size(n)?;
    let mut search = Search::new(g, x, Target::PathTo(y), budget, started);
    if search.run_phase(pattern)? {
        let walk = AntidirectedWalk::from_vertices(g, search.stack.clone(), false)
            .expect("search only follows arcs");
        validate_antidirected(g, &walk).expect("search produced an invalid path");
        return Ok(SolveResult {
            verdict: Verdict::Found,
            witness: Some(walk),
            stats: SolveStats { states: search.states, millis: started.elapsed().as_millis() },
        });
    }
    Ok(SolveResult::none(search.states, started))
}

/// Step `i` of an alternating sequence whose first step has direction `first`.
fn step_direction(first: Direction, i: usize) -> Direction {
    if i % 2 == 0 {
        first
    } else {
        first.flip()
    }
}

fn step_present(g: &OrientedGraph, a: usize, b: usize, dir: Direction) -> bool {
    match dir {
        Direction::Forward => g.has_arc(a, b),
        Direction::Backward => g.has_arc(b, a),
    }
}

/// Ground truth by brute force: every cyclic order starting at vertex 0,
/// both alternation phases.
pub fn adhc_oracle(g: &OrientedGraph) -> Result<SolveResult, SolverError> {
    let started = Instant::now();
    let n = g.n();
    if n > MAX_ORACLE_VERTICES {
        return Err(SolverError::OracleTooLarge { n, max: MAX_ORACLE_VERTICES });
    }
    if n < 4 || n % 2 == 1 {
        return Ok(SolveResult::none(0, started));
    }
    let mut checked = 0u64;
    for rest in (1..n).permutations(n - 1) {
        let order: Vec<usize> = std::iter::once(0).chain(rest).collect();
        for phase in [Direction::Forward, Direction::Backward] {
            checked += 1;
            let ok = (0..n).all(|i| step_present(g, order[i], order[(i + 1) % n], step_direction(phase, i)));
            if ok {
                let directions = (0..n).map(|i| step_direction(phase, i)).collect();
                return Ok(SolveResult {
                    verdict: Verdict::Found,
                    witness: Some(AntidirectedWalk::new(order, directions, true)),
                    stats: SolveStats { states: checked, millis: started.elapsed().as_millis() },
                });
            }
        }
    }
    Ok(SolveResult::none(checked, started))
}

/// Brute-force counterpart of [`find_adhp_between`].
pub fn adhp_oracle(
    g: &OrientedGraph,
    x: usize,
    y: usize,
    pattern: Direction,
) -> Result<SolveResult, SolverError> {
    let started = Instant::now();
    let n = g.n();
    if n > MAX_ORACLE_VERTICES {
        return Err(SolverError::OracleTooLarge { n, max: MAX_ORACLE_VERTICES });
    }
    for v in [x, y] {
        if v >= n {
            return Err(SolverError::VertexOutOfRange { v, n });
        }
    }
    if x == y {
        return Err(SolverError::SameEndpoints { v: x });
    }
    let middle: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
    let mut checked = 0u64;
    for perm in middle.iter().copied().permutations(middle.len()) {
        checked += 1;
        let order: Vec<usize> = std::iter::once(x).chain(perm).chain(std::iter::once(y)).collect();
        let ok = (0..n - 1).all(|i| step_present(g, order[i], order[i + 1], step_direction(pattern, i)));
        if ok {
            let directions = (0..n - 1).map(|i| step_direction(pattern, i)).collect();
            return Ok(SolveResult {
                verdict: Verdict::Found,
                witness: Some(AntidirectedWalk::new(order, directions, false)),
                stats: SolveStats { states: checked, millis: started.elapsed().as_millis() },
            });
        }
    }
    Ok(SolveResult::none(checked, started))
}
