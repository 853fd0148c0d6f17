//! Robust outexpansion.
//!
//! `RN⁺_ν(S)` is the set of vertices with at least `νn` in-neighbours in `S`;
//! a graph is a robust `(ν, τ)`-outexpander when every `S` with
//! `τn < |S| < (1 − τ)n` has `|RN⁺_ν(S)| ≥ |S| + νn`.

use rand::seq::index::sample;
use rand::Rng;
use serde::Serialize;

use super::AnalysisError;
use crate::generators::seeded_rng;
use crate::graph::OrientedGraph;
use crate::vertex_set::VertexSet;

/// Default limit on `n` for exhaustive subset enumeration.
pub const EXACT_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpanderParams {
    pub nu: f64,
    pub tau: f64,
}

impl ExpanderParams {
    /// Requires `0 < ν ≤ τ < 1`.
    pub fn new(nu: f64, tau: f64) -> Result<Self, AnalysisError> {
        if !(nu > 0.0 && nu <= tau && tau < 1.0) {
            return Err(AnalysisError::InvalidParameter(format!(
                "expander parameters need 0 < nu <= tau < 1, got nu = {nu}, tau = {tau}"
            )));
        }
        Ok(ExpanderParams { nu, tau })
    }

    /// Whether `|S| = size` lies strictly between `τn` and `(1 − τ)n`.
    pub fn size_in_range(&self, size: usize, n: usize) -> bool {
        let (k, n) = (size as f64, n as f64);
        k > self.tau * n && k < (1.0 - self.tau) * n
    }

    /// `|RN| < |S| + νn`.
    pub fn violates(&self, rn_size: usize, s_size: usize, n: usize) -> bool {
        (rn_size as f64) < s_size as f64 + self.nu * n as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpanderMode {
    /// Enumerate every subset; refuses graphs with more than `cap` vertices.
    Exact { cap: usize },
    /// Test `samples` random subsets drawn from `seed`.
    Sampled { samples: usize, seed: u64 },
}

impl ExpanderMode {
    pub fn exact() -> Self {
        ExpanderMode::Exact { cap: EXACT_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpanderReport {
    pub verdict: bool,
    /// A set `S` violating expansion, present iff `verdict` is false.
    pub witness: Option<VertexSet>,
    /// `RN⁺_ν(S)` for the witness.
    pub rn_plus: Option<VertexSet>,
    /// True for a sampled "no violation found", which proves nothing.
    pub inconclusive: bool,
    pub subsets_checked: u64,
}

/// Smallest integer `t` with `t ≥ ν·n` under the same `f64` comparison used
/// by [`robust_out_neighborhood`].
fn count_threshold(nu: f64, n: usize) -> usize {
    let target = nu * n as f64;
    if target <= 0.0 {
        return 0;
    }
    let mut t = target.ceil() as usize;
    while (t as f64) < target {
        t += 1;
    }
    while t > 0 && ((t - 1) as f64) >= target {
        t -= 1;
    }
    t
}

/// `{ v : d⁻(v, S) ≥ νn }`; `v` need not lie in `S`.
pub fn robust_out_neighborhood(g: &OrientedGraph, s: &VertexSet, nu: f64) -> VertexSet {
    let target = nu * g.n() as f64;
    VertexSet::from_ids(g.n(), (0..g.n()).filter(|&v| g.in_degree_in(v, s) as f64 >= target))
}

pub fn is_robust_outexpander(
    g: &OrientedGraph,
    params: ExpanderParams,
    mode: ExpanderMode,
) -> Result<ExpanderReport, AnalysisError> {
    match mode {
        ExpanderMode::Exact { cap } => exact(g, params, cap),
        ExpanderMode::Sampled { samples, seed } => Ok(sampled(g, params, samples, seed)),
    }
}

/// Gray-code walk over all subsets with incremental in-degree counters: each
/// step toggles one vertex and touches only its out-neighbours.
fn exact(g: &OrientedGraph, params: ExpanderParams, cap: usize) -> Result<ExpanderReport, AnalysisError> {
    let n = g.n();
    if n > cap {
        return Err(AnalysisError::ExactAboveCap { n, cap });
    }
    let size_ok: Vec<bool> = (0..=n).map(|k| params.size_in_range(k, n)).collect();
    let threshold = count_threshold(params.nu, n);
    let mut counts = vec![0usize; n];
    let mut rn_size = if threshold == 0 { n } else { 0 };
    let mut s_bits = 0u64;
    let mut checked = 0u64;
    let total: u64 = 1u64 << n;
    for step in 1..total {
        let u = step.trailing_zeros() as usize;
        let adding = (s_bits >> u) & 1 == 0;
        s_bits ^= 1u64 << u;
        for v in g.out_neighbors(u).iter() {
            if adding {
                counts[v] += 1;
                if counts[v] == threshold {
                    rn_size += 1;
                }
            } else {
                if counts[v] == threshold {
                    rn_size -= 1;
                }
                counts[v] -= 1;
            }
        }
        let k = s_bits.count_ones() as usize;
        if !size_ok[k] {
            continue;
        }
        checked += 1;
        if params.violates(rn_size, k, n) {
            let s = VertexSet::from_bits(s_bits, n);
            let rn = robust_out_neighborhood(g, &s, params.nu);
            debug_assert_eq!(rn.len(), rn_size);
            return Ok(ExpanderReport {
                verdict: false,
                witness: Some(s),
                rn_plus: Some(rn),
                inconclusive: false,
                subsets_checked: checked,
            });
        }
    }
    Ok(ExpanderReport { verdict: true, witness: None, rn_plus: None, inconclusive: false, subsets_checked: checked })
}

fn sampled(g: &OrientedGraph, params: ExpanderParams, samples: usize, seed: u64) -> ExpanderReport {
    let n = g.n();
    let sizes: Vec<usize> = (0..=n).filter(|&k| params.size_in_range(k, n)).collect();
    if sizes.is_empty() {
        return ExpanderReport { verdict: true, witness: None, rn_plus: None, inconclusive: false, subsets_checked: 0 };
    }
    let mut rng = seeded_rng(seed);
    for i in 0..samples {
        let k = sizes[rng.gen_range(0..sizes.len())];
        let s = VertexSet::from_ids(n, sample(&mut rng, n, k).into_iter());
        let rn = robust_out_neighborhood(g, &s, params.nu);
        if params.violates(rn.len(), k, n) {
            return ExpanderReport {
                verdict: false,
                witness: Some(s),
                rn_plus: Some(rn),
                inconclusive: false,
                subsets_checked: i as u64 + 1,
            };
        }
    }
    ExpanderReport { verdict: true, witness: None, rn_plus: None, inconclusive: true, subsets_checked: samples as u64 }
}
