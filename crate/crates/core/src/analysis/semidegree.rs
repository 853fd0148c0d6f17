//! "Large σ₊₋ forces large minimum semidegree": if
//! `σ₊₋ ≥ (n + 3γn)/2` then `δ⁰ ≥ γn`, checked in integer arithmetic for
//! `γ = k/20`.

use serde::Serialize;

use crate::graph::{degree_profile, OrientedGraph, SigmaPm};

/// `k` values for `γ = k/20 ∈ {0.05, 0.10, …, 0.30}`.
pub fn semidegree_gamma_grid() -> [u32; 6] {
    [1, 2, 3, 4, 5, 6]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OreSemidegreeCheck {
    /// γ = k/20.
    pub k: u32,
    /// `40σ ≥ n(20 + 3k)`.
    pub hypothesis: bool,
    /// `20δ⁰ ≥ kn`.
    pub conclusion: bool,
}

impl OreSemidegreeCheck {
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

/// One check per `k` in `ks`. Graphs with fewer than two vertices have no
/// non-adjacent ordered pair (σ₊₋ is infinite) and are outside the
/// statement's scope, so they yield no checks.
pub fn ore_semidegree_holds(g: &OrientedGraph, ks: &[u32]) -> Vec<OreSemidegreeCheck> {
    let n = g.n() as u64;
    if n < 2 {
        return Vec::new();
    }
    let profile = degree_profile(g);
    let delta0 = profile.delta0 as u64;
    ks.iter()
        .map(|&k| {
            let hypothesis = match profile.sigma_pm {
                SigmaPm::Infinite => true,
                SigmaPm::Finite(s) => 40 * s as u64 >= n * (20 + 3 * k as u64),
            };
            OreSemidegreeCheck { k, hypothesis, conclusion: 20 * delta0 >= k as u64 * n }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::all_labeled_oriented;

    #[test]
    fn holds_on_all_small_graphs() {
        for n in 2..=4 {
            for g in all_labeled_oriented(n) {
                assert!(ore_semidegree_holds(&g, &semidegree_gamma_grid()).iter().all(|c| c.holds()));
            }
        }
    }

    #[test]
    fn regular_tournament_meets_hypothesis() {
        // σ₊₋ = 2·3 = 6 on 7 vertices: 240 ≥ 7·(20 + 3k) for k ≤ 4.
        let t = crate::generators::almost_regular_tournament(7).unwrap();
        let checks = ore_semidegree_holds(&t, &semidegree_gamma_grid());
        assert!(checks[..4].iter().all(|c| c.hypothesis && c.conclusion));
        assert!(!checks[4].hypothesis);
        assert!(ore_semidegree_holds(&OrientedGraph::empty(1).unwrap(), &[1]).is_empty());
    }
}
