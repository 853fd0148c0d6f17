use rand::seq::index::sample;
use serde::Serialize;

use super::conditions::max_split_deviation;
use super::AnalysisError;
use crate::generators::seeded_rng;
use crate::graph::OrientedGraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BalancedSubset {
    pub subset: VertexSet,
    pub max_deviation: f64,
    pub attempts: usize,
}

/// Largest `|d±(v,T) − K·d±(v,S)|` or `|d±(v,S\T) − (1−K)·d±(v,S)|` with
/// `K = |T|/|S|`.
pub fn max_balance_deviation(g: &OrientedGraph, s: &VertexSet, t: &VertexSet) -> f64 {
    max_split_deviation(g, s, &[*t, s.difference(t)])
}

/// Draws uniform `m`-subsets of `s` until every vertex's in- and
/// out-degrees into `T` and `S \ T` are within `εn` of their proportional
/// shares, giving up after `max_retries` draws.
pub fn balanced_random_subset(
    g: &OrientedGraph,
    s: &VertexSet,
    m: usize,
    epsilon: f64,
    seed: u64,
    max_retries: usize,
) -> Result<BalancedSubset, AnalysisError> {
    if m > s.len() {
        return Err(AnalysisError::InvalidParameter(format!("subset size {m} exceeds |S| = {}", s.len())));
    }
    let bound = epsilon * g.n() as f64;
    let ids = s.to_vec();
    let mut rng = seeded_rng(seed);
    let mut best = f64::INFINITY;
    for attempt in 1..=max_retries.max(1) {
        let t = VertexSet::from_ids(g.n(), sample(&mut rng, ids.len(), m).into_iter().map(|i| ids[i]));
        let dev = max_balance_deviation(g, s, &t);
        if dev <= bound {
            return Ok(BalancedSubset { subset: t, max_deviation: dev, attempts: attempt });
        }
        best = best.min(dev);
    }
    Err(AnalysisError::BalanceUnreachable { best_deviation: best, attempts: max_retries.max(1) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate_extremal, ExtremalSpec, Family};

    #[test]
    fn trivial_sizes() {
        let e = generate_extremal(ExtremalSpec::new(Family::A, 1).unwrap()).unwrap();
        let c = e.partition.c;
        let all = balanced_random_subset(&e.graph, &c, c.len(), 0.0, 1, 1).unwrap();
        assert_eq!((all.subset, all.max_deviation, all.attempts), (c, 0.0, 1));
        let none = balanced_random_subset(&e.graph, &c, 0, 0.0, 1, 1).unwrap();
        assert!(none.subset.is_empty());
        assert!(balanced_random_subset(&e.graph, &c, 4, 0.3, 1, 1).is_err());
    }

    #[test]
    fn half_of_c_in_family_a() {
        let e = generate_extremal(ExtremalSpec::new(Family::A, 1).unwrap()).unwrap();
        let c = e.partition.c;
        let r = balanced_random_subset(&e.graph, &c, c.len() / 2, 0.3, 7, 100).unwrap();
        assert_eq!(r.subset.len(), 1);
        assert!(r.subset.is_subset(&c));
        assert!(r.max_deviation <= 0.3 * 14.0);
        assert_eq!(r.max_deviation, max_balance_deviation(&e.graph, &c, &r.subset));
    }

    #[test]
    fn unreachable_reports_best() {
        let t = crate::generators::almost_regular_tournament(9).unwrap();
        match balanced_random_subset(&t, &t.vertices(), 4, 0.0, 3, 5) {
            Err(AnalysisError::BalanceUnreachable { best_deviation, attempts: 5 }) => assert!(best_deviation > 0.0),
            other => panic!("unexpected {other:?}"),
        }
    }
}
