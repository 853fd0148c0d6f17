//! Deterministic constructions: almost-regular tournaments, the three
//! sharpness families, seeded random oriented graphs, and labelled
//! enumeration of all oriented graphs on a few vertices.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphBuilder, GraphError, OrientedGraph};
use crate::partition::Partition4;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Identifier recorded in reports for the generator behind every seeded draw.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng(rand_chacha 0.3, seed_from_u64; substreams via set_stream)";

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent per-instance seed: first word of stream `index` of the
/// ChaCha8 generator seeded with `base`. Random access, so corpora can be
/// regenerated one instance at a time.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    rng.set_stream(index);
    rng.next_u64()
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("family {family} requires s >= {min}, got {s}")]
    InvalidScale { family: Family, s: usize, min: usize },
    #[error("tournament order must be positive")]
    ZeroOrder,
    #[error("bipartition sides overlap")]
    NotDisjoint,
    #[error("bipartition sides have sizes {b} and {d}; they must be equal and even")]
    Unbalanced { b: usize, d: usize },
    #[error("arc probability {p} outside [0, 1]")]
    BadProbability { p: f64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Rotational tournament on `m` vertices with in- and out-degrees differing by at most one.
///
/// Odd `m`: `i -> i + j (mod m)` for `j = 1..=(m-1)/2`, so every vertex has
/// out- and in-degree `(m-1)/2`. Even `m`: the same rotation for
/// `j = 1..m/2`, plus `i -> i + m/2` for `i < m/2`.
pub fn almost_regular_tournament(m: usize) -> Result<OrientedGraph, GenError> {
    if m == 0 {
        return Err(GenError::ZeroOrder);
    }
    Ok(OrientedGraph::from_arcs(m, rotational_arcs(m))?)
}

fn rotational_arcs(m: usize) -> Vec<(usize, usize)> {
    let mut arcs = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    let half = (m - 1) / 2;
    for i in 0..m {
        for j in 1..=half {
            arcs.push((i, (i + j) % m));
        }
    }
    if m % 2 == 0 {
        for i in 0..m / 2 {
            arcs.push((i, i + m / 2));
        }
    }
    arcs
}

/// A random almost-regular tournament with the same degree sequence as the
/// rotational one: random relabelling followed by reversals of directed
/// triangles, which leave every in- and out-degree unchanged.
pub fn random_almost_regular_tournament<R: Rng + ?Sized>(
    m: usize,
    rng: &mut R,
) -> Result<OrientedGraph, GenError> {
    if m == 0 {
        return Err(GenError::ZeroOrder);
    }
    let mut perm: Vec<usize> = (0..m).collect();
    perm.shuffle(rng);
    let mut adj = vec![vec![false; m]; m];
    for (u, v) in rotational_arcs(m) {
        adj[perm[u]][perm[v]] = true;
    }
    if m >= 3 {
        for _ in 0..4 * m * m {
            let (x, y, z) = (rng.gen_range(0..m), rng.gen_range(0..m), rng.gen_range(0..m));
            if x == y || y == z || x == z {
                continue;
            }
            if adj[x][y] && adj[y][z] && adj[z][x] {
                adj[x][y] = false;
                adj[y][z] = false;
                adj[z][x] = false;
                adj[y][x] = true;
                adj[z][y] = true;
                adj[x][z] = true;
            }
        }
    }
    let arcs = (0..m).flat_map(|u| (0..m).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]);
    Ok(OrientedGraph::from_arcs(m, arcs.collect::<Vec<_>>())?)
}

/// One arc per cross pair of `b × d`, oriented as a checkerboard:
/// `b_i -> d_j` iff `i + j` is even (ids taken in ascending order).
pub fn almost_regular_bipartite_tournament(
    b: &VertexSet,
    d: &VertexSet,
) -> Result<Vec<(usize, usize)>, GenError> {
    if !b.is_disjoint(d) {
        return Err(GenError::NotDisjoint);
    }
    if b.len() != d.len() || b.len() % 2 == 1 {
        return Err(GenError::Unbalanced { b: b.len(), d: d.len() });
    }
    let mut arcs = Vec::with_capacity(b.len() * d.len());
    for (i, bv) in b.iter().enumerate() {
        for (j, dv) in d.iter().enumerate() {
            arcs.push(if (i + j) % 2 == 0 { (bv, dv) } else { (dv, bv) });
        }
    }
    Ok(arcs)
}

/// The three sharpness families, one per panel of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// `n = 8s + 6`: cyclic `A -> B -> C -> D -> A`, `A`, `C` tournaments,
    /// `B`–`D` a bipartite tournament.
    A,
    /// `n = 4s`: a single `A` vertex, `D -> B` complete.
    B,
    /// `n = 4s + 2`: `A` empty, `B -> C -> D -> B`.
    C,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::A, Family::B, Family::C];

    pub fn min_scale(self) -> usize {
        1
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'a',
            Family::B => 'b',
            Family::C => 'c',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Family::A),
            "b" => Ok(Family::B),
            "c" => Ok(Family::C),
            other => Err(format!("unknown family {other:?} (expected a, b or c)")),
        }
    }
}

/// A family together with its scale parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExtremalSpec {
    pub family: Family,
    pub s: usize,
}

impl ExtremalSpec {
    pub fn new(family: Family, s: usize) -> Result<Self, GenError> {
        let spec = ExtremalSpec { family, s };
        if s < family.min_scale() {
            return Err(GenError::InvalidScale { family, s, min: family.min_scale() });
        }
        if spec.n() > MAX_VERTICES {
            return Err(GenError::Graph(GraphError::TooManyVertices { n: spec.n(), max: MAX_VERTICES }));
        }
        Ok(spec)
    }

    pub fn n(&self) -> usize {
        let s = self.s;
        match self.family {
            Family::A => 8 * s + 6,
            Family::B => 4 * s,
            Family::C => 4 * s + 2,
        }
    }

    /// `[|A|, |B|, |C|, |D|]`.
    pub fn part_sizes(&self) -> [usize; 4] {
        let s = self.s;
        match self.family {
            Family::A => [2 * s + 1, 2 * s + 2, 2 * s + 1, 2 * s + 2],
            Family::B => [1, s, 2 * s - 1, s],
            Family::C => [0, s + 1, 2 * s, s + 1],
        }
    }

    /// σ₊₋ the construction is designed to reach.
    pub fn expected_sigma(&self) -> usize {
        let s = self.s;
        match self.family {
            Family::A => 6 * s + 4,
            Family::B => 3 * s,
            Family::C => 3 * s + 1,
        }
    }

    /// Family B with `s = 1` has a one-vertex `C`, so the `A` vertex cannot
    /// have both a `C` in-neighbour and a `C` out-neighbour.
    pub fn is_degenerate(&self) -> bool {
        self.family == Family::B && self.s < 2
    }
}

/// ⌈(3n + 2)/4⌉ − 1, one below the degree threshold for even `n`.
pub fn sharp_threshold_minus_one(n: usize) -> usize {
    (3 * n + 2).div_ceil(4) - 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalGraph {
    pub spec: ExtremalSpec,
    pub graph: OrientedGraph,
    pub partition: Partition4,
}

/// Canonical member of a family (rotational tournaments inside `A` and `C`).
pub fn generate_extremal(spec: ExtremalSpec) -> Result<ExtremalGraph, GenError> {
    build_extremal(spec, |m| almost_regular_tournament(m))
}

/// A member of the family whose internal tournaments are random
/// almost-regular tournaments drawn from `seed`.
pub fn generate_extremal_variant(spec: ExtremalSpec, seed: u64) -> Result<ExtremalGraph, GenError> {
    let mut rng = seeded_rng(seed);
    build_extremal(spec, |m| random_almost_regular_tournament(m, &mut rng))
}

fn build_extremal<F>(spec: ExtremalSpec, mut tournament: F) -> Result<ExtremalGraph, GenError>
where
    F: FnMut(usize) -> Result<OrientedGraph, GenError>,
{
    let spec = ExtremalSpec::new(spec.family, spec.s)?;
    let n = spec.n();
    let [na, nb, nc, _nd] = spec.part_sizes();
    let a = VertexSet::range(n, 0, na);
    let b = VertexSet::range(n, na, na + nb);
    let c = VertexSet::range(n, na + nb, na + nb + nc);
    let d = VertexSet::range(n, na + nb + nc, n);
    let partition = Partition4::new(n, a, b, c, d).expect("contiguous ranges partition V");

    let mut g = GraphBuilder::new(n)?;
    let complete = |g: &mut GraphBuilder, x: &VertexSet, y: &VertexSet| -> Result<(), GenError> {
        for u in x.iter() {
            for v in y.iter() {
                g.add_arc(u, v)?;
            }
        }
        Ok(())
    };
    let mut embed = |g: &mut GraphBuilder, part: &VertexSet| -> Result<(), GenError> {
        if part.is_empty() {
            return Ok(());
        }
        let offset = part.first().unwrap_or(0);
        let t = tournament(part.len())?;
        for (u, v) in t.arcs() {
            g.add_arc(offset + u, offset + v)?;
        }
        Ok(())
    };

    match spec.family {
        Family::A => {
            complete(&mut g, &a, &b)?;
            complete(&mut g, &b, &c)?;
            complete(&mut g, &c, &d)?;
            complete(&mut g, &d, &a)?;
            embed(&mut g, &a)?;
            embed(&mut g, &c)?;
            for (u, v) in almost_regular_bipartite_tournament(&b, &d)? {
                g.add_arc(u, v)?;
            }
        }
        Family::B => {
            complete(&mut g, &d, &a)?;
            complete(&mut g, &a, &b)?;
            complete(&mut g, &b, &c)?;
            complete(&mut g, &c, &d)?;
            complete(&mut g, &d, &b)?;
            embed(&mut g, &c)?;
            let av = a.first().expect("family B has one A vertex");
            let cs = c.to_vec();
            g.add_arc(cs[0], av)?;
            if let Some(&c1) = cs.get(1) {
                g.add_arc(av, c1)?;
            }
        }
        Family::C => {
            complete(&mut g, &b, &c)?;
            complete(&mut g, &c, &d)?;
            complete(&mut g, &d, &b)?;
            embed(&mut g, &c)?;
        }
    }
    Ok(ExtremalGraph { spec, graph: g.build(), partition })
}

/// `G(n, p)` orientation model: each unordered pair independently gets an
/// arc with probability `p`, oriented by a fair coin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RandomModel {
    pub n: usize,
    pub arc_probability: f64,
    pub seed: u64,
}

/// Pairs are visited as `(u, v)`, `u < v`, lexicographically; each visit
/// draws one `f64` and, if an arc is placed, one `bool` for its direction.
pub fn random_oriented(model: &RandomModel) -> Result<OrientedGraph, GenError> {
    let p = model.arc_probability;
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadProbability { p });
    }
    let mut rng = seeded_rng(model.seed);
    let mut g = GraphBuilder::new(model.n)?;
    for u in 0..model.n {
        for v in u + 1..model.n {
            if rng.gen::<f64>() < p {
                if rng.gen::<bool>() {
                    g.add_arc(u, v)?;
                } else {
                    g.add_arc(v, u)?;
                }
            }
        }
    }
    Ok(g.build())
}

/// Every labelled oriented graph on `n` vertices (`3^(n(n-1)/2)` of them),
/// in base-3 order over the lexicographically ordered pairs.
pub fn all_labeled_oriented(n: usize) -> impl Iterator<Item = OrientedGraph> {
    assert!(n <= 5, "labelled enumeration is limited to n <= 5");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total).map(move |mut code| {
        let mut arcs = Vec::with_capacity(pairs.len());
        for &(u, v) in &pairs {
            match code % 3 {
                1 => arcs.push((u, v)),
                2 => arcs.push((v, u)),
                _ => {}
            }
            code /= 3;
        }
        OrientedGraph::from_arcs(n, arcs).expect("one arc per pair at most")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{sigma_plus_minus, SigmaPm};

    #[test]
    fn small_tournaments() {
        let t3 = almost_regular_tournament(3).unwrap();
        assert_eq!(t3.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);

        let t4 = almost_regular_tournament(4).unwrap();
        let mut outs: Vec<usize> = (0..4).map(|v| t4.out_degree(v)).collect();
        outs.sort_unstable();
        assert_eq!(outs, vec![1, 1, 2, 2]);
        assert!(t4.is_tournament());

        let t5 = almost_regular_tournament(5).unwrap();
        assert!((0..5).all(|v| t5.out_degree(v) == 2 && t5.in_degree(v) == 2));
        assert_eq!(almost_regular_tournament(0), Err(GenError::ZeroOrder));
        assert_eq!(almost_regular_tournament(1).unwrap().arc_count(), 0);
    }

    #[test]
    fn tournament_degrees_differ_by_at_most_one() {
        for m in 1..=20 {
            let t = almost_regular_tournament(m).unwrap();
            assert_eq!(t.arc_count(), m * (m - 1) / 2);
            for v in 0..m {
                assert!(t.out_degree(v).abs_diff(t.in_degree(v)) <= 1, "m={m} v={v}");
            }
        }
    }

    #[test]
    fn random_variant_keeps_degree_sequence() {
        let mut rng = seeded_rng(3);
        for m in [3, 6, 9, 12] {
            let t = random_almost_regular_tournament(m, &mut rng).unwrap();
            assert!(t.is_tournament());
            assert!((0..m).all(|v| t.out_degree(v).abs_diff(t.in_degree(v)) <= 1));
        }
    }

    #[test]
    fn bipartite_checkerboard() {
        let n = 8;
        let b = VertexSet::range(n, 0, 4);
        let d = VertexSet::range(n, 4, 8);
        let g = OrientedGraph::from_arcs(n, almost_regular_bipartite_tournament(&b, &d).unwrap()).unwrap();
        assert_eq!(g.arc_count(), 16);
        for v in 0..n {
            assert_eq!((g.out_degree(v), g.in_degree(v)), (2, 2));
        }
        let b2 = VertexSet::range(4, 0, 2);
        let d2 = VertexSet::range(4, 2, 4);
        let g2 = OrientedGraph::from_arcs(4, almost_regular_bipartite_tournament(&b2, &d2).unwrap()).unwrap();
        assert!((0..4).all(|v| g2.out_degree(v) == 1 && g2.in_degree(v) == 1));

        assert_eq!(almost_regular_bipartite_tournament(&b, &b), Err(GenError::NotDisjoint));
        let odd = VertexSet::range(n, 4, 7);
        assert!(matches!(
            almost_regular_bipartite_tournament(&VertexSet::range(n, 0, 3), &odd),
            Err(GenError::Unbalanced { b: 3, d: 3 })
        ));
    }

    #[test]
    fn family_c_s1() {
        let e = generate_extremal(ExtremalSpec::new(Family::C, 1).unwrap()).unwrap();
        assert_eq!(e.graph.n(), 6);
        assert_eq!(e.partition.sizes(), [0, 2, 2, 2]);
        assert_eq!(sigma_plus_minus(&e.graph), SigmaPm::Finite(4));
    }

    #[test]
    fn family_b_s2() {
        let e = generate_extremal(ExtremalSpec::new(Family::B, 2).unwrap()).unwrap();
        assert_eq!(e.partition.sizes(), [1, 2, 3, 2]);
        assert_eq!(sigma_plus_minus(&e.graph), SigmaPm::Finite(6));
        let a = e.partition.a.first().unwrap();
        assert_eq!(e.graph.in_degree_in(a, &e.partition.c), 1);
        assert_eq!(e.graph.out_degree_in(a, &e.partition.c), 1);
    }

    #[test]
    fn family_a_s1() {
        let e = generate_extremal(ExtremalSpec::new(Family::A, 1).unwrap()).unwrap();
        assert_eq!(e.graph.n(), 14);
        assert_eq!(sigma_plus_minus(&e.graph), SigmaPm::Finite(10));
        assert_eq!(sharp_threshold_minus_one(14), 10);
    }

    #[test]
    fn family_b_s1_is_degenerate_but_oriented() {
        let spec = ExtremalSpec::new(Family::B, 1).unwrap();
        assert!(spec.is_degenerate());
        let e = generate_extremal(spec).unwrap();
        assert_eq!(e.graph.n(), 4);
        assert!(!ExtremalSpec::new(Family::B, 2).unwrap().is_degenerate());
    }

    #[test]
    fn scale_validation() {
        assert!(matches!(ExtremalSpec::new(Family::C, 0), Err(GenError::InvalidScale { .. })));
        assert!(matches!(ExtremalSpec::new(Family::A, 8), Err(GenError::Graph(_))));
        assert_eq!("C".parse::<Family>(), Ok(Family::C));
        assert!("x".parse::<Family>().is_err());
    }

    #[test]
    fn random_model_extremes_and_determinism() {
        let empty = random_oriented(&RandomModel { n: 9, arc_probability: 0.0, seed: 1 }).unwrap();
        assert_eq!(empty.arc_count(), 0);
        let full = random_oriented(&RandomModel { n: 9, arc_probability: 1.0, seed: 1 }).unwrap();
        assert!(full.is_tournament());
        let m = RandomModel { n: 8, arc_probability: 0.5, seed: 42 };
        assert_eq!(random_oriented(&m).unwrap(), random_oriented(&m).unwrap());
        assert!(random_oriented(&RandomModel { n: 3, arc_probability: 1.5, seed: 0 }).is_err());
    }

    #[test]
    fn labelled_enumeration_counts() {
        assert_eq!(all_labeled_oriented(4).count(), 729);
        assert_eq!(all_labeled_oriented(3).count(), 27);
        let distinct: std::collections::HashSet<_> = all_labeled_oriented(3).collect();
        assert_eq!(distinct.len(), 27);
    }

    #[test]
    fn derived_seeds_are_stable_and_distinct() {
        assert_eq!(derive_seed(7, 3), derive_seed(7, 3));
        assert_ne!(derive_seed(7, 3), derive_seed(7, 4));
        assert_ne!(derive_seed(7, 3), derive_seed(8, 3));
    }
}
