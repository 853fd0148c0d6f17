use super::good_bad::GoodBadLabels;
use super::AnalysisError;
use crate::graph::OrientedGraph;
use crate::partition::Partition4;
use crate::vertex_set::VertexSet;
use crate::walk::{validate_antidirected, AntidirectedWalk};

/// Peels vertices of degree below `e / |V|` (computed once, on the input)
/// until none remain; the survivors induce a subgraph of minimum degree at
/// least that average. Lowest id is peeled first.
pub fn min_degree_subgraph(vertices: &VertexSet, edges: &[(usize, usize)]) -> VertexSet {
    let n = vertices.universe();
    let edges: Vec<(usize, usize)> =
        edges.iter().copied().filter(|&(x, y)| x != y && vertices.contains(x) && vertices.contains(y)).collect();
    let order = vertices.len();
    if order == 0 {
        return *vertices;
    }
    let e = edges.len();
    let mut adj = vec![Vec::new(); n];
    let mut degree = vec![0usize; n];
    for &(x, y) in &edges {
        adj[x].push(y);
        adj[y].push(x);
        degree[x] += 1;
        degree[y] += 1;
    }
    // deg < e/|V|  ⇔  deg·|V| < e, kept in integers.
    let below = |d: usize| d * order < e;
    let mut alive = *vertices;
    while let Some(v) = alive.iter().find(|&v| below(degree[v])) {
        alive.remove(v);
        for &w in &adj[v] {
            if alive.contains(w) {
                degree[w] -= 1;
            }
        }
    }
    alive
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BdPathOptions {
    /// Cap on extension attempts during the backtracking walk.
    pub max_steps: u64,
}

impl Default for BdPathOptions {
    fn default() -> Self {
        BdPathOptions { max_steps: 1_000_000 }
    }
}

/// A path alternating `D, B, D, …, D` along arcs `D -> B`, so every `B`
/// vertex is a sink and every `D` vertex a source. An even `target_order` is
/// raised to the next odd order, the smallest with both ends in `D`.
pub fn build_bd_path(
    g: &OrientedGraph,
    p: &Partition4,
    labels: &GoodBadLabels,
    target_order: usize,
    options: BdPathOptions,
) -> Result<AntidirectedWalk, AnalysisError> {
    let n = g.n();
    p.validate(n)?;
    if labels.n() != n {
        return Err(AnalysisError::LabelMismatch { labels: labels.n(), n });
    }
    let target = if target_order % 2 == 0 { target_order + 1 } else { target_order };
    let need_d = target.div_ceil(2);
    let need_b = target / 2;
    if need_d > p.d.len() || need_b > p.b.len() {
        return Err(AnalysisError::TargetUnreachable { target, best: 0 });
    }

    let edges: Vec<(usize, usize)> = g.arcs_from_to(&p.d, &p.b).collect();
    let core = min_degree_subgraph(&p.b.union(&p.d), &edges);
    let allowed = core.intersection(&labels.good());
    let (dset, bset) = (allowed.intersection(&p.d), allowed.intersection(&p.b));
    if need_d > dset.len() || need_b > bset.len() {
        return Err(AnalysisError::TargetUnreachable { target, best: 0 });
    }

    let mut search = Walker { g, dset, bset, target, steps: 0, max_steps: options.max_steps, best: 0 };
    for start in dset.iter() {
        let mut path = vec![start];
        if search.extend(&mut path, VertexSet::from_ids(n, [start])) {
            let walk = AntidirectedWalk::from_vertices(g, path, false).expect("path follows D -> B arcs");
            validate_antidirected(g, &walk)?;
            return Ok(walk);
        }
        if search.steps >= search.max_steps {
            break;
        }
    }
    Err(AnalysisError::TargetUnreachable { target, best: search.best })
}

struct Walker<'g> {
    g: &'g OrientedGraph,
    dset: VertexSet,
    bset: VertexSet,
    target: usize,
    steps: u64,
    max_steps: u64,
    best: usize,
}

impl Walker<'_> {
    fn extend(&mut self, path: &mut Vec<usize>, used: VertexSet) -> bool {
        self.best = self.best.max(path.len());
        if path.len() >= self.target {
            return true;
        }
        let last = *path.last().expect("non-empty path");
        // Odd positions (1, 3, …) are B vertices entered along d -> b.
        let candidates = if path.len() % 2 == 1 {
            self.g.out_neighbors(last).intersection(&self.bset)
        } else {
            self.g.in_neighbors(last).intersection(&self.dset)
        }
        .difference(&used);
        for c in candidates.iter() {
            if self.steps >= self.max_steps {
                return false;
            }
            self.steps += 1;
            path.push(c);
            let mut next = used;
            next.insert(c);
            if self.extend(path, next) {
                return true;
            }
            path.pop();
        }
        false
    }
}
