//! Extending a special arc to a short antidirected path whose first and last
//! arcs point forward and whose ends are good vertices of `D`.

use serde::Serialize;

use super::good_bad::GoodBadLabels;
use super::special::{special_class, SpecialClass};
use super::AnalysisError;
use crate::graph::OrientedGraph;
use crate::partition::{Part, Partition4};
use crate::vertex_set::VertexSet;
use crate::walk::{validate_antidirected, AntidirectedWalk, Direction};

/// Largest avoid-set accepted by [`extend_to_proper_path`].
pub const MAX_AVOID: usize = 20;

const MAX_PROPER_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProperPath {
    pub walk: AntidirectedWalk,
}

/// Antidirected open path of even order at most 10, first and last arcs
/// forward, both ends good vertices of `D`.
pub fn is_proper_path(g: &OrientedGraph, p: &Partition4, labels: &GoodBadLabels, walk: &AntidirectedWalk) -> bool {
    proper_violation(g, p, labels, walk).is_none()
}

fn proper_violation(
    g: &OrientedGraph,
    p: &Partition4,
    labels: &GoodBadLabels,
    walk: &AntidirectedWalk,
) -> Option<String> {
    if let Err(e) = validate_antidirected(g, walk) {
        return Some(e.to_string());
    }
    let k = walk.order();
    if walk.closed || k < 2 || k > MAX_PROPER_ORDER || k % 2 == 1 {
        return Some(format!("order {k} (closed: {}) is not an even open order in 2..=10", walk.closed));
    }
    if walk.directions[0] != Direction::Forward || walk.directions[k - 2] != Direction::Forward {
        return Some("first and last arcs must point forward".into());
    }
    let (x, y) = walk.ends()?;
    for end in [x, y] {
        if !p.d.contains(end) || !labels.is_good(end) {
            return Some(format!("end {end} is not a good vertex of D"));
        }
    }
    None
}

#[derive(Clone, Copy)]
enum Rel {
    Out,
    In,
}

/// One choice point: a new vertex adjacent to an already chosen one.
struct Step {
    name: &'static str,
    anchor: usize,
    rel: Rel,
    target: VertexSet,
}

/// Chosen vertices are indexed `0 = u`, `1 = v`, then one per step; `order`
/// lists those indices in path order.
struct Recipe {
    steps: Vec<Step>,
    order: Vec<usize>,
}

fn recipes(p: &Partition4, class: SpecialClass, n: usize) -> Vec<Recipe> {
    let set = |x: Part, y: Part| p.join(x, y);
    let step = |name, anchor, rel, target| Step { name, anchor, rel, target };
    match class {
        SpecialClass::BcToAb => {
            // u1 ∈ N⁺(u, C∪D), u2 ∈ N⁻(u1, C), u3 ∈ N⁺(u2, D).
            let tail = || {
                vec![
                    step("u1 in N+(u, C+D)", 0, Rel::Out, set(Part::C, Part::D)),
                    step("u2 in N-(u1, C)", 2, Rel::In, p.c),
                    step("u3 in N+(u2, D)", 3, Rel::Out, p.d),
                ]
            };
            let mut long = tail();
            long.extend([
                step("v1 in N-(v, A+D)", 1, Rel::In, set(Part::A, Part::D)),
                step("v2 in N+(v1, A)", 5, Rel::Out, p.a),
                step("v3 in N-(v2, D)", 6, Rel::In, p.d),
            ]);
            let long = Recipe { steps: long, order: vec![7, 6, 5, 1, 0, 2, 3, 4] };
            let mut short = tail();
            short.push(step("v1 in N-(v, D)", 1, Rel::In, p.d));
            let short = Recipe { steps: short, order: vec![5, 1, 0, 2, 3, 4] };
            if p.a.len() as f64 >= n as f64 / 200.0 {
                vec![long, short]
            } else {
                vec![short, long]
            }
        }
        SpecialClass::AdToCd => {
            // u2 → u1 ← u → v ← v1 → … : u1 ∈ N⁺(u, A∪B), u2 ∈ N⁻(u1, D), and
            // v1 ∈ N⁻(v, B∪C) continued forward into D (directly from C,
            // or via C ← C from B).
            let head = || {
                vec![
                    step("u1 in N+(u, A+B)", 0, Rel::Out, set(Part::A, Part::B)),
                    step("u2 in N-(u1, D)", 2, Rel::In, p.d),
                ]
            };
            let mut short = head();
            short.extend([
                step("v1 in N-(v, C)", 1, Rel::In, p.c),
                step("v2 in N+(v1, D)", 4, Rel::Out, p.d),
            ]);
            let short = Recipe { steps: short, order: vec![3, 2, 0, 1, 4, 5] };
            let mut long = head();
            long.extend([
                step("v1 in N-(v, B)", 1, Rel::In, p.b),
                step("v2 in N+(v1, C)", 4, Rel::Out, p.c),
                step("v3 in N-(v2, C)", 5, Rel::In, p.c),
                step("v4 in N+(v3, D)", 6, Rel::Out, p.d),
            ]);
            let long = Recipe { steps: long, order: vec![3, 2, 0, 1, 4, 5, 6, 7] };
            vec![short, long]
        }
    }
}

struct Filler<'a> {
    g: &'a OrientedGraph,
    allowed: VertexSet,
    first_dead_end: Option<&'static str>,
}

impl Filler<'_> {
    /// Depth-first over the steps, lowest id first at every choice point.
    fn fill(&mut self, recipe: &Recipe, chosen: &mut Vec<usize>, used: VertexSet) -> bool {
        let i = chosen.len() - 2;
        let Some(step) = recipe.steps.get(i) else {
            return true;
        };
        let anchor = chosen[step.anchor];
        let nbrs = match step.rel {
            Rel::Out => self.g.out_neighbors(anchor),
            Rel::In => self.g.in_neighbors(anchor),
        };
        let candidates = nbrs.intersection(&step.target).intersection(&self.allowed).difference(&used);
        if candidates.is_empty() && self.first_dead_end.is_none() {
            self.first_dead_end = Some(step.name);
        }
        for c in candidates.iter() {
            chosen.push(c);
            let mut next = used;
            next.insert(c);
            if self.fill(recipe, chosen, next) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Extends the special arc `u -> v` to a proper path avoiding `w`, using
/// only good vertices besides `u` and `v`. Recipes are tried in a fixed
/// order and candidates in ascending id order, so results are deterministic.
pub fn extend_to_proper_path(
    g: &OrientedGraph,
    p: &Partition4,
    labels: &GoodBadLabels,
    arc: (usize, usize),
    w: &VertexSet,
) -> Result<ProperPath, AnalysisError> {
    let n = g.n();
    p.validate(n)?;
    if labels.n() != n {
        return Err(AnalysisError::LabelMismatch { labels: labels.n(), n });
    }
    let (u, v) = arc;
    if u >= n || v >= n || !g.has_arc(u, v) {
        return Err(AnalysisError::InvalidParameter(format!("{u} -> {v} is not an arc of the graph")));
    }
    if w.len() > MAX_AVOID {
        return Err(AnalysisError::InvalidParameter(format!("avoid set has {} > {MAX_AVOID} vertices", w.len())));
    }
    if w.contains(u) || w.contains(v) {
        return Err(AnalysisError::InvalidParameter("avoid set contains an endpoint of the arc".into()));
    }
    let class = special_class(p, u, v).ok_or(AnalysisError::NotSpecial { u, v })?;
    let allowed = labels.good().difference(w);
    let mut filler = Filler { g, allowed, first_dead_end: None };
    for recipe in recipes(p, class, n) {
        let mut chosen = vec![u, v];
        if filler.fill(&recipe, &mut chosen, VertexSet::from_ids(n, [u, v])) {
            let order: Vec<usize> = recipe.order.iter().map(|&i| chosen[i]).collect();
            let walk = AntidirectedWalk::from_vertices(g, order, false)
                .expect("recipe steps follow arcs of the graph");
            validate_antidirected(g, &walk)?;
            if let Some(reason) = proper_violation(g, p, labels, &walk) {
                unreachable!("recipe produced a non-proper path: {reason}");
            }
            return Ok(ProperPath { walk });
        }
    }
    Err(AnalysisError::ExtensionFailed { choice: filler.first_dead_end.unwrap_or("none").to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::classify_good_bad;
    use crate::generators::{generate_extremal, ExtremalSpec, Family};
    use crate::graph::GraphBuilder;

    /// Family A at `s = 1` with one extra arc between `A` and `C`, which has
    /// no arcs otherwise.
    fn with_extra_arc(from_c: bool) -> (OrientedGraph, Partition4, (usize, usize)) {
        let e = generate_extremal(ExtremalSpec::new(Family::A, 1).unwrap()).unwrap();
        let (a, c) = (e.partition.a.first().unwrap(), e.partition.c.first().unwrap());
        let arc = if from_c { (c, a) } else { (a, c) };
        let mut b = GraphBuilder::new(e.graph.n()).unwrap();
        for (x, y) in e.graph.arcs().chain([arc]) {
            b.add_arc(x, y).unwrap();
        }
        (b.build(), e.partition, arc)
    }

    #[test]
    fn long_form_from_c_to_a() {
        let (g, p, arc) = with_extra_arc(true);
        let labels = classify_good_bad(&g, &p, 0.05);
        assert!(labels.bad().is_empty());
        let path = extend_to_proper_path(&g, &p, &labels, arc, &VertexSet::empty(14)).unwrap();
        assert!(is_proper_path(&g, &p, &labels, &path.walk));
        assert_eq!(path.walk.order(), 8);
        let parts: String = path.walk.vertices.iter().map(|&x| p.part_of(x).unwrap().letter()).collect();
        // v3 v2 v1 v u u1 u2 u3 with v = a, u = c.
        assert_eq!(&parts[0..2], "DA");
        assert_eq!(&parts[3..5], "AC");
        assert_eq!(&parts[6..8], "CD");
        assert_eq!((path.walk.vertices[4], path.walk.vertices[3]), arc);
    }

    #[test]
    fn from_a_to_c() {
        let (g, p, arc) = with_extra_arc(false);
        let labels = classify_good_bad(&g, &p, 0.05);
        let path = extend_to_proper_path(&g, &p, &labels, arc, &VertexSet::empty(14)).unwrap();
        assert!(is_proper_path(&g, &p, &labels, &path.walk));
        assert!(path.walk.arcs().any(|x| x == arc));
    }

    #[test]
    fn avoids_w() {
        let (g, p, arc) = with_extra_arc(true);
        let labels = classify_good_bad(&g, &p, 0.05);
        let first = extend_to_proper_path(&g, &p, &labels, arc, &VertexSet::empty(14)).unwrap();
        let used: Vec<usize> = first.walk.vertices.iter().copied().filter(|&x| x != arc.0 && x != arc.1).collect();
        let w = VertexSet::from_ids(14, used[..2].iter().copied());
        match extend_to_proper_path(&g, &p, &labels, arc, &w) {
            Ok(path) => {
                assert!(is_proper_path(&g, &p, &labels, &path.walk));
                assert!(path.walk.vertices.iter().all(|&x| !w.contains(x)));
            }
            Err(e) => assert!(matches!(e, AnalysisError::ExtensionFailed { .. })),
        }
    }

    #[test]
    fn precondition_errors() {
        let e = generate_extremal(ExtremalSpec::new(Family::A, 1).unwrap()).unwrap();
        let labels = classify_good_bad(&e.graph, &e.partition, 0.05);
        let (x, y) = e.graph.arcs().next().unwrap();
        assert!(matches!(
            extend_to_proper_path(&e.graph, &e.partition, &labels, (x, y), &VertexSet::empty(14)),
            Err(AnalysisError::NotSpecial { .. })
        ));
        assert!(matches!(
            extend_to_proper_path(&e.graph, &e.partition, &labels, (y, x), &VertexSet::empty(14)),
            Err(AnalysisError::InvalidParameter(_))
        ));
    }

    #[test]
    fn failure_names_choice_point() {
        // A lone special arc inside B with nothing around it.
        let g = OrientedGraph::from_arcs(4, [(0, 1)]).unwrap();
        let p = Partition4::from_letters("BBCD").unwrap();
        let labels = GoodBadLabels { delta: 0.0, labels: vec![super::super::Label::Good; 4] };
        match extend_to_proper_path(&g, &p, &labels, (0, 1), &VertexSet::empty(4)) {
            Err(AnalysisError::ExtensionFailed { choice }) => assert!(choice.starts_with("u1")),
            other => panic!("unexpected {other:?}"),
        }
    }
}
