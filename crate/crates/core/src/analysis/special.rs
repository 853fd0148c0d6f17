use serde::Serialize;

use crate::graph::OrientedGraph;
use crate::partition::{Part, Partition4};

/// Which of the two special arc classes an arc belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SpecialClass {
    /// Tail in `A∪D`, head in `C∪D`.
    AdToCd,
    /// Tail in `B∪C`, head in `A∪B`.
    BcToAb,
}

/// The class of arc `u -> v` for `p`, or `None` if it is not special. The
/// tail sets `A∪D` and `B∪C` are disjoint, so at most one class applies.
pub fn special_class(p: &Partition4, u: usize, v: usize) -> Option<SpecialClass> {
    if p.join(Part::A, Part::D).contains(u) && p.join(Part::C, Part::D).contains(v) {
        Some(SpecialClass::AdToCd)
    } else if p.join(Part::B, Part::C).contains(u) && p.join(Part::A, Part::B).contains(v) {
        Some(SpecialClass::BcToAb)
    } else {
        None
    }
}

/// All special arcs of `g`, sorted by tail then head.
pub fn find_special_arcs(g: &OrientedGraph, p: &Partition4) -> Vec<(usize, usize)> {
    let first: Vec<_> = g.arcs_from_to(&p.join(Part::A, Part::D), &p.join(Part::C, Part::D)).collect();
    let second: Vec<_> = g.arcs_from_to(&p.join(Part::B, Part::C), &p.join(Part::A, Part::B)).collect();
    debug_assert!(first.iter().all(|a| !second.contains(a)), "special classes must be disjoint");
    let mut arcs = first;
    arcs.extend(second);
    arcs.sort_unstable();
    arcs
}

/// The lexicographically first pair of special arcs sharing no endpoint.
pub fn find_two_disjoint_special_arcs(
    g: &OrientedGraph,
    p: &Partition4,
) -> Option<((usize, usize), (usize, usize))> {
    let arcs = find_special_arcs(g, p);
    arcs.iter().enumerate().find_map(|(i, &(a, b))| {
        arcs[i + 1..].iter().find(|&&(c, d)| a != c && a != d && b != c && b != d).map(|&second| ((a, b), second))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate_extremal, ExtremalSpec, Family};

    #[test]
    fn family_c_has_none() {
        for s in 1..=4 {
            let e = generate_extremal(ExtremalSpec::new(Family::C, s).unwrap()).unwrap();
            assert!(find_special_arcs(&e.graph, &e.partition).is_empty());
            assert_eq!(find_two_disjoint_special_arcs(&e.graph, &e.partition), None);
        }
    }

    #[test]
    fn all_in_b_makes_every_arc_special() {
        let g = OrientedGraph::from_arcs(4, [(0, 1), (2, 3)]).unwrap();
        let p = Partition4::all_in(Part::B, 4);
        assert_eq!(find_special_arcs(&g, &p), vec![(0, 1), (2, 3)]);
        assert_eq!(find_two_disjoint_special_arcs(&g, &p), Some(((0, 1), (2, 3))));
        assert_eq!(special_class(&p, 0, 1), Some(SpecialClass::BcToAb));

        let triangle = OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let p = Partition4::all_in(Part::B, 3);
        assert_eq!(find_special_arcs(&triangle, &p).len(), 3);
        assert_eq!(find_two_disjoint_special_arcs(&triangle, &p), None);
    }

    #[test]
    fn empty_graph() {
        let g = OrientedGraph::empty(5).unwrap();
        assert!(find_special_arcs(&g, &Partition4::all_in(Part::D, 5)).is_empty());
    }
}
