//! Isomorphism testing and canonical forms.

use crate::budget::Budget;
use crate::graph::Graph;
use crate::refine::{canonical_code, find_isomorphism, Structure};

/// An isomorphism-invariant code: equal for two graphs iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    code: Vec<u32>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let code = canonical_code(&Structure::from_graph(g), &Budget::unlimited())
        .expect("unlimited budget");
    CanonicalForm {
        order: g.order(),
        code,
    }
}

/// A vertex map `p` with `uv ∈ E(g) ⇔ p(u)p(v) ∈ E(h)`, if one exists.
pub fn find_graph_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    find_isomorphism(
        &Structure::from_graph(g),
        &Structure::from_graph(h),
        &Budget::unlimited(),
    )
    .expect("unlimited budget")
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_graph_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn small_cases() {
        assert!(are_isomorphic(&path(3).unwrap(), &path(3).unwrap()));
        assert!(!are_isomorphic(&star(3).unwrap(), &path(4).unwrap()));
        let two_triangles = complete(3)
            .unwrap()
            .disjoint_union(&complete(3).unwrap())
            .unwrap();
        assert!(!are_isomorphic(&cycle(6).unwrap(), &two_triangles));
    }

    #[test]
    fn isomorphism_maps_edges() {
        let g = friendship(2).unwrap();
        let h = g.relabel(&[4, 2, 0, 3, 1]).unwrap();
        let p = find_graph_isomorphism(&g, &h).unwrap();
        for (u, v) in g.edges() {
            assert!(h.is_adjacent(p[u], p[v]));
        }
        assert_eq!(canonical_form(&g), canonical_form(&h));
    }
}
