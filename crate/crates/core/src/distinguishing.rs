//! Exact distinguishing numbers D(G) and distinguishing indices D'(G).
//!
//! Both solvers run the same depth-first search over labelings in
//! lexicographic order, with two cuts:
//!
//! * label names are interchangeable, so a new label may only be the
//!   smallest one not used yet;
//! * after each assignment we look for a non-identity automorphism that
//!   preserves the labels assigned so far and fixes every still-unassigned
//!   element. Such an automorphism survives every completion, so the branch
//!   is dead. Once everything is assigned this is exactly the
//!   distinguishing test.
//!
//! The first leaf reached is therefore the lexicographically smallest
//! distinguishing labeling, and exhausting the tree at `d` labels certifies
//! that none exists.

use serde::Serialize;

pub use crate::labeling::{EdgeLabeling, Labeling};

use crate::budget::{Budget, Caps};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::refine::{nontrivial_automorphism, Structure};

/// D(G) with a witness labeling using exactly `value` labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinguishingNumber {
    pub value: u32,
    pub witness: Labeling,
}

/// D'(G), or the marker that no edge labeling of any size distinguishes G.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DistinguishingIndex {
    Value { value: u32, witness: EdgeLabeling },
    NotDefined,
}

impl DistinguishingIndex {
    pub fn value(&self) -> Option<u32> {
        match self {
            DistinguishingIndex::Value { value, .. } => Some(*value),
            DistinguishingIndex::NotDefined => None,
        }
    }

    pub fn witness(&self) -> Option<&EdgeLabeling> {
        match self {
            DistinguishingIndex::Value { witness, .. } => Some(witness),
            DistinguishingIndex::NotDefined => None,
        }
    }
}

/// True iff Aut(G) is trivial.
pub fn is_asymmetric(g: &Graph) -> bool {
    nontrivial_automorphism(&Structure::from_graph(g), &Budget::unlimited())
        .expect("unlimited budget")
        .is_none()
}

pub fn is_distinguishing(g: &Graph, labeling: &Labeling) -> Result<bool> {
    is_distinguishing_capped(g, labeling, &Caps::default().unlimited_time())
}

pub fn is_distinguishing_capped(g: &Graph, labeling: &Labeling, caps: &Caps) -> Result<bool> {
    caps.check_label_order(g.order())?;
    labeling.check_total(g)?;
    let s = Structure::with_vertex_colors(g, labeling.labels());
    Ok(nontrivial_automorphism(&s, &caps.budget())?.is_none())
}

pub fn is_distinguishing_edges(g: &Graph, labeling: &EdgeLabeling) -> Result<bool> {
    is_distinguishing_edges_capped(g, labeling, &Caps::default().unlimited_time())
}

pub fn is_distinguishing_edges_capped(g: &Graph, labeling: &EdgeLabeling, caps: &Caps) -> Result<bool> {
    caps.check_label_order(g.order())?;
    if g.size() == 0 {
        return Err(Error::Edgeless);
    }
    labeling.check_total(g)?;
    let s = Structure::with_edge_colors(g, |u, v| labeling.label(u, v).expect("total"));
    Ok(nontrivial_automorphism(&s, &caps.budget())?.is_none())
}

/// Whether some edge labeling distinguishes G: no non-identity automorphism
/// may fix every edge setwise. Fails for K₂, for two or more isolated
/// vertices, and for anything containing such a swap.
pub fn index_defined(g: &Graph) -> Result<bool> {
    let edges = g.edges();
    let s = Structure::with_edge_colors(g, |u, v| {
        1 + edges.binary_search(&(u, v)).expect("edge") as u32
    });
    Ok(nontrivial_automorphism(&s, &Budget::unlimited())?.is_none())
}

fn unassigned_color(d: u32, pos: usize) -> u32 {
    d + 1 + pos as u32
}

struct VertexSearch<'a> {
    s: Structure,
    labels: Vec<u32>,
    d: u32,
    budget: &'a Budget,
}

impl VertexSearch<'_> {
    fn dfs(&mut self, pos: usize, used: u32) -> Result<bool> {
        if pos == self.labels.len() {
            return Ok(true);
        }
        for l in 1..=(used + 1).min(self.d) {
            self.budget.tick()?;
            self.labels[pos] = l;
            self.s.set_vertex_color(pos, l);
            if nontrivial_automorphism(&self.s, self.budget)?.is_none()
                && self.dfs(pos + 1, used.max(l))?
            {
                return Ok(true);
            }
        }
        self.s.set_vertex_color(pos, unassigned_color(self.d, pos));
        Ok(false)
    }
}

/// The lexicographically smallest distinguishing labeling with at most `d`
/// labels, or `None` after exhausting the pruned search space.
pub fn find_labeling(g: &Graph, d: u32) -> Result<Option<Labeling>> {
    find_labeling_capped(g, d, &Caps::default().unlimited_time())
}

pub fn find_labeling_capped(g: &Graph, d: u32, caps: &Caps) -> Result<Option<Labeling>> {
    find_labeling_with(g, d, caps, &caps.budget())
}

fn find_labeling_with(g: &Graph, d: u32, caps: &Caps, budget: &Budget) -> Result<Option<Labeling>> {
    if d == 0 {
        return Err(Error::InvalidParameter("label count must be >= 1".into()));
    }
    caps.check_label_order(g.order())?;
    let n = g.order();
    let colors: Vec<u32> = (0..n).map(|v| unassigned_color(d, v)).collect();
    let mut search = VertexSearch {
        s: Structure::with_vertex_colors(g, &colors),
        labels: vec![0; n],
        d,
        budget,
    };
    if search.dfs(0, 0)? {
        Ok(Some(Labeling::new(search.labels, d)?))
    } else {
        Ok(None)
    }
}

pub fn distinguishing_number(g: &Graph) -> Result<DistinguishingNumber> {
    distinguishing_number_capped(g, &Caps::default())
}

pub fn distinguishing_number_capped(g: &Graph, caps: &Caps) -> Result<DistinguishingNumber> {
    caps.check_label_order(g.order())?;
    let budget = caps.budget();
    for d in 1..=(g.order().max(1) as u32) {
        if let Some(witness) = find_labeling_with(g, d, caps, &budget)? {
            return Ok(DistinguishingNumber { value: d, witness });
        }
    }
    unreachable!("all-distinct labels always distinguish")
}

struct EdgeSearch<'a> {
    s: Structure,
    edges: Vec<(usize, usize)>,
    labels: Vec<u32>,
    d: u32,
    budget: &'a Budget,
}

impl EdgeSearch<'_> {
    fn dfs(&mut self, pos: usize, used: u32) -> Result<bool> {
        if pos == self.edges.len() {
            return Ok(true);
        }
        let (u, v) = self.edges[pos];
        for l in 1..=(used + 1).min(self.d) {
            self.budget.tick()?;
            self.labels[pos] = l;
            self.s.set_edge_color(u, v, l);
            if nontrivial_automorphism(&self.s, self.budget)?.is_none()
                && self.dfs(pos + 1, used.max(l))?
            {
                return Ok(true);
            }
        }
        self.s.set_edge_color(u, v, unassigned_color(self.d, pos));
        Ok(false)
    }
}

/// Edge analogue of [`find_labeling`]; edges are ordered lexicographically.
pub fn find_edge_labeling(g: &Graph, d: u32) -> Result<Option<EdgeLabeling>> {
    find_edge_labeling_capped(g, d, &Caps::default().unlimited_time())
}

pub fn find_edge_labeling_capped(g: &Graph, d: u32, caps: &Caps) -> Result<Option<EdgeLabeling>> {
    find_edge_labeling_with(g, d, caps, &caps.budget())
}

fn find_edge_labeling_with(
    g: &Graph,
    d: u32,
    caps: &Caps,
    budget: &Budget,
) -> Result<Option<EdgeLabeling>> {
    if d == 0 {
        return Err(Error::InvalidParameter("label count must be >= 1".into()));
    }
    caps.check_label_order(g.order())?;
    if g.size() == 0 {
        return Err(Error::Edgeless);
    }
    let edges = g.edges();
    let s = Structure::with_edge_colors(g, |u, v| {
        unassigned_color(d, edges.binary_search(&(u, v)).expect("edge"))
    });
    let mut search = EdgeSearch {
        s,
        labels: vec![0; edges.len()],
        edges,
        d,
        budget,
    };
    if search.dfs(0, 0)? {
        let entries = search.edges.iter().copied().zip(search.labels.iter().copied());
        Ok(Some(EdgeLabeling::new(entries, d)?))
    } else {
        Ok(None)
    }
}

pub fn distinguishing_index(g: &Graph) -> Result<DistinguishingIndex> {
    distinguishing_index_capped(g, &Caps::default())
}

/// An edgeless graph has D' = 1 when its group is trivial (K₁ or the null
/// graph) and is `NotDefined` otherwise.
pub fn distinguishing_index_capped(g: &Graph, caps: &Caps) -> Result<DistinguishingIndex> {
    caps.check_label_order(g.order())?;
    if !index_defined(g)? {
        return Ok(DistinguishingIndex::NotDefined);
    }
    if g.size() == 0 {
        return Ok(DistinguishingIndex::Value {
            value: 1,
            witness: EdgeLabeling::new([], 1)?,
        });
    }
    let budget = caps.budget();
    for d in 1..=(g.size() as u32) {
        if let Some(witness) = find_edge_labeling_with(g, d, caps, &budget)? {
            return Ok(DistinguishingIndex::Value { value: d, witness });
        }
    }
    unreachable!("all-distinct edge labels distinguish whenever D' is defined")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn d(g: &Graph) -> u32 {
        distinguishing_number(g).unwrap().value
    }

    fn d_index(g: &Graph) -> Option<u32> {
        distinguishing_index(g).unwrap().value()
    }

    #[test]
    fn catalog_values() {
        assert_eq!(d(&path(5).unwrap()), 2);
        assert_eq!(d(&cycle(4).unwrap()), 3);
        assert_eq!(d(&complete(5).unwrap()), 5);
        assert_eq!(d(&complete_bipartite(2, 3).unwrap()), 3);
        assert_eq!(d(&complete_bipartite(3, 3).unwrap()), 4);
    }

    #[test]
    fn index_values() {
        assert_eq!(d_index(&path(5).unwrap()), Some(2));
        assert_eq!(d_index(&complete(4).unwrap()), Some(3));
        assert_eq!(d_index(&complete(2).unwrap()), None);
        assert_eq!(d_index(&friendship(3).unwrap()), Some(3));
        assert_eq!(d_index(&complete(1).unwrap()), Some(1));
        assert_eq!(d_index(&Graph::empty(2).unwrap()), None);
    }

    #[test]
    fn verifier_cases() {
        let c5 = cycle(5).unwrap();
        let distinct = Labeling::from_labels((1..=5).collect()).unwrap();
        assert!(is_distinguishing(&c5, &distinct).unwrap());
        assert!(!is_distinguishing(&complete(2).unwrap(), &Labeling::uniform(2)).unwrap());
        assert!(!is_distinguishing(&c5, &Labeling::from_labels(vec![1, 2, 2, 1, 1]).unwrap()).unwrap());
        assert_eq!(find_labeling(&c5, 2).unwrap(), None);
        assert!(find_labeling(&cycle(6).unwrap(), 2).unwrap().is_some());
        let k4 = complete(4).unwrap();
        let all = find_labeling(&k4, 4).unwrap().unwrap();
        assert_eq!(all.labels(), &[1, 2, 3, 4]);
    }

    #[test]
    fn edge_verifier_cases() {
        let p4 = path(4).unwrap();
        let distinct = EdgeLabeling::new([((0, 1), 1), ((1, 2), 2), ((2, 3), 3)], 3).unwrap();
        assert!(is_distinguishing_edges(&p4, &distinct).unwrap());
        let k2 = complete(2).unwrap();
        for l in 1..=3 {
            let e = EdgeLabeling::new([((0, 1), l)], 3).unwrap();
            assert!(!is_distinguishing_edges(&k2, &e).unwrap());
        }
        assert_eq!(find_edge_labeling(&complete(4).unwrap(), 2).unwrap(), None);
        assert_eq!(
            is_distinguishing_edges(&Graph::empty(3).unwrap(), &EdgeLabeling::new([], 1).unwrap()),
            Err(Error::Edgeless)
        );
    }

    #[test]
    fn witnesses_verify() {
        for g in [cycle(7).unwrap(), friendship(2).unwrap(), star(4).unwrap()] {
            let dn = distinguishing_number(&g).unwrap();
            assert!(is_distinguishing(&g, &dn.witness).unwrap());
            if let DistinguishingIndex::Value { witness, .. } = distinguishing_index(&g).unwrap() {
                assert!(is_distinguishing_edges(&g, &witness).unwrap());
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps {
            label_order: 4,
            ..Caps::default()
        };
        assert!(matches!(
            distinguishing_number_capped(&path(5).unwrap(), &caps),
            Err(Error::OverCap { cap: 4, .. })
        ));
    }
}
