//! Simple undirected graphs on the vertex set `0..n`, stored as one 64-bit
//! adjacency row per vertex.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

/// An immutable simple graph.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Graph");
        if let Some(name) = &self.name {
            s.field("name", name);
        }
        s.field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse into one edge.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { n, adj, name: None })
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        debug_assert!((0..n).all(|v| adj[v] & bit(v) == 0));
        Graph { n, adj, name: None }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::build(n, &[])
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Adjacency row of `v` as a bitmask.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet {
            order: self.n,
            bits: self.adj[v],
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            let mut higher = self.adj[u] & mask_above(u);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    /// δ(G). Zero for the empty graph on no vertices.
    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet {
            order: self.n,
            bits: full_mask(self.n),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// N̄(v) = V \ N(v). Always contains `v`.
    pub fn non_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet {
            order: self.n,
            bits: full_mask(self.n) & !self.adj[v],
        })
    }

    /// The subgraph induced by `s`, relabeled to `0..|s|` in increasing id order.
    pub fn induced(&self, s: &VertexSet) -> Result<Induced> {
        if s.order != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: s.order,
            });
        }
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let back_map: Vec<usize> = s.iter().collect();
        let mut rows = vec![0u64; back_map.len()];
        for (i, &u) in back_map.iter().enumerate() {
            for (j, &v) in back_map.iter().enumerate() {
                if self.is_adjacent(u, v) {
                    rows[i] |= bit(j);
                }
            }
        }
        Ok(Induced {
            graph: Graph::from_rows(back_map.len(), rows),
            back_map,
        })
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let rows = (0..self.n).map(|v| full & !self.adj[v] & !bit(v)).collect();
        Graph::from_rows(self.n, rows)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(VertexSet {
                order: self.n,
                bits: comp,
            });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Applies a vertex relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= bit(perm[v]);
            rows[perm[v]] |= bit(perm[u]);
        }
        Ok(Graph::from_rows(self.n, rows))
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph::from_rows(n, rows))
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

fn mask_above(u: usize) -> u64 {
    if u >= 63 {
        0
    } else {
        !(bit(u + 1) - 1)
    }
}

/// A set of vertices of a graph of known order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    order: usize,
    bits: u64,
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl VertexSet {
    pub fn new(order: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        let mut bits = 0;
        for v in members {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            bits |= bit(v);
        }
        Ok(VertexSet { order, bits })
    }

    pub(crate) fn from_bits(order: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !full_mask(order), 0);
        VertexSet { order, bits }
    }

    pub fn empty(order: usize) -> Self {
        VertexSet { order, bits: 0 }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.bits & bit(v) != 0
    }

    pub fn min(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            order: self.order,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            order: self.order,
            bits: self.bits & other.bits,
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.bits & other.bits != 0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Image of the set under a vertex map.
    pub fn map(&self, image: &[usize]) -> VertexSet {
        VertexSet {
            order: self.order,
            bits: self.iter().fold(0, |acc, v| acc | bit(image[v])),
        }
    }
}

/// An induced subgraph together with the map from its ids back to the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub back_map: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// G₁ + G₂ with side provenance. Left ids are `0..n`, right ids `n..n+m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinGraph {
    graph: Graph,
    left: Graph,
    right: Graph,
}

impl JoinGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn left(&self) -> &Graph {
        &self.left
    }

    pub fn right(&self) -> &Graph {
        &self.right
    }

    pub fn left_order(&self) -> usize {
        self.left.order()
    }

    pub fn right_order(&self) -> usize {
        self.right.order()
    }

    pub fn side_of(&self, v: usize) -> Side {
        if v < self.left.order() {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn left_vertices(&self) -> VertexSet {
        VertexSet::from_bits(self.graph.order(), full_mask(self.left.order()))
    }

    pub fn right_vertices(&self) -> VertexSet {
        let all = full_mask(self.graph.order());
        VertexSet::from_bits(self.graph.order(), all & !full_mask(self.left.order()))
    }
}

/// The join G₁ + G₂.
pub fn join(g1: &Graph, g2: &Graph) -> Result<JoinGraph> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::InvalidParameter(
            "join operands must be nonempty".into(),
        ));
    }
    let union = g1.disjoint_union(g2)?;
    let n = g1.order();
    let total = union.order();
    let left_mask = full_mask(n);
    let right_mask = full_mask(total) & !left_mask;
    let rows = (0..total)
        .map(|v| {
            union.row(v)
                | if v < n {
                    right_mask
                } else {
                    left_mask
                }
        })
        .collect();
    Ok(JoinGraph {
        graph: Graph::from_rows(total, rows),
        left: g1.clone(),
        right: g2.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_dedups_and_rejects_bad_pairs() {
        let k3 = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.size(), 3);
        assert!(k3.is_complete());
        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let g = Graph::build(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(Graph::build(3, &[(2, 2)]), Err(Error::SelfLoop(2)));
    }

    #[test]
    fn edges_are_sorted_pairs() {
        let g = Graph::build(4, &[(3, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn non_neighborhood_contains_vertex() {
        let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for v in k4.vertices() {
            assert_eq!(k4.non_neighborhood(v).unwrap().to_vec(), vec![v]);
        }
        assert!(k4.non_neighborhood(4).is_err());
    }

    #[test]
    fn induced_relabels() {
        let c5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let s = VertexSet::new(5, [1, 2, 3]).unwrap();
        let ind = c5.induced(&s).unwrap();
        assert_eq!(ind.back_map, vec![1, 2, 3]);
        assert_eq!(ind.graph.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(c5.induced(&VertexSet::empty(5)), Err(Error::EmptySet));
    }

    #[test]
    fn join_counts_and_sides() {
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        let jg = join(&p3, &k2).unwrap();
        assert_eq!(jg.graph().order(), 5);
        assert_eq!(jg.graph().size(), 2 + 1 + 6);
        assert_eq!(jg.side_of(2), Side::Left);
        assert_eq!(jg.side_of(3), Side::Right);
        assert_eq!(jg.left_vertices().to_vec(), vec![0, 1, 2]);
        assert_eq!(jg.right_vertices().to_vec(), vec![3, 4]);
        let left = jg.graph().induced(&jg.left_vertices()).unwrap().graph;
        assert_eq!(left, p3);
    }

    #[test]
    fn complement_and_components() {
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let co = p3.complement();
        assert_eq!(co.edges(), vec![(0, 2)]);
        let comps: Vec<_> = co.components().iter().map(|c| c.to_vec()).collect();
        assert_eq!(comps, vec![vec![0, 2], vec![1]]);
    }
}
