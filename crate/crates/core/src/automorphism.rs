//! Automorphism groups of small graphs.
//!
//! The group is computed as a stabilizer chain by individualization and
//! refinement; explicit element lists are products of the chain's coset
//! representatives, so they come out duplicate-free with the identity first.

use serde::Serialize;

use crate::budget::{Budget, Caps};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::labeling::{EdgeLabeling, Labeling};
use crate::refine::{stabilizer_chain, Chain, Structure};

/// A bijection on `0..n`, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidParameter(format!(
                    "{image:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Permutation(image))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Transposition of `a` and `b` on `0..n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        if a >= n || b >= n {
            return Err(Error::VertexOutOfRange {
                vertex: a.max(b),
                order: n,
            });
        }
        image.swap(a, b);
        Ok(Permutation(image))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// Vertices moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(v, &w)| *v != w)
            .map(|(v, _)| v)
            .collect()
    }
}

/// An explicitly enumerated automorphism group, stored flat.
#[derive(Debug, Clone)]
pub struct AutGroup {
    degree: usize,
    flat: Vec<u8>,
}

impl AutGroup {
    /// Number of vertices acted on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// |Aut(G)|.
    pub fn order(&self) -> usize {
        self.flat.len().checked_div(self.degree).unwrap_or(1)
    }

    pub fn get(&self, i: usize) -> Permutation {
        if self.degree == 0 {
            return Permutation(Vec::new());
        }
        let chunk = &self.flat[i * self.degree..(i + 1) * self.degree];
        Permutation(chunk.iter().map(|&b| b as usize).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.order()).map(|i| self.get(i))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.len() != self.degree {
            return false;
        }
        if self.degree == 0 {
            return true;
        }
        self.flat
            .chunks(self.degree)
            .any(|c| c.iter().zip(&p.0).all(|(&a, &b)| a as usize == b))
    }
}

fn chain_of(g: &Graph, caps: &Caps, budget: &Budget) -> Result<Chain> {
    if g.order() > caps.aut_order {
        return Err(Error::OverCap {
            what: "automorphism",
            order: g.order(),
            cap: caps.aut_order,
        });
    }
    stabilizer_chain(&Structure::from_graph(g), budget)
}

pub fn automorphisms(g: &Graph) -> Result<AutGroup> {
    automorphisms_capped(g, &Caps::default().unlimited_time())
}

pub fn automorphisms_capped(g: &Graph, caps: &Caps) -> Result<AutGroup> {
    let chain = chain_of(g, caps, &caps.budget())?;
    let order = chain.order();
    if order > caps.aut_elements as u128 {
        return Err(Error::GroupTooLarge {
            order,
            cap: caps.aut_elements,
        });
    }
    let n = g.order();
    // G_i = T_i · G_{i+1}; build from the deepest level up.
    let mut current: Vec<u8> = (0..n as u8).collect();
    for level in chain.transversals.iter().rev() {
        let count = current.len() / n.max(1);
        let mut next = Vec::with_capacity(current.len() * level.len());
        for t in level {
            for h in 0..count {
                let h = &current[h * n..(h + 1) * n];
                next.extend(h.iter().map(|&x| t[x as usize] as u8));
            }
        }
        current = next;
    }
    if n == 0 {
        current.clear();
    }
    Ok(AutGroup {
        degree: n,
        flat: current,
    })
}

/// |Aut(G)| without materializing the elements.
pub fn group_order(g: &Graph) -> Result<u128> {
    let caps = Caps::default().unlimited_time();
    Ok(chain_of(g, &caps, &Budget::unlimited())?.order())
}

pub fn group_order_capped(g: &Graph, caps: &Caps) -> Result<u128> {
    Ok(chain_of(g, caps, &caps.budget())?.order())
}

/// A generating set (the non-identity coset representatives of a stabilizer
/// chain). Empty iff the group is trivial.
pub fn generators(g: &Graph) -> Result<Vec<Permutation>> {
    let caps = Caps::default().unlimited_time();
    generators_capped(g, &caps)
}

pub fn generators_capped(g: &Graph, caps: &Caps) -> Result<Vec<Permutation>> {
    let chain = chain_of(g, caps, &caps.budget())?;
    Ok(chain
        .transversals
        .into_iter()
        .flat_map(|t| t.into_iter().skip(1))
        .map(Permutation)
        .collect())
}

/// Vertex orbits under Aut(G), ordered by smallest member.
pub fn orbits(g: &Graph) -> Result<Vec<VertexSet>> {
    let gens = generators(g)?;
    Ok(orbits_of(g.order(), &gens))
}

pub fn orbits_capped(g: &Graph, caps: &Caps) -> Result<Vec<VertexSet>> {
    let gens = generators_capped(g, caps)?;
    Ok(orbits_of(g.order(), &gens))
}

pub(crate) fn orbits_of(n: usize, gens: &[Permutation]) -> Vec<VertexSet> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for g in gens {
        for v in 0..n {
            let (a, b) = (find(&mut parent, v), find(&mut parent, g.apply(v)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(v);
    }
    groups
        .into_iter()
        .map(|m| VertexSet::new(n, m).expect("ids in range"))
        .collect()
}

fn check_size(g: &Graph, p: &Permutation) -> Result<()> {
    if p.len() != g.order() {
        return Err(Error::SizeMismatch {
            expected: g.order(),
            found: p.len(),
        });
    }
    Ok(())
}

/// `uv ∈ E ⇔ p(u)p(v) ∈ E`.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    check_size(g, p)?;
    Ok(g.vertices()
        .all(|u| g.vertices().all(|v| g.is_adjacent(u, v) == g.is_adjacent(p.apply(u), p.apply(v)))))
}

/// Image `{p(u), p(v)}` of an edge, normalized with the smaller id first.
pub fn edge_action(g: &Graph, p: &Permutation, e: (usize, usize)) -> Result<(usize, usize)> {
    check_size(g, p)?;
    let (u, v) = e;
    if !g.is_adjacent(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let (a, b) = (p.apply(u), p.apply(v));
    Ok((a.min(b), a.max(b)))
}

pub fn preserves_vertex_labeling(p: &Permutation, labeling: &Labeling) -> Result<bool> {
    if p.len() != labeling.len() {
        return Err(Error::PartialLabeling(format!(
            "labeling covers {} vertices, permutation acts on {}",
            labeling.len(),
            p.len()
        )));
    }
    Ok((0..p.len()).all(|x| labeling.label(p.apply(x)) == labeling.label(x)))
}

/// Every labeled edge must map to a labeled edge with the same label.
pub fn preserves_edge_labeling(p: &Permutation, labeling: &EdgeLabeling) -> Result<bool> {
    for ((u, v), l) in labeling.iter() {
        if u >= p.len() || v >= p.len() {
            return Err(Error::SizeMismatch {
                expected: p.len(),
                found: u.max(v) + 1,
            });
        }
        let image = labeling.label(p.apply(u), p.apply(v)).ok_or_else(|| {
            Error::PartialLabeling(format!(
                "image {}-{} of edge {u}-{v} is unlabeled",
                p.apply(u),
                p.apply(v)
            ))
        })?;
        if image != l {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn small_orders() {
        assert_eq!(automorphisms(&path(3).unwrap()).unwrap().order(), 2);
        assert_eq!(automorphisms(&cycle(4).unwrap()).unwrap().order(), 8);
        for n in 1..7 {
            let fact: usize = (1..=n).product();
            assert_eq!(automorphisms(&complete(n).unwrap()).unwrap().order(), fact);
        }
        assert_eq!(group_order(&complete(12).unwrap()).unwrap(), 479_001_600);
    }

    #[test]
    fn identity_first_and_all_valid() {
        let g = friendship(2).unwrap();
        let group = automorphisms(&g).unwrap();
        assert!(group.get(0).is_identity());
        assert_eq!(group.order(), 8);
        for p in group.iter() {
            assert!(is_automorphism(&g, &p).unwrap());
        }
    }

    #[test]
    fn is_automorphism_cases() {
        let c5 = cycle(5).unwrap();
        assert!(is_automorphism(&c5, &Permutation::identity(5)).unwrap());
        let rot = Permutation::new(vec![1, 2, 3, 4, 0]).unwrap();
        assert!(is_automorphism(&c5, &rot).unwrap());
        let star = star(3).unwrap();
        let t = Permutation::transposition(4, 0, 1).unwrap();
        assert!(!is_automorphism(&star, &t).unwrap());
        assert!(is_automorphism(&star, &Permutation::identity(3)).is_err());
    }

    #[test]
    fn orbit_partitions() {
        let show = |g: &Graph| -> Vec<Vec<usize>> {
            orbits(g).unwrap().iter().map(|o| o.to_vec()).collect()
        };
        assert_eq!(show(&star(3).unwrap()), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(show(&cycle(6).unwrap()), vec![vec![0, 1, 2, 3, 4, 5]]);
        assert_eq!(show(&path(4).unwrap()), vec![vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn edge_action_cases() {
        let p3 = path(3).unwrap();
        let rev = Permutation::new(vec![2, 1, 0]).unwrap();
        assert_eq!(edge_action(&p3, &rev, (0, 1)).unwrap(), (1, 2));
        assert_eq!(edge_action(&p3, &Permutation::identity(3), (1, 2)).unwrap(), (1, 2));
        assert_eq!(edge_action(&p3, &rev, (0, 2)), Err(Error::NotAnEdge(0, 2)));
        let c4 = cycle(4).unwrap();
        let rot = Permutation::new(vec![1, 2, 3, 0]).unwrap();
        for e in c4.edges() {
            assert_ne!(edge_action(&c4, &rot, e).unwrap(), e);
        }
    }

    #[test]
    fn labeling_preservation() {
        let rev = Permutation::new(vec![2, 1, 0]).unwrap();
        let same = Labeling::uniform(3);
        assert!(preserves_vertex_labeling(&rev, &same).unwrap());
        let ends = Labeling::from_labels(vec![1, 1, 2]).unwrap();
        assert!(!preserves_vertex_labeling(&rev, &ends).unwrap());
        assert!(preserves_vertex_labeling(&Permutation::identity(3), &ends).unwrap());
        let partial = Labeling::from_labels(vec![1, 1]).unwrap();
        assert!(preserves_vertex_labeling(&rev, &partial).is_err());
        let p3 = path(3).unwrap();
        assert!(preserves_edge_labeling(&rev, &EdgeLabeling::uniform(&p3)).unwrap());
        let split = EdgeLabeling::new([((0, 1), 1), ((1, 2), 2)], 2).unwrap();
        assert!(!preserves_edge_labeling(&rev, &split).unwrap());
    }

    #[test]
    fn element_cap() {
        let caps = Caps {
            aut_elements: 100,
            ..Caps::default()
        };
        assert!(matches!(
            automorphisms_capped(&complete(6).unwrap(), &caps),
            Err(Error::GroupTooLarge { order: 720, .. })
        ));
        let caps = Caps {
            aut_order: 4,
            ..Caps::default()
        };
        assert!(matches!(
            automorphisms_capped(&complete(6).unwrap(), &caps),
            Err(Error::OverCap { cap: 4, .. })
        ));
    }
}
