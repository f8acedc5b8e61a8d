//! Brute-force reference implementations: every permutation, every labeling.
//! Slow and obviously correct; used to check the pruned solvers.

use itertools::Itertools;
use rand::Rng;
use symbreak::Graph;

pub fn naive_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let edges = g.edges();
    (0..n)
        .permutations(n)
        .filter(|p| edges.iter().all(|&(u, v)| g.is_adjacent(p[u], p[v])))
        .collect()
}

pub fn naive_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    let edges = g.edges();
    (0..n)
        .permutations(n)
        .any(|p| edges.iter().all(|&(u, v)| h.is_adjacent(p[u], p[v])))
}

/// All words of length `len` over `0..d`.
fn words(len: usize, d: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (d as u64).pow(len as u32);
    (0..total).map(move |mut x| {
        (0..len)
            .map(|_| {
                let digit = (x % d as u64) as u32;
                x /= d as u64;
                digit
            })
            .collect()
    })
}

fn fixed_by_none(perms: &[Vec<usize>], labels: &[u32]) -> bool {
    perms
        .iter()
        .all(|p| labels.iter().enumerate().any(|(i, &l)| labels[p[i]] != l))
}

fn nontrivial(auts: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    auts.into_iter()
        .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
        .collect()
}

/// Smallest d such that some labeling with d labels is fixed by no
/// nontrivial automorphism; every labeling is tried.
pub fn naive_distinguishing_number(g: &Graph) -> u32 {
    let n = g.order();
    let perms = nontrivial(naive_automorphisms(g));
    (1..=n.max(1) as u32)
        .find(|&d| words(n, d).any(|w| fixed_by_none(&perms, &w)))
        .unwrap()
}

/// Automorphisms acting on edge indices.
fn edge_permutations(g: &Graph) -> Vec<Vec<usize>> {
    let edges = g.edges();
    naive_automorphisms(g)
        .into_iter()
        .map(|p| {
            edges
                .iter()
                .map(|&(u, v)| {
                    let e = (p[u].min(p[v]), p[u].max(p[v]));
                    edges.binary_search(&e).unwrap()
                })
                .collect::<Vec<usize>>()
        })
        .collect()
}

/// `None` when some nontrivial automorphism fixes every edge.
pub fn naive_distinguishing_index(g: &Graph) -> Option<u32> {
    let auts = nontrivial(naive_automorphisms(g));
    let m = g.size();
    if m == 0 {
        return auts.is_empty().then_some(1);
    }
    let edge_perms: Vec<Vec<usize>> = edge_permutations(g)
        .into_iter()
        .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
        .collect();
    if edge_perms.len() < auts.len() {
        return None;
    }
    (1..=m as u32).find(|&d| words(m, d).any(|w| fixed_by_none(&edge_perms, &w)))
}

pub fn naive_hamiltonian_path(g: &Graph) -> bool {
    let n = g.order();
    n <= 1
        || (0..n)
            .permutations(n)
            .any(|p| p.windows(2).all(|w| g.is_adjacent(w[0], w[1])))
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// Co-components: components of the complement, as sorted id lists.
pub fn co_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = g.complement().components().iter().map(|c| c.to_vec()).collect();
    out.sort();
    out
}
