//! Colour refinement with individualization over edge- and vertex-coloured
//! complete structures. Every exact procedure in the crate (isomorphism,
//! automorphism search, labeling verification) reduces to the searches here.
//!
//! A structure is an `n x n` symmetric matrix of edge colours (0 means
//! "not adjacent") plus a colour per vertex. Refinement is isomorphism
//! invariant: cell numbers depend only on colour values, never on vertex ids.

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Structure {
    n: usize,
    mat: Vec<u32>,
    colors: Vec<u32>,
}

impl Structure {
    pub fn from_graph(g: &Graph) -> Self {
        Self::with_vertex_colors(g, &vec![0; g.order()])
    }

    pub fn with_vertex_colors(g: &Graph, colors: &[u32]) -> Self {
        let n = g.order();
        let mut mat = vec![0u32; n * n];
        for (u, v) in g.edges() {
            mat[u * n + v] = 1;
            mat[v * n + u] = 1;
        }
        Structure {
            n,
            mat,
            colors: colors.to_vec(),
        }
    }

    /// `edge_color(u, v)` is consulted for edges of `g` only and must be
    /// positive.
    pub fn with_edge_colors(g: &Graph, mut edge_color: impl FnMut(usize, usize) -> u32) -> Self {
        let n = g.order();
        let mut mat = vec![0u32; n * n];
        for (u, v) in g.edges() {
            let c = edge_color(u, v);
            debug_assert!(c > 0);
            mat[u * n + v] = c;
            mat[v * n + u] = c;
        }
        Structure {
            n,
            mat,
            colors: vec![0; n],
        }
    }

    pub fn set_edge_color(&mut self, u: usize, v: usize, c: u32) {
        let n = self.n;
        self.mat[u * n + v] = c;
        self.mat[v * n + u] = c;
    }

    pub fn set_vertex_color(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
    }

    #[inline]
    fn at(&self, u: usize, v: usize) -> u32 {
        self.mat[u * self.n + v]
    }

    fn maps_onto(&self, other: &Structure, perm: &[usize]) -> bool {
        let n = self.n;
        (0..n).all(|u| {
            self.colors[u] == other.colors[perm[u]]
                && (0..n).all(|v| self.at(u, v) == other.at(perm[u], perm[v]))
        })
    }
}

type Cells = Vec<u32>;

fn signature(s: &Structure, cells: &[u32], v: usize, buf: &mut Vec<u64>) {
    buf.clear();
    for (u, &cu) in cells.iter().enumerate().take(s.n) {
        let c = s.at(v, u);
        if c != 0 && u != v {
            buf.push(((c as u64) << 32) | cu as u64);
        }
    }
    buf.sort_unstable();
    buf.insert(0, cells[v] as u64);
}

fn distinct(cells: &[u32]) -> usize {
    let mut v = cells.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Jointly refines the colourings of several structures of the same order.
/// Returns `false` as soon as the cell histograms diverge, meaning no
/// colour-preserving isomorphism between them exists.
fn refine_joint(parts: &mut [(&Structure, &mut Cells)]) -> bool {
    let n = parts[0].0.n;
    let mut count = distinct(parts[0].1);
    let mut buf = Vec::with_capacity(n + 1);
    loop {
        let mut sigs: Vec<Vec<u64>> = Vec::with_capacity(n * parts.len());
        for (s, cells) in parts.iter() {
            for v in 0..n {
                signature(s, cells, v, &mut buf);
                sigs.push(buf.clone());
            }
        }
        let mut keys: Vec<&Vec<u64>> = sigs.iter().collect();
        keys.sort_unstable();
        keys.dedup();
        let mut hist0: Vec<u32> = Vec::new();
        for (p, (_, cells)) in parts.iter_mut().enumerate() {
            let mut hist = vec![0u32; keys.len()];
            for v in 0..n {
                let sig = &sigs[p * n + v];
                let r = keys.binary_search(&sig).expect("signature present");
                cells[v] = r as u32;
                hist[r] += 1;
            }
            if p == 0 {
                hist0 = hist;
            } else if hist != hist0 {
                return false;
            }
        }
        let now = hist0.iter().filter(|&&h| h > 0).count();
        if now == count {
            return true;
        }
        count = now;
    }
}

fn refine(s: &Structure, cells: &mut Cells) {
    let ok = refine_joint(&mut [(s, cells)]);
    debug_assert!(ok);
}

/// First non-singleton cell in colour order, and its smallest vertex.
fn target_cell(cells: &[u32]) -> Option<(u32, usize)> {
    let mut counts = vec![0u32; cells.len()];
    for &c in cells {
        counts[c as usize] += 1;
    }
    let cell = counts.iter().position(|&k| k > 1)? as u32;
    let v = cells.iter().position(|&c| c == cell)?;
    Some((cell, v))
}

fn individualize(cells: &[u32], v: usize) -> Cells {
    let mut out: Cells = cells.iter().map(|&c| 2 * c).collect();
    out[v] += 1;
    out
}

fn members(cells: &[u32], cell: u32) -> impl Iterator<Item = usize> + '_ {
    cells
        .iter()
        .enumerate()
        .filter(move |(_, &c)| c == cell)
        .map(|(v, _)| v)
}

fn search_iso(
    a: &Structure,
    b: &Structure,
    mut ca: Cells,
    mut cb: Cells,
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    budget.tick()?;
    if !refine_joint(&mut [(a, &mut ca), (b, &mut cb)]) {
        return Ok(None);
    }
    let Some((cell, v)) = target_cell(&ca) else {
        let mut perm = vec![0; a.n];
        for (x, &c) in ca.iter().enumerate() {
            perm[x] = cb.iter().position(|&d| d == c).expect("histograms match");
        }
        return Ok(a.maps_onto(b, &perm).then_some(perm));
    };
    let left = individualize(&ca, v);
    for w in members(&cb, cell).collect::<Vec<_>>() {
        if let Some(p) = search_iso(a, b, left.clone(), individualize(&cb, w), budget)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// A bijection `p` with `b = p(a)` (colours and edge colours preserved).
pub(crate) fn find_isomorphism(
    a: &Structure,
    b: &Structure,
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    if a.n != b.n {
        return Ok(None);
    }
    if a.n == 0 {
        return Ok(Some(Vec::new()));
    }
    search_iso(a, b, a.colors.clone(), b.colors.clone(), budget)
}

/// Some non-identity automorphism of the coloured structure, if one exists.
///
/// Either an automorphism moves the target vertex `v` to another member of
/// its cell, or every automorphism fixes `v` and we descend into the
/// stabilizer.
pub(crate) fn nontrivial_automorphism(s: &Structure, budget: &Budget) -> Result<Option<Vec<usize>>> {
    let mut cells = s.colors.clone();
    loop {
        budget.tick()?;
        refine(s, &mut cells);
        let Some((cell, v)) = target_cell(&cells) else {
            return Ok(None);
        };
        let fixed = individualize(&cells, v);
        for w in members(&cells, cell).filter(|&w| w != v).collect::<Vec<_>>() {
            if let Some(p) = search_iso(s, s, fixed.clone(), individualize(&cells, w), budget)? {
                return Ok(Some(p));
            }
        }
        cells = fixed;
    }
}

/// Base points and coset representatives of a stabilizer chain of the
/// automorphism group. `transversals[i][0]` is always the identity.
#[derive(Debug, Clone)]
pub(crate) struct Chain {
    pub base: Vec<usize>,
    pub transversals: Vec<Vec<Vec<usize>>>,
}

impl Chain {
    pub fn order(&self) -> u128 {
        self.transversals.iter().map(|t| t.len() as u128).product()
    }
}

pub(crate) fn stabilizer_chain(s: &Structure, budget: &Budget) -> Result<Chain> {
    let identity: Vec<usize> = (0..s.n).collect();
    let mut cells = s.colors.clone();
    let mut chain = Chain {
        base: Vec::new(),
        transversals: Vec::new(),
    };
    loop {
        budget.tick()?;
        refine(s, &mut cells);
        let Some((cell, v)) = target_cell(&cells) else {
            return Ok(chain);
        };
        let fixed = individualize(&cells, v);
        let mut reps = vec![identity.clone()];
        for w in members(&cells, cell).filter(|&w| w != v).collect::<Vec<_>>() {
            if let Some(p) = search_iso(s, s, fixed.clone(), individualize(&cells, w), budget)? {
                reps.push(p);
            }
        }
        if reps.len() > 1 {
            chain.base.push(v);
            chain.transversals.push(reps);
        }
        cells = fixed;
    }
}

fn leaf_code(s: &Structure, cells: &[u32]) -> Vec<u32> {
    let n = s.n;
    let mut at_pos = vec![0usize; n];
    for (v, &c) in cells.iter().enumerate() {
        at_pos[c as usize] = v;
    }
    let mut code = Vec::with_capacity(n + n * (n - 1) / 2);
    code.extend(at_pos.iter().map(|&v| s.colors[v]));
    for i in 0..n {
        for j in (i + 1)..n {
            code.push(s.at(at_pos[i], at_pos[j]));
        }
    }
    code
}

fn canon_rec(s: &Structure, mut cells: Cells, best: &mut Option<Vec<u32>>, budget: &Budget) -> Result<()> {
    budget.tick()?;
    refine(s, &mut cells);
    let Some((cell, _)) = target_cell(&cells) else {
        let code = leaf_code(s, &cells);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return Ok(());
    };
    for w in members(&cells, cell).collect::<Vec<_>>() {
        canon_rec(s, individualize(&cells, w), best, budget)?;
    }
    Ok(())
}

/// Smallest leaf code over the whole individualization-refinement tree.
/// Two structures get equal codes iff they are isomorphic.
pub(crate) fn canonical_code(s: &Structure, budget: &Budget) -> Result<Vec<u32>> {
    let mut best = None;
    if s.n == 0 {
        return Ok(Vec::new());
    }
    canon_rec(s, s.colors.clone(), &mut best, budget)?;
    Ok(best.expect("at least one leaf"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &e).unwrap()
    }

    #[test]
    fn refinement_separates_degrees() {
        let star = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = Structure::from_graph(&star);
        let mut cells = vec![0; 4];
        refine(&s, &mut cells);
        assert_ne!(cells[0], cells[1]);
        assert_eq!(cells[1], cells[2]);
        assert_eq!(cells[2], cells[3]);
    }

    #[test]
    fn chain_order_of_cycles() {
        let b = Budget::unlimited();
        for n in 3..9 {
            let chain = stabilizer_chain(&Structure::from_graph(&cycle(n)), &b).unwrap();
            assert_eq!(chain.order(), 2 * n as u128);
        }
    }

    #[test]
    fn colored_cycle_rigid() {
        let b = Budget::unlimited();
        let g = cycle(6);
        let s = Structure::with_vertex_colors(&g, &[1, 1, 2, 1, 1, 1]);
        // one colour class of size 1 leaves the reflection through it
        assert!(nontrivial_automorphism(&s, &b).unwrap().is_some());
        let s = Structure::with_vertex_colors(&g, &[1, 2, 2, 1, 1, 1]);
        assert!(nontrivial_automorphism(&s, &b).unwrap().is_some());
        let s = Structure::with_vertex_colors(&g, &[1, 2, 2, 1, 2, 1]);
        assert!(nontrivial_automorphism(&s, &b).unwrap().is_none());
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        let b = Budget::unlimited();
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = g.relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert_eq!(
            canonical_code(&Structure::from_graph(&g), &b).unwrap(),
            canonical_code(&Structure::from_graph(&h), &b).unwrap()
        );
    }
}
