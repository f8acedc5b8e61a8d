//! Exhaustive lists of small graphs up to isomorphism.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalForm};

/// Largest order generated internally.
pub const MAX_CORPUS_ORDER: usize = 7;

/// Every graph of order exactly `n`, one per isomorphism class, sorted by
/// size and then canonical form.
pub fn graphs_of_order(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CORPUS_ORDER {
        return Err(Error::OverCap {
            what: "corpus generation",
            order: n,
            cap: MAX_CORPUS_ORDER,
        });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(0)?];
    for order in 1..=n {
        let mut next: BTreeMap<(usize, CanonicalForm), Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u64..(1u64 << (order - 1)) {
                let mut edges = g.edges();
                edges.extend((0..order - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, order - 1)));
                let h = Graph::build(order, &edges)?;
                next.entry((h.size(), canonical_form(&h))).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Connected graphs of order `1..=max_order`, ordered by order.
pub fn connected_graphs(max_order: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(graphs_of_order(n)?.into_iter().filter(Graph::is_connected));
    }
    Ok(out)
}

/// Unordered pairs `(i, j)` with `i <= j`.
pub fn unordered_pairs(count: usize) -> Vec<(usize, usize)> {
    (0..count).flat_map(|i| (i..count).map(move |j| (i, j))).collect()
}
