use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_HAMILTONIAN_CAP: usize = 20;

/// Exact Hamiltonian path test over (visited set, endpoint) states.
pub fn has_hamiltonian_path(g: &Graph) -> Result<bool> {
    has_hamiltonian_path_capped(g, DEFAULT_HAMILTONIAN_CAP)
}

pub fn has_hamiltonian_path_capped(g: &Graph, cap: usize) -> Result<bool> {
    let n = g.order();
    if n > cap {
        return Err(Error::OverCap {
            what: "Hamiltonian path",
            order: n,
            cap,
        });
    }
    if n <= 1 {
        return Ok(true);
    }
    if !g.is_connected() {
        return Ok(false);
    }
    let full = (1usize << n) - 1;
    // ends[mask]: vertices at which some path covering exactly `mask` can end
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let mut e = ends[mask];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = g.row(v) as usize & !mask;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    Ok(ends[full] != 0)
}
