//! Corpus CSV over unordered pairs of connected graphs.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use symbreak::bounds::{full_report, BoundEntry, BoundValue};
use symbreak::corpus::{connected_graphs, unordered_pairs, MAX_CORPUS_ORDER};
use symbreak::io::{parse_graph6, write_graph6};
use symbreak::{Caps, Graph};

use crate::failure::{CliError, CliResult};

/// Pairs evaluated per parallel batch; rows are written batch by batch.
const CHUNK: usize = 64;

#[derive(Debug, Serialize)]
struct Row {
    g1: String,
    g2: String,
    n1: usize,
    n2: usize,
    d1: Option<u32>,
    d2: Option<u32>,
    d_join: Option<u32>,
    q: usize,
    z: Option<usize>,
    lambda1: Option<u32>,
    lambda2: Option<String>,
    index_join: Option<u32>,
    index_defined: Option<bool>,
    sandwich_holds: Option<bool>,
    djoin_bound: Option<String>,
    djoin_tight: Option<bool>,
    spanning_bound: Option<String>,
    violations: usize,
}

fn show(v: BoundValue) -> String {
    match v {
        BoundValue::Exact(x) => x.to_string(),
        BoundValue::Interval(lo, hi) => format!("{lo}..{hi}"),
    }
}

fn entry<'a>(entries: &'a [BoundEntry], id: &str) -> Option<&'a BoundEntry> {
    entries.iter().find(|e| e.theorem == id && e.applicable)
}

fn row(g1: &Graph, g2: &Graph, caps: &Caps) -> CliResult<Row> {
    let r = full_report(g1, g2, caps, false)?;
    let djoin = entry(&r.entries, "djoin");
    Ok(Row {
        g1: write_graph6(g1),
        g2: write_graph6(g2),
        n1: r.n,
        n2: r.m,
        d1: r.d1,
        d2: r.d2,
        d_join: r.d_join,
        q: r.q,
        z: r.z,
        lambda1: r.lambda1,
        lambda2: r.lambda2.map(show),
        index_join: r.index_join,
        index_defined: r.index_join_defined,
        sandwich_holds: entry(&r.entries, "thh5").and_then(|e| e.holds),
        djoin_bound: djoin.and_then(|e| e.upper).map(show),
        djoin_tight: djoin.and_then(|e| e.tight),
        spanning_bound: entry(&r.entries, "spanning").and_then(|e| e.upper).map(show),
        violations: r.violations().len(),
    })
}

fn read_list(path: &Path, max_order: usize) -> CliResult<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') || line.starts_with('>') {
            continue;
        }
        let g = parse_graph6(line)?;
        if g.order() <= max_order && g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

pub fn run(max_order: usize, input: Option<&Path>, caps: &Caps, out: impl Write) -> CliResult<()> {
    let graphs = match input {
        Some(p) => read_list(p, max_order)?,
        None if max_order > MAX_CORPUS_ORDER => {
            return Err(CliError::Input(format!(
                "orders above {MAX_CORPUS_ORDER} need a graph6 list via --input"
            )))
        }
        None => connected_graphs(max_order)?,
    };
    let pairs = unordered_pairs(graphs.len());
    let mut writer = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| CliError::Input(e.to_string());
    let mut violations = 0;
    for chunk in pairs.chunks(CHUNK) {
        let rows: Vec<CliResult<Row>> =
            chunk.par_iter().map(|&(i, j)| row(&graphs[i], &graphs[j], caps)).collect();
        for r in rows {
            let r = r?;
            violations += r.violations;
            writer.serialize(&r).map_err(csv_err)?;
        }
        writer.flush()?;
    }
    // an empty corpus still gets its header
    if pairs.is_empty() {
        writer
            .write_record([
                "g1", "g2", "n1", "n2", "d1", "d2", "d_join", "q", "z", "lambda1", "lambda2",
                "index_join", "index_defined", "sandwich_holds", "djoin_bound", "djoin_tight",
                "spanning_bound", "violations",
            ])
            .map_err(csv_err)?;
    }
    writer.flush()?;
    if violations > 0 {
        return Err(CliError::Violation(format!("{violations} bound violations in corpus")));
    }
    Ok(())
}
