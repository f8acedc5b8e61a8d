//! graph6 and plain edge-list text formats.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn write_order(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

/// Encodes `g` in graph6: order header, then the upper triangle of the
/// adjacency matrix column by column, packed six bits per printable byte.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    write_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.is_adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(parse_err(format!("byte {b:#04x} outside the graph6 range")))
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, body) = match bytes {
        [] => return Err(parse_err("empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(parse_err("truncated 8-byte graph6 order header"));
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = (n << 6) | sextet(b)? as usize;
            }
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err("truncated 4-byte graph6 order header"));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | sextet(b)? as usize;
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => (sextet(*b)? as usize, rest),
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(format!(
            "graph6 body has {} bytes, order {n} needs {expected}",
            body.len()
        )));
    }
    let values = body.iter().map(|&b| sextet(b)).collect::<Result<Vec<u8>>>()?;
    let bit_at = |k: usize| (values[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit_at) {
        return Err(parse_err("nonzero graph6 padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::build(n, &edges)
}

/// Parses `"n m"` followed by `m` lines `"u v"`. Blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| parse_err("empty edge list"))?;
    let nums = |line: &str| -> Result<Vec<usize>> {
        line.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(format!("bad integer {t:?} in edge list")))
            })
            .collect()
    };
    let [n, m] = nums(header)?[..] else {
        return Err(parse_err("edge list header must be \"n m\""));
    };
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        match nums(line)?[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(parse_err(format!("edge line {line:?} must be \"u v\""))),
        }
    }
    if edges.len() != m {
        return Err(parse_err(format!(
            "edge list declares {m} edges but lists {}",
            edges.len()
        )));
    }
    Graph::build(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Accepts either format: an edge list when the first line is two integers,
/// graph6 otherwise.
pub fn parse_any(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let looks_numeric = first.split_whitespace().count() == 2
        && first.split_whitespace().all(|t| t.parse::<usize>().is_ok());
    if looks_numeric {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}
