//! Standard graph families and a small textual family-spec resolver.
//!
//! Vertex conventions: stars and friendship graphs put the centre at 0;
//! the friendship graph's triangles are `{0, 2i-1, 2i}`; bipartite and
//! multipartite parts are contiguous id blocks; the Cartesian product maps
//! `(a, b)` to `a * |H| + b`.

use crate::error::{Error, Result};
use crate::graph::{join, Graph, MAX_ORDER};

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, || "path needs n >= 1".into())?;
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::build(n, &e)?.with_name(format!("P{n}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, || "cycle needs n >= 3".into())?;
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::build(n, &e)?.with_name(format!("C{n}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, || "complete graph needs n >= 1".into())?;
    let mut e = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            e.push((u, v));
        }
    }
    Ok(Graph::build(n, &e)?.with_name(format!("K{n}")))
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    need(!parts.is_empty() && parts.iter().all(|&p| p >= 1), || {
        "multipartite parts must be nonempty and >= 1".into()
    })?;
    let n: usize = parts.iter().sum();
    let mut block = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        block.extend(std::iter::repeat_n(i, p));
    }
    let mut e = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if block[u] != block[v] {
                e.push((u, v));
            }
        }
    }
    let name = parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",");
    Ok(Graph::build(n, &e)?.with_name(format!("K{{{name}}}")))
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    Ok(complete_multipartite(&[p, q])?.with_name(format!("K{p},{q}")))
}

/// K_{1,n}.
pub fn star(n: usize) -> Result<Graph> {
    Ok(complete_bipartite(1, n)?.with_name(format!("K1,{n}")))
}

/// nK₂.
pub fn matching(n: usize) -> Result<Graph> {
    need(n >= 1, || "matching needs n >= 1".into())?;
    let e: Vec<_> = (0..n).map(|i| (2 * i, 2 * i + 1)).collect();
    Ok(Graph::build(2 * n, &e)?.with_name(format!("{n}K2")))
}

/// F_n = K₁ + nK₂.
pub fn friendship(n: usize) -> Result<Graph> {
    need(n >= 1, || "friendship graph needs n >= 1".into())?;
    let jg = join(&complete(1)?, &matching(n)?)?;
    Ok(jg.graph().clone().with_name(format!("F{n}")))
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (a, b) = (g.order(), h.order());
    need(a >= 1 && b >= 1, || "product operands must be nonempty".into())?;
    if a * b > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: a * b,
            max: MAX_ORDER,
        });
    }
    let id = |x: usize, y: usize| x * b + y;
    let mut e = Vec::new();
    for x in 0..a {
        for (y1, y2) in h.edges() {
            e.push((id(x, y1), id(x, y2)));
        }
    }
    for (x1, x2) in g.edges() {
        for y in 0..b {
            e.push((id(x1, y), id(x2, y)));
        }
    }
    let name = format!(
        "{}x{}",
        g.name().unwrap_or("G"),
        h.name().unwrap_or("H")
    );
    Ok(Graph::build(a * b, &e)?.with_name(name))
}

/// `G + G + ... + G` with `k` copies, copies laid out in consecutive blocks.
pub fn iterated_join(g: &Graph, k: usize) -> Result<Graph> {
    need(k >= 1, || "iterated join needs k >= 1".into())?;
    let mut acc = g.clone();
    for _ in 1..k {
        acc = join(&acc, g)?.graph().clone();
    }
    let name = vec![g.name().unwrap_or("G"); k].join("+");
    Ok(acc.with_name(name))
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn ints(args: &str) -> Result<Vec<usize>> {
    args.split(',')
        .map(|a| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {a:?} in family parameters")))
        })
        .collect()
}

fn one(family: &str, v: &[usize]) -> Result<usize> {
    match v {
        [x] => Ok(*x),
        _ => Err(Error::Parse(format!(
            "{family} takes exactly one parameter"
        ))),
    }
}

/// Names accepted by [`from_spec`].
pub const FAMILIES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "star",
    "friendship",
    "matching",
    "join",
    "cartesian",
];

/// Resolves a family spec such as `path:5`, `complete_bipartite:3,2`,
/// `join(star:3,star:3)` or `cartesian(complete:2,complete:4)`.
pub fn from_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    for op in ["join", "cartesian"] {
        if let Some(rest) = spec.strip_prefix(op).map(str::trim_start) {
            if let Some(inner) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                let operands = split_top_level(inner);
                let [a, b] = operands.as_slice() else {
                    return Err(Error::Parse(format!("{op}(...) takes two operands")));
                };
                let (g, h) = (from_spec(a)?, from_spec(b)?);
                let out = if op == "join" {
                    let name = format!("{}+{}", g.name().unwrap_or("G"), h.name().unwrap_or("H"));
                    join(&g, &h)?.graph().clone().with_name(name)
                } else {
                    cartesian_product(&g, &h)?
                };
                return Ok(out);
            }
        }
    }
    let (family, args) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("family spec {spec:?} needs the form name:params")))?;
    let v = ints(args)?;
    match family.trim() {
        "path" => path(one(family, &v)?),
        "cycle" => cycle(one(family, &v)?),
        "complete" => complete(one(family, &v)?),
        "star" => star(one(family, &v)?),
        "friendship" => friendship(one(family, &v)?),
        "matching" => matching(one(family, &v)?),
        "complete_bipartite" => match v.as_slice() {
            [p, q] => complete_bipartite(*p, *q),
            _ => Err(Error::Parse("complete_bipartite takes p,q".into())),
        },
        "complete_multipartite" => complete_multipartite(&v),
        other => Err(Error::Parse(format!("unknown graph family {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn sizes() {
        let f8 = friendship(8).unwrap();
        assert_eq!((f8.order(), f8.size()), (17, 24));
        assert_eq!(complete_bipartite(3, 3).unwrap().size(), 9);
        assert_eq!(cycle(5).unwrap().min_degree(), 2);
        assert_eq!(star(6).unwrap().min_degree(), 1);
        assert_eq!(matching(3).unwrap().size(), 3);
    }

    #[test]
    fn product_of_edges_is_square() {
        let k2 = complete(2).unwrap();
        let sq = cartesian_product(&k2, &k2).unwrap();
        assert!(are_isomorphic(&sq, &cycle(4).unwrap()));
        let kk = cartesian_product(&complete(3).unwrap(), &complete(4).unwrap()).unwrap();
        assert_eq!(kk.order(), 12);
        assert!(kk.vertices().all(|v| kk.degree(v) == 2 + 3));
    }

    #[test]
    fn size_violations() {
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn specs() {
        assert!(are_isomorphic(&from_spec("path:5").unwrap(), &path(5).unwrap()));
        let j = from_spec("join(star:3, star:3)").unwrap();
        assert_eq!(j.order(), 8);
        assert_eq!(j.size(), 3 + 3 + 16);
        let f = from_spec("join(complete:1,matching:2)").unwrap();
        assert!(are_isomorphic(&f, &friendship(2).unwrap()));
        assert!(from_spec("cartesian(complete:2,complete:3)").is_ok());
        assert!(from_spec("wheel:5").is_err());
        assert!(from_spec("path").is_err());
        assert!(from_spec("path:x").is_err());
    }

    #[test]
    fn k2_join_k2_is_k4() {
        let g = iterated_join(&complete(2).unwrap(), 2).unwrap();
        assert!(are_isomorphic(&g, &complete(4).unwrap()));
        let g3 = iterated_join(&complete(2).unwrap(), 3).unwrap();
        assert!(are_isomorphic(&g3, &complete(6).unwrap()));
    }
}
