//! The known bounds on D and D' of joins, as checks against the exact
//! solvers, plus two closed forms.

use serde::{Serialize, Serializer};

use crate::budget::Caps;
use crate::distinguishing::{distinguishing_index_capped, distinguishing_number_capped, DistinguishingIndex};
use crate::error::{Error, Result};
use crate::generators::{complete, complete_bipartite, iterated_join};
use crate::graph::{join, Graph};
use crate::hamiltonian::has_hamiltonian_path_capped;
use crate::iso::are_isomorphic;
use crate::join_partition::{gamma_structure, lambda_bounds};

/// A value known exactly or only to lie in `lo..=hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundValue {
    Exact(u32),
    Interval(u32, u32),
}

impl BoundValue {
    pub fn from_range(lo: u32, hi: u32) -> Self {
        if lo == hi {
            BoundValue::Exact(lo)
        } else {
            BoundValue::Interval(lo, hi)
        }
    }

    pub fn lo(&self) -> u32 {
        match *self {
            BoundValue::Exact(v) | BoundValue::Interval(v, _) => v,
        }
    }

    pub fn hi(&self) -> u32 {
        match *self {
            BoundValue::Exact(v) | BoundValue::Interval(_, v) => v,
        }
    }

    pub fn contains(&self, v: u32) -> bool {
        self.lo() <= v && v <= self.hi()
    }

    pub fn plus(&self, k: u32) -> Self {
        BoundValue::from_range(self.lo() + k, self.hi() + k)
    }
}

/// An integer, or `[lo, hi]` for an interval.
impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            BoundValue::Exact(v) => s.serialize_u32(v),
            BoundValue::Interval(lo, hi) => [lo, hi].serialize(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ImrichValue {
    Exact { value: u32 },
    Boundary { lo: u32, hi: u32 },
}

/// D(K_k □ K_n) from the closed form in terms of the unique `d` with
/// `(d-1)^k < n <= d^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ImrichResult {
    pub k: u32,
    pub n: u64,
    pub d: u64,
    pub value: ImrichValue,
}

impl ImrichResult {
    pub fn as_bound(&self) -> BoundValue {
        match self.value {
            ImrichValue::Exact { value } => BoundValue::Exact(value),
            ImrichValue::Boundary { lo, hi } => BoundValue::Interval(lo, hi),
        }
    }
}

/// `d^e`, saturating.
fn pow_sat(d: u64, e: u32) -> u128 {
    (d as u128).checked_pow(e).unwrap_or(u128::MAX)
}

/// Smallest `e` with `d^e >= k`, for `d >= 2`.
fn ceil_log(d: u64, k: u32) -> u32 {
    let mut e = 0;
    while pow_sat(d, e) < k as u128 {
        e += 1;
    }
    e
}

pub fn imrich(k: u32, n: u64) -> Result<ImrichResult> {
    if k == 0 || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "closed form needs k >= 1 and n >= 2, got k={k}, n={n}"
        )));
    }
    let mut d = 2u64;
    while pow_sat(d, k) < n as u128 {
        d += 1;
    }
    debug_assert!(pow_sat(d - 1, k) < n as u128);
    let top = pow_sat(d, k) as i128 - ceil_log(d, k) as i128;
    let n_i = n as i128;
    let d32 = u32::try_from(d).map_err(|_| Error::InvalidParameter("d overflows".into()))?;
    let value = if n_i < top {
        ImrichValue::Exact { value: d32 }
    } else if n_i > top {
        ImrichValue::Exact { value: d32 + 1 }
    } else {
        ImrichValue::Boundary { lo: d32, hi: d32 + 1 }
    };
    Ok(ImrichResult { k, n, d, value })
}

/// D'(K_{a,b}): exact when the graph is within the labeling cap, else the
/// closed form through the line graph K_a □ K_b (only for `a != b`).
/// `None` means the index is not defined (K_{1,1}).
pub fn complete_bipartite_index(a: usize, b: usize, caps: &Caps) -> Result<Option<BoundValue>> {
    let (a, b) = (a.min(b), a.max(b));
    if a == 0 {
        return Err(Error::InvalidParameter("empty part".into()));
    }
    if a + b <= caps.label_order {
        let kab = complete_bipartite(a, b)?;
        return Ok(distinguishing_index_capped(&kab, caps)?.value().map(BoundValue::Exact));
    }
    if a == b {
        return Err(Error::OverCap {
            what: "distinguishing index of K_{n,n}",
            order: a + b,
            cap: caps.label_order,
        });
    }
    Ok(Some(imrich(a as u32, b as u64)?.as_bound()))
}

/// D(K_{p,q}): the larger part when unequal, `p + 1` when equal.
pub fn complete_bipartite_number(p: usize, q: usize) -> u32 {
    if p == q {
        p as u32 + 1
    } else {
        p.max(q) as u32
    }
}

fn cube_test(d: u64, n: u64) -> bool {
    (d as u128) * (d as u128) * (d as u128 - 1) >= 2 * n as u128
}

/// D'(F_n) from the cube-root closed form. When the argument of the ceiling
/// is within 1e-9 of an integer the float is not trusted and the
/// equivalent integer condition `d²(d-1) >= 2n` decides.
pub fn friendship_index_formula(n: u64) -> Result<u32> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "friendship formula needs n >= 2, got {n}"
        )));
    }
    let nf = n as f64;
    let a = 1.0 + 27.0 * nf + 3.0 * (81.0 * nf * nf + 6.0 * nf).sqrt();
    let c = a.cbrt();
    let x = c / 3.0 + 1.0 / (3.0 * c) + 1.0 / 3.0;
    if (x - x.round()).abs() < 1e-9 {
        let mut d = 1u64;
        while !cube_test(d, n) {
            d += 1;
        }
        return Ok(d as u32);
    }
    Ok(x.ceil() as u32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Upper,
    Sandwich,
    Equality,
}

/// One statement evaluated on one input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub theorem: &'static str,
    pub kind: BoundKind,
    pub applicable: bool,
    /// False when the statement's hypotheses fail but the check was run anyway.
    pub hypothesis_met: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<BoundValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tight: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundEntry {
    fn new(theorem: &'static str, kind: BoundKind) -> Self {
        BoundEntry {
            theorem,
            kind,
            applicable: true,
            hypothesis_met: true,
            lower: None,
            upper: None,
            exact: None,
            holds: None,
            tight: None,
            note: None,
        }
    }

    fn inapplicable(theorem: &'static str, kind: BoundKind, note: impl Into<String>) -> Self {
        BoundEntry {
            applicable: false,
            note: Some(note.into()),
            ..Self::new(theorem, kind)
        }
    }

    /// Fills `holds` and `tight` from whatever is present.
    fn settle(mut self) -> Self {
        if let Some(x) = self.exact {
            let lo_ok = self.lower.is_none_or(|l| l <= x);
            let hi_ok = self.upper.is_none_or(|u| x <= u.hi());
            let eq_ok = match (self.kind, self.upper) {
                (BoundKind::Equality, Some(u)) => u.contains(x),
                _ => true,
            };
            self.holds = Some(lo_ok && hi_ok && eq_ok);
            self.tight = self.upper.map(|u| u == BoundValue::Exact(x));
        }
        self
    }

    /// The statement was applicable, its hypotheses held, and it failed.
    pub fn is_violation(&self) -> bool {
        self.applicable && self.hypothesis_met && self.holds == Some(false)
    }
}

fn degrade(theorem: &'static str, kind: BoundKind, e: Error) -> Result<BoundEntry> {
    if e.is_resource_limit() {
        Ok(BoundEntry::inapplicable(theorem, kind, e.to_string()))
    } else {
        Err(e)
    }
}

/// max{D(G₁), D(G₂)} <= D(G₁ + G₂) <= D(G₁) + D(G₂), stated for connected
/// graphs; disconnected inputs are evaluated and tagged.
pub fn check_sandwich(g1: &Graph, g2: &Graph, caps: &Caps) -> Result<BoundEntry> {
    let run = || -> Result<BoundEntry> {
        let jg = join(g1, g2)?;
        let d1 = distinguishing_number_capped(g1, caps)?.value;
        let d2 = distinguishing_number_capped(g2, caps)?.value;
        let dj = distinguishing_number_capped(jg.graph(), caps)?.value;
        let mut e = BoundEntry::new("thh5", BoundKind::Sandwich);
        e.hypothesis_met = g1.is_connected() && g2.is_connected();
        if !e.hypothesis_met {
            e.note = Some("operand not connected".into());
        }
        e.lower = Some(d1.max(d2));
        e.upper = Some(BoundValue::Exact(d1 + d2));
        e.exact = Some(dj);
        Ok(e.settle())
    };
    run().or_else(|e| degrade("thh5", BoundKind::Sandwich, e))
}

/// For non-isomorphic operands: equality with max{D₁, D₂} when no class is
/// merged, otherwise the upper bound max{D₁, D₂} + z.
pub fn djoin_bound(g1: &Graph, g2: &Graph, caps: &Caps) -> Result<BoundEntry> {
    if are_isomorphic(g1, g2) {
        return Ok(BoundEntry::inapplicable(
            "djoin",
            BoundKind::Upper,
            "operands are isomorphic; see selfjoin",
        ));
    }
    let run = || -> Result<BoundEntry> {
        let jg = join(g1, g2)?;
        let gs = gamma_structure(&jg);
        let d = distinguishing_number_capped(g1, caps)?
            .value
            .max(distinguishing_number_capped(g2, caps)?.value);
        let dj = distinguishing_number_capped(jg.graph(), caps)?.value;
        let mut e = match gs.z {
            None => {
                let mut e = BoundEntry::new("djoin", BoundKind::Equality);
                e.lower = Some(d);
                e.upper = Some(BoundValue::Exact(d));
                e.note = Some("q = 0".into());
                e
            }
            Some(z) => {
                let mut e = BoundEntry::new("djoin", BoundKind::Upper);
                e.upper = Some(BoundValue::Exact(d + z as u32));
                e.note = Some(format!("q = {}, z = {z}", gs.q));
                e
            }
        };
        e.exact = Some(dj);
        Ok(e.settle())
    };
    run().or_else(|e| degrade("djoin", BoundKind::Upper, e))
}

/// D(G) <= D(G + G) <= D(G) + max{n_i}.
pub fn self_join_bound(g: &Graph, caps: &Caps) -> Result<BoundEntry> {
    let run = || -> Result<BoundEntry> {
        let jg = join(g, g)?;
        let gs = gamma_structure(&jg);
        let d = distinguishing_number_capped(g, caps)?.value;
        let max_n = gs.z.expect("self join merges every class") as u32;
        let mut e = BoundEntry::new("selfjoin", BoundKind::Sandwich);
        e.lower = Some(d);
        e.upper = Some(BoundValue::Exact(d + max_n));
        e.exact = Some(distinguishing_number_capped(jg.graph(), caps)?.value);
        Ok(e.settle())
    };
    run().or_else(|e| degrade("selfjoin", BoundKind::Sandwich, e))
}

/// Both readings of the spanning-subgraph bound for orders `n`, `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpanningBound {
    /// D'(K_{n,m}) + 1; `None` for K_{1,1}, whose index is undefined.
    pub index_reading: Option<BoundValue>,
    /// D(K_{n,m}) + 1.
    pub number_reading: u32,
}

pub fn spanning_index_bound(n: usize, m: usize, caps: &Caps) -> Result<SpanningBound> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("orders must be >= 1".into()));
    }
    Ok(SpanningBound {
        index_reading: complete_bipartite_index(n, m, caps)?.map(|v| v.plus(1)),
        number_reading: complete_bipartite_number(n, m) + 1,
    })
}

/// 4 <= n <= m <= 2n (orders sorted first).
pub fn order_ratio_applies(n: usize, m: usize) -> bool {
    let (n, m) = (n.min(m), n.max(m));
    4 <= n && m <= 2 * n
}

/// With δ(G) <= δ(H): min{δ(G) + m, δ(H) + n} >= (n + m - 1)/2 and n + m >= 7.
pub fn min_degree_applies(g: &Graph, h: &Graph) -> bool {
    let (g, h) = if g.min_degree() <= h.min_degree() { (g, h) } else { (h, g) };
    let (n, m) = (g.order(), h.order());
    let lhs = (g.min_degree() + m).min(h.min_degree() + n);
    2 * lhs + 1 >= n + m && n + m >= 7
}

/// D' of the k-fold self join, which should be 2 except for K₂ + K₂.
pub fn iterated_self_join(g: &Graph, k: usize, caps: &Caps) -> Result<BoundEntry> {
    if g.order() < 2 || !g.is_connected() {
        return Err(Error::InvalidParameter(
            "needs a connected graph with at least two vertices".into(),
        ));
    }
    if k < 2 {
        return Err(Error::InvalidParameter("needs k >= 2".into()));
    }
    let expected = if k == 2 && are_isomorphic(g, &complete(2)?) { 3 } else { 2 };
    let run = || -> Result<BoundEntry> {
        let joined = iterated_join(g, k)?;
        let mut e = BoundEntry::new("iterated", BoundKind::Equality);
        e.lower = Some(expected);
        e.upper = Some(BoundValue::Exact(expected));
        e.exact = distinguishing_index_capped(&joined, caps)?.value();
        if e.exact.is_none() {
            e.holds = Some(false);
            e.note = Some("index not defined".into());
            return Ok(e);
        }
        Ok(e.settle())
    };
    run().or_else(|e| degrade("iterated", BoundKind::Equality, e))
}

/// Everything known about one pair.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub delta1: usize,
    pub delta2: usize,
    pub q: usize,
    pub z: Option<usize>,
    pub lambda1: Option<u32>,
    pub lambda2: Option<BoundValue>,
    pub d1: Option<u32>,
    pub d2: Option<u32>,
    pub d_join: Option<u32>,
    /// `None` when not computed; see `index_join_defined`.
    pub index_join: Option<u32>,
    pub index_join_defined: Option<bool>,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn violations(&self) -> Vec<&BoundEntry> {
        self.entries.iter().filter(|e| e.is_violation()).collect()
    }
}

fn upper_entry(theorem: &'static str, bound: Option<BoundValue>, exact: Option<u32>) -> BoundEntry {
    match bound {
        None => BoundEntry::inapplicable(theorem, BoundKind::Upper, "bound not defined"),
        Some(b) => {
            let mut e = BoundEntry::new(theorem, BoundKind::Upper);
            e.upper = Some(b);
            e.exact = exact;
            e.settle()
        }
    }
}

/// Runs every check on `g1 + g2`. Without `exact`, solver values are only
/// computed for joins of at most 10 vertices.
pub fn full_report(g1: &Graph, g2: &Graph, caps: &Caps, exact: bool) -> Result<BoundReport> {
    let jg = join(g1, g2)?;
    let (n, m) = (g1.order(), g2.order());
    let gs = gamma_structure(&jg);
    let solve = exact || n + m <= 10;
    let soft = |r: Result<u32>| -> Result<Option<u32>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e) if e.is_resource_limit() => Ok(None),
            Err(e) => Err(e),
        }
    };
    let number = |g: &Graph| soft(distinguishing_number_capped(g, caps).map(|d| d.value));
    let (d1, d2, d_join) = if solve {
        (number(g1)?, number(g2)?, number(jg.graph())?)
    } else {
        (None, None, None)
    };
    let (index_join, index_join_defined) = if solve {
        match distinguishing_index_capped(jg.graph(), caps) {
            Ok(DistinguishingIndex::Value { value, .. }) => (Some(value), Some(true)),
            Ok(DistinguishingIndex::NotDefined) => (None, Some(false)),
            Err(e) if e.is_resource_limit() => (None, None),
            Err(e) => return Err(e),
        }
    } else {
        (None, None)
    };
    let lambdas = match lambda_bounds(&jg, &gs, caps) {
        Ok(l) => Some(l),
        Err(e) if e.is_resource_limit() => None,
        Err(e) => return Err(e),
    };
    let lambda1 = lambdas.as_ref().and_then(|l| l.lambda1);
    let lambda2 = lambdas.as_ref().and_then(|l| l.lambda2);

    let mut entries = Vec::new();
    if solve {
        entries.push(check_sandwich(g1, g2, caps)?);
        entries.push(djoin_bound(g1, g2, caps)?);
        if are_isomorphic(g1, g2) {
            entries.push(self_join_bound(g1, caps)?);
        }
    }
    entries.push(upper_entry("thmd1", lambda1.map(BoundValue::Exact), index_join));
    entries.push(upper_entry("thmd2", lambda2, index_join));
    match spanning_index_bound(n, m, caps) {
        Ok(sb) => {
            entries.push(upper_entry("spanning", sb.index_reading, index_join));
            let mut e = upper_entry(
                "spanning_number_reading",
                Some(BoundValue::Exact(sb.number_reading)),
                index_join,
            );
            e.note = Some("D(K_{n,m}) + 1".into());
            entries.push(e);
        }
        Err(e) if e.is_resource_limit() => {
            entries.push(BoundEntry::inapplicable("spanning", BoundKind::Upper, e.to_string()))
        }
        Err(e) => return Err(e),
    }
    entries.push(if order_ratio_applies(n, m) {
        upper_entry("orderratio", Some(BoundValue::Exact(2)), index_join)
    } else {
        BoundEntry::inapplicable("orderratio", BoundKind::Upper, "needs 4 <= n <= m <= 2n")
    });
    entries.push(if min_degree_applies(g1, g2) {
        upper_entry("mindegree", Some(BoundValue::Exact(2)), index_join)
    } else {
        BoundEntry::inapplicable("mindegree", BoundKind::Upper, "degree condition fails")
    });
    let traceable = n + m >= 7
        && n + m <= caps.hamiltonian_order
        && has_hamiltonian_path_capped(jg.graph(), caps.hamiltonian_order)?;
    entries.push(if traceable {
        upper_entry("traceable", Some(BoundValue::Exact(2)), index_join)
    } else {
        BoundEntry::inapplicable("traceable", BoundKind::Upper, "needs order >= 7 and a Hamiltonian path")
    });
    if are_isomorphic(g1, g2) && g1.order() >= 2 && g1.is_connected() {
        let mut e = BoundEntry::new("iterated", BoundKind::Equality);
        let expected = if g1.order() == 2 { 3 } else { 2 };
        e.lower = Some(expected);
        e.upper = Some(BoundValue::Exact(expected));
        e.exact = index_join;
        entries.push(e.settle());
    }

    Ok(BoundReport {
        n,
        m,
        delta1: g1.min_degree(),
        delta2: g2.min_degree(),
        q: gs.q,
        z: gs.z,
        lambda1,
        lambda2,
        d1,
        d2,
        d_join,
        index_join,
        index_join_defined,
        entries,
    })
}
