//! The non-neighbourhood closure partition of a join, its isomorphism
//! classes, the merged Γ classes, and the labelings built on top of them.

use serde::Serialize;

use crate::bounds::{complete_bipartite_index, BoundValue};
use crate::budget::Caps;
use crate::distinguishing::{
    distinguishing_index_capped, distinguishing_number_capped, is_distinguishing_capped,
    is_distinguishing_edges_capped, DistinguishingIndex, EdgeLabeling, Labeling,
};
use crate::error::{Error, Result};
use crate::generators::complete_bipartite;
use crate::graph::{join, Graph, Induced, JoinGraph, Side, VertexSet};
use crate::iso::{canonical_form, CanonicalForm};

/// Closure classes: `a` partitions the left side, `b` the right side.
/// Sets are over the vertex ids of the join.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SidePartition {
    #[serde(rename = "A")]
    pub a: Vec<VertexSet>,
    #[serde(rename = "B")]
    pub b: Vec<VertexSet>,
}

impl SidePartition {
    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn k_prime(&self) -> usize {
        self.b.len()
    }

    pub fn classes(&self, side: Side) -> &[VertexSet] {
        match side {
            Side::Left => &self.a,
            Side::Right => &self.b,
        }
    }

    /// All classes, left ones first.
    pub fn all(&self) -> impl Iterator<Item = &VertexSet> {
        self.a.iter().chain(self.b.iter())
    }
}

fn closure_classes(g: &Graph, side: VertexSet) -> Result<Vec<VertexSet>> {
    let mut remaining = side;
    let mut classes = Vec::new();
    while let Some(v) = remaining.min() {
        let mut class = g.non_neighborhood(v)?;
        loop {
            let mut grown = class;
            for u in remaining.iter() {
                if !class.contains(u) {
                    let nb = g.non_neighborhood(u)?;
                    if nb.intersects(&class) {
                        grown = grown.union(&nb);
                    }
                }
            }
            if grown == class {
                break;
            }
            class = grown;
        }
        remaining = VertexSet::from_bits(remaining.order(), remaining.bits() & !class.bits());
        classes.push(class);
    }
    Ok(classes)
}

/// Repeatedly merges intersecting non-neighbourhoods on each side until
/// nothing changes. Classes are ordered by smallest member.
pub fn side_partition(jg: &JoinGraph) -> SidePartition {
    let g = jg.graph();
    SidePartition {
        a: closure_classes(g, jg.left_vertices()).expect("ids in range"),
        b: closure_classes(g, jg.right_vertices()).expect("ids in range"),
    }
}

/// One isomorphism group: indices into the side's class list whose induced
/// subgraphs are pairwise isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoGroup {
    pub members: Vec<usize>,
    #[serde(skip)]
    pub form: CanonicalForm,
}

impl IsoGroup {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoClasses {
    pub a_groups: Vec<IsoGroup>,
    pub b_groups: Vec<IsoGroup>,
}

impl IsoClasses {
    pub fn t(&self) -> usize {
        self.a_groups.len()
    }

    pub fn t_prime(&self) -> usize {
        self.b_groups.len()
    }
}

fn group_by_form(g: &Graph, classes: &[VertexSet]) -> Vec<IsoGroup> {
    let mut keyed: Vec<(CanonicalForm, usize)> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (canonical_form(&g.induced(c).expect("nonempty class").graph), i))
        .collect();
    keyed.sort();
    let mut groups: Vec<IsoGroup> = Vec::new();
    for (form, i) in keyed {
        match groups.last_mut() {
            Some(last) if last.form == form => last.members.push(i),
            _ => groups.push(IsoGroup {
                members: vec![i],
                form,
            }),
        }
    }
    groups
}

/// Groups are ordered by class size, then canonical form.
pub fn iso_classes(jg: &JoinGraph, sp: &SidePartition) -> IsoClasses {
    IsoClasses {
        a_groups: group_by_form(jg.graph(), &sp.a),
        b_groups: group_by_form(jg.graph(), &sp.b),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaTag {
    Merged,
    LeftOnly,
    RightOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaMember {
    pub side: Side,
    /// Index into the side's class list.
    pub class: usize,
    pub vertices: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaClass {
    pub tag: GammaTag,
    pub members: Vec<GammaMember>,
    #[serde(skip)]
    pub support: VertexSet,
}

impl GammaClass {
    pub fn members_on(&self, side: Side) -> impl Iterator<Item = &GammaMember> {
        self.members.iter().filter(move |m| m.side == side)
    }
}

/// Γ classes: merged ones first, then left-only, then right-only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaStructure {
    pub classes: Vec<GammaClass>,
    pub q: usize,
    pub z: Option<usize>,
    /// Side whose merged multiplicities realize `z`; `None` when `q = 0`.
    pub z_side: Option<Side>,
}

impl GammaStructure {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

fn gamma_class(tag: GammaTag, sp: &SidePartition, parts: &[(Side, &IsoGroup)]) -> GammaClass {
    let order = sp.a[0].order();
    let mut support = VertexSet::empty(order);
    let mut members = Vec::new();
    for &(side, group) in parts {
        for &i in &group.members {
            let vertices = sp.classes(side)[i];
            support = support.union(&vertices);
            members.push(GammaMember {
                side,
                class: i,
                vertices,
            });
        }
    }
    GammaClass {
        tag,
        members,
        support,
    }
}

pub fn gamma_partition(sp: &SidePartition, ic: &IsoClasses) -> GammaStructure {
    let mut matched_b = vec![false; ic.b_groups.len()];
    let mut merged = Vec::new();
    let mut left_only = Vec::new();
    for ga in &ic.a_groups {
        match ic.b_groups.iter().position(|gb| gb.form == ga.form) {
            Some(j) => {
                matched_b[j] = true;
                merged.push((ga, &ic.b_groups[j]));
            }
            None => left_only.push(ga),
        }
    }
    let q = merged.len();
    let (z, z_side) = if q == 0 {
        (None, None)
    } else {
        let max_n = merged.iter().map(|(a, _)| a.multiplicity()).max().unwrap_or(0);
        let max_m = merged.iter().map(|(_, b)| b.multiplicity()).max().unwrap_or(0);
        if max_n <= max_m {
            (Some(max_n), Some(Side::Left))
        } else {
            (Some(max_m), Some(Side::Right))
        }
    };
    let mut classes: Vec<GammaClass> = merged
        .iter()
        .map(|&(a, b)| gamma_class(GammaTag::Merged, sp, &[(Side::Left, a), (Side::Right, b)]))
        .collect();
    classes.extend(
        left_only
            .into_iter()
            .map(|a| gamma_class(GammaTag::LeftOnly, sp, &[(Side::Left, a)])),
    );
    classes.extend(
        ic.b_groups
            .iter()
            .zip(&matched_b)
            .filter(|(_, &m)| !m)
            .map(|(b, _)| gamma_class(GammaTag::RightOnly, sp, &[(Side::Right, b)])),
    );
    GammaStructure {
        classes,
        q,
        z,
        z_side,
    }
}

/// Partition, grouping and merge in one call.
pub fn gamma_structure(jg: &JoinGraph) -> GammaStructure {
    let sp = side_partition(jg);
    let ic = iso_classes(jg, &sp);
    gamma_partition(&sp, &ic)
}

/// Γ'_i: the join induced on the support of Γ_i.
pub fn gamma_prime(jg: &JoinGraph, gs: &GammaStructure) -> Vec<Induced> {
    gs.classes
        .iter()
        .map(|c| jg.graph().induced(&c.support).expect("nonempty support"))
        .collect()
}

/// Each side gets an optimal distinguishing labeling; then in every merged
/// class the i-th member on the `z` side has its smallest vertex relabeled
/// to `d + i`. Uses at most `max{D(G₁), D(G₂)} + z` labels.
pub fn construct_join_vertex_labeling(g1: &Graph, g2: &Graph, caps: &Caps) -> Result<Labeling> {
    let jg = join(g1, g2)?;
    let gs = gamma_structure(&jg);
    let w1 = distinguishing_number_capped(g1, caps)?;
    let w2 = distinguishing_number_capped(g2, caps)?;
    let d = w1.value.max(w2.value);
    let mut labels: Vec<u32> = w1.witness.labels().to_vec();
    labels.extend_from_slice(w2.witness.labels());
    if let Some(side) = gs.z_side {
        for class in gs.classes.iter().filter(|c| c.tag == GammaTag::Merged) {
            for (i, m) in class.members_on(side).enumerate() {
                let v = m.vertices.min().expect("nonempty class");
                labels[v] = d + 1 + i as u32;
            }
        }
    }
    let count = d + gs.z.unwrap_or(0) as u32;
    let labeling = Labeling::new(labels, count)?;
    if !is_distinguishing_capped(jg.graph(), &labeling, caps)? {
        return Err(Error::ConstructionFailed(
            "bumped join labeling is not distinguishing".into(),
        ));
    }
    Ok(labeling)
}

/// The same construction for G + G, using `D(G) + max{n_i}` labels.
pub fn construct_self_join_labeling(g: &Graph, caps: &Caps) -> Result<Labeling> {
    construct_join_vertex_labeling(g, g, caps)
}

fn lift_edges(
    out: &mut std::collections::BTreeMap<(usize, usize), u32>,
    labeling: &EdgeLabeling,
    back_map: &[usize],
) {
    for ((u, v), l) in labeling.iter() {
        let (a, b) = (back_map[u], back_map[v]);
        out.insert((a.min(b), a.max(b)), l);
    }
}

/// Labels each Γ'_i optimally and every other edge 1.
pub fn construct_gamma_edge_labeling(
    jg: &JoinGraph,
    gs: &GammaStructure,
    caps: &Caps,
) -> Result<EdgeLabeling> {
    let g = jg.graph();
    let mut labels: std::collections::BTreeMap<(usize, usize), u32> =
        g.edges().into_iter().map(|e| (e, 1)).collect();
    let mut count = 1;
    for (i, sub) in gamma_prime(jg, gs).iter().enumerate() {
        match distinguishing_index_capped(&sub.graph, caps)? {
            DistinguishingIndex::NotDefined => {
                return Err(Error::IndexNotDefined(format!("Γ'_{}", i + 1)))
            }
            DistinguishingIndex::Value { value, witness } => {
                count = count.max(value);
                lift_edges(&mut labels, &witness, &sub.back_map);
            }
        }
    }
    let labeling = EdgeLabeling::new(labels, count)?;
    if !is_distinguishing_edges_capped(g, &labeling, caps)? {
        return Err(Error::ConstructionFailed(
            "Γ' edge labeling is not distinguishing".into(),
        ));
    }
    Ok(labeling)
}

/// A set of class pairs covering every Γ class, with the largest
/// D'(K_{a,b}) among its pairs. `epsilon` is `None` when some pair has no
/// distinguishing index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteCover {
    pub pairs: Vec<(usize, usize)>,
    pub epsilon: Option<BoundValue>,
}

/// All inclusion-minimal edge covers of the complete graph on `c` vertices.
/// These are exactly the spanning forests of stars with at least one edge.
pub fn minimal_covers(c: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        remaining: &[usize],
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some((&first, rest)) = remaining.split_first() else {
            let mut cover = current.clone();
            cover.sort_unstable();
            out.push(cover);
            return;
        };
        // choose the block containing `first`: any subset of the rest of size >= 1
        let r = rest.len();
        for mask in 1u64..(1u64 << r) {
            let block: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).map(|i| rest[i]).collect();
            let others: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 0).map(|i| rest[i]).collect();
            let mut members = vec![first];
            members.extend(&block);
            let centres: &[usize] = if members.len() == 2 { &members[..1] } else { &members };
            for &centre in centres {
                let before = current.len();
                for &leaf in members.iter().filter(|&&v| v != centre) {
                    current.push((centre.min(leaf), centre.max(leaf)));
                }
                rec(&others, current, out);
                current.truncate(before);
            }
        }
    }
    let vertices: Vec<usize> = (0..c).collect();
    let mut out = Vec::new();
    if c >= 2 {
        rec(&vertices, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

fn max_value(a: BoundValue, b: BoundValue) -> BoundValue {
    BoundValue::from_range(a.lo().max(b.lo()), a.hi().max(b.hi()))
}

fn min_value(a: BoundValue, b: BoundValue) -> BoundValue {
    BoundValue::from_range(a.lo().min(b.lo()), a.hi().min(b.hi()))
}

/// Minimal covers of the Γ classes with their ε values.
pub fn enumerate_covers(gs: &GammaStructure, caps: &Caps) -> Result<Vec<BipartiteCover>> {
    if gs.len() < 2 {
        return Err(Error::NoCover(format!(
            "{} Γ class(es); a cover needs at least two",
            gs.len()
        )));
    }
    let sizes: Vec<usize> = gs.classes.iter().map(|c| c.support.len()).collect();
    let mut cache = std::collections::HashMap::new();
    let mut covers = Vec::new();
    for pairs in minimal_covers(gs.len()) {
        let mut eps: Option<BoundValue> = None;
        let mut defined = true;
        for &(s, t) in &pairs {
            let key = (sizes[s].min(sizes[t]), sizes[s].max(sizes[t]));
            let value = match cache.get(&key) {
                Some(v) => *v,
                None => {
                    let v = complete_bipartite_index(key.0, key.1, caps)?;
                    cache.insert(key, v);
                    v
                }
            };
            match value {
                Some(v) => eps = Some(eps.map_or(v, |e| max_value(e, v))),
                None => defined = false,
            }
        }
        covers.push(BipartiteCover {
            pairs,
            epsilon: if defined { eps } else { None },
        });
    }
    Ok(covers)
}

/// Labels the complete bipartite edge set of each cover pair with an
/// optimal distinguishing labeling of K_{a,b}; every other edge gets 1.
pub fn cover_edge_labeling(
    jg: &JoinGraph,
    gs: &GammaStructure,
    cover: &[(usize, usize)],
    caps: &Caps,
) -> Result<EdgeLabeling> {
    let g = jg.graph();
    let mut labels: std::collections::BTreeMap<(usize, usize), u32> =
        g.edges().into_iter().map(|e| (e, 1)).collect();
    let mut count = 1;
    for &(s, t) in cover {
        if s == t || s >= gs.len() || t >= gs.len() {
            return Err(Error::InvalidParameter(format!("bad cover pair ({s}, {t})")));
        }
        let xs = gs.classes[s].support.to_vec();
        let ys = gs.classes[t].support.to_vec();
        let kab = complete_bipartite(xs.len(), ys.len())?;
        let witness = match distinguishing_index_capped(&kab, caps)? {
            DistinguishingIndex::Value { value, witness } => {
                count = count.max(value);
                witness
            }
            DistinguishingIndex::NotDefined => {
                return Err(Error::IndexNotDefined(format!(
                    "K_{{{},{}}} for pair ({s}, {t})",
                    xs.len(),
                    ys.len()
                )))
            }
        };
        let back_map: Vec<usize> = xs.iter().chain(ys.iter()).copied().collect();
        lift_edges(&mut labels, &witness, &back_map);
    }
    let labeling = EdgeLabeling::new(labels, count)?;
    if !is_distinguishing_edges_capped(g, &labeling, caps)? {
        return Err(Error::ConstructionFailed(
            "cover edge labeling is not distinguishing".into(),
        ));
    }
    Ok(labeling)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaBounds {
    pub lambda1: Option<u32>,
    pub lambda2: Option<BoundValue>,
    /// A cover realizing `lambda2`.
    pub best_cover: Option<Vec<(usize, usize)>>,
    /// Only inclusion-minimal covers are considered.
    pub minimal_covers_only: bool,
}

/// λ₁ = max D'(Γ'_i) when every Γ'_i has an index; λ₂ = min ε over covers.
pub fn lambda_bounds(jg: &JoinGraph, gs: &GammaStructure, caps: &Caps) -> Result<LambdaBounds> {
    let mut lambda1 = Some(1);
    for sub in gamma_prime(jg, gs) {
        match distinguishing_index_capped(&sub.graph, caps)? {
            DistinguishingIndex::NotDefined => {
                lambda1 = None;
                break;
            }
            DistinguishingIndex::Value { value, .. } => lambda1 = lambda1.map(|l: u32| l.max(value)),
        }
    }
    let mut lambda2: Option<BoundValue> = None;
    let mut best_cover = None;
    if gs.len() >= 2 {
        for cover in enumerate_covers(gs, caps)? {
            if let Some(e) = cover.epsilon {
                let better = lambda2.is_none_or(|l| (e.hi(), e.lo()) < (l.hi(), l.lo()));
                if better {
                    best_cover = Some(cover.pairs.clone());
                }
                lambda2 = Some(lambda2.map_or(e, |l| min_value(l, e)));
            }
        }
    }
    Ok(LambdaBounds {
        lambda1,
        lambda2,
        best_cover,
        minimal_covers_only: true,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_labeling: Option<Labeling>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_edge_labeling: Option<EdgeLabeling>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover_edge_labeling: Option<EdgeLabeling>,
    /// Why a construction was not produced, keyed by construction name.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unavailable: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionCertificate {
    #[serde(rename = "A")]
    pub a: Vec<Vec<usize>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<usize>>,
    pub gamma: Vec<GammaClass>,
    pub q: usize,
    pub z: Option<usize>,
    pub lambda1: Option<u32>,
    pub lambda2: Option<BoundValue>,
    pub witness: Witness,
}

fn keep<T>(r: Result<T>, name: &str, unavailable: &mut Vec<(String, String)>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ (Error::BudgetExhausted | Error::GroupTooLarge { .. })) => Err(e),
        Err(e) => {
            unavailable.push((name.to_string(), e.to_string()));
            Ok(None)
        }
    }
}

/// Everything above for one pair, with the constructed labelings.
pub fn certificate(g1: &Graph, g2: &Graph, caps: &Caps) -> Result<PartitionCertificate> {
    let jg = join(g1, g2)?;
    let sp = side_partition(&jg);
    let ic = iso_classes(&jg, &sp);
    let gs = gamma_partition(&sp, &ic);
    let mut unavailable = Vec::new();
    let lambdas = keep(lambda_bounds(&jg, &gs, caps), "lambda", &mut unavailable)?;
    let vertex_labeling = keep(
        construct_join_vertex_labeling(g1, g2, caps),
        "vertex_labeling",
        &mut unavailable,
    )?;
    let gamma_edge_labeling = keep(
        construct_gamma_edge_labeling(&jg, &gs, caps),
        "gamma_edge_labeling",
        &mut unavailable,
    )?;
    let cover_edge = match lambdas.as_ref().and_then(|l| l.best_cover.clone()) {
        Some(cover) => keep(
            cover_edge_labeling(&jg, &gs, &cover, caps),
            "cover_edge_labeling",
            &mut unavailable,
        )?,
        None => None,
    };
    let ids = |sets: &[VertexSet]| sets.iter().map(|s| s.to_vec()).collect();
    Ok(PartitionCertificate {
        a: ids(&sp.a),
        b: ids(&sp.b),
        q: gs.q,
        z: gs.z,
        lambda1: lambdas.as_ref().and_then(|l| l.lambda1),
        lambda2: lambdas.as_ref().and_then(|l| l.lambda2),
        gamma: gs.classes,
        witness: Witness {
            vertex_labeling,
            gamma_edge_labeling,
            cover_edge_labeling: cover_edge,
            unavailable,
        },
    })
}
