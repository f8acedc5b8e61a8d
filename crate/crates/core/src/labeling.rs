use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total vertex labeling with labels drawn from `1..=count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labeling {
    labels: Vec<u32>,
    #[serde(rename = "label_count")]
    count: u32,
}

impl Labeling {
    /// `count` is the size of the label palette, which may exceed the number
    /// of labels actually used.
    pub fn new(labels: Vec<u32>, count: u32) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidParameter("label count must be >= 1".into()));
        }
        if let Some(bad) = labels.iter().find(|&&l| l == 0 || l > count) {
            return Err(Error::InvalidParameter(format!(
                "label {bad} outside 1..={count}"
            )));
        }
        Ok(Labeling { labels, count })
    }

    /// Palette size is the largest label present.
    pub fn from_labels(labels: Vec<u32>) -> Result<Self> {
        let count = labels.iter().copied().max().unwrap_or(1);
        Self::new(labels, count)
    }

    pub fn uniform(n: usize) -> Self {
        Labeling {
            labels: vec![1; n],
            count: 1,
        }
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label_count(&self) -> u32 {
        self.count
    }

    /// Number of distinct labels actually used.
    pub fn used_labels(&self) -> usize {
        let mut v = self.labels.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    }

    pub(crate) fn check_total(&self, g: &Graph) -> Result<()> {
        if self.labels.len() != g.order() {
            return Err(Error::PartialLabeling(format!(
                "{} labels for {} vertices",
                self.labels.len(),
                g.order()
            )));
        }
        Ok(())
    }
}

/// A total edge labeling keyed by `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    labels: BTreeMap<(usize, usize), u32>,
    count: u32,
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl EdgeLabeling {
    pub fn new(entries: impl IntoIterator<Item = ((usize, usize), u32)>, count: u32) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidParameter("label count must be >= 1".into()));
        }
        let mut labels = BTreeMap::new();
        for ((u, v), l) in entries {
            if l == 0 || l > count {
                return Err(Error::InvalidParameter(format!(
                    "edge label {l} outside 1..={count}"
                )));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            labels.insert(norm(u, v), l);
        }
        Ok(EdgeLabeling { labels, count })
    }

    /// Every edge of `g` gets label 1.
    pub fn uniform(g: &Graph) -> Self {
        EdgeLabeling {
            labels: g.edges().into_iter().map(|e| (e, 1)).collect(),
            count: 1,
        }
    }

    pub fn label(&self, u: usize, v: usize) -> Option<u32> {
        self.labels.get(&norm(u, v)).copied()
    }

    pub fn label_count(&self) -> u32 {
        self.count
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.labels.iter().map(|(&e, &l)| (e, l))
    }

    pub fn used_labels(&self) -> usize {
        let mut v: Vec<u32> = self.labels.values().copied().collect();
        v.sort_unstable();
        v.dedup();
        v.len()
    }

    /// Total on exactly the edge set of `g`.
    pub(crate) fn check_total(&self, g: &Graph) -> Result<()> {
        for (u, v) in g.edges() {
            if !self.labels.contains_key(&(u, v)) {
                return Err(Error::PartialLabeling(format!("edge {u}-{v} is unlabeled")));
            }
        }
        if let Some(&(u, v)) = self.labels.keys().find(|&&(u, v)| !g.is_adjacent(u, v)) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeLabelingRepr {
    edge_labels: Vec<(usize, usize, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label_count: Option<u32>,
}

impl Serialize for EdgeLabeling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EdgeLabelingRepr {
            edge_labels: self.iter().map(|((u, v), l)| (u, v, l)).collect(),
            label_count: Some(self.count),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeLabeling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = EdgeLabelingRepr::deserialize(d)?;
        let count = repr
            .label_count
            .or_else(|| repr.edge_labels.iter().map(|e| e.2).max())
            .unwrap_or(1);
        EdgeLabeling::new(repr.edge_labels.into_iter().map(|(u, v, l)| ((u, v), l)), count)
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Labeling::new(vec![1, 2, 3], 2).is_err());
        assert!(Labeling::new(vec![0, 1], 2).is_err());
        assert!(Labeling::new(vec![], 0).is_err());
        let l = Labeling::from_labels(vec![1, 3, 1]).unwrap();
        assert_eq!((l.label_count(), l.used_labels()), (3, 2));
        assert!(EdgeLabeling::new([((0, 1), 3)], 2).is_err());
        assert!(EdgeLabeling::new([((1, 1), 1)], 2).is_err());
    }

    #[test]
    fn edge_keys_are_unordered() {
        let e = EdgeLabeling::new([((2, 0), 2), ((1, 2), 1)], 2).unwrap();
        assert_eq!(e.label(0, 2), Some(2));
        assert_eq!(e.label(2, 1), Some(1));
        assert_eq!(e.label(0, 1), None);
    }
}
