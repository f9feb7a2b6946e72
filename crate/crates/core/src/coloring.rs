//! Colorings of the vertex set, stored as canonical partitions.
//!
//! Only which vertices share a color matters to the game, so a [`Coloring`] is
//! its partition (blocks ascending, ordered by minimum element) plus an optional
//! label recording the probe set that produced it.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{distance_matrix, DistanceMatrix, Graph};
use crate::vertex_set::{subsets_of_size, VertexSet};

/// A partition of `{0, .., n-1}` in canonical block order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    n: usize,
    blocks: Vec<VertexSet>,
}

impl Partition {
    /// Builds a partition from arbitrary blocks, validating that they are
    /// nonempty, disjoint and cover the `n` vertices.
    pub fn new(n: usize, blocks: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut blocks: Vec<VertexSet> = blocks.into_iter().collect();
        let mut seen = VertexSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::Coloring("empty block".into()));
            }
            if b.intersects(seen) {
                return Err(Error::Coloring(format!(
                    "vertex {} appears in two blocks",
                    b.intersection(seen).first().unwrap_or(0) + 1
                )));
            }
            seen = seen.union(b);
        }
        if seen != VertexSet::full(n) {
            let missing = VertexSet::full(n).difference(seen);
            return Err(Error::Coloring(match missing.first() {
                Some(v) => format!("vertex {} is not colored", v + 1),
                None => format!("vertices beyond {n} are colored"),
            }));
        }
        blocks.sort_by_key(|b| b.first());
        Ok(Partition { n, blocks })
    }

    /// Groups vertices by an arbitrary key; equal keys share a block.
    pub fn from_keys<K: Eq + std::hash::Hash>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut index: HashMap<K, usize> = HashMap::new();
        let mut blocks: Vec<VertexSet> = Vec::new();
        let mut n = 0;
        for (v, key) in keys.into_iter().enumerate() {
            let next = blocks.len();
            let i = *index.entry(key).or_insert(next);
            if i == next {
                blocks.push(VertexSet::EMPTY);
            }
            blocks[i].insert(v);
            n = v + 1;
        }
        // First-occurrence order is already ordered by minimum element.
        Partition { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|b| coarser.blocks.iter().any(|c| b.is_subset(*c)))
    }
}

/// A partition-valued coloring of V(G).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Coloring {
    partition: Partition,
    label: Option<VertexSet>,
}

impl PartialEq for Coloring {
    fn eq(&self, other: &Self) -> bool {
        self.partition == other.partition
    }
}

impl Eq for Coloring {}

impl Coloring {
    pub fn new(partition: Partition) -> Self {
        Coloring {
            partition,
            label: None,
        }
    }

    pub fn with_label(mut self, label: VertexSet) -> Self {
        self.label = Some(label);
        self
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn blocks(&self) -> &[VertexSet] {
        self.partition.blocks()
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    /// The probe set that induced this coloring, if any.
    pub fn label(&self) -> Option<VertexSet> {
        self.label
    }

    /// Compact form such as `1,23,45` (labels as in [`VertexSet::label`]).
    pub fn compact(&self) -> String {
        let n = self.n();
        let parts: Vec<String> = self.blocks().iter().map(|b| b.label(n)).collect();
        parts.join(",")
    }

    /// Parses the `1|2,3|4,5` text form (1-based vertices) over `n` vertices.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let blocks = text
            .trim()
            .split('|')
            .map(|block| {
                block
                    .split(',')
                    .map(|tok| {
                        let tok = tok.trim();
                        match tok.parse::<usize>() {
                            Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                            _ => Err(Error::Coloring(format!("bad vertex `{tok}` for n = {n}"))),
                        }
                    })
                    .collect::<Result<VertexSet>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Coloring::new(Partition::new(n, blocks)?))
    }
}

impl fmt::Display for Coloring {
    /// The `1|2,3|4,5` text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            let vs: Vec<String> = b.iter().map(|v| (v + 1).to_string()).collect();
            f.write_str(&vs.join(","))?;
        }
        Ok(())
    }
}

/// Parses one coloring per nonblank line; `#` starts a comment.
pub fn parse_colorings(text: &str, n: usize) -> Result<Vec<Coloring>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then(|| {
                Coloring::parse(line, n).map_err(|e| Error::Parse {
                    line: i + 1,
                    msg: e.to_string(),
                })
            })
        })
        .collect()
}

/// The blocks of a coloring restricted to a vertex subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColorClassesOf {
    blocks: Vec<VertexSet>,
}

impl ColorClassesOf {
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// The coloring `v ↦ (d(v, s) for s in S)`.
pub fn distance_coloring(g: &Graph, set: VertexSet) -> Result<Coloring> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(distance_coloring_with(&distance_matrix(g), set))
}

pub(crate) fn distance_coloring_with(dist: &DistanceMatrix, set: VertexSet) -> Coloring {
    let keys = (0..dist.n()).map(|v| set.iter().map(|s| dist.get(v, s)).collect::<Vec<_>>());
    Coloring::new(Partition::from_keys(keys)).with_label(set)
}

/// One coloring per nonempty probe set of size at most `k`, probe sets in
/// order of size then mask. With `dedup`, later duplicates of a partition are
/// dropped (the first probe set inducing it is kept as label).
pub fn distance_colorings(g: &Graph, k: usize, dedup: bool) -> Result<Vec<Coloring>> {
    let n = g.n();
    if k < 1 || k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            range: format!("1..={n}"),
        });
    }
    let dist = distance_matrix(g);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for size in 1..=k {
        for set in subsets_of_size(n, size) {
            let c = distance_coloring_with(&dist, set);
            if !dedup || seen.insert(c.partition.clone()) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// The partition of `w` induced by `c`.
pub fn restrict(c: &Coloring, w: VertexSet) -> ColorClassesOf {
    ColorClassesOf {
        blocks: c
            .blocks()
            .iter()
            .map(|b| b.intersection(w))
            .filter(|b| !b.is_empty())
            .collect(),
    }
}

/// Whether `w` lies inside a single block of `c`.
pub fn is_monochromatic(c: &Coloring, w: VertexSet) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(c.blocks().iter().any(|b| w.is_subset(*b)))
}
