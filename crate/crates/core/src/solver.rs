//! Exact game values by value iteration over reachable candidate sets.
//!
//! A round is one probe: with candidate set `C` the cops pick a probe set `P`
//! (`|P| <= k`), which splits `C` into distance classes. A singleton class
//! ends the game that round; otherwise the robber moves and the next candidate
//! set is `N[B]`. Hence
//!
//! `value(C) = min_P max_B (1 if |B| = 1 else 1 + value(N[B]))`,
//!
//! computed as a least fixpoint starting from all-∞ so that positions the cops
//! can never finish keep the value ∞.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coloring::distance_colorings;
use crate::error::{Error, Result};
use crate::graph::{distance_matrix, Graph};
use crate::vertex_set::{subsets_of_size, VertexSet};

/// Number of rounds the cops need, or ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GameValue {
    Finite(u32),
    Infinite,
}

impl GameValue {
    pub fn is_finite(self) -> bool {
        matches!(self, GameValue::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            GameValue::Finite(v) => Some(v),
            GameValue::Infinite => None,
        }
    }

    fn from_raw(raw: u32) -> Self {
        if raw == INF {
            GameValue::Infinite
        } else {
            GameValue::Finite(raw)
        }
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameValue::Finite(v) => write!(f, "{v}"),
            GameValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Serialized as a number, with `null` for ∞.
impl Serialize for GameValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.finite().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GameValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Option::<u32>::deserialize(d)?.map_or(GameValue::Infinite, GameValue::Finite))
    }
}

const INF: u32 = u32::MAX;
const CAPTURED: u32 = u32::MAX;

/// Default exhaustive-search cap on `n` for `k` cops.
pub fn default_cap(k: usize) -> usize {
    match k {
        1 => 14,
        2 => 12,
        _ => 10,
    }
}

/// Value table over every candidate set reachable from V(G).
#[derive(Clone, Debug)]
pub struct Solver {
    n: usize,
    k: usize,
    probes: Vec<VertexSet>,
    states: Vec<VertexSet>,
    index: HashMap<VertexSet, u32>,
    /// Per state and probe: `offsets[s * probes + p]..offsets[..+1]` into
    /// `succ`, one entry per class (`CAPTURED` for singleton classes).
    offsets: Vec<u32>,
    succ: Vec<u32>,
    values: Vec<u32>,
}

impl Solver {
    /// Solves `(g, k)` under the default size cap.
    pub fn new(g: &Graph, k: usize) -> Result<Self> {
        Self::with_cap(g, k, default_cap(k))
    }

    pub fn with_cap(g: &Graph, k: usize, cap: usize) -> Result<Self> {
        let n = g.n();
        if k < 1 {
            return Err(Error::OutOfRange {
                what: "k",
                value: k,
                range: ">= 1".into(),
            });
        }
        if n > cap.min(20) {
            return Err(Error::CapExceeded { n, k, cap: cap.min(20) });
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let colorings = distance_colorings(g, k.min(n), true)?;
        let probes: Vec<VertexSet> = colorings.iter().map(|c| c.label().unwrap_or_default()).collect();
        let blocks: Vec<&[VertexSet]> = colorings.iter().map(|c| c.blocks()).collect();

        let full = VertexSet::full(n);
        let mut states = vec![full];
        let mut index = HashMap::from([(full, 0u32)]);
        let mut offsets = vec![0u32];
        let mut succ: Vec<u32> = Vec::new();
        let mut next = 0;
        while next < states.len() {
            let c = states[next];
            next += 1;
            for bs in &blocks {
                for b in bs.iter().map(|b| b.intersection(c)).filter(|b| !b.is_empty()) {
                    if b.len() == 1 {
                        succ.push(CAPTURED);
                        continue;
                    }
                    let nb = g.closed_neighborhood(b);
                    let id = *index.entry(nb).or_insert_with(|| {
                        states.push(nb);
                        (states.len() - 1) as u32
                    });
                    succ.push(id);
                }
                offsets.push(succ.len() as u32);
            }
        }

        let mut solver = Solver {
            n,
            k,
            probes,
            values: vec![INF; states.len()],
            states,
            index,
            offsets,
            succ,
        };
        solver.iterate();
        Ok(solver)
    }

    fn outcome(&self, s: usize, p: usize, cutoff: u32) -> u32 {
        let at = s * self.probes.len() + p;
        let (lo, hi) = (self.offsets[at] as usize, self.offsets[at + 1] as usize);
        let mut worst = 0;
        for &t in &self.succ[lo..hi] {
            let v = if t == CAPTURED {
                1
            } else {
                self.values[t as usize].saturating_add(1)
            };
            worst = worst.max(v);
            if worst >= cutoff {
                break;
            }
        }
        worst
    }

    fn iterate(&mut self) {
        loop {
            let mut changed = false;
            for s in 0..self.states.len() {
                let mut best = self.values[s];
                for p in 0..self.probes.len() {
                    best = best.min(self.outcome(s, p, best));
                }
                if best < self.values[s] {
                    self.values[s] = best;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `value(V(G))`.
    pub fn value(&self) -> GameValue {
        GameValue::from_raw(self.values[0])
    }

    /// Value of a reachable candidate set; singletons have value 1.
    pub fn value_of(&self, c: VertexSet) -> Option<GameValue> {
        if c.len() == 1 {
            return Some(GameValue::Finite(1));
        }
        self.index
            .get(&c)
            .map(|&s| GameValue::from_raw(self.values[s as usize]))
    }

    /// Reachable candidate sets (V(G) first).
    pub fn states(&self) -> &[VertexSet] {
        &self.states
    }

    /// The optimal probe for a reachable candidate set: among minimizers, the
    /// first in order of size then mask. `None` if unreachable or ∞.
    pub fn best_probe(&self, c: VertexSet) -> Option<VertexSet> {
        if c.len() == 1 {
            return Some(c);
        }
        let s = *self.index.get(&c)? as usize;
        let target = self.values[s];
        if target == INF {
            return None;
        }
        (0..self.probes.len())
            .find(|&p| self.outcome(s, p, INF) == target)
            .map(|p| self.probes[p])
    }
}

pub fn game_value(g: &Graph, k: usize) -> Result<GameValue> {
    Ok(Solver::new(g, k)?.value())
}

/// Least `k <= k_max` with a finite game value.
pub fn zeta(g: &Graph, k_max: usize) -> Result<Option<usize>> {
    for k in 1..=k_max.min(g.n()) {
        if game_value(g, k)?.is_finite() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Smallest `|S|` whose distance coloring separates every vertex.
pub fn metric_dimension(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > 20 {
        return Err(Error::CapExceeded { n, k: 0, cap: 20 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n == 1 {
        return Ok(1);
    }
    let dist = distance_matrix(g);
    for size in 1..=n {
        for s in subsets_of_size(n, size) {
            let mut seen = std::collections::HashSet::new();
            if (0..n).all(|v| seen.insert(s.iter().map(|x| dist.get(v, x)).collect::<Vec<_>>())) {
                return Ok(size);
            }
        }
    }
    Ok(n)
}

/// An optimal cop policy: one probe per reachable candidate set.
#[derive(Clone, Debug, Serialize)]
pub struct Policy {
    pub k: usize,
    pub value: GameValue,
    pub probes: BTreeMap<VertexSet, VertexSet>,
}

impl Policy {
    pub fn probe_for(&self, c: VertexSet) -> Option<VertexSet> {
        self.probes.get(&c).copied()
    }

    /// Worst case over all robber behaviour when the cops follow the table.
    pub fn worst_case_rounds(&self, g: &Graph) -> Result<u32> {
        fn go(
            p: &Policy,
            g: &Graph,
            dist: &crate::graph::DistanceMatrix,
            c: VertexSet,
            memo: &mut HashMap<VertexSet, Option<u32>>,
        ) -> Result<u32> {
            if c.len() == 1 {
                return Ok(1);
            }
            match memo.get(&c) {
                Some(Some(v)) => return Ok(*v),
                Some(None) => return Err(Error::Unwinnable),
                None => {}
            }
            memo.insert(c, None);
            let probe = p.probe_for(c).ok_or(Error::Unwinnable)?;
            let mut classes: BTreeMap<Vec<u32>, VertexSet> = BTreeMap::new();
            for v in c.iter() {
                let key = probe.iter().map(|s| dist.get(v, s)).collect();
                classes.entry(key).or_default().insert(v);
            }
            let mut worst = 0;
            for b in classes.into_values() {
                let r = if b.len() == 1 {
                    1
                } else {
                    1 + go(p, g, dist, g.closed_neighborhood(b), memo)?
                };
                worst = worst.max(r);
            }
            memo.insert(c, Some(worst));
            Ok(worst)
        }
        go(self, g, &distance_matrix(g), VertexSet::full(g.n()), &mut HashMap::new())
    }
}

/// Extracts the optimal policy for `(g, k)`; errors when the value is ∞.
pub fn value_trace(g: &Graph, k: usize) -> Result<Policy> {
    let solver = Solver::new(g, k)?;
    if !solver.value().is_finite() {
        return Err(Error::Unwinnable);
    }
    let probes = solver
        .states()
        .iter()
        .filter_map(|&c| solver.best_probe(c).map(|p| (c, p)))
        .collect();
    Ok(Policy {
        k,
        value: solver.value(),
        probes,
    })
}
