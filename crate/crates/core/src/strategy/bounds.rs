use rayon::prelude::*;
use serde::Serialize;

use super::{simulate_adversarial, OneCopTreeStrategy, TwoCopTreeStrategy};
use crate::error::{Error, Result};
use crate::graph::generate::generate_trees;
use crate::graph::{contains_t33, encode_graph6, leaf_count, Graph};
use crate::solver::{GameValue, Solver};

/// A source of exact game values `(graph, k) -> value`.
pub type ValueFn<'a> = dyn Fn(&Graph, usize) -> Result<GameValue> + Sync + 'a;

/// Outcome of the tree checks for one tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeBoundRecord {
    pub graph6: String,
    pub n: usize,
    pub leaves: usize,
    pub contains_t33: bool,
    pub strategy: String,
    pub k: usize,
    pub rounds: u32,
    pub game_value: GameValue,
    /// `ℓ` (one cop) or `⌊ℓ/2⌋ − 1` (two cops).
    pub bound: u32,
    /// `n − 1` (one cop) or `⌊n/2⌋ − 3` (two cops).
    pub vertex_bound: u32,
    pub failures: Vec<String>,
}

impl TreeBoundRecord {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TreeBoundsReport {
    pub records: Vec<TreeBoundRecord>,
}

impl TreeBoundsReport {
    pub fn failures(&self) -> impl Iterator<Item = &TreeBoundRecord> {
        self.records.iter().filter(|r| !r.ok())
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }
}

/// Exact game value, uncapped up to the generator's tree sizes.
pub(crate) fn exact_value(g: &Graph, k: usize) -> Result<GameValue> {
    Ok(Solver::with_cap(g, k, g.n().max(1))?.value())
}

/// Checks one tree on `n ≥ 2` vertices: runs the applicable strategy and
/// compares its worst case with the leaf bound, the vertex-count form of the
/// bound, and the exact game value (which no strategy may beat).
pub fn check_tree(t: &Graph) -> Result<TreeBoundRecord> {
    check_tree_with(t, &exact_value)
}

/// [`check_tree`] with a caller-supplied game-value source (e.g. a cache).
pub fn check_tree_with(t: &Graph, value: &ValueFn<'_>) -> Result<TreeBoundRecord> {
    let n = t.n();
    let leaves = leaf_count(t)?;
    let has_t33 = contains_t33(t)?;
    let (k, sim, bound, vertex_bound) = if has_t33 {
        let s = TwoCopTreeStrategy::new(t)?;
        let b = (leaves / 2).saturating_sub(1) as u32;
        (2, simulate_adversarial(t, &s), b, (n / 2).saturating_sub(3) as u32)
    } else {
        let s = OneCopTreeStrategy::new(t)?;
        (1, simulate_adversarial(t, &s), leaves as u32, n as u32 - 1)
    };
    let game_value = value(t, k)?;
    let mut failures = Vec::new();
    let (strategy, rounds) = match sim {
        Ok(report) => (report.strategy, report.worst_rounds),
        Err(Error::Strategy { strategy, msg }) => {
            failures.push(format!("strategy error: {msg}"));
            (strategy, u32::MAX)
        }
        Err(e) => return Err(e),
    };
    if rounds != u32::MAX {
        if rounds > bound {
            failures.push(format!("rounds {rounds} > leaf bound {bound}"));
        }
        if rounds > vertex_bound {
            failures.push(format!("rounds {rounds} > vertex bound {vertex_bound}"));
        }
        if GameValue::Finite(rounds) < game_value {
            failures.push(format!("rounds {rounds} < game value {game_value}"));
        }
    }
    Ok(TreeBoundRecord {
        graph6: encode_graph6(t),
        n,
        leaves,
        contains_t33: has_t33,
        strategy,
        k,
        rounds,
        game_value,
        bound,
        vertex_bound,
        failures,
    })
}

/// Runs [`check_tree`] over every tree with `2 <= n <= n_max` (`n_max <= 12`).
/// The single-vertex tree is skipped: it has no leaves to bound against.
pub fn verify_tree_bounds(n_max: usize) -> Result<TreeBoundsReport> {
    verify_tree_bounds_with(n_max, &exact_value)
}

pub fn verify_tree_bounds_with(n_max: usize, value: &ValueFn<'_>) -> Result<TreeBoundsReport> {
    if n_max > 12 {
        return Err(Error::OutOfRange {
            what: "n_max",
            value: n_max,
            range: "..=12".into(),
        });
    }
    let trees: Vec<Graph> = (2..=n_max)
        .map(generate_trees)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let records = trees
        .par_iter()
        .map(|t| check_tree_with(t, value))
        .collect::<Result<Vec<_>>>()?;
    Ok(TreeBoundsReport { records })
}
