//! Deterministic cop strategies and an exhaustive simulator against an
//! omniscient robber.
//!
//! The simulator explores every distance class the robber could be reported
//! in. A singleton class is a capture in that round; otherwise the belief
//! becomes the closed neighborhood of the class and play continues. Because
//! strategies are deterministic, the robber's best play is the maximum over
//! this tree, which the simulator returns together with a witness trace.

mod bounds;
mod one_cop;
mod two_cop;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

pub use bounds::{
    check_tree, check_tree_with, verify_tree_bounds, verify_tree_bounds_with, TreeBoundRecord,
    TreeBoundsReport, ValueFn,
};
pub use one_cop::OneCopTreeStrategy;
pub use two_cop::TwoCopTreeStrategy;

use crate::error::{Error, Result};
use crate::graph::{distance_matrix, DistanceMatrix, Graph};
use crate::solver::Solver;
use crate::vertex_set::VertexSet;

/// A deterministic cop strategy.
///
/// `next_probe` must depend only on `(state, belief)`; `observe` receives the
/// probe and the distance class the robber was found in (before the robber
/// moves) and returns the next state.
pub trait CopStrategy {
    type State: Clone + Eq + Hash + Debug;

    fn name(&self) -> &'static str;

    /// Maximum probe size.
    fn cops(&self) -> usize;

    fn init(&self) -> Self::State;

    fn next_probe(&self, state: &Self::State, belief: VertexSet) -> VertexSet;

    fn observe(&self, state: &Self::State, probe: VertexSet, class: VertexSet) -> Self::State;

    /// Per-step invariant hook, called with the state after `observe` and the
    /// class the robber was located in by the probe (before moving).
    fn check_invariant(&self, _state: &Self::State, _class: VertexSet) -> std::result::Result<(), String> {
        Ok(())
    }
}

/// One round of a witness trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    /// Candidate set before the probe.
    pub belief: VertexSet,
    pub probe: VertexSet,
    /// The class the robber was reported in.
    pub class: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimulationReport {
    pub strategy: String,
    pub k: usize,
    pub worst_rounds: u32,
    pub trace: Vec<TraceStep>,
}

/// Splits `belief` into distance classes of `probe`, ordered by distance vector.
pub(crate) fn split(dist: &DistanceMatrix, belief: VertexSet, probe: VertexSet) -> Vec<VertexSet> {
    let mut classes: BTreeMap<Vec<u32>, VertexSet> = BTreeMap::new();
    for v in belief.iter() {
        let key = probe.iter().map(|p| dist.get(v, p)).collect();
        classes.entry(key).or_default().insert(v);
    }
    classes.into_values().collect()
}

struct Simulator<'a, S: CopStrategy> {
    g: &'a Graph,
    dist: DistanceMatrix,
    strategy: &'a S,
    memo: HashMap<(S::State, VertexSet), (u32, Option<VertexSet>)>,
    active: HashSet<(S::State, VertexSet)>,
    round_cap: usize,
}

impl<S: CopStrategy> Simulator<'_, S> {
    fn fail(&self, msg: String) -> Error {
        Error::Strategy {
            strategy: self.strategy.name().to_string(),
            msg,
        }
    }

    fn probe(&self, state: &S::State, belief: VertexSet) -> Result<VertexSet> {
        let probe = self.strategy.next_probe(state, belief);
        let n = self.g.n();
        if probe.is_empty() || probe.len() > self.strategy.cops() || !probe.is_subset(VertexSet::full(n)) {
            return Err(self.fail(format!("invalid probe {probe:?} for belief {belief:?}")));
        }
        Ok(probe)
    }

    /// Worst-case rounds from `(state, belief)`.
    fn explore(&mut self, state: S::State, belief: VertexSet, depth: usize) -> Result<u32> {
        let key = (state, belief);
        if let Some(&(r, _)) = self.memo.get(&key) {
            return Ok(r);
        }
        if depth > self.round_cap || self.active.contains(&key) {
            return Err(self.fail(format!(
                "no capture within {} rounds (belief {belief:?})",
                self.round_cap
            )));
        }
        self.active.insert(key.clone());
        let probe = self.probe(&key.0, belief)?;
        let mut worst = 0;
        let mut chosen = None;
        for class in split(&self.dist, belief, probe) {
            let rounds = if class.len() == 1 {
                1
            } else {
                let next = self.strategy.observe(&key.0, probe, class);
                let moved = self.g.closed_neighborhood(class);
                self.strategy
                    .check_invariant(&next, class)
                    .map_err(|msg| self.fail(msg))?;
                1 + self.explore(next, moved, depth + 1)?
            };
            if rounds > worst {
                worst = rounds;
                chosen = Some(class);
            }
        }
        self.active.remove(&key);
        self.memo.insert(key, (worst, chosen));
        Ok(worst)
    }
}

/// Exhaustive worst case of `strategy` on `g` with an omniscient robber.
///
/// Ties between equally bad classes go to the first in distance-vector
/// order. Errors on an invalid probe, a violated strategy invariant, or a
/// game running past `n²` rounds.
pub fn simulate_adversarial<S: CopStrategy>(g: &Graph, strategy: &S) -> Result<SimulationReport> {
    let n = g.n();
    let mut sim = Simulator {
        g,
        dist: distance_matrix(g),
        strategy,
        memo: HashMap::new(),
        active: HashSet::new(),
        round_cap: (n * n).max(1),
    };
    let start = strategy.init();
    let full = VertexSet::full(n);
    let worst = sim.explore(start.clone(), full, 0)?;

    let mut trace = Vec::new();
    let (mut state, mut belief) = (start, full);
    loop {
        let probe = strategy.next_probe(&state, belief);
        let class = sim.memo[&(state.clone(), belief)].1.expect("explored");
        trace.push(TraceStep { belief, probe, class });
        if class.len() == 1 {
            break;
        }
        state = strategy.observe(&state, probe, class);
        belief = g.closed_neighborhood(class);
    }
    debug_assert_eq!(trace.len() as u32, worst);
    Ok(SimulationReport {
        strategy: strategy.name().to_string(),
        k: strategy.cops(),
        worst_rounds: worst,
        trace,
    })
}

/// Follows the solver's optimal probe for each candidate set.
pub struct OptimalPolicy {
    solver: Solver,
}

impl OptimalPolicy {
    pub fn new(g: &Graph, k: usize) -> Result<Self> {
        Self::from_solver(Solver::new(g, k)?)
    }

    pub fn from_solver(solver: Solver) -> Result<Self> {
        if !solver.value().is_finite() {
            return Err(Error::Unwinnable);
        }
        Ok(OptimalPolicy { solver })
    }
}

impl CopStrategy for OptimalPolicy {
    type State = ();

    fn name(&self) -> &'static str {
        "optimal"
    }

    fn cops(&self) -> usize {
        self.solver.k()
    }

    fn init(&self) {}

    fn next_probe(&self, _state: &(), belief: VertexSet) -> VertexSet {
        self.solver.best_probe(belief).unwrap_or_default()
    }

    fn observe(&self, _state: &(), _probe: VertexSet, _class: VertexSet) {}
}
