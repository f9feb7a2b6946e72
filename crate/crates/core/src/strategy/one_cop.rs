//! One cop on a tree without T_3,3.
//!
//! The tree is rooted at its lowest-index leaf. The strategy keeps an anchor
//! `a`, the deepest vertex whose subtree contains the belief, and works
//! through the branches below it:
//!
//! * *Sweep* (at most one child of degree ≥ 3 is live): probe the leaf
//!   children of `a` once each, then the child of each live degree-2 child.
//!   A distance of 1 after probing below a degree-2 child means the robber
//!   may sit on `a` itself; `a` is then probed before continuing.
//! * *Main branches* (two live children of degree ≥ 3): the branch with more
//!   leaves is *rich*, the other *poor*. A short probe script, chosen by the
//!   level `k` of the robber's class below `a`, eliminates the rich branch.
//!   When that script used one probe too many, the poor branch is marked and
//!   repaid later by probing its leaves directly.
//!
//! While a script runs the robber may step onto the parent of `a`; the anchor
//! is then kept rather than moved up.

use super::CopStrategy;
use crate::error::{Error, Result};
use crate::graph::{contains_t33, distance_matrix, DistanceMatrix, Graph, RootedTree};
use crate::vertex_set::VertexSet;

/// Probe scripts for eliminating the rich branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Script {
    /// Robber one level below the anchor: poor child, rich child, grandparent.
    LevelOne,
    /// Two levels below: rich, poor, rich, grandparent.
    LevelTwo,
    /// Three or more levels below (or mixed levels): rich, then poor child.
    Deep,
    /// Both main branches have exactly two leaves: the two rich leaves, then
    /// the grandparent.
    TwoLeaves,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneCopState {
    anchor: Option<usize>,
    /// Level of the robber's class below the anchor when the epoch began.
    depth: Option<usize>,
    swept: VertexSet,
    probe_anchor: bool,
    script: Option<Script>,
    step: u8,
    rich: usize,
    poor_child: usize,
    /// Poor branch owed a repayment probe sequence.
    poor: Option<usize>,
    poor_seq: Vec<usize>,
    poor_idx: usize,
    probe: usize,
    escaped: bool,
}

#[derive(Clone, Debug)]
pub struct OneCopTreeStrategy {
    tree: RootedTree,
    dist: DistanceMatrix,
}

impl OneCopTreeStrategy {
    pub fn new(t: &Graph) -> Result<Self> {
        if contains_t33(t)? {
            return Err(Error::ContainsT33);
        }
        let root = (0..t.n()).find(|&v| t.degree(v) <= 1).expect("a tree has a leaf");
        Ok(OneCopTreeStrategy {
            tree: RootedTree::new(t, root)?,
            dist: distance_matrix(t),
        })
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    fn degree(&self, v: usize) -> usize {
        self.tree.graph().degree(v)
    }

    fn leaves(&self, v: usize) -> usize {
        self.tree.leaves_below(v).len()
    }

    /// Grandparent of `a`, or its parent when that is the root.
    fn grandparent(&self, a: usize) -> usize {
        match self.tree.parent(a) {
            None => a,
            Some(p) => self.tree.parent(p).unwrap_or(p),
        }
    }

    /// Leaves to probe when the robber is confined to the poor branch below
    /// `pc`: one leaf resolves two leaves; with three, the solitary leaf of a
    /// single-leaf sub-branch goes first.
    fn poor_sequence(&self, pc: usize) -> Vec<usize> {
        let t = &self.tree;
        let leaves = t.leaves_below(pc);
        if leaves.len() <= 2 {
            return vec![leaves[0]];
        }
        let solitary = t.children(pc).iter().copied().find(|&c| self.leaves(c) == 1);
        let first = solitary.map_or(leaves[0], |c| t.leaves_below(c)[0]);
        let rest = leaves
            .iter()
            .copied()
            .find(|&x| x != first && solitary.is_none_or(|c| !t.is_ancestor(c, x)))
            .expect("at least three leaves");
        vec![first, rest]
    }

    fn script_next(script: Script, step: u8, d: u32, depth: Option<usize>) -> Option<u8> {
        match (script, step) {
            (Script::LevelOne, 0) => (d == 1).then_some(1),
            (Script::LevelOne, 1) => (d == 2).then_some(2),
            (Script::LevelTwo, 0) => (d == 2).then_some(1),
            (Script::LevelTwo, 1) => (d == 1).then_some(2),
            (Script::LevelTwo, 2) => Some(3),
            (Script::Deep, 0) => (Some(d as usize) == depth).then_some(1),
            (Script::TwoLeaves, s) if s < 2 => Some(s + 1),
            _ => None,
        }
    }

    /// Bookkeeping for a probe answered without moving the anchor.
    fn advance(&self, mut st: OneCopState, p: usize, d: u32) -> OneCopState {
        let t = &self.tree;
        let a = st.anchor.expect("anchored");
        let Some(script) = st.script else {
            if st.probe_anchor && p == a {
                st.probe_anchor = false;
                return st;
            }
            st.probe_anchor = false;
            if let Some(c) = t.branch_of(a, p) {
                st.swept.insert(c);
                if self.degree(c) == 2
                    && d == 1
                    && t.children(a).iter().any(|&x| !st.swept.contains(x))
                {
                    st.probe_anchor = true;
                }
            }
            return st;
        };
        match Self::script_next(script, st.step, d, st.depth) {
            Some(step) => st.step = step,
            None => {
                if script == Script::TwoLeaves
                    || (script == Script::LevelTwo && self.leaves(st.rich) == 3)
                {
                    st.poor = Some(st.poor_child);
                }
                st.swept.insert(st.rich);
                st.swept.insert(st.poor_child);
                st.script = None;
                st.step = 0;
            }
        }
        st
    }

    fn plan(&self, mut st: OneCopState, belief: VertexSet) -> OneCopState {
        let t = &self.tree;
        let a = st.anchor.expect("anchored");
        let live: Vec<usize> = t
            .children(a)
            .iter()
            .copied()
            .filter(|&c| t.descendants(c).intersects(belief))
            .collect();
        let heavy: Vec<usize> = live.iter().copied().filter(|&c| self.degree(c) >= 3).collect();
        if st.script.is_none() && !st.probe_anchor && heavy.len() >= 2 {
            let (h1, h2) = (heavy[0], heavy[1]);
            let (rich, poor) = if self.leaves(h1) >= self.leaves(h2) {
                (h1, h2)
            } else {
                (h2, h1)
            };
            st.script = Some(if self.leaves(rich) >= 3 {
                match st.depth {
                    Some(1) => Script::LevelOne,
                    Some(2) => Script::LevelTwo,
                    _ => Script::Deep,
                }
            } else {
                Script::TwoLeaves
            });
            st.step = 0;
            st.rich = rich;
            st.poor_child = poor;
        }
        if let Some(script) = st.script {
            let (rc, pc, gp) = (st.rich, st.poor_child, self.grandparent(a));
            let step = st.step as usize;
            st.probe = match script {
                Script::LevelOne => [pc, rc, gp][step],
                Script::LevelTwo => [rc, pc, rc, gp][step],
                Script::Deep => [rc, pc][step],
                Script::TwoLeaves => {
                    let l = t.leaves_below(rc);
                    [l[0], l[1], gp][step]
                }
            };
            return st;
        }
        if st.probe_anchor {
            st.probe = a;
            return st;
        }
        let unswept = |c: &&usize| !st.swept.contains(**c);
        st.probe = if let Some(&leaf) = t.children(a).iter().filter(|&&c| self.degree(c) == 1).find(|c| unswept(c)) {
            leaf
        } else if let Some(&c) = live.iter().filter(|&&c| self.degree(c) == 2).find(|c| unswept(c)) {
            t.children(c)[0]
        } else {
            live.first().copied().unwrap_or(a)
        };
        st
    }
}

impl CopStrategy for OneCopTreeStrategy {
    type State = OneCopState;

    fn name(&self) -> &'static str {
        "one-cop-tree"
    }

    fn cops(&self) -> usize {
        1
    }

    fn init(&self) -> OneCopState {
        OneCopState {
            anchor: None,
            depth: None,
            swept: VertexSet::EMPTY,
            probe_anchor: false,
            script: None,
            step: 0,
            rich: 0,
            poor_child: 0,
            poor: None,
            poor_seq: Vec::new(),
            poor_idx: 0,
            probe: self.tree.root(),
            escaped: false,
        }
    }

    fn next_probe(&self, state: &OneCopState, _belief: VertexSet) -> VertexSet {
        VertexSet::singleton(state.probe)
    }

    fn observe(&self, state: &OneCopState, probe: VertexSet, class: VertexSet) -> OneCopState {
        let t = &self.tree;
        let g = t.graph();
        let belief = g.closed_neighborhood(class);
        let mut st = state.clone();
        let mut m = t.meet(belief).expect("nonempty belief");
        st.escaped = false;
        if let Some(a) = st.anchor {
            if !t.is_ancestor(a, m) {
                m = a;
                st.escaped = true;
            }
        }
        let p = probe.first().expect("one probe");
        let d = self.dist.get(p, class.first().expect("nonempty class"));

        if !st.poor_seq.is_empty() {
            let i = st.poor_idx + 1;
            if i < st.poor_seq.len() {
                st.anchor = Some(m);
                st.poor_idx = i;
                st.probe = st.poor_seq[i];
                return st;
            }
            st.poor_seq.clear();
            st.poor_idx = 0;
            st.poor = None;
        }

        if st.anchor != Some(m) {
            let mut levels = class.iter().map(|x| t.level(x) - t.level(m));
            let first = levels.next();
            st.depth = if levels.all(|l| Some(l) == first) { first } else { None };
            st.anchor = Some(m);
            st.swept = VertexSet::EMPTY;
            st.probe_anchor = false;
            st.script = None;
            st.step = 0;
        } else {
            st = self.advance(st, p, d);
        }

        if let Some(poor) = st.poor {
            if belief.is_subset(t.descendants(poor)) {
                st.poor_seq = self.poor_sequence(poor);
                st.poor_idx = 0;
                st.probe = st.poor_seq[0];
                st.script = None;
                return st;
            }
        }
        self.plan(st, belief)
    }

    /// Right after each probe the robber is below the anchor, except that he
    /// may be found on the anchor's parent while the rich branch is being
    /// eliminated.
    fn check_invariant(&self, state: &OneCopState, class: VertexSet) -> std::result::Result<(), String> {
        let Some(a) = state.anchor else { return Ok(()) };
        let mut allowed = self.tree.descendants(a);
        if state.escaped {
            if let Some(p) = self.tree.parent(a) {
                allowed.insert(p);
            }
        }
        if class.is_subset(allowed) {
            Ok(())
        } else {
            let n = self.tree.graph().n();
            Err(format!("class {} escapes anchor {}", class.label(n), a + 1))
        }
    }
}
