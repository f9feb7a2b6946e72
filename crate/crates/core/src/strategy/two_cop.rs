//! Two cops on a tree containing T_3,3.
//!
//! The tree is rooted at a vertex `v0` with three children `x, y, z` that
//! each have two children; the first probe is `{x, y}`. Afterwards the cops
//! probe the children of the anchor in pairs, in index order, which removes
//! at least two branches (each with a leaf) per round. With two live
//! branches left: two single-leaf branches are resolved by probing both
//! leaves; two multi-leaf branches by probing both children; otherwise the
//! first branching vertex `u` on the multi-leaf branch decides the probe.

use super::CopStrategy;
use crate::error::{Error, Result};
use crate::graph::{t33_center, Graph, RootedTree};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoCopState {
    anchor: Option<usize>,
    probe: VertexSet,
}

#[derive(Clone, Debug)]
pub struct TwoCopTreeStrategy {
    tree: RootedTree,
    first: VertexSet,
}

impl TwoCopTreeStrategy {
    pub fn new(t: &Graph) -> Result<Self> {
        let tree_check = crate::graph::contains_t33(t)?;
        let root = t33_center(t).filter(|_| tree_check).ok_or(Error::LacksT33)?;
        let tree = RootedTree::new(t, root)?;
        let big: Vec<usize> = tree
            .children(root)
            .iter()
            .copied()
            .filter(|&c| tree.children(c).len() >= 2)
            .collect();
        let first = [big[0], big[1]].into_iter().collect();
        Ok(TwoCopTreeStrategy { tree, first })
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    fn plan(&self, a: usize, belief: VertexSet) -> VertexSet {
        let t = &self.tree;
        let live: Vec<usize> = t
            .children(a)
            .iter()
            .copied()
            .filter(|&c| t.descendants(c).intersects(belief))
            .collect();
        let pair = |u: usize, v: usize| [u, v].into_iter().collect::<VertexSet>();
        match live.len() {
            0 => VertexSet::singleton(a),
            1 => pair(a, live[0]),
            2 => {
                let (b1, b2) = (live[0], live[1]);
                let (l1, l2) = (t.leaves_below(b1).len(), t.leaves_below(b2).len());
                if l1 == 1 && l2 == 1 {
                    return pair(t.leaves_below(b1)[0], t.leaves_below(b2)[0]);
                }
                if l1 > 1 && l2 > 1 {
                    return pair(b1, b2);
                }
                let (single, many) = if l1 == 1 { (b1, b2) } else { (b2, b1) };
                let mut u = many;
                while t.children(u).len() < 2 {
                    u = t.children(u)[0];
                }
                match t.children(u) {
                    &[c1, c2] => pair(c1, c2),
                    cs => pair(single, cs[0]),
                }
            }
            _ => pair(live[0], live[1]),
        }
    }
}

impl CopStrategy for TwoCopTreeStrategy {
    type State = TwoCopState;

    fn name(&self) -> &'static str {
        "two-cop-tree"
    }

    fn cops(&self) -> usize {
        2
    }

    fn init(&self) -> TwoCopState {
        TwoCopState {
            anchor: None,
            probe: self.first,
        }
    }

    fn next_probe(&self, state: &TwoCopState, _belief: VertexSet) -> VertexSet {
        state.probe
    }

    fn observe(&self, state: &TwoCopState, _probe: VertexSet, class: VertexSet) -> TwoCopState {
        let t = &self.tree;
        let belief = t.graph().closed_neighborhood(class);
        let mut m = t.meet(belief).expect("nonempty belief");
        // The robber may step above the anchor after the probe; keep it.
        if let Some(a) = state.anchor {
            if !t.is_ancestor(a, m) {
                m = a;
            }
        }
        TwoCopState {
            anchor: Some(m),
            probe: self.plan(m, belief),
        }
    }

    fn check_invariant(&self, state: &TwoCopState, class: VertexSet) -> std::result::Result<(), String> {
        match state.anchor {
            Some(a) if !class.is_subset(self.tree.descendants(a)) => Err(format!(
                "class {} escapes anchor {}",
                class.label(self.tree.graph().n()),
                a + 1
            )),
            _ => Ok(()),
        }
    }
}
