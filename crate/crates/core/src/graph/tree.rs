use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.edge_count() == g.n() - 1 && g.is_connected()
}

/// Number of degree-1 vertices.
pub fn leaf_count(t: &Graph) -> Result<usize> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    Ok(t.vertices_of_degree(1).count())
}

/// Whether the tree has a subgraph isomorphic to T_3,3.
///
/// In a tree this is equivalent to some vertex having at least three
/// neighbors of degree three or more: the neighbors' further neighbors are
/// automatically distinct.
pub fn contains_t33(t: &Graph) -> Result<bool> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    Ok(t33_center(t).is_some())
}

/// Lowest-index vertex with three neighbors of degree at least three.
pub(crate) fn t33_center(t: &Graph) -> Option<usize> {
    (0..t.n()).find(|&v| t.neighbors(v).iter().filter(|&&w| t.degree(w) >= 3).count() >= 3)
}

/// A tree with a distinguished root, levels, and per-vertex subtrees.
#[derive(Clone, Debug)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    children: Vec<Vec<usize>>,
    subtree: Vec<VertexSet>,
    leaves_below: Vec<Vec<usize>>,
}

impl RootedTree {
    pub fn new(graph: &Graph, root: usize) -> Result<Self> {
        if !is_tree(graph) {
            return Err(Error::NotATree);
        }
        if root >= graph.n() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: graph.n(),
            });
        }
        let n = graph.n();
        let mut parent = vec![None; n];
        let mut level = vec![0; n];
        let mut children = vec![Vec::new(); n];
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in graph.neighbors(u) {
                if Some(w) != parent[u] {
                    parent[w] = Some(u);
                    level[w] = level[u] + 1;
                    children[u].push(w);
                    order.push(w);
                }
            }
        }
        let mut subtree = vec![VertexSet::EMPTY; n];
        let mut leaves_below = vec![Vec::new(); n];
        for &u in order.iter().rev() {
            let mut s = VertexSet::singleton(u);
            let mut leaves = Vec::new();
            if children[u].is_empty() {
                leaves.push(u);
            }
            for &c in &children[u] {
                s = s.union(subtree[c]);
                leaves.extend_from_slice(&leaves_below[c]);
            }
            leaves.sort_unstable();
            subtree[u] = s;
            leaves_below[u] = leaves;
        }
        Ok(RootedTree {
            graph: graph.clone(),
            root,
            parent,
            level,
            children,
            subtree,
            leaves_below,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Distance from the root.
    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    /// Children in ascending index order.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// `v` and all of its descendants.
    pub fn descendants(&self, v: usize) -> VertexSet {
        self.subtree[v]
    }

    /// Childless vertices in the subtree of `v`, ascending. The root counts
    /// only when it has no children.
    pub fn leaves_below(&self, v: usize) -> &[usize] {
        &self.leaves_below[v]
    }

    pub fn is_ancestor(&self, a: usize, v: usize) -> bool {
        self.subtree[a].contains(v)
    }

    /// Deepest vertex whose subtree contains every vertex of `set`.
    pub fn meet(&self, set: VertexSet) -> Option<usize> {
        let mut it = set.iter();
        let mut acc = it.next()?;
        for v in it {
            let (mut a, mut b) = (acc, v);
            while self.level[a] > self.level[b] {
                a = self.parent[a].expect("non-root has a parent");
            }
            while self.level[b] > self.level[a] {
                b = self.parent[b].expect("non-root has a parent");
            }
            while a != b {
                a = self.parent[a].expect("non-root has a parent");
                b = self.parent[b].expect("non-root has a parent");
            }
            acc = a;
        }
        Some(acc)
    }

    /// The child of `a` on whose branch `v` lies, for a proper descendant `v`.
    pub fn branch_of(&self, a: usize, v: usize) -> Option<usize> {
        if v == a || !self.is_ancestor(a, v) {
            return None;
        }
        self.children[a]
            .iter()
            .copied()
            .find(|&c| self.subtree[c].contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn leaf_counts() {
        assert_eq!(leaf_count(&build_named(&NamedGraph::T33).unwrap()), Ok(6));
        assert_eq!(leaf_count(&build_named(&NamedGraph::Star(4)).unwrap()), Ok(4));
        assert_eq!(leaf_count(&build_named(&NamedGraph::Gm(5)).unwrap()), Ok(9));
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(leaf_count(&c4), Err(Error::NotATree));
    }

    #[test]
    fn t33_containment() {
        assert_eq!(contains_t33(&build_named(&NamedGraph::T33).unwrap()), Ok(true));
        assert_eq!(contains_t33(&build_named(&NamedGraph::Gm(5)).unwrap()), Ok(true));
        for n in 1..12 {
            assert_eq!(contains_t33(&path(n)), Ok(false));
        }
        let c3 = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(contains_t33(&c3), Err(Error::NotATree));
    }

    #[test]
    fn rooted_structure() {
        // the 5-vertex example tree, rooted at label 1
        let g = Graph::new(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let t = RootedTree::new(&g, 1).unwrap();
        assert_eq!(t.level(4), 3);
        assert_eq!(t.children(0), &[2]);
        assert_eq!(t.leaves_below(0), &[3, 4]);
        assert_eq!(t.leaves_below(1), &[3, 4]);
        assert_eq!(t.meet([3, 4].into_iter().collect()), Some(2));
        assert_eq!(t.meet([2, 3].into_iter().collect()), Some(2));
        assert_eq!(t.branch_of(0, 4), Some(2));
        assert_eq!(t.branch_of(2, 0), None);
        assert!(t.is_ancestor(1, 4));
    }
}
