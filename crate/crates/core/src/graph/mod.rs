//! Simple undirected graphs, hop distances, and the structural predicates
//! the game analysis relies on.

mod blocks;
mod canon;
pub mod generate;
mod io;
mod named;
mod outerplanar;
mod tree;

use std::collections::VecDeque;

pub use blocks::{block_decomposition, BlockDecomposition};
pub use canon::canonical_form;
pub use io::{encode_graph6, parse_edge_list, parse_graph6};
pub use named::{build_named, NamedGraph};
pub use outerplanar::{is_outerplanar, outerplanar_embedding, OuterplanarEmbedding};
pub(crate) use outerplanar::crosses;
pub use tree::{contains_t33, is_tree, leaf_count, RootedTree};
pub(crate) use tree::t33_center;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::MAX_VERTICES;

/// Whether construction should reject disconnected input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Connectivity {
    #[default]
    Require,
    Allow,
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    neighbor_sets: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops are
    /// rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut neighbor_sets = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            neighbor_sets[u].insert(v);
            neighbor_sets[v].insert(u);
        }
        let adjacency = neighbor_sets.iter().map(|s| s.iter().collect()).collect();
        Ok(Graph {
            adjacency,
            neighbor_sets,
        })
    }

    pub fn with_connectivity(
        n: usize,
        edges: &[(usize, usize)],
        connectivity: Connectivity,
    ) -> Result<Self> {
        let g = Graph::new(n, edges)?;
        if connectivity == Connectivity::Require && !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.neighbor_sets[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbor_sets[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// `N[S]`: the set together with every neighbor of its members.
    pub fn closed_neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(set, |acc, v| acc.union(self.neighbor_sets[v]))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.closed_neighborhood(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen.len() == n
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n(), &edges).expect("permutation preserves validity")
    }

    /// Subgraph induced by `set`, relabeled to `0..|set|` in ascending order.
    /// The second component maps new ids back to the original ones.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = set.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| set.contains(u) && set.contains(v))
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        let g = Graph::new(verts.len(), &edges).expect("induced subgraph is simple");
        (g, verts)
    }

    /// Degree-`deg` vertices.
    pub(crate) fn vertices_of_degree(&self, deg: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| self.degree(v) == deg)
    }
}

/// All-pairs hop distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    table: Vec<u32>,
}

/// Marker for "no path" in a disconnected graph.
pub const UNREACHABLE: u32 = u32::MAX;

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.table[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.table[u * self.n..(u + 1) * self.n]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> u32 {
        self.table.iter().copied().max().unwrap_or(0)
    }
}

/// BFS from every vertex.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut table = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut table[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &w in g.neighbors(u) {
                if row[w] == UNREACHABLE {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, table }
}
