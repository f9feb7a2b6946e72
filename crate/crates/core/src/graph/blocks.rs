use super::Graph;
use crate::vertex_set::VertexSet;

/// Blocks (maximal subgraphs without a cut vertex) and cut vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, sorted by mask.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// `sum(|B_i| - 1)` over all blocks.
    pub fn size_bound(&self) -> usize {
        self.blocks.iter().map(|b| b.len() - 1).sum()
    }

    pub fn is_biconnected(&self) -> bool {
        self.blocks.len() == 1 && self.blocks[0].len() >= 3
    }
}

struct Tarjan<'g> {
    g: &'g Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut tree_children = 0;
        for &w in self.g.neighbors(u) {
            if self.disc[w] == 0 {
                tree_children += 1;
                self.stack.push((u, w));
                self.visit(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent.is_some() || tree_children > 1 {
                        self.cuts.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block = block.with(a).with(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Biconnected-component decomposition. Isolated vertices form no block.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut t = Tarjan {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in 0..n {
        if t.disc[v] == 0 {
            t.visit(v, None);
        }
    }
    let mut blocks = t.blocks;
    blocks.sort();
    BlockDecomposition {
        blocks,
        cut_vertices: t.cuts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let d = block_decomposition(&bowtie);
        assert_eq!(d.blocks.len(), 2);
        assert!(d.blocks.iter().all(|b| b.len() == 3));
        assert_eq!(d.cut_vertices, VertexSet::singleton(2));

        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let d = block_decomposition(&p3);
        assert_eq!(d.blocks.len(), 2);
        assert!(d.blocks.iter().all(|b| b.len() == 2));
        assert_eq!(d.size_bound(), 2);

        let c6: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let d = block_decomposition(&Graph::new(6, &c6).unwrap());
        assert_eq!(d.blocks, vec![VertexSet::full(6)]);
        assert!(d.is_biconnected());
        assert!(d.cut_vertices.is_empty());
    }
}
