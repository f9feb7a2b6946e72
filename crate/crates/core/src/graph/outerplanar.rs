use super::{block_decomposition, Graph};
use crate::error::{Error, Result};

/// Outer-face order of a 2-connected outerplanar graph and its chords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterplanarEmbedding {
    /// Hamiltonian outer cycle starting at vertex 0, oriented so that the
    /// second vertex is smaller than the last.
    pub order: Vec<usize>,
    /// Non-cycle edges `(u, v)` with `u < v`, sorted.
    pub chords: Vec<(usize, usize)>,
}

impl OuterplanarEmbedding {
    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }
}

/// Finds an outer Hamiltonian cycle whose chords pairwise do not cross, by
/// exhaustive search over Hamiltonian cycles. Returns `Ok(None)` when the
/// graph is 2-connected but not outerplanar.
pub fn outerplanar_embedding(g: &Graph) -> Result<Option<OuterplanarEmbedding>> {
    let n = g.n();
    if !block_decomposition(g).is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    if g.edge_count() > 2 * n - 3 {
        return Ok(None);
    }
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    Ok(search(g, &mut path, &mut used))
}

fn search(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> Option<OuterplanarEmbedding> {
    let n = g.n();
    let last = *path.last().expect("path starts at 0");
    if path.len() == n {
        if !g.has_edge(last, 0) || path[1] > last {
            return None;
        }
        return embedding_for(g, path);
    }
    for &w in g.neighbors(last) {
        if used[w] {
            continue;
        }
        used[w] = true;
        path.push(w);
        if let Some(e) = search(g, path, used) {
            return Some(e);
        }
        path.pop();
        used[w] = false;
    }
    None
}

fn embedding_for(g: &Graph, order: &[usize]) -> Option<OuterplanarEmbedding> {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let chords: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| {
            let d = pos[u].abs_diff(pos[v]);
            d != 1 && d != n - 1
        })
        .collect();
    let spans: Vec<(usize, usize)> = chords
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .collect();
    for (i, &(a, b)) in spans.iter().enumerate() {
        for &(c, d) in &spans[i + 1..] {
            if crosses(a, b, c, d) {
                return None;
            }
        }
    }
    Some(OuterplanarEmbedding {
        order: order.to_vec(),
        chords,
    })
}

/// Whether polygon diagonals `(a, b)` and `(c, d)` (each with smaller
/// endpoint first) cross in their interiors.
pub(crate) fn crosses(a: usize, b: usize, c: usize, d: usize) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Whether every block of a connected graph is outerplanar.
pub fn is_outerplanar(g: &Graph) -> bool {
    block_decomposition(g).blocks.iter().all(|&b| {
        if b.len() < 3 {
            return true;
        }
        let (sub, _) = g.induced(b);
        matches!(outerplanar_embedding(&sub), Ok(Some(_)))
    })
}
