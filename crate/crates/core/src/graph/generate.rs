//! Deterministic graph-family generators used as verification corpora.
//!
//! Exhaustive generators emit graphs in a fixed canonical order so that test
//! logs are reproducible; random generators are fully determined by their seed.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{canonical_form, crosses, encode_graph6, Graph};
use crate::error::{Error, Result};

fn out_of_range(what: &'static str, value: usize, range: &str) -> Error {
    Error::OutOfRange {
        what,
        value,
        range: range.to_string(),
    }
}

/// All free trees on `n` vertices, one per isomorphism class (`1 <= n <= 14`).
///
/// Trees are emitted sorted by their canonical (AHU, center-rooted) encoding and
/// labeled in preorder of that encoding, so vertex 0 is a center.
pub fn generate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=14).contains(&n) {
        return Err(out_of_range("n", n, "1..=14"));
    }
    let mut codes: BTreeSet<String> = BTreeSet::new();
    codes.insert("()".to_string());
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for code in &codes {
            let (m, parent) = decode_tree(code);
            for v in 0..m {
                let mut adj = adjacency_from_parents(&parent);
                adj.push(vec![v]);
                adj[v].push(m);
                next.insert(tree_code(&adj));
            }
        }
        codes = next;
    }
    codes
        .iter()
        .map(|code| {
            let (m, parent) = decode_tree(code);
            let edges: Vec<_> = (1..m).map(|v| (parent[v], v)).collect();
            Graph::new(m, &edges)
        })
        .collect()
}

/// Parenthesis encoding → (vertex count, preorder parent array; root's parent is itself).
fn decode_tree(code: &str) -> (usize, Vec<usize>) {
    let mut parent = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for ch in code.chars() {
        if ch == '(' {
            let v = parent.len();
            parent.push(stack.last().copied().unwrap_or(v));
            stack.push(v);
        } else {
            stack.pop();
        }
    }
    (parent.len(), parent)
}

fn adjacency_from_parents(parent: &[usize]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); parent.len()];
    for (v, &p) in parent.iter().enumerate().skip(1) {
        adj[v].push(p);
        adj[p].push(v);
    }
    adj
}

/// Canonical string of a free tree: AHU code rooted at the center (the smaller
/// of the two codes for bicentral trees).
fn tree_code(adj: &[Vec<usize>]) -> String {
    centers(adj)
        .into_iter()
        .map(|c| rooted_code(adj, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

fn rooted_code(adj: &[Vec<usize>], v: usize, from: usize) -> String {
    let mut parts: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != from)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Every chord subset of C_n without crossings, in lexicographic order of the
/// sorted chord lists (`3 <= n <= 10`).
///
/// With `dedup`, only the lexicographically least chord list of each orbit
/// under the dihedral group is kept; since a 2-connected outerplanar graph has
/// a unique Hamiltonian cycle this leaves one graph per isomorphism class.
pub fn generate_2connected_outerplanar(n: usize, dedup: bool) -> Result<Vec<Graph>> {
    if !(3..=10).contains(&n) {
        return Err(out_of_range("n", n, "3..=10"));
    }
    let chords: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 0 && j == n - 1))
        .collect();
    let mut subsets = Vec::new();
    let mut current = Vec::new();
    chord_subsets(&chords, 0, &mut current, &mut subsets);

    let cycle: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    subsets
        .into_iter()
        .filter(|s| !dedup || is_dihedral_min(n, s))
        .map(|s| {
            let mut edges = cycle.clone();
            edges.extend(s);
            Graph::new(n, &edges)
        })
        .collect()
}

fn chord_subsets(
    chords: &[(usize, usize)],
    start: usize,
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    out.push(current.clone());
    for (idx, &(a, b)) in chords.iter().enumerate().skip(start) {
        if current.iter().all(|&(c, d)| !crosses(a, b, c, d)) {
            current.push((a, b));
            chord_subsets(chords, idx + 1, current, out);
            current.pop();
        }
    }
}

fn is_dihedral_min(n: usize, chords: &[(usize, usize)]) -> bool {
    for shift in 0..n {
        for reflect in [false, true] {
            let map = |v: usize| {
                let v = if reflect { (n - v) % n } else { v };
                (v + shift) % n
            };
            let mut image: Vec<_> = chords
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (map(a), map(b));
                    (x.min(y), x.max(y))
                })
                .collect();
            image.sort_unstable();
            if image.as_slice() < chords {
                return false;
            }
        }
    }
    true
}

/// All connected graphs on `n` vertices up to isomorphism (`1 <= n <= 8`),
/// each in canonical form, sorted by graph6 encoding.
///
/// Every connected graph has a non-cut vertex, so extending each class on
/// `n - 1` vertices by a vertex joined to a nonempty subset reaches them all.
pub fn generate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=8).contains(&n) {
        return Err(out_of_range("n", n, "1..=8"));
    }
    let mut level = vec![Graph::new(1, &[])?];
    for m in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            let base = g.edges();
            for mask in 1u64..(1 << m) {
                let mut edges = base.clone();
                edges.extend((0..m).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m)));
                let canon = canonical_form(&Graph::new(m + 1, &edges)?);
                if seen.insert(encode_graph6(&canon)) {
                    next.push(canon);
                }
            }
        }
        next.sort_by_cached_key(encode_graph6);
        level = next;
    }
    Ok(level)
}

/// A random connected graph: a random recursive spanning tree plus each other
/// pair independently with probability `p`. Deterministic in `(n, p, seed)`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(1..=crate::MAX_VERTICES).contains(&n) {
        return Err(out_of_range("n", n, "1..=64"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// A random connected outerplanar graph on `n` vertices assembled from blocks:
/// each step glues a bridge or a cycle with random non-crossing chords onto a
/// random existing vertex. Deterministic in `(n, seed)`.
pub fn random_block_outerplanar(n: usize, seed: u64) -> Result<Graph> {
    if !(1..=crate::MAX_VERTICES).contains(&n) {
        return Err(out_of_range("n", n, "1..=64"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut count = 1;
    while count < n {
        let size = rng.gen_range(2..=(n - count + 1).min(6));
        let attach = rng.gen_range(0..count);
        let mut block: Vec<usize> = (count..count + size - 1).collect();
        block.insert(0, attach);
        count += size - 1;
        if size == 2 {
            edges.push((block[0], block[1]));
            continue;
        }
        for i in 0..size {
            edges.push((block[i], block[(i + 1) % size]));
        }
        let mut chords: Vec<_> = (0..size)
            .flat_map(|i| (i + 2..size).map(move |j| (i, j)))
            .filter(|&(i, j)| !(i == 0 && j == size - 1))
            .collect();
        chords.shuffle(&mut rng);
        let mut placed: Vec<(usize, usize)> = Vec::new();
        for (a, b) in chords {
            if rng.gen_bool(0.5) && placed.iter().all(|&(c, d)| !crosses(a, b, c, d)) {
                placed.push((a, b));
                edges.push((block[a], block[b]));
            }
        }
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{block_decomposition, is_outerplanar, is_tree, outerplanar_embedding};

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| generate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
        assert!(generate_trees(0).is_err());
        assert!(generate_trees(15).is_err());
        for t in generate_trees(8).unwrap() {
            assert!(is_tree(&t));
        }
    }

    #[test]
    fn outerplanar_corpus() {
        assert_eq!(generate_2connected_outerplanar(3, false).unwrap().len(), 1);
        assert_eq!(generate_2connected_outerplanar(4, false).unwrap().len(), 3);
        assert_eq!(generate_2connected_outerplanar(4, true).unwrap().len(), 2);
        assert_eq!(generate_2connected_outerplanar(8, false).unwrap().len(), 903);
        // Isomorphism-class counts from an independent networkx check.
        for (n, labeled, classes) in [(5, 11, 3), (6, 45, 9), (7, 197, 20)] {
            assert_eq!(generate_2connected_outerplanar(n, false).unwrap().len(), labeled);
            assert_eq!(generate_2connected_outerplanar(n, true).unwrap().len(), classes);
        }
        for g in generate_2connected_outerplanar(7, false).unwrap() {
            let emb = outerplanar_embedding(&g).unwrap().expect("outerplanar");
            assert_eq!(emb.chord_count(), g.edge_count() - g.n());
        }
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| generate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn random_generators_are_seeded() {
        for seed in 0..50 {
            let g = random_block_outerplanar(10, seed).unwrap();
            assert_eq!(g, random_block_outerplanar(10, seed).unwrap());
            assert!(g.is_connected() && is_outerplanar(&g));
            assert_eq!(block_decomposition(&g).size_bound(), 9);
            let h = random_connected_graph(8, 0.3, seed).unwrap();
            assert_eq!(h, random_connected_graph(8, 0.3, seed).unwrap());
        }
    }
}
