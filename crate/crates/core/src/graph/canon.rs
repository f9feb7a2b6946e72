//! Canonical labeling for small graphs: colour refinement followed by a
//! pruned search over the orderings the refined partition allows.

use std::cmp::Ordering;

use super::Graph;

/// Returns the canonical relabeling of `g`: two graphs are isomorphic iff
/// their canonical forms are equal. Exponential in the size of the largest
/// refinement cell; meant for graphs of a dozen or so vertices.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let colors = refine(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let max_color = colors.iter().copied().max().unwrap_or(0);
    for c in 0..=max_color {
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == c).collect();
        if !cell.is_empty() {
            cells.push(cell);
        }
    }
    let slot_cell: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(ci, cell)| std::iter::repeat_n(ci, cell.len()))
        .collect();
    let mut search = Search {
        g,
        cells: &cells,
        slot_cell: &slot_cell,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        key: Vec::with_capacity(n * n / 2),
        best_key: None,
        best: Vec::new(),
    };
    search.run();
    // best[pos] = original vertex at that position
    let mut perm = vec![0; n];
    for (pos, &v) in search.best.iter().enumerate() {
        perm[v] = pos;
    }
    g.permuted(&perm)
}

/// Iterated degree refinement with canonically ordered colours.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter_mut()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let before = count_distinct(&colors);
        colors = next;
        if count_distinct(&colors) == before {
            return colors;
        }
    }
}

fn count_distinct(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    g: &'a Graph,
    cells: &'a [Vec<usize>],
    slot_cell: &'a [usize],
    placed: Vec<usize>,
    used: Vec<bool>,
    key: Vec<bool>,
    best_key: Option<Vec<bool>>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) {
        let pos = self.placed.len();
        if pos == self.g.n() {
            self.best_key = Some(self.key.clone());
            self.best = self.placed.clone();
            return;
        }
        for &v in &self.cells[self.slot_cell[pos]] {
            if self.used[v] {
                continue;
            }
            let mark = self.key.len();
            for &u in &self.placed {
                self.key.push(self.g.has_edge(u, v));
            }
            let keep = match &self.best_key {
                None => true,
                Some(best) => self.key.as_slice().cmp(&best[..self.key.len()]) != Ordering::Less,
            };
            if keep {
                self.used[v] = true;
                self.placed.push(v);
                self.run();
                self.placed.pop();
                self.used[v] = false;
            }
            self.key.truncate(mark);
        }
    }
}
