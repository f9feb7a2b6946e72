//! The row structure of candidate sets induced by a family of colorings, its
//! reduction, solvability, and the two-coloring height check.
//!
//! Row 1 holds the singletons. A set `S` not yet placed goes to row `i` when
//! some coloring splits `N[S]` into classes that all sit in rows `1..i`; such
//! colorings are *adjoined* to `S`. Rows are added until one comes out empty.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::coloring::{is_monochromatic, restrict, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{nonempty_subsets, VertexSet};

/// Largest vertex count for which the dense set index is built.
pub const MAX_STRUCTURE_VERTICES: usize = 20;

/// `S` together with all neighbors of `S`.
pub fn closed_neighborhood(g: &Graph, set: VertexSet) -> VertexSet {
    g.closed_neighborhood(set)
}

/// Canonical row order: by size, then lexicographically by sorted elements.
fn sort_row(row: &mut [VertexSet]) {
    row.sort_by_cached_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
}

fn format_rows(n: usize, rows: &[Vec<VertexSet>]) -> String {
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate().rev() {
        let sets: Vec<String> = row.iter().map(|s| s.label(n)).collect();
        let _ = writeln!(out, "Row {}: {}", i + 1, sets.join(","));
    }
    out
}

/// Machine-readable dump of a (reduced) structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureDump {
    pub rows: Vec<Vec<String>>,
    /// Adjoined coloring indices per set (full structure) or parents per set
    /// (reduced structure), keyed by set label.
    pub links: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct GameStructure {
    n: usize,
    neighbor_sets: Vec<VertexSet>,
    colorings: Vec<Coloring>,
    rows: Vec<Vec<VertexSet>>,
    /// Row index per mask (0 = never placed).
    row_of: Vec<u32>,
    adjoined: BTreeMap<VertexSet, Vec<usize>>,
}

pub fn build_structure(g: &Graph, colorings: &[Coloring]) -> Result<GameStructure> {
    let n = g.n();
    if n > MAX_STRUCTURE_VERTICES {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            range: format!("1..={MAX_STRUCTURE_VERTICES}"),
        });
    }
    if colorings.is_empty() {
        return Err(Error::Coloring("no colorings given".into()));
    }
    if let Some(c) = colorings.iter().find(|c| c.n() != n) {
        return Err(Error::Coloring(format!(
            "coloring over {} vertices for a graph on {n}",
            c.n()
        )));
    }

    let mut row_of = vec![0u32; 1 << n];
    let singletons: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    for s in &singletons {
        row_of[s.bits() as usize] = 1;
    }
    let mut rows = vec![singletons];
    let mut adjoined = BTreeMap::new();
    let mut classes: HashMap<VertexSet, Vec<Vec<VertexSet>>> = HashMap::new();
    let mut unplaced: Vec<VertexSet> = nonempty_subsets(n).filter(|s| s.len() >= 2).collect();

    loop {
        let row = rows.len() as u32 + 1;
        let mut placed = Vec::new();
        unplaced.retain(|&s| {
            let closed = g.closed_neighborhood(s);
            let per_coloring = classes
                .entry(closed)
                .or_insert_with(|| {
                    colorings
                        .iter()
                        .map(|c| restrict(c, closed).blocks().to_vec())
                        .collect()
                });
            let adj: Vec<usize> = per_coloring
                .iter()
                .enumerate()
                .filter(|(_, blocks)| {
                    blocks.iter().all(|b| {
                        let r = row_of[b.bits() as usize];
                        r != 0 && r < row
                    })
                })
                .map(|(j, _)| j)
                .collect();
            if adj.is_empty() {
                return true;
            }
            adjoined.insert(s, adj);
            placed.push(s);
            false
        });
        if placed.is_empty() {
            break;
        }
        for s in &placed {
            row_of[s.bits() as usize] = row;
        }
        sort_row(&mut placed);
        rows.push(placed);
    }

    Ok(GameStructure {
        n,
        neighbor_sets: (0..n).map(|v| g.neighbor_set(v)).collect(),
        colorings: colorings.to_vec(),
        rows,
        row_of,
        adjoined,
    })
}

impl GameStructure {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rows in order; `rows()[0]` is row 1.
    pub fn rows(&self) -> &[Vec<VertexSet>] {
        &self.rows
    }

    pub fn colorings(&self) -> &[Coloring] {
        &self.colorings
    }

    /// 1-based row of `set`, if it was placed.
    pub fn row_of(&self, set: VertexSet) -> Option<usize> {
        let idx = set.bits() as usize;
        match self.row_of.get(idx) {
            Some(&r) if r > 0 && !set.is_empty() => Some(r as usize),
            _ => None,
        }
    }

    /// Indices of the colorings adjoined to `set` (empty for singletons and
    /// unplaced sets).
    pub fn adjoined(&self, set: VertexSet) -> &[usize] {
        self.adjoined.get(&set).map_or(&[], Vec::as_slice)
    }

    /// Number of nonempty rows.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// Whether every nonempty subset of V(G) was placed.
    pub fn is_solvable(&self) -> bool {
        let placed: usize = self.rows.iter().map(Vec::len).sum();
        placed + 1 == 1 << self.n
    }

    pub fn closed_neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(set, |acc, v| acc.union(self.neighbor_sets[v]))
    }

    /// `Row i: ...` lines, highest row first.
    pub fn to_text(&self) -> String {
        format_rows(self.n, &self.rows)
    }

    pub fn dump(&self) -> StructureDump {
        StructureDump {
            rows: label_rows(self.n, &self.rows),
            links: self
                .adjoined
                .iter()
                .map(|(s, js)| (s.label(self.n), js.iter().map(|j| (j + 1).to_string()).collect()))
                .collect(),
        }
    }
}

fn label_rows(n: usize, rows: &[Vec<VertexSet>]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.label(n)).collect())
        .collect()
}

/// Number of rows of a structure.
pub fn height(gs: &GameStructure) -> usize {
    gs.height()
}

/// Whether the structure of `colorings` on `g` places every nonempty subset.
pub fn is_solvable(g: &Graph, colorings: &[Coloring]) -> Result<bool> {
    Ok(build_structure(g, colorings)?.is_solvable())
}

#[derive(Clone, Debug)]
pub struct ReducedGameStructure {
    n: usize,
    rows: Vec<Vec<VertexSet>>,
    parents: BTreeMap<VertexSet, Vec<VertexSet>>,
}

/// Top-down filtering: the highest row keeps the sets whose proper subsets all
/// lie in lower rows; each lower row additionally requires a parent among the
/// kept sets of the row above, i.e. a kept set with an adjoined coloring in
/// which the candidate is monochromatic.
pub fn reduce_structure(gs: &GameStructure) -> ReducedGameStructure {
    let h = gs.height();
    let subsets_lower = |s: VertexSet, row: usize| {
        s.len() == 1
            || s.iter().all(|v| {
                // Row index is monotone under inclusion, so the maximal
                // proper subsets decide it.
                matches!(gs.row_of(s.without(v)), Some(r) if r < row)
            })
    };
    let mut rows: Vec<Vec<VertexSet>> = vec![Vec::new(); h];
    let mut parents = BTreeMap::new();
    for row in (1..=h).rev() {
        let above: Vec<(VertexSet, &[usize])> = if row == h {
            Vec::new()
        } else {
            rows[row].iter().map(|&p| (p, gs.adjoined(p))).collect()
        };
        for &s in &gs.rows[row - 1] {
            if !subsets_lower(s, row) {
                continue;
            }
            if row == h {
                rows[row - 1].push(s);
                continue;
            }
            let ps: Vec<VertexSet> = above
                .iter()
                .filter(|(_, adj)| {
                    adj.iter()
                        .any(|&j| is_monochromatic(&gs.colorings[j], s).unwrap_or(false))
                })
                .map(|&(p, _)| p)
                .collect();
            if !ps.is_empty() {
                rows[row - 1].push(s);
                parents.insert(s, ps);
            }
        }
    }
    ReducedGameStructure {
        n: gs.n,
        rows,
        parents,
    }
}

impl ReducedGameStructure {
    pub fn rows(&self) -> &[Vec<VertexSet>] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// Kept sets of the row above in which `set` is a child.
    pub fn parents(&self, set: VertexSet) -> &[VertexSet] {
        self.parents.get(&set).map_or(&[], Vec::as_slice)
    }

    /// Kept sets of the row below having `set` as a parent.
    pub fn children(&self, set: VertexSet) -> Vec<VertexSet> {
        self.parents
            .iter()
            .filter(|(_, ps)| ps.contains(&set))
            .map(|(&c, _)| c)
            .collect()
    }

    pub fn to_text(&self) -> String {
        format_rows(self.n, &self.rows)
    }

    pub fn dump(&self) -> StructureDump {
        StructureDump {
            rows: label_rows(self.n, &self.rows),
            links: self
                .parents
                .iter()
                .map(|(s, ps)| (s.label(self.n), ps.iter().map(|p| p.label(self.n)).collect()))
                .collect(),
        }
    }
}

/// A reduced-structure set in row ≥ 3 whose size is not 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimViolation {
    pub row: usize,
    pub set: VertexSet,
    /// Top-row sets have no parent, so the parent-based argument does not
    /// reach them.
    pub top_row: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma44Report {
    pub n: usize,
    pub height: usize,
    /// `C(n, 2) + 1`.
    pub bound: usize,
    /// `height <= bound`.
    pub ok: bool,
    pub claim_violations: Vec<ClaimViolation>,
}

impl Lemma44Report {
    /// Whether every reduced set in rows ≥ 3 has exactly two vertices.
    pub fn claim_holds(&self) -> bool {
        self.claim_violations.is_empty()
    }

    /// Violations below the top row (where every set has a parent).
    pub fn non_top_violations(&self) -> usize {
        self.claim_violations.iter().filter(|v| !v.top_row).count()
    }
}

/// Height bound and reduced-row cardinality check for a pair of colorings.
pub fn check_lemma44(g: &Graph, ca: &Coloring, cb: &Coloring) -> Result<Lemma44Report> {
    let gs = build_structure(g, &[ca.clone(), cb.clone()])?;
    let reduced = reduce_structure(&gs);
    let n = g.n();
    let height = gs.height();
    let bound = n * n.saturating_sub(1) / 2 + 1;
    let claim_violations = reduced
        .rows()
        .iter()
        .enumerate()
        .skip(2)
        .flat_map(|(i, row)| {
            row.iter().filter(|s| s.len() != 2).map(move |&set| ClaimViolation {
                row: i + 1,
                set,
                top_row: i + 1 == height,
            })
        })
        .collect();
    Ok(Lemma44Report {
        n,
        height,
        bound,
        ok: height <= bound,
        claim_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{distance_coloring, distance_colorings, Partition};
    use crate::graph::{build_named, NamedGraph};

    fn ex41() -> Graph {
        build_named(&NamedGraph::Example41).unwrap()
    }

    fn row_text(rows: &[Vec<VertexSet>], i: usize, n: usize) -> String {
        let v: Vec<String> = rows[i - 1].iter().map(|s| s.label(n)).collect();
        v.join(",")
    }

    #[test]
    fn example_structure_rows() {
        let g = ex41();
        let cs = distance_colorings(&g, 1, false).unwrap();
        let gs = build_structure(&g, &cs).unwrap();
        assert_eq!(gs.height(), 3);
        assert!(gs.is_solvable());
        assert_eq!(row_text(gs.rows(), 2, 5), "12,14,15,24,25,45,124,125");
        assert_eq!(
            row_text(gs.rows(), 3, 5),
            "13,23,34,35,123,134,135,145,234,235,245,345,1234,1235,1245,1345,2345,12345"
        );
        let red = reduce_structure(&gs);
        assert_eq!(red.height(), 3);
        assert_eq!(row_text(red.rows(), 3, 5), "13,23,34,35,145,245");
        assert_eq!(row_text(red.rows(), 2, 5), "14,15,45");
        assert_eq!(row_text(red.rows(), 1, 5), "1,2,3,4,5");
        assert_eq!(
            red.to_text(),
            "Row 3: 13,23,34,35,145,245\nRow 2: 14,15,45\nRow 1: 1,2,3,4,5\n"
        );
        for (i, row) in red.rows().iter().enumerate().skip(1) {
            for &s in row {
                assert!(!red.children(s).is_empty(), "row {} set {:?}", i + 1, s);
            }
        }
        assert_eq!(closed_neighborhood(&g, VertexSet::singleton(3)), [2, 3].into_iter().collect());
    }

    #[test]
    fn single_coloring_and_trivial_cases() {
        let g = ex41();
        let c1 = distance_coloring(&g, VertexSet::singleton(0)).unwrap();
        let gs = build_structure(&g, &[c1]).unwrap();
        assert_eq!(gs.height(), 1);
        assert!(!gs.is_solvable());

        let k2 = build_named(&NamedGraph::Path(2)).unwrap();
        let gs = build_structure(&k2, &distance_colorings(&k2, 1, false).unwrap()).unwrap();
        assert_eq!(gs.height(), 2);
        assert_eq!(gs.adjoined(VertexSet::full(2)), &[0, 1]);

        let k1 = build_named(&NamedGraph::Path(1)).unwrap();
        let gs = build_structure(&k1, &distance_colorings(&k1, 1, false).unwrap()).unwrap();
        assert_eq!((gs.height(), gs.is_solvable()), (1, true));

        let star = build_named(&NamedGraph::Star(4)).unwrap();
        let gs = build_structure(&star, &distance_colorings(&star, 1, true).unwrap()).unwrap();
        assert!(gs.is_solvable());

        let discrete = Coloring::new(Partition::from_keys(0..5));
        let gs = build_structure(&g, std::slice::from_ref(&discrete)).unwrap();
        assert_eq!((gs.height(), gs.is_solvable()), (2, true));
        let mono = Coloring::new(Partition::from_keys([0; 5]));
        let report = check_lemma44(&g, &mono, &mono).unwrap();
        assert_eq!((report.height, report.bound, report.ok), (1, 11, true));
        let report = check_lemma44(&g, &discrete, &mono).unwrap();
        assert_eq!(report.height, 2);
    }

    #[test]
    fn two_coloring_top_row_counterexample() {
        // K_{1,3} with colorings {0|1|23} and {0|12|3}: the top reduced row
        // contains the three leaves together.
        let g = build_named(&NamedGraph::Star(3)).unwrap();
        let ca = Coloring::parse("1|2|3,4", 4).unwrap();
        let cb = Coloring::parse("1|2,3|4", 4).unwrap();
        let report = check_lemma44(&g, &ca, &cb).unwrap();
        assert!(report.ok);
        assert_eq!(report.non_top_violations(), 0);
        assert!(report
            .claim_violations
            .iter()
            .any(|v| v.top_row && v.set == [1, 2, 3].into_iter().collect()));
    }

    #[test]
    fn rejects_mismatched_colorings() {
        let g = ex41();
        let c = Coloring::parse("1|2,3", 3).unwrap();
        assert!(matches!(build_structure(&g, &[c]), Err(Error::Coloring(_))));
        assert!(build_structure(&g, &[]).is_err());
    }
}
