//! Batch verification suites producing per-claim records.
//!
//! * `trees`: strategy bounds on every tree (see [`verify_tree_bounds`]).
//! * `outerplanar`: for every cycle-plus-chords graph: two-cop value
//!   `≤ c + 1` and `≤ n − 2`; for seeded block-composed outerplanar graphs:
//!   two-cop value `≤ Σ (|B_i| − 1)`.
//! * `lemma44`: seeded two-coloring instances: structure height
//!   `≤ C(n, 2) + 1` and the reduced rows ≥ 3 hold only 2-sets.
//!
//! Two-coloring instances are reproducible from `(n, seed)`: a ChaCha8 stream
//! seeded with `(n << 32) | seed` draws a connected graph (each vertex `v > 0`
//! joined to a uniform earlier vertex, then every other pair with probability
//! 1/2), then two colorings, each with `b` uniform in `2..=n` and every vertex
//! colored uniformly from `b` colors.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{Coloring, Partition};
use crate::error::{Error, Result};
use crate::graph::generate::{generate_2connected_outerplanar, random_block_outerplanar};
use crate::graph::{block_decomposition, encode_graph6, outerplanar_embedding, Graph};
use crate::solver::GameValue;
use crate::strategy::{verify_tree_bounds_with, ValueFn};
use crate::structure::check_lemma44;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Trees,
    Outerplanar,
    Lemma44,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(Suite::Trees),
            "outerplanar" => Ok(Suite::Outerplanar),
            "lemma44" => Ok(Suite::Lemma44),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Trees => "trees",
            Suite::Outerplanar => "outerplanar",
            Suite::Lemma44 => "lemma44",
        })
    }
}

/// One checked claim on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub claim: String,
    pub graph6: String,
    /// `None` when the value is ∞ or could not be computed.
    pub computed: Option<u32>,
    pub bound: u32,
    pub ok: bool,
    pub detail: String,
}

impl ClaimRecord {
    fn upper(claim: &str, graph6: &str, computed: Option<u32>, bound: u32, detail: String) -> Self {
        ClaimRecord {
            claim: claim.to_string(),
            graph6: graph6.to_string(),
            computed,
            bound,
            ok: computed.is_some_and(|c| c <= bound),
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub records: Vec<ClaimRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    fn new(suite: Suite, records: Vec<ClaimRecord>) -> Self {
        let failures = records.iter().filter(|r| !r.ok).count();
        VerificationReport {
            suite,
            summary: Summary {
                total: records.len(),
                failures,
            },
            records,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.records.iter().filter(|r| !r.ok)
    }
}

/// Suite parameters.
#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub n_max: usize,
    /// Random instances: per `n` for lemma44, in total for block samples.
    pub seeds: u64,
}

pub fn run_suite(suite: Suite, opts: SuiteOptions, value: &ValueFn<'_>) -> Result<VerificationReport> {
    match suite {
        Suite::Trees => trees_suite(opts.n_max, value),
        Suite::Outerplanar => outerplanar_suite(opts.n_max, opts.seeds, value),
        Suite::Lemma44 => lemma44_suite(opts.n_max, opts.seeds),
    }
}

pub fn trees_suite(n_max: usize, value: &ValueFn<'_>) -> Result<VerificationReport> {
    let report = verify_tree_bounds_with(n_max, value)?;
    let mut records = Vec::new();
    for r in report.records {
        let computed = (r.rounds != u32::MAX).then_some(r.rounds);
        let detail = format!("{} n={} leaves={} value={}", r.strategy, r.n, r.leaves, r.game_value);
        let strategy_error = r.failures.iter().find(|f| f.starts_with("strategy error"));
        let mut leaf = ClaimRecord::upper("tree-leaf-bound", &r.graph6, computed, r.bound, detail.clone());
        if let Some(e) = strategy_error {
            leaf.detail = format!("{detail}; {e}");
        }
        records.push(leaf);
        records.push(ClaimRecord::upper(
            "tree-vertex-bound",
            &r.graph6,
            computed,
            r.vertex_bound,
            detail.clone(),
        ));
        let lower_ok = computed.is_some_and(|c| GameValue::Finite(c) >= r.game_value);
        records.push(ClaimRecord {
            claim: "tree-strategy-at-least-value".into(),
            graph6: r.graph6.clone(),
            computed,
            bound: r.game_value.finite().unwrap_or(u32::MAX),
            ok: lower_ok,
            detail,
        });
    }
    Ok(VerificationReport::new(Suite::Trees, records))
}

/// The `seed`-th block-composed sample: `n` cycles through `3..=10`.
pub fn block_sample(seed: u64) -> Result<Graph> {
    random_block_outerplanar(3 + (seed % 8) as usize, seed)
}

pub fn outerplanar_suite(n_max: usize, samples: u64, value: &ValueFn<'_>) -> Result<VerificationReport> {
    if !(3..=10).contains(&n_max) {
        return Err(Error::OutOfRange {
            what: "n_max",
            value: n_max,
            range: "3..=10".into(),
        });
    }
    let mut graphs = Vec::new();
    for n in 3..=n_max {
        graphs.extend(generate_2connected_outerplanar(n, false)?);
    }
    let mut records: Vec<ClaimRecord> = graphs
        .par_iter()
        .map(|g| -> Result<Vec<ClaimRecord>> {
            let n = g.n();
            let c = outerplanar_embedding(g)?.map_or(0, |e| e.chord_count());
            let v = value(g, 2)?.finite();
            let id = encode_graph6(g);
            let detail = format!("n={n} chords={c}");
            Ok(vec![
                ClaimRecord::upper("outerplanar-chords", &id, v, c as u32 + 1, detail.clone()),
                ClaimRecord::upper("outerplanar-n-minus-2", &id, v, n as u32 - 2, detail),
            ])
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let blocks = (0..samples)
        .into_par_iter()
        .map(|seed| -> Result<ClaimRecord> {
            let g = block_sample(seed)?;
            let dec = block_decomposition(&g);
            let v = value(&g, 2)?.finite();
            Ok(ClaimRecord::upper(
                "outerplanar-block-sum",
                &encode_graph6(&g),
                v,
                dec.size_bound() as u32,
                format!("seed={seed} n={} blocks={}", g.n(), dec.blocks.len()),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    records.extend(blocks);
    Ok(VerificationReport::new(Suite::Outerplanar, records))
}

/// The seeded graph and coloring pair for `(n, seed)`.
pub fn lemma44_instance(n: usize, seed: u64) -> Result<(Graph, Coloring, Coloring)> {
    if !(2..=crate::structure::MAX_STRUCTURE_VERTICES).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            range: format!("2..={}", crate::structure::MAX_STRUCTURE_VERTICES),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(((n as u64) << 32) | (seed & 0xffff_ffff));
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, &edges)?;
    let mut coloring = || {
        let b = rng.gen_range(2..=n);
        let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..b)).collect();
        Coloring::new(Partition::from_keys(colors))
    };
    let (ca, cb) = (coloring(), coloring());
    Ok((g, ca, cb))
}

/// `seeds` instances for each `n` in `4..=n_max`.
pub fn lemma44_suite(n_max: usize, seeds: u64) -> Result<VerificationReport> {
    let max = crate::structure::MAX_STRUCTURE_VERTICES;
    if !(4..=max).contains(&n_max) {
        return Err(Error::OutOfRange {
            what: "n_max",
            value: n_max,
            range: format!("4..={max}"),
        });
    }
    let cases: Vec<(usize, u64)> = (4..=n_max)
        .flat_map(|n| (0..seeds).map(move |s| (n, s)))
        .collect();
    let records = cases
        .par_iter()
        .map(|&(n, seed)| -> Result<Vec<ClaimRecord>> {
            let (g, ca, cb) = lemma44_instance(n, seed)?;
            let report = check_lemma44(&g, &ca, &cb)?;
            let id = encode_graph6(&g);
            let base = format!("n={n} seed={seed} colorings={ca};{cb}");
            let pairs: Vec<String> = report
                .claim_violations
                .iter()
                .map(|v| {
                    let top = if v.top_row { " top" } else { "" };
                    format!("row {}{top}: {}", v.row, v.set.label(n))
                })
                .collect();
            Ok(vec![
                ClaimRecord::upper(
                    "lemma44-height",
                    &id,
                    Some(report.height as u32),
                    report.bound as u32,
                    base.clone(),
                ),
                ClaimRecord {
                    claim: "lemma44-rows-hold-pairs".into(),
                    graph6: id,
                    computed: Some(report.claim_violations.len() as u32),
                    bound: 0,
                    ok: report.claim_holds(),
                    detail: if pairs.is_empty() {
                        base
                    } else {
                        format!("{base}; {}", pairs.join(", "))
                    },
                },
            ])
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(VerificationReport::new(Suite::Lemma44, records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::game_value;

    #[test]
    fn lemma44_instances_are_reproducible() {
        let (g1, a1, b1) = lemma44_instance(6, 17).unwrap();
        let (g2, a2, b2) = lemma44_instance(6, 17).unwrap();
        assert_eq!((g1, a1, b1), (g2, a2, b2));
        let (g3, ..) = lemma44_instance(5, 17).unwrap();
        assert_eq!(g3.n(), 5);
        for seed in 0..30 {
            let (g, a, b) = lemma44_instance(4, seed).unwrap();
            assert!(g.is_connected());
            assert!((1..=4).contains(&a.blocks().len()) && (1..=4).contains(&b.blocks().len()));
        }
    }

    #[test]
    fn small_suites_run() {
        let solve = |g: &Graph, k: usize| game_value(g, k);
        let report = outerplanar_suite(6, 10, &solve).unwrap();
        assert_eq!(report.summary.failures, 0);
        assert_eq!(report.summary.total, 2 * (1 + 3 + 11 + 45) + 10);
        let report = trees_suite(8, &solve).unwrap();
        assert_eq!(report.summary.failures, 0);
        assert_eq!("lemma44".parse::<Suite>().unwrap(), Suite::Lemma44);
        assert!("forests".parse::<Suite>().is_err());
    }
}
