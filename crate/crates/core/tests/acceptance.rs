//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line to stdout
//! (uncaptured) and then asserts the criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use locgame::coloring::distance_colorings;
use locgame::graph::generate::generate_connected_graphs;
use locgame::graph::{build_named, encode_graph6, Graph, NamedGraph};
use locgame::solver::{game_value, metric_dimension, zeta, GameValue, Solver};
use locgame::strategy::verify_tree_bounds;
use locgame::structure::{build_structure, reduce_structure};
use locgame::verify::{lemma44_instance, lemma44_suite, outerplanar_suite};

fn report(criterion: u32, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "acceptance criterion {criterion}: {status} {detail}");
}

fn named(g: NamedGraph) -> Graph {
    build_named(&g).unwrap()
}

fn row_line(rows: &[Vec<locgame::VertexSet>], i: usize, n: usize) -> String {
    let sets: Vec<String> = rows[i - 1].iter().map(|s| s.label(n)).collect();
    sets.join(",")
}

#[test]
fn criterion_1_example_structure_rows() {
    let start = Instant::now();
    let g = named(NamedGraph::Example41);
    let colorings = distance_colorings(&g, 1, false).unwrap();
    let gs = build_structure(&g, &colorings).unwrap();
    let reduced = reduce_structure(&gs);
    let elapsed = start.elapsed();

    let row2 = row_line(gs.rows(), 2, 5);
    let row3 = row_line(gs.rows(), 3, 5);
    let full_ok = row2 == "12,14,15,24,25,45,124,125"
        && row3 == "13,23,34,35,123,134,135,145,234,235,245,345,1234,1235,1245,1345,2345,12345";
    let reduced_text = format!(
        "Row 3: {}; Row 2: {}",
        row_line(reduced.rows(), 3, 5),
        row_line(reduced.rows(), 2, 5)
    );
    let reduced_ok = reduced_text == "Row 3: 13,23,34,35,145,245; Row 2: 14,15,45";
    let time_ok = elapsed < Duration::from_secs(1);
    let ok = full_ok && reduced_ok && time_ok;
    report(
        1,
        ok,
        &format!("full rows match: {full_ok}; reduced `{reduced_text}`; {elapsed:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_2_structure_matches_solver() {
    let start = Instant::now();
    let mut graphs = Vec::new();
    for n in 1..=7 {
        graphs.extend(generate_connected_graphs(n).unwrap());
    }
    let (mut solvable_mismatch, mut height_mismatch, mut checked) = (0, 0, 0);
    let (mut finite, mut height_is_value_plus_one) = (0, 0);
    let mut example = None;
    for g in &graphs {
        for k in 1..=2usize {
            let value = game_value(g, k).unwrap();
            let gs = build_structure(g, &distance_colorings(g, k.min(g.n()), true).unwrap()).unwrap();
            checked += 1;
            if gs.is_solvable() != value.is_finite() {
                solvable_mismatch += 1;
            }
            if let GameValue::Finite(v) = value {
                finite += 1;
                if g.n() >= 2 && gs.height() == v as usize + 1 {
                    height_is_value_plus_one += 1;
                }
                if gs.height() != v as usize {
                    height_mismatch += 1;
                    if example.is_none() {
                        example = Some(format!("{} k={k}: height {} value {v}", encode_graph6(g), gs.height()));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = solvable_mismatch == 0 && height_mismatch == 0 && elapsed < Duration::from_secs(600);
    report(
        2,
        ok,
        &format!(
            "{} graphs x k in {{1,2}} ({checked} cases): solvable<->finite mismatches {solvable_mismatch}, \
             height=value mismatches {height_mismatch} (e.g. {}); height=value+1 in \
             {height_is_value_plus_one} of {finite} finite cases (all but n=1); {elapsed:.1?}",
            graphs.len(),
            example.as_deref().unwrap_or("none")
        ),
    );
    assert_eq!(solvable_mismatch, 0, "solvable <-> finite value");
    assert_eq!(height_mismatch, 0, "height = game value");
}

#[test]
fn criterion_3_point_values() {
    let mut failures = Vec::new();
    for m in 2..=6usize {
        let v = game_value(&named(NamedGraph::Star(m)), 1).unwrap();
        if v != GameValue::Finite(m as u32) {
            failures.push(format!("star({m}) k=1: {v}, expected {m}"));
        }
    }
    for m in 4..=8 {
        let v = game_value(&named(NamedGraph::Cycle(m)), 2).unwrap();
        if v != GameValue::Finite(1) {
            failures.push(format!("cycle({m}) k=2: {v}, expected 1"));
        }
    }
    let g5 = Solver::with_cap(&named(NamedGraph::Gm(5)), 2, 13).unwrap().value();
    if g5 != GameValue::Finite(3) {
        failures.push(format!("G_5 k=2: {g5}, expected 3"));
    }
    let z = zeta(&named(NamedGraph::T33), 3).unwrap();
    if z != Some(2) {
        failures.push(format!("zeta(T33) = {z:?}, expected 2"));
    }
    report(
        3,
        failures.is_empty(),
        &if failures.is_empty() {
            "all point values match".to_string()
        } else {
            failures.join("; ")
        },
    );
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_4_tree_strategy_bounds() {
    let report4 = verify_tree_bounds(11).unwrap();
    let t33 = report4.records.iter().filter(|r| r.contains_t33).count();
    let first_t33 = report4.records.iter().filter(|r| r.contains_t33).map(|r| r.n).min();
    let failures: Vec<String> = report4
        .failures()
        .map(|r| format!("{}: {}", r.graph6, r.failures.join(", ")))
        .collect();
    let ok = failures.is_empty() && t33 > 0 && first_t33 == Some(10);
    report(
        4,
        ok,
        &format!(
            "{} trees (n 2..=11, {t33} with T_3,3 from n={}), violations {}",
            report4.records.len(),
            first_t33.unwrap_or(0),
            failures.len()
        ),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_5_outerplanar_bounds() {
    let solve = |g: &Graph, k: usize| game_value(g, k);
    let r = outerplanar_suite(8, 200, &solve).unwrap();
    let count = |claim: &str| r.records.iter().filter(|x| x.claim == claim).count();
    let failures: Vec<String> = r
        .failures()
        .map(|x| format!("{} {} {:?} > {}", x.claim, x.graph6, x.computed, x.bound))
        .collect();
    let ok = failures.is_empty() && count("outerplanar-block-sum") >= 200;
    report(
        5,
        ok,
        &format!(
            "{} cycle+chord graphs (n 3..=8), {} block-composed samples (n 3..=10), violations {}",
            count("outerplanar-chords"),
            count("outerplanar-block-sum"),
            failures.len()
        ),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_6_two_coloring_height() {
    let r = lemma44_suite(6, 200).unwrap();
    let height = r.records.iter().filter(|x| x.claim == "lemma44-height");
    let height_fail = height.clone().filter(|x| !x.ok).count();
    let pair_fail: Vec<&str> = r
        .records
        .iter()
        .filter(|x| x.claim == "lemma44-rows-hold-pairs" && !x.ok)
        .map(|x| x.detail.as_str())
        .collect();
    let ok = height_fail == 0 && pair_fail.is_empty();
    report(
        6,
        ok,
        &format!(
            "{} instances (n 4..=6, 200 seeds each): height bound violations {height_fail}, \
             rows>=3 non-pair violations {}",
            height.count(),
            pair_fail.len()
        ),
    );
    assert!(ok, "{pair_fail:?}");
}

/// Not a criterion: the same generator over 2000 seeds per `n`, reporting
/// where the 2-set claim breaks. Only the height bound and the rows below
/// the top are asserted.
#[test]
fn two_coloring_extended_corpus_info() {
    let (mut top, mut below, mut height_fail) = (0, 0, 0);
    for n in 4..=6 {
        for seed in 0..2000 {
            let (g, a, b) = lemma44_instance(n, seed).unwrap();
            let r = locgame::structure::check_lemma44(&g, &a, &b).unwrap();
            height_fail += usize::from(!r.ok);
            top += r.claim_violations.iter().filter(|v| v.top_row).count();
            below += r.non_top_violations();
        }
    }
    let mut out = std::io::stdout().lock();
    let _ = writeln!(
        out,
        "info: two-coloring corpus, 2000 seeds per n in 4..=6: height violations {height_fail}, \
         non-pair sets in top row {top}, below top row {below}"
    );
    assert_eq!(height_fail, 0);
    assert_eq!(below, 0);
}

#[test]
fn criterion_7_cross_invariants() {
    let mut failures = Vec::new();
    let mut graphs = Vec::new();
    for n in 1..=6 {
        graphs.extend(generate_connected_graphs(n).unwrap());
    }
    for g in &graphs {
        let md = metric_dimension(g).unwrap();
        let values: Vec<GameValue> = (1..=3).map(|k| game_value(g, k).unwrap()).collect();
        for (i, &v) in values.iter().enumerate() {
            let k = i + 1;
            if (v == GameValue::Finite(1)) != (k >= md) {
                failures.push(format!("{} k={k}: value {v}, metric dimension {md}", encode_graph6(g)));
            }
        }
        for w in values.windows(2) {
            if w[1] > w[0] {
                failures.push(format!("{}: not monotone in k {values:?}", encode_graph6(g)));
            }
        }
    }
    report(
        7,
        failures.is_empty(),
        &format!("{} graphs x k in 1..=3, violations {}", graphs.len(), failures.len()),
    );
    assert!(failures.is_empty(), "{failures:?}");
}
