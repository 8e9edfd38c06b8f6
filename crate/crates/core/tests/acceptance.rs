//! One test per acceptance criterion. Each writes a single status line to
//! stderr (outside the harness capture) so the run log shows every verdict.

use std::io::Write;
use std::time::{Duration, Instant};

use qaskey::identities::{CheckReport, ParamGrid, Verdict};
use qaskey::rat::rat;
use qaskey::suites::{tasks, Suite, Task};
use qaskey::QParams;
use rayon::prelude::*;

fn line(n: u32, title: &str, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "acceptance {n:>2} [{status}] {title}: {detail}");
}

fn run(ts: &[Task]) -> Vec<CheckReport> {
    ts.par_iter().map(|t| t.run(None)).collect()
}

struct Outcome {
    checks: usize,
    comparisons: usize,
    failures: Vec<String>,
    elapsed: Duration,
}

fn evaluate(ts: Vec<Task>) -> Outcome {
    let start = Instant::now();
    let reports = run(&ts);
    let failures = reports
        .iter()
        .filter(|r| r.verdict != Verdict::Pass)
        .map(|r| {
            let at = r
                .witness
                .as_ref()
                .map(|w| w.location.clone())
                .or_else(|| r.error.clone())
                .unwrap_or_default();
            format!("{} {:?} at {at}", r.id, r.params)
        })
        .collect();
    Outcome {
        checks: reports.len(),
        comparisons: reports.iter().map(|r| r.comparisons).sum(),
        failures,
        elapsed: start.elapsed(),
    }
}

/// Prints the line and fails the test on any failing check or a blown budget.
fn report(n: u32, title: &str, o: Outcome, budget_s: u64) {
    let in_time = o.elapsed <= Duration::from_secs(budget_s);
    let ok = o.failures.is_empty() && o.checks > 0 && in_time;
    let mut detail = format!(
        "{} checks, {} comparisons, {:.2} s (budget {budget_s} s)",
        o.checks,
        o.comparisons,
        o.elapsed.as_secs_f64()
    );
    if !o.failures.is_empty() {
        detail.push_str(&format!("; {} failing, first: {}", o.failures.len(), o.failures[0]));
    }
    line(n, title, ok, &detail);
    assert!(ok, "{title}: {detail}\n{}", o.failures.join("\n"));
}

fn only(suite: Suite, grid: &ParamGrid, prefix: &str) -> Vec<Task> {
    tasks(suite, grid).into_iter().filter(|t| t.id.starts_with(prefix)).collect()
}

fn grid_with_q(qs: &[(i64, i64, i64, i64)]) -> ParamGrid {
    ParamGrid {
        qparams: qs.iter().map(|&(a, b, c, d)| QParams::new(rat(a, b), rat(c, d)).unwrap()).collect(),
        ..ParamGrid::default()
    }
}

#[test]
fn criterion_01_weighted_sum() {
    let o = evaluate(tasks(Suite::Theorem, &ParamGrid::default()));
    report(1, "weighted q-Racah sum, brute force against product form", o, 30);
}

#[test]
fn criterion_02_dual_addition() {
    let o = evaluate(only(Suite::DualAddition, &ParamGrid::default(), "dual-addition.q"));
    report(2, "q dual addition formula, direct and inversion modes", o, 60);
}

#[test]
fn criterion_03_restriction() {
    let o = evaluate(tasks(Suite::Restriction, &grid_with_q(&[(1, 2, 2, 3)])));
    report(3, "dual addition and addition formula agree on the duality lattice", o, 10);
}

#[test]
fn criterion_04_addition() {
    let grid = grid_with_q(&[(1, 2, 2, 3), (2, 3, 1, 2)]);
    let o = evaluate(only(Suite::Addition, &grid, "addition.q"));
    report(4, "q addition formula as a Laurent identity", o, 10);
}

#[test]
fn criterion_05_linearization() {
    let grid = ParamGrid { alphas: vec![rat(0, 1), rat(1, 2), rat(1, 1), rat(1, 4)], ..ParamGrid::default() };
    let o = evaluate(tasks(Suite::Linearization, &grid));
    report(5, "linearization (q, Gegenbauer, Legendre) with nonnegative coefficients", o, 10);
}

#[test]
fn criterion_06_dualities() {
    let o = evaluate(tasks(Suite::Duality, &ParamGrid::default()));
    report(6, "Krawtchouk, Hahn, Racah, Wilson and q-ultraspherical dualities", o, 5);
}

#[test]
fn criterion_07_discrete_orthogonality() {
    let o = evaluate(tasks(Suite::Orthogonality, &ParamGrid::default()));
    report(7, "discrete Gram matrices and weight sums", o, 5);
}

#[test]
fn criterion_08_structural() {
    let grid = ParamGrid::default();
    let mut ts = tasks(Suite::WeightRecurrence, &grid);
    ts.extend(tasks(Suite::Difference, &grid));
    ts.extend(tasks(Suite::BackwardShift, &grid));
    let o = evaluate(ts);
    report(8, "leading coefficient, weight ratio, difference formula, backward shift", o, 5);
}

#[test]
fn criterion_09_classical_addition() {
    let grid = ParamGrid { alphas: vec![rat(0, 1), rat(1, 2), rat(1, 1)], ..ParamGrid::default() };
    let mut ts = only(Suite::Addition, &grid, "addition.classical");
    ts.extend(only(Suite::Addition, &grid, "addition.legendre"));
    ts.extend(tasks(Suite::ProductFormula, &grid));
    let o = evaluate(ts);
    report(9, "Gegenbauer and Legendre addition and product formulas", o, 10);
}

#[test]
fn criterion_10_limits() {
    let o = evaluate(tasks(Suite::Limits, &ParamGrid::default()));
    report(10, "limit transitions and Bessel special cases", o, 30);
}

#[test]
fn criterion_11_numeric_orthogonality() {
    let o = evaluate(tasks(Suite::NumericOrthogonality, &ParamGrid::default()));
    report(11, "quadrature orthogonality and weight integral", o, 30);
}

/// Corrupts the middle comparison of every task and requires a failure whose
/// witness points at the corrupted comparison.
#[test]
fn criterion_12_mutation_pass() {
    let start = Instant::now();
    let grid = ParamGrid::default();
    let mut missed = Vec::new();
    let mut total = 0;
    for suite in Suite::ALL.into_iter().filter(|s| *s != Suite::All) {
        let ts = tasks(suite, &grid);
        total += ts.len();
        let misses: Vec<String> = ts
            .par_iter()
            .filter_map(|t| {
                let clean = t.run(None);
                if clean.comparisons == 0 {
                    return Some(format!("{suite}: {} {:?} makes no comparisons", t.id, t.params));
                }
                let probed = t.run(Some(clean.comparisons / 2));
                let location = probed.probed.clone().unwrap_or_default();
                let localized = probed.verdict == Verdict::Fail
                    && probed.witness.as_ref().is_some_and(|w| w.location.starts_with(&location));
                (!localized).then(|| format!("{suite}: {} {:?} not localized", t.id, t.params))
            })
            .collect();
        missed.extend(misses);
    }
    let ok = missed.is_empty();
    let detail = format!(
        "{}/{} mutations detected with a localized witness, {:.2} s",
        total - missed.len(),
        total,
        start.elapsed().as_secs_f64()
    );
    line(12, "fail-negative mutation pass over every suite", ok, &detail);
    assert!(ok, "{detail}\n{}", missed.join("\n"));
}
