//! End-to-end acceptance: each test runs one whole-catalog verification
//! suite over its full sweep and fails on any exact-comparison failure.
//! Run with `--nocapture` to see one status line per suite.

use std::time::Instant;

use symcurv::verify::{self, CriterionResult};

fn run(check: fn() -> CriterionResult) {
    let start = Instant::now();
    let result = check();
    let status = if result.passed() { "PASS" } else { "FAIL" };
    println!(
        "{status} {} ({} checks, {:.2?})",
        result.name,
        result.checked,
        start.elapsed()
    );
    for failure in &result.failures {
        println!("  - {failure}");
    }
    assert!(
        result.passed(),
        "{} failed {} of {} checks:\n{}",
        result.name,
        result.failures.len(),
        result.checked,
        result.failures.join("\n")
    );
}

#[test]
fn bound_table_reproduction() {
    run(verify::check_bound_table);
}

#[test]
fn reference_root_lists() {
    run(verify::check_reference_root_lists);
}

#[test]
fn killing_normalization() {
    run(verify::check_killing_normalization);
}

#[test]
fn oracle_equivalence() {
    run(verify::check_oracle_equivalence);
}

#[test]
fn rank_dimension_cross_checks() {
    run(verify::check_rank_dimension);
}

#[test]
fn sampson_thresholds() {
    run(verify::check_sampson_thresholds);
}

#[test]
fn structural_properties() {
    run(verify::check_structural_properties);
}

#[test]
fn suites_run_in_declared_order() {
    let names: Vec<&str> = verify::run_all().iter().map(|r| r.name).collect();
    assert_eq!(
        names,
        [
            "bound-table-reproduction",
            "reference-root-lists",
            "killing-normalization",
            "oracle-equivalence",
            "rank-dimension-cross-checks",
            "sampson-thresholds",
            "structural-properties",
        ]
    );
}
