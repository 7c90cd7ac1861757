//! Acceptance battery: one test per criterion, each printing a pass/fail
//! line.  Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines, or use the `report` CLI command for the full table.

use toriplan::report::{self, CriterionOutcome};

const SEED: u64 = 0;

fn run(outcome: CriterionOutcome) {
    println!("{}", outcome.status_line());
    for detail in &outcome.details {
        println!("  {detail}");
    }
    assert!(outcome.pass, "{}", outcome.status_line());
}

#[test]
fn criterion_1_tc_grids() {
    run(report::criterion_tc_grids(SEED));
}

#[test]
fn criterion_2_cover_oracle() {
    run(report::criterion_cover_oracle(SEED));
}

#[test]
fn criterion_3_algebra_bridge() {
    run(report::criterion_algebra_bridge(SEED));
}

#[test]
fn criterion_4_shuffle() {
    run(report::criterion_shuffle(SEED));
}

#[test]
fn criterion_5_full_contract() {
    run(report::criterion_full_contract(SEED));
}

#[test]
fn criterion_6_stratum_bound() {
    run(report::criterion_stratum_bound(SEED));
}

#[test]
fn criterion_7_containment() {
    run(report::criterion_containment(SEED));
}

#[test]
fn criterion_8_applications() {
    run(report::criterion_applications(SEED));
}

#[test]
fn criterion_9_even_squares() {
    run(report::criterion_even_squares(SEED));
}
