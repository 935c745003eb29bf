//! Acceptance suite: one test per check of the verification suite, each
//! printing its pass/fail line. `cargo test --test acceptance -- --nocapture`
//! shows the full ledger; the CLI command `pinlift paper-checks` runs the
//! same checks.

use pinlift::checks::{run, Fault, CHECKS};

fn run_one(id: &str) {
    let result = run(id, 2026, Fault::None).expect("known check id");
    println!(
        "[{}] {} ({} ms / {} ms budget) - {}",
        if result.passed { "PASS" } else { "FAIL" },
        result.spec.id,
        result.millis,
        result.spec.budget_millis,
        result.detail
    );
    assert!(result.passed, "{}: {}", result.spec.id, result.detail);
}

#[test]
fn criterion_1_q8_restriction_zero() {
    run_one("q8-restriction-zero");
}

#[test]
fn criterion_2_klein_four_covers() {
    run_one("klein-four-covers");
}

#[test]
fn criterion_3_class_map_injectivity() {
    run_one("class-map-injectivity");
}

#[test]
fn criterion_4_class_map_additivity_naturality() {
    run_one("class-map-additivity-naturality");
}

#[test]
fn criterion_5_lifting_verdicts_c2() {
    run_one("lifting-verdicts-c2");
}

#[test]
fn criterion_6_w1_equals_det() {
    run_one("w1-equals-det");
}

#[test]
fn criterion_7_cocycle_identity_fuzz() {
    run_one("cocycle-identity-fuzz");
}

#[test]
fn criterion_8_conjugation_invariance() {
    run_one("conjugation-invariance");
}

#[test]
fn suite_is_complete() {
    assert_eq!(CHECKS.len(), 8);
}
