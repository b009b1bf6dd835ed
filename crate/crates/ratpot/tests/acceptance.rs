//! Acceptance suite: runs every verification suite at its pinned tolerance
//! and prints one pass/fail line per criterion.
//!
//!     cargo test -p ratpot --test acceptance -- --nocapture

use ratpot::verify::{run_suite, Suite, VerifyRecord};

fn report(criterion: usize, title: &str, records: &[VerifyRecord]) {
    let pass = records.iter().all(|r| r.pass);
    let worst = records
        .iter()
        .max_by(|a, b| {
            let ra = a.value / a.tolerance.max(f64::MIN_POSITIVE);
            let rb = b.value / b.tolerance.max(f64::MIN_POSITIVE);
            ra.partial_cmp(&rb).unwrap_or(std::cmp::Ordering::Equal)
        })
        .expect("suites always produce records");
    println!(
        "criterion {criterion:2} ({title}): {}: worst {} = {:.3e} (tol {:.1e}) [{}]",
        if pass { "PASS" } else { "FAIL" },
        worst.check,
        worst.value,
        worst.tolerance,
        worst.params,
    );
    for r in records {
        assert!(
            r.pass,
            "criterion {criterion} '{}' failed: value {} exceeds tolerance {} ({})",
            r.check, r.value, r.tolerance, r.params
        );
    }
}

#[test]
fn criterion_01_polynomial_fixtures() {
    report(
        1,
        "closed-form polynomial tables, exact equality",
        &run_suite(Suite::Polynomials),
    );
}

#[test]
fn criterion_02_definition_expansion_identities() {
    report(
        2,
        "definition vs classical-basis expansions, exact",
        &run_suite(Suite::Identities),
    );
}

#[test]
fn criterion_03_schrodinger_residuals() {
    report(3, "analytic eigenfunction residuals < 1e-10", &run_suite(Suite::Residuals));
}

#[test]
fn criterion_04_fd_isospectrality() {
    report(
        4,
        "FD isospectrality of case ii extensions, 20 draws/family",
        &run_suite(Suite::Isospectrality),
    );
}

#[test]
fn criterion_05_extra_bound_state() {
    report(
        5,
        "one FD level below the tower at the predicted energy",
        &run_suite(Suite::ExtraLevels),
    );
}

#[test]
fn criterion_06_orthonormality() {
    report(
        6,
        "Gram matrices of levels 0..5 are the identity within 1e-8",
        &run_suite(Suite::Orthonormality),
    );
}

#[test]
fn criterion_07_shape_invariance() {
    report(
        7,
        "ground-state partner reproduces the shifted family < 1e-10",
        &run_suite(Suite::ShapeInvariance),
    );
}

#[test]
fn criterion_08_limits() {
    report(
        8,
        "limiting relations exact for nu <= 8, first-order in eps",
        &run_suite(Suite::Limits),
    );
}

#[test]
fn criterion_09_susy_map() {
    report(
        9,
        "intertwining map lands on direct eigenfunctions < 1e-9",
        &run_suite(Suite::SusyMap),
    );
}

#[test]
fn criterion_10_parameter_gates() {
    report(10, "table rows and range gates behave as stated", &run_suite(Suite::Gates));
}
