//! Acceptance suite: every criterion of the verification battery, one test
//! per criterion, at the stated tolerances. The battery is evaluated once
//! and shared; each test prints its report line, so `--nocapture` shows the
//! full table.
//!
//! Known state of this build (double precision, see README):
//! the truncated operator's spectrum reaches ±1 within discretization error
//! beyond a ≈ 1.6, which puts parts of the determinant-side criteria
//! (operator contraction at large a, log-determinant derivatives at
//! a ∈ {2, 2.5}, the m-source comparison beyond the horizon, the canonical
//! two-route point at a = 2) outside double-precision reach, and the
//! order-6 Fredholm series carries a ~2e-5 remainder at a = 1.3. Those
//! criteria run exactly as stated and report honestly.

use std::sync::OnceLock;
use xi_canonical::verify::{format_report_line, run_suite, RunConfig, VerificationReport};

fn suite() -> &'static Vec<VerificationReport> {
    static SUITE: OnceLock<Vec<VerificationReport>> = OnceLock::new();
    SUITE.get_or_init(|| {
        let reports = run_suite(RunConfig::default()).expect("suite setup");
        println!("==== acceptance battery ====");
        for r in &reports {
            println!("{}", format_report_line(r));
        }
        println!("============================");
        reports
    })
}

fn criterion(name: &str) -> &'static VerificationReport {
    let r = suite()
        .iter()
        .find(|r| r.name == name)
        .unwrap_or_else(|| panic!("missing check {name}"));
    println!("{}", format_report_line(r));
    r
}

fn assert_criterion(name: &str) {
    let r = criterion(name);
    assert!(r.passed, "{}", format_report_line(r));
}

#[test]
fn criterion_01_theta_unit_modulus() {
    assert_criterion("c01_theta_unit_modulus");
}

#[test]
fn criterion_02_theta_normalization_reflection() {
    assert_criterion("c02_theta_normalization_reflection");
}

#[test]
fn criterion_03_mellin_identities() {
    assert_criterion("c03_mellin_identities");
}

#[test]
fn criterion_04_h1_two_route() {
    assert_criterion("c04_h1_two_route");
}

#[test]
fn criterion_05_operator_laws() {
    assert_criterion("c05_operator_laws");
}

#[test]
fn criterion_06_logdet_derivative() {
    assert_criterion("c06_logdet_derivative");
}

#[test]
fn criterion_07_fredholm_series_oracle() {
    assert_criterion("c07_fredholm_series_oracle");
}

#[test]
fn criterion_08_m_source_consistency() {
    assert_criterion("c08_m_source_consistency");
}

#[test]
fn criterion_09_canonical_system() {
    assert_criterion("c09_canonical_system");
}

#[test]
fn criterion_10_limit_law() {
    assert_criterion("c10_limit_law");
}

#[test]
fn criterion_11_schrodinger_residual() {
    assert_criterion("c11_schrodinger_residual");
}

#[test]
fn criterion_12_zero_count_interlacing() {
    assert_criterion("c12_zero_count_interlacing");
}

#[test]
fn criterion_13_h1_growth_trend_recorded() {
    // soft criterion: recorded, never gating
    let r = criterion("c13_h1_growth_trend");
    assert!(!r.hard);
    assert_eq!(r.computed.len(), 3);
}

#[test]
fn criterion_14_watson_equality() {
    assert_criterion("c14_watson_equality");
}

#[test]
fn anchors_appear_in_identity_catalog() {
    let catalog = include_str!("../docs/checks.md");
    for anchor in xi_canonical::verify::anchors() {
        assert!(
            catalog.contains(&format!("## {anchor}")),
            "anchor {anchor} missing from docs/checks.md"
        );
    }
    for r in suite() {
        assert!(
            catalog.contains(&format!("## {}", r.anchor)),
            "report anchor {} missing from docs/checks.md",
            r.anchor
        );
    }
}
