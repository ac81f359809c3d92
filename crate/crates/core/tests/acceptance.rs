//! Acceptance gate: every verification criterion, exact equality only.
//!
//! Each test prints one `acceptance: <criterion> ... PASS|FAIL` line (visible
//! under `cargo test -- --nocapture`) and asserts the criterion, so a failure
//! also fails the target. Enumeration-backed criteria get their own fresh
//! operation budget.

use num_bigint::BigInt;
use quotmotive::motive::{
    betti_numbers, euler_characteristic, euler_characteristic_closed_form, poincare_polynomial,
    poincare_series_product, punctual_point_count, quot_point_count, sym_point_count,
    verify_stratification, CurveSpec,
};
use quotmotive::oracle::{
    count_punctual_quotients, curve_point_counts, quot_point_count_bruteforce_p1,
    sym_point_count_bruteforce, MAX_FIELD_ORDER,
};
use quotmotive::suite::builtin_curves;
use quotmotive::{run_suite, Budget, OracleError, SuiteConfig};

fn report(criterion: &str, pass: bool, detail: String) {
    println!(
        "acceptance: {criterion} ... {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion}: {detail}");
}

fn max_extension_degree(q: u64, cap: u32) -> u32 {
    let mut d = 0;
    let mut power = 1u64;
    while d < cap {
        match power.checked_mul(q) {
            Some(next) if next <= MAX_FIELD_ORDER => {
                power = next;
                d += 1;
            }
            _ => break,
        }
    }
    d
}

#[test]
fn acceptance_poincare_polynomial_matches_product_expansion() {
    let mut failures = Vec::new();
    for genus in 0..=3u32 {
        for r in 1..=4u32 {
            let series = poincare_series_product(genus, r, 4);
            for n in 0..=4u32 {
                let from_sum = poincare_polynomial(genus, n, r);
                let from_product = series.coefficient(n as usize).clone();
                if from_sum != from_product {
                    failures.push(format!(
                        "(g={genus}, n={n}, r={r}): sum {from_sum} vs product {from_product}"
                    ));
                }
            }
        }
    }
    report(
        "poincare-vs-product",
        failures.is_empty(),
        failures.join("; "),
    );
}

#[test]
fn acceptance_betti_numbers_are_palindromic_with_unit_ends() {
    let mut failures = Vec::new();
    for genus in 0..=3u32 {
        for r in 1..=4u32 {
            for n in 0..=4u32 {
                let betti = betti_numbers(genus, n, r);
                let len = 2 * (n as usize) * (r as usize) + 1;
                let ok = betti.len() == len
                    && betti[0] == BigInt::from(1)
                    && betti[betti.len() - 1] == BigInt::from(1)
                    && betti.iter().eq(betti.iter().rev());
                if !ok {
                    failures.push(format!("(g={genus}, n={n}, r={r}): {betti:?}"));
                }
            }
        }
    }
    report("betti-shape", failures.is_empty(), failures.join("; "));
}

#[test]
fn acceptance_euler_characteristic_matches_signed_binomial() {
    let mut failures = Vec::new();
    for genus in 0..=3u32 {
        for r in 1..=4u32 {
            for n in 0..=5u32 {
                let from_polynomial = euler_characteristic(genus, n, r);
                let closed = euler_characteristic_closed_form(genus, n, r);
                if from_polynomial != closed {
                    failures.push(format!(
                        "(g={genus}, n={n}, r={r}): {from_polynomial} vs {closed}"
                    ));
                }
            }
        }
    }
    report(
        "euler-vs-binomial",
        failures.is_empty(),
        failures.join("; "),
    );
}

#[test]
fn acceptance_punctual_counts_match_enumeration() {
    let mut budget = Budget::default();
    let mut failures = Vec::new();
    for q in [2u64, 3, 4] {
        for r in 1..=3u32 {
            for n in 0..=3u32 {
                let enumerated = count_punctual_quotients(q, r, n, &mut budget).unwrap();
                let formula = punctual_point_count(q, n, r);
                if enumerated != formula {
                    failures.push(format!(
                        "(q={q}, n={n}, r={r}): enumerated {enumerated} vs formula {formula}"
                    ));
                }
            }
        }
    }
    report(
        "punctual-vs-enumeration",
        failures.is_empty(),
        failures.join("; "),
    );
}

#[test]
fn acceptance_quot_counts_on_the_line_match_enumeration() {
    let line = CurveSpec::projective_line();
    let mut budget = Budget::default();
    let mut failures = Vec::new();
    for q in [2u64, 3] {
        for r in 1..=3u32 {
            for n in 0..=3u32 {
                let enumerated = quot_point_count_bruteforce_p1(q, r, n, &mut budget).unwrap();
                let formula = quot_point_count(&line, q, n, r).unwrap();
                if enumerated != formula {
                    failures.push(format!(
                        "(q={q}, n={n}, r={r}): enumerated {enumerated} vs formula {formula}"
                    ));
                }
            }
        }
    }
    report(
        "quot-line-vs-enumeration",
        failures.is_empty(),
        failures.join("; "),
    );
}

#[test]
fn acceptance_sym_counts_match_divisor_enumeration() {
    let mut budget = Budget::default();
    let mut failures = Vec::new();
    for (curve, q) in builtin_curves(&[2, 3]) {
        let equation = curve.equation.as_ref().unwrap();
        let max_d = max_extension_degree(q, 4);
        let counts = curve_point_counts(equation, q, curve.genus, max_d, &mut budget).unwrap();
        for m in 0..=3u32.min(max_d) {
            let enumerated = sym_point_count_bruteforce(&counts, m, &mut budget).unwrap();
            let formula = sym_point_count(&curve, q, m).unwrap();
            if enumerated != formula {
                failures.push(format!(
                    "(genus={}, q={q}, m={m}): enumerated {enumerated} vs formula {formula}",
                    curve.genus
                ));
            }
        }
    }
    report(
        "sym-vs-divisor-enumeration",
        failures.is_empty(),
        failures.join("; "),
    );
}

#[test]
fn acceptance_zeta_numerators_match_plane_models() {
    let mut budget = Budget::default();
    let mut failures = Vec::new();
    for (curve, q) in builtin_curves(&[2, 3]) {
        let equation = curve.equation.as_ref().unwrap();
        let max_d = max_extension_degree(q, 4);
        // the scan also enforces the genus-g point-count bound exactly
        let from_equation =
            curve_point_counts(equation, q, curve.genus, max_d, &mut budget).unwrap();
        let from_zeta = curve.point_counts_from_zeta(q, max_d).unwrap();
        let from_equation: Vec<BigInt> = from_equation.iter().map(|&c| BigInt::from(c)).collect();
        if from_equation != from_zeta {
            failures.push(format!(
                "(genus={}, q={q}): equation {from_equation:?} vs zeta {from_zeta:?}",
                curve.genus
            ));
        }
    }
    report(
        "zeta-vs-equation",
        failures.is_empty(),
        failures.join("; "),
    );
}

#[test]
fn acceptance_stratification_identity_holds() {
    let mut failures = Vec::new();
    for n in 0..=4u32 {
        for r in 1..=3u32 {
            for removed in 0..=2u32 {
                let outcome = verify_stratification(n, r, removed);
                if !outcome.holds() {
                    failures.push(format!(
                        "(n={n}, r={r}, removed={removed}): difference {}",
                        outcome.difference()
                    ));
                }
            }
        }
    }
    report(
        "stratification-identity",
        failures.is_empty(),
        failures.join("; "),
    );
}

#[test]
fn acceptance_budget_is_enforced_and_default_suffices() {
    let config = SuiteConfig::default();
    let mut tiny = Budget::new(50);
    let starved = run_suite(&config, &mut tiny);
    let aborted = starved == Err(OracleError::BudgetExceeded { limit: 50 });
    let mut full = Budget::default();
    let completed = run_suite(&config, &mut full);
    let pass = aborted && completed.as_ref().map(|r| r.all_pass()).unwrap_or(false);
    report(
        "budget-enforced",
        pass,
        format!("starved: {starved:?}, completed all_pass: {completed:?}"),
    );
}

#[test]
fn acceptance_suite_output_is_deterministic() {
    let config = SuiteConfig::default();
    let first = run_suite(&config, &mut Budget::default()).unwrap().to_json();
    let second = run_suite(&config, &mut Budget::default()).unwrap().to_json();
    report(
        "deterministic-output",
        first == second,
        "two identical runs produced different reports".to_string(),
    );
}
