//! Cross-validation suite: every closed-formula quantity recomputed by an
//! independent enumeration (or checked against a structural invariant) over
//! a grid of small cases, collected into a deterministic report.
//!
//! One operation budget is shared by the whole run. Running out of budget
//! aborts the run with an error; it never silently shrinks the grid.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::Serialize;

use crate::motive::{
    betti_numbers, euler_characteristic, euler_characteristic_closed_form, poincare_polynomial,
    poincare_series_product, punctual_point_count, quot_point_count, sym_point_count,
    verify_stratification, CurveSpec,
};
use crate::oracle::{
    count_punctual_quotients, curve_point_counts, quot_point_count_bruteforce_p1,
    sym_point_count_bruteforce, Budget, OracleError, MAX_FIELD_ORDER,
};

/// One verified equality or structural property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteCell {
    pub criterion: String,
    pub params: BTreeMap<String, String>,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

/// A full run: cells in a fixed order plus totals and budget accounting.
/// All counts are rendered as decimal strings, so the JSON form is exact
/// and byte-stable for a given configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub passed: usize,
    pub failed: usize,
    pub budget_limit: u64,
    pub budget_used: u64,
    pub cells: Vec<SuiteCell>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Grid bounds and optional extra curve for a suite run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub max_n: u32,
    pub max_r: u32,
    pub max_genus: u32,
    pub qs: Vec<u64>,
    /// An additional curve, with the q it lives over, run through the
    /// curve-dependent criteria alongside the built-in ones.
    pub extra_curve: Option<(CurveSpec, u64)>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 3,
            max_r: 3,
            max_genus: 2,
            qs: vec![2, 3],
            extra_curve: None,
        }
    }
}

/// The built-in curves with the field sizes they are checked over: the
/// line over each grid q, and one genus-1 curve over each of F_2 and F_3.
pub fn builtin_curves(qs: &[u64]) -> Vec<(CurveSpec, u64)> {
    let line = CurveSpec::from_json_str(include_str!("../curves/line.json"))
        .expect("embedded curve is valid");
    let genus1_q2 = CurveSpec::from_json_str(include_str!("../curves/genus1_q2.json"))
        .expect("embedded curve is valid");
    let genus1_q3 = CurveSpec::from_json_str(include_str!("../curves/genus1_q3.json"))
        .expect("embedded curve is valid");
    let mut curves: Vec<(CurveSpec, u64)> = qs.iter().map(|&q| (line.clone(), q)).collect();
    curves.push((genus1_q2, 2));
    curves.push((genus1_q3, 3));
    curves
}

pub fn run_suite(config: &SuiteConfig, budget: &mut Budget) -> Result<SuiteReport, OracleError> {
    let mut cells = Vec::new();
    poincare_cells(config, &mut cells);
    betti_cells(config, &mut cells);
    euler_cells(config, &mut cells);
    punctual_cells(config, budget, &mut cells)?;
    quot_line_cells(config, budget, &mut cells)?;
    curve_cells(config, budget, &mut cells)?;
    stratification_cells(config, &mut cells);
    let passed = cells.iter().filter(|c| c.pass).count();
    let failed = cells.len() - passed;
    Ok(SuiteReport {
        passed,
        failed,
        budget_limit: budget.limit(),
        budget_used: budget.used(),
        cells,
    })
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn push_equality(
    cells: &mut Vec<SuiteCell>,
    criterion: &str,
    params: BTreeMap<String, String>,
    expected: String,
    computed: String,
) {
    let pass = expected == computed;
    cells.push(SuiteCell {
        criterion: criterion.to_string(),
        params,
        expected,
        computed,
        pass,
    });
}

fn render_counts(counts: &[BigInt]) -> String {
    format!("[{}]", counts.iter().map(ToString::to_string).join(", "))
}

/// Composition-sum Poincare polynomials against the closed product formula.
fn poincare_cells(config: &SuiteConfig, cells: &mut Vec<SuiteCell>) {
    for genus in 0..=config.max_genus {
        for r in 1..=config.max_r {
            let series = poincare_series_product(genus, r, config.max_n as usize);
            for n in 0..=config.max_n {
                push_equality(
                    cells,
                    "poincare-vs-product",
                    params(&[
                        ("genus", genus.to_string()),
                        ("n", n.to_string()),
                        ("r", r.to_string()),
                    ]),
                    series.coefficient(n as usize).to_string(),
                    poincare_polynomial(genus, n, r).to_string(),
                );
            }
        }
    }
}

/// Betti vectors: length 2nr + 1, ends 1, palindromic.
fn betti_cells(config: &SuiteConfig, cells: &mut Vec<SuiteCell>) {
    for genus in 0..=config.max_genus {
        for r in 1..=config.max_r {
            for n in 0..=config.max_n {
                let betti = betti_numbers(genus, n, r);
                let expected_len = 2 * (n as usize) * (r as usize) + 1;
                let palindromic = betti.iter().eq(betti.iter().rev());
                let pass = betti.len() == expected_len
                    && betti[0] == BigInt::from(1)
                    && betti[betti.len() - 1] == BigInt::from(1)
                    && palindromic;
                cells.push(SuiteCell {
                    criterion: "betti-shape".to_string(),
                    params: params(&[
                        ("genus", genus.to_string()),
                        ("n", n.to_string()),
                        ("r", r.to_string()),
                    ]),
                    expected: format!(
                        "palindromic vector of length {expected_len} with ends 1"
                    ),
                    computed: render_counts(&betti),
                    pass,
                });
            }
        }
    }
}

/// Euler characteristics against the signed-binomial closed form.
fn euler_cells(config: &SuiteConfig, cells: &mut Vec<SuiteCell>) {
    for genus in 0..=config.max_genus {
        for r in 1..=config.max_r {
            for n in 0..=config.max_n {
                push_equality(
                    cells,
                    "euler-vs-binomial",
                    params(&[
                        ("genus", genus.to_string()),
                        ("n", n.to_string()),
                        ("r", r.to_string()),
                    ]),
                    euler_characteristic_closed_form(genus, n, r).to_string(),
                    euler_characteristic(genus, n, r).to_string(),
                );
            }
        }
    }
}

/// Punctual classes at L = q against direct enumeration.
fn punctual_cells(
    config: &SuiteConfig,
    budget: &mut Budget,
    cells: &mut Vec<SuiteCell>,
) -> Result<(), OracleError> {
    for &q in &config.qs {
        for r in 1..=config.max_r {
            for n in 0..=config.max_n {
                let enumerated = count_punctual_quotients(q, r, n, budget)?;
                push_equality(
                    cells,
                    "punctual-vs-enumeration",
                    params(&[
                        ("q", q.to_string()),
                        ("n", n.to_string()),
                        ("r", r.to_string()),
                    ]),
                    enumerated.to_string(),
                    punctual_point_count(q, n, r).to_string(),
                );
            }
        }
    }
    Ok(())
}

/// Quot-scheme point counts on the line against submodule enumeration.
fn quot_line_cells(
    config: &SuiteConfig,
    budget: &mut Budget,
    cells: &mut Vec<SuiteCell>,
) -> Result<(), OracleError> {
    let line = CurveSpec::projective_line();
    for &q in &config.qs {
        for r in 1..=config.max_r {
            for n in 0..=config.max_n {
                let enumerated = quot_point_count_bruteforce_p1(q, r, n, budget)?;
                let computed = quot_point_count(&line, q, n, r)
                    .expect("the line carries zeta data");
                push_equality(
                    cells,
                    "quot-line-vs-enumeration",
                    params(&[
                        ("q", q.to_string()),
                        ("n", n.to_string()),
                        ("r", r.to_string()),
                    ]),
                    enumerated.to_string(),
                    computed.to_string(),
                );
            }
        }
    }
    Ok(())
}

/// Largest extension degree (at most `cap`) whose field still fits the
/// table-driven arithmetic.
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

/// Curve-dependent criteria: the declared zeta numerator against brute
/// extension counts from the plane model, and symmetric-power counts
/// against divisor enumeration.
fn curve_cells(
    config: &SuiteConfig,
    budget: &mut Budget,
    cells: &mut Vec<SuiteCell>,
) -> Result<(), OracleError> {
    let mut curves = builtin_curves(&config.qs);
    if let Some(extra) = &config.extra_curve {
        curves.push(extra.clone());
    }
    for (index, (curve, q)) in curves.iter().enumerate() {
        let label = if index < curves.len() - usize::from(config.extra_curve.is_some()) {
            format!("builtin-{index}")
        } else {
            "extra".to_string()
        };
        let max_d = max_extension_degree(*q, 4);
        let base = [("curve", label.clone()),
            ("genus", curve.genus.to_string()),
            ("q", q.to_string())];
        let zeta_counts = curve
            .point_counts_from_zeta(*q, max_d)
            .map(|counts| render_counts(&counts));
        let equation_counts = match &curve.equation {
            Some(equation) => match curve_point_counts(equation, *q, curve.genus, max_d, budget)
            {
                Ok(counts) => Ok(counts),
                Err(OracleError::BudgetExceeded { limit }) => {
                    return Err(OracleError::BudgetExceeded { limit })
                }
                Err(other) => Err(other.to_string()),
            },
            None => Err("curve has no plane equation".to_string()),
        };
        let expected = match &zeta_counts {
            Ok(counts) => counts.clone(),
            Err(e) => format!("error: {e}"),
        };
        let computed = match &equation_counts {
            Ok(counts) => {
                let as_big: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
                render_counts(&as_big)
            }
            Err(e) => format!("error: {e}"),
        };
        let pass = zeta_counts.is_ok() && equation_counts.is_ok() && expected == computed;
        cells.push(SuiteCell {
            criterion: "zeta-vs-equation".to_string(),
            params: params(
                &base
                    .iter()
                    .map(|(k, v)| (*k, v.clone()))
                    .chain([("max_degree", max_d.to_string())])
                    .collect::<Vec<_>>(),
            ),
            expected,
            computed,
            pass,
        });

        // symmetric powers need the extension counts; skip when the scan
        // already failed, that cell carries the failure
        let Ok(counts) = equation_counts else { continue };
        for m in 0..=config.max_n.min(max_d) {
            let enumerated = sym_point_count_bruteforce(&counts, m, budget)?;
            let computed = match sym_point_count(curve, *q, m) {
                Ok(count) => count.to_string(),
                Err(e) => format!("error: {e}"),
            };
            push_equality(
                cells,
                "sym-vs-divisor-enumeration",
                params(
                    &base
                        .iter()
                        .map(|(k, v)| (*k, v.clone()))
                        .chain([("m", m.to_string())])
                        .collect::<Vec<_>>(),
                ),
                enumerated.to_string(),
                computed,
            );
        }
    }
    Ok(())
}

/// The stratification identity in the class ring, checked exactly.
fn stratification_cells(config: &SuiteConfig, cells: &mut Vec<SuiteCell>) {
    for n in 0..=config.max_n {
        for r in 1..=config.max_r {
            for removed in 0..=2u32 {
                let report = verify_stratification(n, r, removed);
                cells.push(SuiteCell {
                    criterion: "stratification-identity".to_string(),
                    params: params(&[
                        ("n", n.to_string()),
                        ("r", r.to_string()),
                        ("removed_points", removed.to_string()),
                    ]),
                    expected: "0".to_string(),
                    computed: report.difference().to_string(),
                    pass: report.holds(),
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes_everything() {
        let config = SuiteConfig::default();
        let mut budget = Budget::default();
        let report = run_suite(&config, &mut budget).unwrap();
        assert!(report.all_pass(), "failing cells: {}", report.to_json());
        assert!(report.passed > 100);
        assert_eq!(report.failed, 0);
        assert!(report.budget_used > 0);
        assert!(report.budget_used <= report.budget_limit);
    }

    #[test]
    fn suite_report_is_deterministic() {
        let config = SuiteConfig::default();
        let first = run_suite(&config, &mut Budget::default()).unwrap().to_json();
        let second = run_suite(&config, &mut Budget::default()).unwrap().to_json();
        assert_eq!(first, second);
    }

    #[test]
    fn wrong_zeta_numerator_fails_visibly() {
        // genus-1 model over F_3 paired with a numerator for a different
        // curve: the zeta cell and the sym cells must fail, nothing panics
        let mut sabotaged = builtin_curves(&[3]).into_iter().last().unwrap();
        sabotaged.0.zeta_numerator = Some(vec![1, 1, 2]);
        let config = SuiteConfig {
            max_n: 1,
            max_r: 1,
            max_genus: 0,
            qs: vec![2],
            extra_curve: Some(sabotaged),
        };
        let report = run_suite(&config, &mut Budget::default()).unwrap();
        assert!(!report.all_pass());
        let failing: Vec<&SuiteCell> = report.cells.iter().filter(|c| !c.pass).collect();
        assert!(failing
            .iter()
            .all(|c| c.criterion == "zeta-vs-equation" || c.criterion == "sym-vs-divisor-enumeration"));
        assert!(failing
            .iter()
            .any(|c| c.params.get("curve").map(String::as_str) == Some("extra")));
    }

    #[test]
    fn exhausted_budget_aborts_the_run() {
        let config = SuiteConfig::default();
        let mut tiny = Budget::new(50);
        assert_eq!(
            run_suite(&config, &mut tiny),
            Err(OracleError::BudgetExceeded { limit: 50 })
        );
    }
}
