//! Classes of Quot schemes of zero-dimensional quotients and their
//! specializations.
//!
//! The universal class lives in `Z[L, S_1, S_2, ...]`:
//!
//! ```text
//! quot_class(n, r) = sum over weak compositions (n_1, ..., n_r) of n of
//!                    S_{n_1} * ... * S_{n_r} * L^(sum of (i-1) n_i)
//! ```
//!
//! Specializing `S_m` to the Poincare polynomial of the m-th symmetric
//! product and `L` to `t^2` gives the Poincare polynomial of the Quot
//! scheme; specializing `S_m` to a point count over F_q and `L` to `q`
//! gives its number of F_q-points. The same polynomial also equals the
//! coefficient series of a closed infinite product; both routes are
//! implemented and compared in the tests.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::{IntPoly, MotiveClass, Ring, Symbol, TruncatedSeries};

use super::compositions::{bounded_tuples, Composition};
use super::curve::CurveSpec;
use super::MotiveError;

/// Class of the Quot scheme of length-n quotients of a trivial rank-r
/// bundle on a curve, as the composition sum over `S` and `L` symbols.
pub fn quot_class(n: u32, r: u32) -> MotiveClass {
    let mut total = MotiveClass::zero();
    for comp in Composition::all(n, r) {
        let mut multiplicities: BTreeMap<u32, u32> = BTreeMap::new();
        for &part in comp.parts() {
            if part > 0 {
                *multiplicities.entry(part).or_insert(0) += 1;
            }
        }
        let sym_factors: Vec<(u32, u32)> = multiplicities.into_iter().collect();
        let term = MotiveClass::term(
            BigInt::from(1),
            comp.lefschetz_exponent(),
            0,
            &sym_factors,
        );
        total = total.add(&term);
    }
    total
}

/// Class of the punctual stratum: quotients of length n concentrated at a
/// single point. Equals the coefficient of u^n in the product of
/// 1 / (1 - L^i u) over i = 0..r, a polynomial in L alone.
pub fn punctual_class(n: u32, r: u32) -> MotiveClass {
    if n == 0 {
        return MotiveClass::one();
    }
    let order = n as usize;
    let mut series = TruncatedSeries::<MotiveClass>::one(order);
    for i in 0..r {
        let l_power = MotiveClass::lefschetz().pow(u64::from(i));
        let factor = TruncatedSeries::from_fn(order, |k| match k {
            0 => MotiveClass::one(),
            1 => Ring::neg(&l_power),
            _ => MotiveClass::zero(),
        });
        series = series.mul(&factor.inverse().expect("constant term is 1"));
    }
    series.coefficient(order).clone()
}

/// Classes of symmetric products of the curve with `removed_points` points
/// taken out, as a series in u: the full symmetric-product series times
/// (1 - u)^removed_points. The coefficient of u^m is the class of the m-th
/// symmetric product of the open curve, a polynomial in the S_j.
pub fn open_sym_series(removed_points: u32, order: usize) -> TruncatedSeries<MotiveClass> {
    let full = TruncatedSeries::from_fn(order, |m| MotiveClass::sym(m as u32));
    let one_minus_u = TruncatedSeries::from_fn(order, |k| match k {
        0 => MotiveClass::one(),
        1 => MotiveClass::integer(-1),
        _ => MotiveClass::zero(),
    });
    let mut out = full;
    for _ in 0..removed_points {
        out = out.mul(&one_minus_u);
    }
    out
}

/// The composition sum with the symmetric-product classes taken from an
/// arbitrary coefficient series instead of the S_m symbols.
fn quot_class_from_syms(
    n: u32,
    r: u32,
    syms: &TruncatedSeries<MotiveClass>,
) -> MotiveClass {
    let l = MotiveClass::lefschetz();
    let mut total = MotiveClass::zero();
    for comp in Composition::all(n, r) {
        let mut term = l.pow(u64::from(comp.lefschetz_exponent()));
        for &part in comp.parts() {
            term = term.mul(syms.coefficient(part as usize));
        }
        total = total.add(&term);
    }
    total
}

/// Outcome of the stratification identity check for one (n, r, N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratificationReport {
    pub colength: u32,
    pub rank: u32,
    pub removed_points: u32,
    pub lhs: MotiveClass,
    pub rhs: MotiveClass,
}

impl StratificationReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn difference(&self) -> MotiveClass {
        self.lhs.sub(&self.rhs)
    }
}

/// Check that the Quot class decomposes along the supports meeting N marked
/// points: the left side is the direct composition sum, the right side
/// distributes length a_j to the j-th marked point (a punctual factor each)
/// and the rest to the curve minus the points. Both sides are expanded to
/// normal form in `Z[L, S_m]` and compared exactly.
pub fn verify_stratification(n: u32, r: u32, removed_points: u32) -> StratificationReport {
    let lhs = quot_class(n, r);
    let open_syms = open_sym_series(removed_points, n as usize);
    let mut rhs = MotiveClass::zero();
    for tuple in bounded_tuples(n, removed_points) {
        let at_points = tuple.total();
        let mut term = quot_class_from_syms(n - at_points, r, &open_syms);
        for &a in tuple.parts() {
            term = term.mul(&punctual_class(a, r));
        }
        rhs = rhs.add(&term);
    }
    StratificationReport {
        colength: n,
        rank: r,
        removed_points,
        lhs,
        rhs,
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut numerator = BigInt::from(1);
    let mut denominator = BigInt::from(1);
    for i in 0..k {
        numerator *= BigInt::from(n - i);
        denominator *= BigInt::from(i + 1);
    }
    numerator / denominator
}

/// Poincare polynomial of the m-th symmetric product of a genus-g curve:
/// the coefficient of u^m in (1 + tu)^{2g} / ((1 - u)(1 - t^2 u)).
pub fn sym_poincare(genus: u32, m: u32) -> IntPoly {
    let order = m as usize;
    let numerator = TruncatedSeries::from_fn(order, |k| {
        if k > 2 * genus as usize {
            IntPoly::zero()
        } else {
            IntPoly::monomial(binomial(2 * u64::from(genus), k as u64), k)
        }
    });
    let denominator_inverse = TruncatedSeries::from_fn(order, |k| {
        // 1 / ((1 - u)(1 - t^2 u)) has u^k coefficient 1 + t^2 + ... + t^{2k}
        IntPoly::new(
            (0..=2 * k)
                .map(|d| BigInt::from(if d % 2 == 0 { 1 } else { 0 }))
                .collect(),
        )
    });
    numerator.mul(&denominator_inverse).coefficient(order).clone()
}

/// Poincare polynomial of the Quot scheme: substitute t^2 for L and the
/// symmetric-product Poincare polynomials for the S_m in the universal
/// class.
pub fn poincare_polynomial(genus: u32, n: u32, r: u32) -> IntPoly {
    quot_class(n, r)
        .substitute(|sym| match sym {
            Symbol::Lefschetz => Some(IntPoly::monomial(BigInt::from(1), 2)),
            Symbol::T => Some(IntPoly::x()),
            Symbol::Sym(m) => Some(sym_poincare(genus, m)),
        })
        .expect("every symbol is assigned")
}

/// Generating series of the Poincare polynomials in closed form:
///
/// ```text
/// prod over i = 0..r of (1 + t^{2i+1} u)^{2g}
///                       / ((1 - t^{2i} u)(1 - t^{2i+2} u))
/// ```
///
/// The coefficient of u^n must agree with `poincare_polynomial(g, n, r)`;
/// the route through this product shares nothing with the composition sum,
/// so the agreement is a real consistency check.
pub fn poincare_series_product(genus: u32, r: u32, order: usize) -> TruncatedSeries<IntPoly> {
    let mut series = TruncatedSeries::one(order);
    for i in 0..r as usize {
        let odd = TruncatedSeries::from_fn(order, |k| match k {
            0 => IntPoly::one(),
            1 => IntPoly::monomial(BigInt::from(1), 2 * i + 1),
            _ => IntPoly::zero(),
        });
        series = series.mul(&odd.pow(2 * i64::from(genus)).expect("nonnegative power"));
        for exponent in [2 * i, 2 * i + 2] {
            let factor = TruncatedSeries::from_fn(order, |k| match k {
                0 => IntPoly::one(),
                1 => Ring::neg(&IntPoly::monomial(BigInt::from(1), exponent)),
                _ => IntPoly::zero(),
            });
            series = series.mul(&factor.inverse().expect("constant term is 1"));
        }
    }
    series
}

/// Betti numbers b_0..b_{2nr} of the Quot scheme, zeros included. The
/// scheme is smooth projective of dimension nr, so the vector has length
/// 2nr + 1 and must read the same from both ends.
pub fn betti_numbers(genus: u32, n: u32, r: u32) -> Vec<BigInt> {
    poincare_polynomial(genus, n, r).coeffs_padded(2 * (n as usize) * (r as usize))
}

/// Euler characteristic: the Poincare polynomial at t = -1.
pub fn euler_characteristic(genus: u32, n: u32, r: u32) -> BigInt {
    poincare_polynomial(genus, n, r).eval(&BigInt::from(-1))
}

/// Euler characteristic in closed form: (-1)^n * binomial((2g - 2) r, n),
/// with the generalized binomial for negative tops. Evaluating the closed
/// product at t = -1 collapses it to (1 - u)^{(2g-2) r}, which is where
/// this comes from; it is computed here without any polynomial arithmetic
/// so it can cross-check `euler_characteristic`.
pub fn euler_characteristic_closed_form(genus: u32, n: u32, r: u32) -> BigInt {
    let top = (2 * i64::from(genus) - 2) * i64::from(r);
    let mut numerator = BigInt::from(1);
    let mut denominator = BigInt::from(1);
    for i in 0..i64::from(n) {
        numerator *= BigInt::from(top - i);
        denominator *= BigInt::from(i + 1);
    }
    let c = numerator / denominator;
    if n.is_multiple_of(2) {
        c
    } else {
        -c
    }
}

/// F_q-points of the m-th symmetric product, as the coefficient of u^m in
/// P(u) / ((1 - u)(1 - qu)) where P is the curve's zeta numerator.
pub fn sym_point_count(curve: &CurveSpec, q: u64, m: u32) -> Result<BigInt, MotiveError> {
    let p = curve.zeta_numerator_poly()?;
    let order = m as usize;
    let numerator = TruncatedSeries::<BigInt>::from_fn(order, |k| p.coefficient(k));
    let q_big = BigInt::from(q);
    let geometric = TruncatedSeries::<BigInt>::from_fn(order, |k| {
        // 1 / ((1 - u)(1 - qu)) has u^k coefficient 1 + q + ... + q^k
        let mut total = BigInt::from(0);
        let mut power = BigInt::from(1);
        for _ in 0..=k {
            total += &power;
            power *= &q_big;
        }
        total
    });
    Ok(numerator.mul(&geometric).coefficient(order).clone())
}

/// F_q-points of the Quot scheme: substitute q for L and the symmetric
/// product counts for the S_m in the universal class.
pub fn quot_point_count(
    curve: &CurveSpec,
    q: u64,
    n: u32,
    r: u32,
) -> Result<BigInt, MotiveError> {
    let mut sym_counts = Vec::with_capacity(n as usize + 1);
    for m in 0..=n {
        sym_counts.push(sym_point_count(curve, q, m)?);
    }
    let q_big = BigInt::from(q);
    let count = quot_class(n, r).substitute(|sym| match sym {
        Symbol::Lefschetz => Some(q_big.clone()),
        Symbol::T => None,
        Symbol::Sym(m) => sym_counts.get(m as usize).cloned(),
    })?;
    Ok(count)
}

/// F_q-points of the punctual stratum: the punctual class at L = q. Purely
/// a polynomial in L, so this needs no curve data.
pub fn punctual_point_count(q: u64, n: u32, r: u32) -> BigInt {
    punctual_class(n, r)
        .substitute(|sym| match sym {
            Symbol::Lefschetz => Some(BigInt::from(q)),
            _ => None,
        })
        .expect("punctual classes only involve L")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quot_class_small_cases() {
        assert_eq!(quot_class(0, 3).to_string(), "1");
        assert_eq!(quot_class(2, 1).to_string(), "S2");
        assert_eq!(quot_class(1, 2).to_string(), "S1 + S1*L");
        assert_eq!(quot_class(2, 2).to_string(), "S2 + S1^2*L + S2*L^2");
        assert_eq!(
            quot_class(3, 2).to_string(),
            "S3 + S1*S2*L + S1*S2*L^2 + S3*L^3"
        );
    }

    #[test]
    fn punctual_class_is_a_polynomial_in_l() {
        assert_eq!(punctual_class(0, 2).to_string(), "1");
        assert_eq!(punctual_class(1, 3).to_string(), "1 + L + L^2");
        assert_eq!(punctual_class(2, 2).to_string(), "1 + L + L^2");
        assert_eq!(punctual_class(3, 2).to_string(), "1 + L + L^2 + L^3");
        // r = 1: a unique quotient per length
        assert_eq!(punctual_class(4, 1).to_string(), "1");
    }

    #[test]
    fn open_sym_series_coefficients() {
        let s = open_sym_series(2, 2);
        assert_eq!(s.coefficient(0).to_string(), "1");
        assert_eq!(s.coefficient(1).to_string(), "-2 + S1");
        assert_eq!(s.coefficient(2).to_string(), "1 - 2*S1 + S2");
        let s = open_sym_series(1, 2);
        assert_eq!(s.coefficient(1).to_string(), "-1 + S1");
        assert_eq!(s.coefficient(2).to_string(), "-S1 + S2");
        // removing nothing leaves the plain symbols
        let s = open_sym_series(0, 3);
        assert_eq!(s.coefficient(3).to_string(), "S3");
    }

    #[test]
    fn stratification_identity_holds_on_a_grid() {
        for n in 0..=3 {
            for r in 1..=3 {
                for removed in 0..=2 {
                    let report = verify_stratification(n, r, removed);
                    assert!(
                        report.holds(),
                        "n={n} r={r} removed={removed}: difference {}",
                        report.difference()
                    );
                    assert!(report.difference().is_zero());
                }
            }
        }
    }

    #[test]
    fn sym_poincare_small_cases() {
        assert_eq!(sym_poincare(0, 2).to_string(), "1 + t^2 + t^4");
        assert_eq!(sym_poincare(1, 1).to_string(), "1 + 2*t + t^2");
        assert_eq!(sym_poincare(1, 2).to_string(), "1 + 2*t + 2*t^2 + 2*t^3 + t^4");
        assert_eq!(sym_poincare(2, 1).to_string(), "1 + 4*t + t^2");
        assert_eq!(sym_poincare(3, 0).to_string(), "1");
    }

    #[test]
    fn poincare_polynomial_of_points_on_the_line() {
        // n = 2, r = 2 on the line: 1 + 2t^2 + 4t^4 + 2t^6 + t^8
        assert_eq!(
            poincare_polynomial(0, 2, 2).to_string(),
            "1 + 2*t^2 + 4*t^4 + 2*t^6 + t^8"
        );
        // rank 1 on the line gives projective spaces
        assert_eq!(poincare_polynomial(0, 3, 1).to_string(), "1 + t^2 + t^4 + t^6");
    }

    #[test]
    fn poincare_polynomial_matches_the_closed_product() {
        for genus in 0..=2u32 {
            for r in 1..=3u32 {
                let order = 4usize;
                let series = poincare_series_product(genus, r, order);
                for n in 0..=order {
                    assert_eq!(
                        series.coefficient(n),
                        &poincare_polynomial(genus, n as u32, r),
                        "genus={genus} r={r} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn betti_numbers_are_palindromic_with_unit_ends() {
        for (genus, n, r) in [(0u32, 2u32, 2u32), (1, 2, 2), (2, 3, 2), (1, 2, 3)] {
            let betti = betti_numbers(genus, n, r);
            assert_eq!(betti.len(), 2 * (n as usize) * (r as usize) + 1);
            assert_eq!(betti[0], BigInt::from(1));
            assert_eq!(betti[betti.len() - 1], BigInt::from(1));
            let reversed: Vec<BigInt> = betti.iter().rev().cloned().collect();
            assert_eq!(betti, reversed, "genus={genus} n={n} r={r}");
        }
    }

    #[test]
    fn genus_one_betti_numbers_for_two_points_rank_two() {
        let betti = betti_numbers(1, 2, 2);
        let expect: Vec<BigInt> = [1, 2, 3, 6, 8, 6, 3, 2, 1]
            .iter()
            .map(|&b| BigInt::from(b))
            .collect();
        assert_eq!(betti, expect);
    }

    #[test]
    fn euler_characteristic_agrees_with_the_closed_form() {
        for genus in 0..=3u32 {
            for r in 1..=3u32 {
                for n in 0..=4u32 {
                    assert_eq!(
                        euler_characteristic(genus, n, r),
                        euler_characteristic_closed_form(genus, n, r),
                        "genus={genus} r={r} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_examples() {
        // genus 0, r = 2: (-1)^n binomial(-4, n): 1, 4, 10, 20
        assert_eq!(euler_characteristic(0, 0, 2), BigInt::from(1));
        assert_eq!(euler_characteristic(0, 1, 2), BigInt::from(4));
        assert_eq!(euler_characteristic(0, 2, 2), BigInt::from(10));
        assert_eq!(euler_characteristic(0, 3, 2), BigInt::from(20));
        // genus 1: the exponent (2g - 2) r vanishes, so only n = 0 survives
        assert_eq!(euler_characteristic(1, 0, 2), BigInt::from(1));
        assert_eq!(euler_characteristic(1, 3, 2), BigInt::from(0));
    }

    #[test]
    fn sym_point_counts_for_the_line() {
        let line = CurveSpec::projective_line();
        for (m, expect) in [(0u32, 1i64), (1, 3), (2, 7), (3, 15)] {
            assert_eq!(
                sym_point_count(&line, 2, m).unwrap(),
                BigInt::from(expect),
                "m={m}"
            );
        }
        assert_eq!(sym_point_count(&line, 3, 2).unwrap(), BigInt::from(13));
    }

    #[test]
    fn sym_point_counts_for_a_genus_one_curve() {
        let curve = CurveSpec {
            genus: 1,
            zeta_numerator: Some(vec![1, 1, 2]),
            equation: None,
        };
        assert_eq!(sym_point_count(&curve, 2, 1).unwrap(), BigInt::from(4));
        assert_eq!(sym_point_count(&curve, 2, 2).unwrap(), BigInt::from(12));
    }

    #[test]
    fn quot_point_counts_for_the_line() {
        let line = CurveSpec::projective_line();
        assert_eq!(quot_point_count(&line, 2, 1, 2).unwrap(), BigInt::from(9));
        assert_eq!(quot_point_count(&line, 2, 2, 2).unwrap(), BigInt::from(53));
    }

    #[test]
    fn quot_point_count_needs_zeta_data() {
        let abstract_curve = CurveSpec::abstract_curve(1);
        assert!(matches!(
            quot_point_count(&abstract_curve, 2, 1, 1),
            Err(MotiveError::MissingZetaData)
        ));
    }

    #[test]
    fn punctual_point_counts() {
        assert_eq!(punctual_point_count(2, 2, 2), BigInt::from(7));
        assert_eq!(punctual_point_count(3, 1, 2), BigInt::from(4));
        assert_eq!(punctual_point_count(5, 3, 1), BigInt::from(1));
    }
}
