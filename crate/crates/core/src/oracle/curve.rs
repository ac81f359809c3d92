//! Brute-force point counting on plane curve models over small finite
//! fields, and divisor counting on their symmetric powers by enumerating
//! multisets of closed points.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::fq::{FqElement, FqField};
use super::{factor_prime_power, Budget, OracleError};

/// Affine plane curve model with a declared count of points at infinity.
///
/// `affine_poly` lists terms `(i, j, c)` standing for c * x^i * y^j; the
/// affine points over each field are the common zeros of the sum. The
/// points at infinity are declared, not computed, and are added once per
/// extension degree. That convention covers the smooth Weierstrass models
/// used here (one rational point at infinity, fixed by Frobenius) and the
/// line `y = 0` completed by a single point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneCurveEquation {
    pub affine_poly: Vec<(u32, u32, i64)>,
    pub points_at_infinity: u64,
}

impl PlaneCurveEquation {
    fn eval(&self, field: &FqField, x: FqElement, y: FqElement) -> FqElement {
        let mut acc = FqElement::ZERO;
        for &(i, j, c) in &self.affine_poly {
            let monomial = field.mul(field.pow(x, i as u64), field.pow(y, j as u64));
            acc = field.add(acc, field.mul(field.from_int(c), monomial));
        }
        acc
    }
}

/// Points of the completed curve over F_{q^d} for d = 1..=max_degree, by
/// scanning all affine pairs in each extension. Every count is checked
/// against the square-root bound (count - q^d - 1)^2 <= 4 g^2 q^d, so a
/// model inconsistent with the declared genus is an error, never a silent
/// bad count.
pub fn curve_point_counts(
    equation: &PlaneCurveEquation,
    q: u64,
    genus: u32,
    max_degree: u32,
    budget: &mut Budget,
) -> Result<Vec<u64>, OracleError> {
    let (p, e) = factor_prime_power(q)?;
    let terms = equation.affine_poly.len() as u64;
    let mut counts = Vec::with_capacity(max_degree as usize);
    for d in 1..=max_degree {
        let field = FqField::new(p, e * d)?;
        let order = field.order();
        budget.charge(order * order * terms.max(1) + 1)?;
        let mut affine = 0u64;
        for x in field.elements() {
            for y in field.elements() {
                if equation.eval(&field, x, y).is_zero() {
                    affine += 1;
                }
            }
        }
        let count = affine + equation.points_at_infinity;
        let diff = count as i128 - (order as i128 + 1);
        let bound = 4 * (genus as i128) * (genus as i128) * order as i128;
        if diff * diff > bound {
            return Err(OracleError::WeilBoundViolated {
                d,
                q,
                genus,
                count,
            });
        }
        counts.push(count);
    }
    Ok(counts)
}

/// Closed points of each degree, by Moebius inversion of the extension
/// counts: d * B_d = sum over e | d of moebius(d/e) * N_e. Non-integral or
/// negative B_d means the input cannot be the point counts of a variety
/// over F_q.
pub fn closed_point_counts(point_counts: &[u64]) -> Result<Vec<i64>, OracleError> {
    let mut out = Vec::with_capacity(point_counts.len());
    for d in 1..=point_counts.len() {
        let mut total: i64 = 0;
        for e in 1..=d {
            if d % e == 0 {
                total += moebius((d / e) as u64) * point_counts[e - 1] as i64;
            }
        }
        if total % d as i64 != 0 || total < 0 {
            return Err(OracleError::InconsistentPointCounts { d: d as u32 });
        }
        out.push(total / d as i64);
    }
    Ok(out)
}

fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut prime_factors = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            prime_factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        prime_factors += 1;
    }
    if prime_factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Points of the m-th symmetric power of the curve over F_q, counted as
/// effective divisors of degree m: multisets of closed points with degrees
/// summing to m. `point_counts` must hold the extension counts N_1..N_m at
/// least. Choosing k_d points of degree d with repetition contributes a
/// product of binomial coefficients, summed over all degree partitions, so
/// nothing here touches generating series.
pub fn sym_point_count_bruteforce(
    point_counts: &[u64],
    m: u32,
    budget: &mut Budget,
) -> Result<BigInt, OracleError> {
    let m = m as usize;
    assert!(
        point_counts.len() >= m,
        "need extension point counts up to degree {m}"
    );
    let closed = closed_point_counts(&point_counts[..m])?;
    let mut total = BigInt::zero();
    accumulate(&closed, 1, m, &BigInt::one(), &mut total, budget)?;
    Ok(total)
}

fn accumulate(
    closed: &[i64],
    degree: usize,
    remaining: usize,
    partial: &BigInt,
    total: &mut BigInt,
    budget: &mut Budget,
) -> Result<(), OracleError> {
    budget.charge(1)?;
    if remaining == 0 {
        *total += partial;
        return Ok(());
    }
    if degree > remaining || degree > closed.len() {
        return Ok(());
    }
    for k in 0..=remaining / degree {
        let ways = multichoose(closed[degree - 1], k);
        if ways.is_zero() && k > 0 {
            continue;
        }
        let next = partial * &ways;
        accumulate(closed, degree + 1, remaining - degree * k, &next, total, budget)?;
    }
    Ok(())
}

/// Multisets of size k from n types: binomial(n + k - 1, k).
fn multichoose(n: i64, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if n <= 0 {
        return BigInt::zero();
    }
    let mut numerator = BigInt::one();
    let mut denominator = BigInt::one();
    for t in 0..k {
        numerator *= BigInt::from(n + t as i64);
        denominator *= BigInt::from(t as i64 + 1);
    }
    numerator / denominator
}
