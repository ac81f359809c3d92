//! Enumeration of linear subspaces of F_q^dim through their reduced
//! row-echelon bases. Every subspace has exactly one such basis, so walking
//! pivot-column sets and free entries visits each subspace once.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use super::fq::{FqElement, FqField};
use super::{Budget, OracleError};

/// Reduced row-echelon basis: `rows[i]` has a 1 in column `pivots[i]`, zeros
/// in the other pivot columns, and zeros left of its pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrefBasis {
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<FqElement>>,
}

impl RrefBasis {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce a vector modulo the row span; the result is zero exactly when
    /// the vector lies in the subspace.
    pub fn reduce(&self, vector: &[FqElement], field: &FqField) -> Vec<FqElement> {
        let mut v = vector.to_vec();
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            let c = v[pivot];
            if c.is_zero() {
                continue;
            }
            for (slot, &entry) in v.iter_mut().zip(row) {
                *slot = field.sub(*slot, field.mul(c, entry));
            }
        }
        v
    }

    pub fn contains(&self, vector: &[FqElement], field: &FqField) -> bool {
        self.reduce(vector, field).iter().all(|c| c.is_zero())
    }

    /// Closed under the operator given as a dim x dim matrix in column-major
    /// form (`matrix[j]` is the image of basis vector j).
    pub fn stable_under(&self, matrix: &[Vec<FqElement>], field: &FqField) -> bool {
        self.rows.iter().all(|row| {
            let image = apply_matrix(matrix, row, field);
            self.contains(&image, field)
        })
    }
}

/// Matrix-vector product with the matrix stored column-major.
pub fn apply_matrix(
    matrix: &[Vec<FqElement>],
    vector: &[FqElement],
    field: &FqField,
) -> Vec<FqElement> {
    let dim = vector.len();
    let mut out = vec![FqElement::ZERO; dim];
    for (j, &c) in vector.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for i in 0..dim {
            out[i] = field.add(out[i], field.mul(c, matrix[j][i]));
        }
    }
    out
}

/// Canonical reduced row-echelon basis of the span of arbitrary vectors.
/// Produces the same representation `for_each_subspace` enumerates, so two
/// spans are equal exactly when the results compare equal.
pub fn rref_from_vectors(vectors: &[Vec<FqElement>], field: &FqField) -> RrefBasis {
    let mut rows: Vec<Vec<FqElement>> = vectors.to_vec();
    let dim = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..dim {
        let Some(sel) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = field.inv(rows[rank][col]);
        for entry in rows[rank].iter_mut() {
            *entry = field.mul(*entry, inv);
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let c = row[col];
            for (entry, &p) in row.iter_mut().zip(&pivot_row) {
                *entry = field.sub(*entry, field.mul(c, p));
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    RrefBasis { pivots, rows }
}

/// Visit every `k`-dimensional subspace of F_q^dim exactly once. The budget
/// is charged `dim * k + 1` per subspace for building the basis; visitors
/// charge their own inspection costs.
pub fn for_each_subspace(
    field: &FqField,
    dim: usize,
    k: usize,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&RrefBasis, &mut Budget) -> Result<(), OracleError>,
) -> Result<(), OracleError> {
    if k > dim {
        return Ok(());
    }
    let q = field.order() as usize;
    for pivots in (0..dim).combinations(k) {
        // free cells sit right of their row's pivot in non-pivot columns
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for c in p + 1..dim {
                if !pivots.contains(&c) {
                    free.push((i, c));
                }
            }
        }
        let mut digits = vec![0usize; free.len()];
        loop {
            budget.charge((dim * k) as u64 + 1)?;
            let mut rows = vec![vec![FqElement::ZERO; dim]; k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = FqElement::ONE;
            }
            for (&(i, c), &digit) in free.iter().zip(&digits) {
                rows[i][c] = FqElement(digit);
            }
            let basis = RrefBasis {
                pivots: pivots.clone(),
                rows,
            };
            visit(&basis, budget)?;
            // odometer over the free cells
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    break;
                }
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
    }
    Ok(())
}

/// Number of `k`-dimensional subspaces of F_q^n, as an exact integer. Used
/// only to size enumerations up front, never as a counting shortcut.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= num_traits::pow::pow(q.clone(), n - i) - 1;
        den *= num_traits::pow::pow(q.clone(), i + 1) - 1;
    }
    num / den
}
