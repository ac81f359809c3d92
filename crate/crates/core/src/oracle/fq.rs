//! Small finite fields F_{p^d} with table-driven arithmetic.
//!
//! Elements are indices 0..q: the element with index `n` has base-p digits
//! `c_0, c_1, ...` and stands for the residue `c_0 + c_1 x + ...` modulo a
//! fixed irreducible monic polynomial of degree d over F_p. The modulus is
//! the first irreducible candidate when `x^d + c_{d-1} x^{d-1} + ... + c_0`
//! is ordered by the integer with digits `(c_{d-1}, ..., c_0)` base p, i.e.
//! lexicographically from the leading coefficient down, so field construction
//! is deterministic.

use super::{factor_prime_power, OracleError};

/// Element of a specific [`FqField`], stored as its table index. Indices only
/// make sense together with the field that produced them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqElement(pub usize);

impl FqElement {
    pub const ZERO: FqElement = FqElement(0);
    pub const ONE: FqElement = FqElement(1);

    pub fn index(self) -> usize {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone)]
pub struct FqField {
    p: u64,
    d: u32,
    q: u64,
    modulus: Vec<u64>,
    add_table: Vec<u32>,
    mul_table: Vec<u32>,
    neg_table: Vec<u32>,
    inv_table: Vec<u32>,
}

/// Largest supported field order; the op tables are q^2 entries.
pub const MAX_FIELD_ORDER: u64 = 1024;

impl FqField {
    /// Field of order `p^d`, `p` prime.
    pub fn new(p: u64, d: u32) -> Result<FqField, OracleError> {
        if d == 0 || !is_prime(p) {
            return Err(OracleError::NotPrimePower(p.saturating_pow(d)));
        }
        let q = p
            .checked_pow(d)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(OracleError::FieldTooLarge {
                q: p.saturating_pow(d),
                max: MAX_FIELD_ORDER,
            })?;
        let modulus = find_irreducible(p, d);
        let qs = q as usize;
        let mut field = FqField {
            p,
            d,
            q,
            modulus,
            add_table: vec![0; qs * qs],
            mul_table: vec![0; qs * qs],
            neg_table: vec![0; qs],
            inv_table: vec![0; qs],
        };
        field.build_tables();
        Ok(field)
    }

    /// Field of order `q` for a prime power `q`.
    pub fn of_order(q: u64) -> Result<FqField, OracleError> {
        let (p, d) = factor_prime_power(q)?;
        FqField::new(p, d)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        for a in 0..q {
            let pa = self.index_to_poly(a);
            for b in 0..q {
                let pb = self.index_to_poly(b);
                let sum: Vec<u64> = (0..self.d as usize)
                    .map(|i| (pa[i] + pb[i]) % self.p)
                    .collect();
                self.add_table[a * q + b] = self.poly_to_index(&sum) as u32;
                let prod = poly_mul_mod(&pa, &pb, &self.modulus, self.p);
                self.mul_table[a * q + b] = self.poly_to_index(&prod) as u32;
            }
            let negated: Vec<u64> = pa.iter().map(|&c| (self.p - c) % self.p).collect();
            self.neg_table[a] = self.poly_to_index(&negated) as u32;
        }
        for a in 1..q {
            for b in 1..q {
                if self.mul_table[a * q + b] == 1 {
                    self.inv_table[a] = b as u32;
                    break;
                }
            }
        }
    }

    fn index_to_poly(&self, mut idx: usize) -> Vec<u64> {
        let mut digits = vec![0u64; self.d as usize];
        for slot in digits.iter_mut() {
            *slot = (idx as u64) % self.p;
            idx /= self.p as usize;
        }
        digits
    }

    fn poly_to_index(&self, coeffs: &[u64]) -> usize {
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx as usize
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, constant first, leading coefficient included.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElement> {
        (0..self.q as usize).map(FqElement)
    }

    pub fn zero(&self) -> FqElement {
        FqElement::ZERO
    }

    pub fn one(&self) -> FqElement {
        FqElement::ONE
    }

    /// Image of an integer under Z -> F_p, embedded as a constant.
    pub fn from_int(&self, n: i64) -> FqElement {
        FqElement(n.rem_euclid(self.p as i64) as usize)
    }

    pub fn add(&self, a: FqElement, b: FqElement) -> FqElement {
        FqElement(self.add_table[a.0 * self.q as usize + b.0] as usize)
    }

    pub fn sub(&self, a: FqElement, b: FqElement) -> FqElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElement, b: FqElement) -> FqElement {
        FqElement(self.mul_table[a.0 * self.q as usize + b.0] as usize)
    }

    pub fn neg(&self, a: FqElement) -> FqElement {
        FqElement(self.neg_table[a.0] as usize)
    }

    /// Multiplicative inverse; panics on zero, which indicates a bug in the
    /// calling enumeration rather than a data error.
    pub fn inv(&self, a: FqElement) -> FqElement {
        assert!(!a.is_zero(), "inverse of zero");
        FqElement(self.inv_table[a.0] as usize)
    }

    pub fn pow(&self, a: FqElement, e: u64) -> FqElement {
        let mut acc = self.one();
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Product of two coefficient vectors of length d, reduced modulo the monic
/// `modulus` (length d+1, constant first) over F_p. Returns length d.
fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let d = a.len();
    let mut prod = vec![0u64; 2 * d.max(1)];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // reduce x^k for k >= d using x^d = -(modulus without leading term)
    for k in (d..2 * d).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for i in 0..d {
            let m = modulus[i];
            if m != 0 {
                let delta = (c * (p - m)) % p;
                prod[k - d + i] = (prod[k - d + i] + delta) % p;
            }
        }
    }
    prod.truncate(d);
    prod
}

/// First irreducible monic polynomial of degree d over F_p in the documented
/// deterministic order. For d = 1 the modulus is x itself, so elements are
/// plain residues.
fn find_irreducible(p: u64, d: u32) -> Vec<u64> {
    let d = d as usize;
    if d == 1 {
        return vec![0, 1];
    }
    let total = p.pow(d as u32);
    for idx in 0..total {
        let mut candidate = vec![0u64; d + 1];
        candidate[d] = 1;
        let mut rest = idx;
        for slot in candidate.iter_mut().take(d) {
            *slot = rest % p;
            rest /= p;
        }
        if prime_poly_is_irreducible(&candidate, p) {
            return candidate;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p");
}

/// Irreducibility over F_p by trial division: no monic divisor of degree
/// 1..=deg/2 divides the candidate.
fn prime_poly_is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for div_deg in 1..=deg / 2 {
        let count = p.pow(div_deg as u32);
        for idx in 0..count {
            let mut divisor = vec![0u64; div_deg + 1];
            divisor[div_deg] = 1;
            let mut rest = idx;
            for slot in divisor.iter_mut().take(div_deg) {
                *slot = rest % p;
                rest /= p;
            }
            if prime_poly_rem_is_zero(poly, &divisor, p) {
                return false;
            }
        }
    }
    true
}

fn prime_poly_rem_is_zero(poly: &[u64], divisor: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let dd = divisor.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - dd;
        if lead != 0 {
            for i in 0..=dd {
                let sub = (lead * divisor[i]) % p;
                let slot = &mut rem[shift + i];
                *slot = (*slot + p - sub) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}
