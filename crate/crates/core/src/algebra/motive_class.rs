//! Classes built from a curve C in the Grothendieck ring of varieties,
//! presented as integer polynomials in three kinds of formal variables:
//!
//! * `L`, the class of the affine line,
//! * `t`, the cohomological grading variable,
//! * `S_m` (m >= 1), the class of the symmetric product Sym^m(C).
//!
//! `S_0` is the class of a point and is folded into integer coefficients, so
//! it never appears in a normal form.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{AlgebraError, Ring};

/// Formal variable appearing in a [`MotiveClass`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// The Lefschetz class, written `L`.
    Lefschetz,
    /// The grading variable, written `t`.
    T,
    /// The symmetric-product class `S_m`, m >= 1.
    Sym(u32),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Lefschetz => write!(f, "L"),
            Symbol::T => write!(f, "t"),
            Symbol::Sym(m) => write!(f, "S{m}"),
        }
    }
}

/// Monomial in the variables above: exponents of `L` and `t` plus the
/// multiset of `S_m` factors, stored as `(m, exponent)` pairs with strictly
/// increasing `m` and positive exponents.
///
/// Monomials compare lexicographically on `(l_exp, t_exp, sym)`. This is the
/// fixed total order behind the normal form and the printed term order; it is
/// stable across runs because nothing hash-based is involved.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    l_exp: u32,
    t_exp: u32,
    sym: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn new(l_exp: u32, t_exp: u32, sym_factors: &[(u32, u32)]) -> Self {
        let mut merged: BTreeMap<u32, u32> = BTreeMap::new();
        for &(m, e) in sym_factors {
            if m == 0 || e == 0 {
                continue;
            }
            *merged.entry(m).or_insert(0) += e;
        }
        Monomial {
            l_exp,
            t_exp,
            sym: merged.into_iter().collect(),
        }
    }

    pub fn l_exp(&self) -> u32 {
        self.l_exp
    }

    pub fn t_exp(&self) -> u32 {
        self.t_exp
    }

    pub fn sym_factors(&self) -> &[(u32, u32)] {
        &self.sym
    }

    fn unit() -> Self {
        Monomial {
            l_exp: 0,
            t_exp: 0,
            sym: Vec::new(),
        }
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut merged: BTreeMap<u32, u32> = self.sym.iter().copied().collect();
        for &(m, e) in &rhs.sym {
            *merged.entry(m).or_insert(0) += e;
        }
        Monomial {
            l_exp: self.l_exp + rhs.l_exp,
            t_exp: self.t_exp + rhs.t_exp,
            sym: merged.into_iter().collect(),
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, coeff_mag: &BigInt) -> fmt::Result {
        let mut factors: Vec<String> = Vec::new();
        for &(m, e) in &self.sym {
            factors.push(power_string(&format!("S{m}"), e));
        }
        if self.l_exp > 0 {
            factors.push(power_string("L", self.l_exp));
        }
        if self.t_exp > 0 {
            factors.push(power_string("t", self.t_exp));
        }
        if factors.is_empty() {
            return write!(f, "{coeff_mag}");
        }
        if *coeff_mag != BigInt::from(1) {
            write!(f, "{coeff_mag}*")?;
        }
        write!(f, "{}", factors.join("*"))
    }
}

fn power_string(base: &str, e: u32) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{e}")
    }
}

/// Element of `Z[L, t, S_1, S_2, ...]` kept in canonical normal form: a map
/// from monomials to nonzero integer coefficients, ordered by the monomial
/// order documented on [`Monomial`].
///
/// Two classes are equal exactly when their normal forms are equal, and the
/// printed rendering (terms in increasing monomial order) is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MotiveClass {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MotiveClass {
    pub fn zero() -> Self {
        MotiveClass::default()
    }

    pub fn one() -> Self {
        MotiveClass::integer(1)
    }

    pub fn integer(n: i64) -> Self {
        MotiveClass::from_bigint(&BigInt::from(n))
    }

    /// The class `L` of the affine line.
    pub fn lefschetz() -> Self {
        MotiveClass::term(BigInt::one(), 1, 0, &[])
    }

    /// The grading variable `t`.
    pub fn t() -> Self {
        MotiveClass::term(BigInt::one(), 0, 1, &[])
    }

    /// The symmetric-product class `S_m`. `S_0` is a point, so `sym(0)` is 1.
    pub fn sym(m: u32) -> Self {
        if m == 0 {
            MotiveClass::one()
        } else {
            MotiveClass::term(BigInt::one(), 0, 0, &[(m, 1)])
        }
    }

    /// Single term `coeff * L^l_exp * t^t_exp * prod S_m^e`.
    pub fn term(coeff: BigInt, l_exp: u32, t_exp: u32, sym_factors: &[(u32, u32)]) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Monomial::new(l_exp, t_exp, sym_factors), coeff);
        }
        MotiveClass { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest exponent of `L` appearing, or `None` for the zero class.
    pub fn max_l_exponent(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.l_exp).max()
    }

    fn insert_term(terms: &mut BTreeMap<Monomial, BigInt>, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Evaluate by assigning a ring value to every symbol that occurs.
    /// Assigning `None` to an occurring symbol is an error naming the symbol;
    /// symbols that never occur are never asked for.
    pub fn substitute<R, F>(&self, mut assign: F) -> Result<R, AlgebraError>
    where
        R: Ring,
        F: FnMut(Symbol) -> Option<R>,
    {
        let mut lookup = |sym: Symbol| -> Result<R, AlgebraError> {
            assign(sym).ok_or(AlgebraError::UnassignedSymbol(sym))
        };
        let mut total = R::zero();
        for (mono, coeff) in &self.terms {
            let mut term = R::from_bigint(coeff);
            if mono.l_exp > 0 {
                term = term.mul(&lookup(Symbol::Lefschetz)?.pow(u64::from(mono.l_exp)));
            }
            if mono.t_exp > 0 {
                term = term.mul(&lookup(Symbol::T)?.pow(u64::from(mono.t_exp)));
            }
            for &(m, e) in &mono.sym {
                term = term.mul(&lookup(Symbol::Sym(m))?.pow(u64::from(e)));
            }
            total = total.add(&term);
        }
        Ok(total)
    }
}

impl Ring for MotiveClass {
    fn zero() -> Self {
        MotiveClass::zero()
    }

    fn one() -> Self {
        MotiveClass::one()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (mono, coeff) in &rhs.terms {
            MotiveClass::insert_term(&mut terms, mono.clone(), coeff.clone());
        }
        MotiveClass { terms }
    }

    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &Ring::neg(rhs))
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                MotiveClass::insert_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        MotiveClass { terms }
    }

    fn neg(&self) -> Self {
        MotiveClass {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }

    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (mono, coeff) = self.terms.iter().next()?;
        if *mono == Monomial::unit() && coeff.inverse().is_some() {
            Some(MotiveClass::from_bigint(coeff))
        } else {
            None
        }
    }

    fn from_bigint(n: &BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !n.is_zero() {
            terms.insert(Monomial::unit(), n.clone());
        }
        MotiveClass { terms }
    }
}

impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mono, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            mono.write(f, &coeff.abs())?;
        }
        Ok(())
    }
}
