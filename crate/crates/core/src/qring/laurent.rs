use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{forward_binops, Poly};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Laurent polynomial `q^offset * base(q)`.
///
/// Canonical form: zero is `(0, 0)`, otherwise `base` has a nonzero constant
/// term so every power of `q` lives in `offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    base: Poly<C>,
    offset: i64,
}

impl<C: Coeff> Laurent<C> {
    pub fn new(base: Poly<C>, offset: i64) -> Self {
        match base.valuation() {
            None => Self::zero(),
            Some(0) => Laurent { base, offset },
            Some(v) => Laurent { base: base.unshift(v), offset: offset + v as i64 },
        }
    }

    pub fn zero() -> Self {
        Laurent { base: Poly::zero(), offset: 0 }
    }

    pub fn one() -> Self {
        Laurent { base: Poly::one(), offset: 0 }
    }

    pub fn monomial(c: C, exp: i64) -> Self {
        Self::new(Poly::constant(c), exp)
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(C::one(), exp)
    }

    pub fn base(&self) -> &Poly<C> {
        &self.base
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    /// Lowest and highest exponents present.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        self.base.degree().map(|d| (self.offset, self.offset + d as i64))
    }

    /// Coefficient of `q^exp`.
    pub fn coeff(&self, exp: i64) -> C {
        if exp < self.offset {
            return C::zero();
        }
        self.base.coeff((exp - self.offset) as usize)
    }

    /// Lossless conversion when no negative powers are present.
    pub fn to_poly(&self) -> Option<Poly<C>> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        usize::try_from(self.offset).ok().map(|k| self.base.shift(k))
    }

    /// Like [`Laurent::to_poly`] but reports the offending offset.
    pub fn into_poly(self, what: &str) -> Result<Poly<C>> {
        self.to_poly().ok_or_else(|| Error::NotPolynomial { what: what.to_string(), offset: self.offset })
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { base: self.base.clone(), offset: self.offset + k }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.base.scale(c), self.offset)
    }

    /// Substitute `q -> 1/q`.
    pub fn recip(&self) -> Self {
        match self.base.degree() {
            None => Self::zero(),
            Some(d) => Self::new(self.base.reversed(), -self.offset - d as i64),
        }
    }

    /// Substitute `q -> q^step`.
    pub fn subst_power(&self, step: usize) -> Self {
        Self::new(self.base.subst_power(step), self.offset * step as i64)
    }

    pub fn pow(&self, e: u32) -> Self {
        if self.is_zero() {
            return if e == 0 { Self::one() } else { Self::zero() };
        }
        Laurent { base: self.base.pow(e), offset: self.offset * e as i64 }
    }

    pub fn at_one(&self) -> C {
        self.base.at_one()
    }

    /// Exact value at `x`; `x = 0` is a pole when negative powers are present.
    pub fn eval<F>(&self, x: &F) -> Result<F>
    where
        F: Coeff + From<C>,
    {
        let b = self.base.eval(x);
        if self.offset >= 0 {
            return Ok(b * pow_field(x, self.offset as u64));
        }
        if x.is_zero() {
            return Err(Error::Pole("negative power of q at q = 0".into()));
        }
        Ok(b / pow_field(x, self.offset.unsigned_abs()))
    }

    /// Exact quotient in the Laurent ring, where monomials are units.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.base.exact_div(&d.base)?.map(|b| Self::new(b, self.offset - d.offset)))
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.base
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }
}

pub(crate) fn pow_field<F: Coeff>(x: &F, mut e: u64) -> F {
    let mut base = x.clone();
    let mut acc = F::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

impl<C: Coeff> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> From<Poly<C>> for Laurent<C> {
    fn from(p: Poly<C>) -> Self {
        Self::new(p, 0)
    }
}

impl<C: Coeff> Add for &Laurent<C> {
    type Output = Laurent<C>;

    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.offset.min(rhs.offset);
        let a = self.base.shift((self.offset - low) as usize);
        let b = rhs.base.shift((rhs.offset - low) as usize);
        Laurent::new(&a + &b, low)
    }
}

impl<C: Coeff> Sub for &Laurent<C> {
    type Output = Laurent<C>;

    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Mul for &Laurent<C> {
    type Output = Laurent<C>;

    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        // integral domain: product of nonzero constant terms stays nonzero
        Laurent::new(&self.base * &rhs.base, self.offset + rhs.offset)
    }
}

impl<C: Coeff> Neg for &Laurent<C> {
    type Output = Laurent<C>;

    fn neg(self) -> Laurent<C> {
        Laurent { base: -&self.base, offset: self.offset }
    }
}

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;

    fn neg(self) -> Laurent<C> {
        -&self
    }
}

forward_binops!(Laurent);

impl<C: Coeff> std::iter::Sum for Laurent<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<C: Coeff> std::iter::Product for Laurent<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}
