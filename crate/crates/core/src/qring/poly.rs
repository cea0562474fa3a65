use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Dense univariate polynomial in `q`.
///
/// `coeffs[i]` is the coefficient of `q^i`. Trailing zeros are stripped on
/// construction, so two polynomials are equal iff their coefficient vectors
/// are equal; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^exp`.
    pub fn monomial(c: C, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); exp + 1];
        coeffs[exp] = c;
        Poly { coeffs }
    }

    /// `q^exp`.
    pub fn q_pow(exp: usize) -> Self {
        Self::monomial(C::one(), exp)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn lead(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divide by `q^k`; the caller guarantees `k <= valuation`.
    pub(crate) fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        Poly { coeffs: self.coeffs.iter().skip(k).cloned().collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Substitute `q -> q^step`.
    pub fn subst_power(&self, step: usize) -> Self {
        assert!(step >= 1, "substitution q -> q^0 is not supported");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients in reverse order, i.e. `q^deg * p(1/q)`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Sum of the coefficients, i.e. the value at `q = 1`.
    pub fn at_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Horner evaluation in any ring that contains the coefficients.
    pub fn eval<F>(&self, x: &F) -> F
    where
        F: Coeff + From<C>,
    {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + F::from(c.clone()))
    }

    /// Exact quotient `self / d`.
    ///
    /// `Ok(None)` means `d` does not divide `self`; only a zero divisor is an
    /// error.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        let Some(dd) = d.degree() else {
            return Err(Error::DivisionByZero);
        };
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        let nd = self.coeffs.len() - 1;
        if nd < dd {
            return Ok(None);
        }
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let Some(c) = top.exact_quotient(lead) else {
                return Ok(None);
            };
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * dc.clone();
            }
            quot[i] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Ok(Some(Self::new(quot)))
        } else {
            Ok(None)
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> From<C> for Poly<C> {
    fn from(c: C) -> Self {
        Self::constant(c)
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.clone() + s.clone();
        }
        Poly::new(coeffs)
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -&self
    }
}

/// Forward the owned/mixed operator impls to the `&T op &T` one.
macro_rules! forward_binops {
    ($ty:ident) => {
        forward_binops!(@impl $ty, Add, add);
        forward_binops!(@impl $ty, Sub, sub);
        forward_binops!(@impl $ty, Mul, mul);
    };
    (@impl $ty:ident, $tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for $ty<C> {
            type Output = $ty<C>;
            fn $m(self, rhs: $ty<C>) -> $ty<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coeff> $tr<&$ty<C>> for $ty<C> {
            type Output = $ty<C>;
            fn $m(self, rhs: &$ty<C>) -> $ty<C> {
                (&self).$m(rhs)
            }
        }
        impl<C: Coeff> $tr<$ty<C>> for &$ty<C> {
            type Output = $ty<C>;
            fn $m(self, rhs: $ty<C>) -> $ty<C> {
                self.$m(&rhs)
            }
        }
    };
}

pub(crate) use forward_binops;

forward_binops!(Poly);

impl<C: Coeff> std::iter::Sum for Poly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<C: Coeff> std::iter::Product for Poly<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}
