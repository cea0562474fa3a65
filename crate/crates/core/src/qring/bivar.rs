use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::{pow_field, Laurent};
use super::poly::{forward_binops, Poly};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Polynomial in `t` with Laurent-polynomial coefficients in `q`.
///
/// `terms[d]` is the coefficient of `t^d`; the highest stored term is
/// nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly<C> {
    terms: Vec<Laurent<C>>,
}

/// The sign `s` in a substitution or Pochhammer factor `1 - s t q^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply<C: Coeff>(self, c: C) -> C {
        match self {
            Sign::Plus => c,
            Sign::Minus => -c,
        }
    }

    /// `sign^k`.
    pub fn pow(self, k: usize) -> Sign {
        if self == Sign::Minus && k % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl<C: Coeff> BiPoly<C> {
    pub fn new(mut terms: Vec<Laurent<C>>) -> Self {
        while terms.last().is_some_and(Laurent::is_zero) {
            terms.pop();
        }
        BiPoly { terms }
    }

    /// Polynomial coefficients in ascending `t`-degree.
    pub fn from_polys(polys: impl IntoIterator<Item = Poly<C>>) -> Self {
        Self::new(polys.into_iter().map(Laurent::from).collect())
    }

    pub fn zero() -> Self {
        BiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Laurent::one())
    }

    pub fn constant(c: Laurent<C>) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^d`.
    pub fn monomial(c: Laurent<C>, d: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut terms = vec![Laurent::zero(); d + 1];
        terms[d] = c;
        BiPoly { terms }
    }

    pub fn terms(&self) -> &[Laurent<C>] {
        &self.terms
    }

    pub fn term(&self, d: usize) -> Laurent<C> {
        self.terms.get(d).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree in `t`.
    pub fn degree(&self) -> Option<usize> {
        self.terms.len().checked_sub(1)
    }

    /// Lowest `t`-degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.iter().position(|c| !c.is_zero())
    }

    /// Multiply by `t^d`.
    pub fn shift_t(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut terms = vec![Laurent::zero(); d];
        terms.extend(self.terms.iter().cloned());
        BiPoly { terms }
    }

    pub fn scale(&self, c: &Laurent<C>) -> Self {
        Self::new(self.terms.iter().map(|x| x * c).collect())
    }

    /// Keep only `t`-degrees `<= max_deg`.
    pub fn truncate(&self, max_deg: usize) -> Self {
        Self::new(self.terms.iter().take(max_deg + 1).cloned().collect())
    }

    /// Product truncated at `t`-degree `max_deg`.
    pub fn mul_truncated(&self, rhs: &Self, max_deg: usize) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let len = (self.terms.len() + rhs.terms.len() - 1).min(max_deg + 1);
        let mut terms = vec![Laurent::zero(); len];
        for (i, a) in self.terms.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.terms.iter().enumerate().take(len - i) {
                terms[i + j] = &terms[i + j] + &(a * b);
            }
        }
        Self::new(terms)
    }

    /// Coefficients as ordinary polynomials in `q`, if no negative powers occur.
    pub fn to_polys(&self) -> Option<Vec<Poly<C>>> {
        self.terms.iter().map(Laurent::to_poly).collect()
    }

    /// Substitute `t := sign * q^e`.
    pub fn subst_t_signed_power(&self, sign: Sign, e: i64) -> Laurent<C> {
        self.terms
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| {
                let c = c.shift(e * d as i64);
                match sign.pow(d) {
                    Sign::Plus => c,
                    Sign::Minus => -c,
                }
            })
            .sum()
    }

    /// Coefficient sequence in `t` at `q = 1`.
    pub fn at_q_one(&self) -> Vec<C> {
        self.terms.iter().map(Laurent::at_one).collect()
    }

    /// Exact value at `(q, t) = (q0, t0)`.
    pub fn eval<F>(&self, q0: &F, t0: &F) -> Result<F>
    where
        F: Coeff + From<C>,
    {
        let mut acc = F::zero();
        for (d, c) in self.terms.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc + c.eval(q0)? * pow_field(t0, d as u64);
        }
        Ok(acc)
    }

    /// Exact quotient `self / d` over the Laurent ring in `q`.
    ///
    /// Eliminates from the lowest `t`-degree upwards; every step divides by
    /// the lowest nonzero coefficient of `d`, and the remainder must vanish.
    /// `Ok(None)` means `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        let (Some(dlow), Some(ddeg)) = (d.valuation(), d.degree()) else {
            return Err(Error::DivisionByZero);
        };
        let Some(ndeg) = self.degree() else {
            return Ok(Some(Self::zero()));
        };
        if ndeg < ddeg {
            return Ok(None);
        }
        let lowc = &d.terms[dlow];
        let mut rem = self.terms.clone();
        if rem[..dlow].iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        let qlen = ndeg - ddeg + 1;
        let mut quot = vec![Laurent::zero(); qlen];
        for i in 0..qlen {
            let cur = &rem[i + dlow];
            if cur.is_zero() {
                continue;
            }
            let Some(c) = cur.exact_div(lowc)? else {
                return Ok(None);
            };
            for (j, dc) in d.terms.iter().enumerate().skip(dlow) {
                rem[i + j] = &rem[i + j] - &(&c * dc);
            }
            quot[i] = c;
        }
        if rem.iter().all(Laurent::is_zero) {
            Ok(Some(Self::new(quot)))
        } else {
            Ok(None)
        }
    }
}

impl<C: Coeff> Default for BiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Add for &BiPoly<C> {
    type Output = BiPoly<C>;

    fn add(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let len = self.terms.len().max(rhs.terms.len());
        BiPoly::new((0..len).map(|d| &self.term(d) + &rhs.term(d)).collect())
    }
}

impl<C: Coeff> Sub for &BiPoly<C> {
    type Output = BiPoly<C>;

    fn sub(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let len = self.terms.len().max(rhs.terms.len());
        BiPoly::new((0..len).map(|d| &self.term(d) - &rhs.term(d)).collect())
    }
}

impl<C: Coeff> Mul for &BiPoly<C> {
    type Output = BiPoly<C>;

    fn mul(self, rhs: &BiPoly<C>) -> BiPoly<C> {
        let max = self.terms.len().saturating_add(rhs.terms.len());
        self.mul_truncated(rhs, max)
    }
}

impl<C: Coeff> Neg for &BiPoly<C> {
    type Output = BiPoly<C>;

    fn neg(self) -> BiPoly<C> {
        BiPoly { terms: self.terms.iter().map(|c| -c).collect() }
    }
}

impl<C: Coeff> Neg for BiPoly<C> {
    type Output = BiPoly<C>;

    fn neg(self) -> BiPoly<C> {
        -&self
    }
}

forward_binops!(BiPoly);

impl<C: Coeff> std::iter::Sum for BiPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<C: Coeff> std::iter::Product for BiPoly<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type B = BiPoly<BigInt>;
    type L = Laurent<BigInt>;

    fn b(rows: &[&[i64]]) -> B {
        B::from_polys(rows.iter().map(|r| Poly::from_ints(r)))
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn signed_power_substitution() {
        // 1 + (q + q^3) t + q^4 t^2 at t = -q^{-2} gives 2 - q^{-1} - q
        let p = b(&[&[1], &[0, 1, 0, 1], &[0, 0, 0, 0, 1]]);
        let expected = L::new(Poly::from_ints(&[-1, 2, -1]), -1);
        assert_eq!(p.subst_t_signed_power(Sign::Minus, -2), expected);
        assert_eq!(b(&[&[], &[1]]).subst_t_signed_power(Sign::Plus, 0), L::one());
        assert_eq!(b(&[&[1], &[0, 1]]).subst_t_signed_power(Sign::Minus, -1), L::zero());
    }

    #[test]
    fn evaluation() {
        let p = b(&[&[1], &[0, 1, 1], &[0, 0, 0, 1]]);
        assert_eq!(p.eval(&rat(2), &rat(1)).unwrap(), rat(15));
        assert_eq!(p.at_q_one(), vec![BigInt::from(1), BigInt::from(2), BigInt::from(1)]);
    }

    #[test]
    fn division() {
        let a = b(&[&[1], &[0, 1]]);
        let c = b(&[&[1, 1], &[0, 0, 3], &[2]]);
        let prod = &a * &c;
        assert_eq!(prod.exact_div(&a).unwrap(), Some(c.clone()));
        assert_eq!(prod.exact_div(&c).unwrap(), Some(a.clone()));
        assert_eq!(c.exact_div(&a).unwrap(), None);
        assert_eq!(a.exact_div(&B::zero()), Err(Error::DivisionByZero));
        // divisor with zero constant term in t
        let t = B::monomial(L::q_pow(-1), 1);
        assert_eq!((&c * &t).exact_div(&t).unwrap(), Some(c.clone()));
        assert_eq!(c.exact_div(&t).unwrap(), None);
    }

    #[test]
    fn truncated_product() {
        let a = b(&[&[1], &[1], &[1]]);
        let full = &a * &a;
        assert_eq!(a.mul_truncated(&a, 2), full.truncate(2));
        assert_eq!(full.degree(), Some(4));
    }
}
