//! Type-B q-Eulerian polynomials `B_n(t,q) = sum_{k=0}^{n} B_{n,k}(q) t^k`
//! and their gamma expansion in the basis `t^k (-t q^{2k+1}; q^2)_{n-2k}`.

use super::{Family, Triangle};
use crate::error::{Error, Result};
use crate::qring::{poch_t, q_int, BiPoly, Laurent, Poly, QBinomials, Sign};
use crate::scalar::Coeff;

pub fn type_b_triangle<C: Coeff>(max_n: usize) -> Triangle<C> {
    Triangle::build(Family::TypeB, max_n)
}

pub fn gamma_b_triangle<C: Coeff>(max_n: usize) -> Triangle<C> {
    Triangle::build(Family::GammaB, max_n)
}

pub fn type_b_poly_from<C: Coeff>(tri: &Triangle<C>, n: usize) -> BiPoly<C> {
    assert_eq!(tri.family(), Family::TypeB);
    BiPoly::from_polys(tri.row(n).iter().cloned())
}

pub fn type_b_poly<C: Coeff>(n: usize) -> BiPoly<C> {
    type_b_poly_from(&type_b_triangle(n), n)
}

/// `B_n(t,q)` from `(t; q^2)_{n+1} * sum_k [2k+1]^n t^k`, requiring the
/// coefficients of `t^{n+1} .. t^window` to cancel.
pub fn type_b_series_oracle<C: Coeff>(n: usize, window: usize) -> Result<BiPoly<C>> {
    if window < n + 1 {
        return Err(Error::OutOfRange(format!("series oracle needs window >= n + 1 (n = {n}, window = {window})")));
    }
    let series = BiPoly::from_polys((0..=window).map(|k| q_int::<C>(2 * k + 1).pow(n as u32)));
    let denom = poch_t::<C>(0, n + 1, Sign::Plus, 2);
    let prod = denom.mul_truncated(&series, window);
    if let Some(d) = (n + 1..=window).find(|&d| !prod.term(d).is_zero()) {
        return Err(Error::NonzeroTail { n, degree: d });
    }
    Ok(prod.truncate(n))
}

/// `sum_k b_{n,k}(q) t^k (-t q^{2k+1}; q^2)_{n-2k}`.
pub fn gamma_expand_b_from<C: Coeff>(gamma: &Triangle<C>, n: usize) -> BiPoly<C> {
    assert_eq!(gamma.family(), Family::GammaB);
    gamma
        .row_entries(n)
        .map(|(k, b)| {
            let ku = k as usize;
            poch_t::<C>(2 * k + 1, n - 2 * ku, Sign::Minus, 2).shift_t(ku).scale(&Laurent::from(b.clone()))
        })
        .sum()
}

pub fn gamma_expand_b<C: Coeff>(n: usize) -> BiPoly<C> {
    gamma_expand_b_from(&gamma_b_triangle(n), n)
}

/// `B_{n,k}(q) = sum_{s>=0} [n-2s, k-s]_{q^2} q^{k^2 - s^2} b_{n,s}(q)`.
pub fn basis_change_b_with<C: Coeff>(gamma: &Triangle<C>, binoms: &mut QBinomials<C>, n: usize, k: usize) -> Poly<C> {
    let (lo, hi) = Family::GammaB.k_range(n);
    (lo..=hi.min(k as i64))
        .map(|s| {
            let s = s as usize;
            let binom = binoms.get(n - 2 * s, (k - s) as i64).subst_power(2);
            (&binom * &gamma.entry(n, s as i64)).shift(k * k - s * s)
        })
        .sum()
}

pub fn basis_change_b<C: Coeff>(n: usize, k: usize) -> Poly<C> {
    basis_change_b_with(&gamma_b_triangle(n), &mut QBinomials::new(), n, k)
}
