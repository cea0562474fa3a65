//! Carlitz q-Eulerian polynomials and their gamma expansion.
//!
//! Convention: `A_n(t, q) = sum_{k=1}^{n} A_{n,k}(q) t^{k-1}`, so `A_1 = 1`
//! and `A_2 = 1 + q t`.

use super::{Family, Triangle};
use crate::error::{Error, Result};
use crate::qring::{poch_t, q_int, BiPoly, Laurent, Poly, QBinomials, Sign};
use crate::scalar::Coeff;

pub fn carlitz_triangle<C: Coeff>(max_n: usize) -> Triangle<C> {
    Triangle::build(Family::CarlitzA, max_n)
}

pub fn gamma_a_triangle<C: Coeff>(max_n: usize) -> Triangle<C> {
    Triangle::build(Family::GammaA, max_n)
}

/// `A_n(t, q)` assembled from row `n` of a Carlitz triangle.
pub fn carlitz_poly_from<C: Coeff>(tri: &Triangle<C>, n: usize) -> BiPoly<C> {
    assert_eq!(tri.family(), Family::CarlitzA);
    BiPoly::from_polys(tri.row(n).iter().cloned())
}

pub fn carlitz_poly<C: Coeff>(n: usize) -> BiPoly<C> {
    carlitz_poly_from(&carlitz_triangle(n), n)
}

/// Independent route to `A_n(t, q)` through its defining series.
///
/// Multiplies `sum_{k <= window} [k+1]^n t^k` by `(t; q)_{n+1}` and checks
/// that every coefficient from `t^n` through `t^window` cancels.
pub fn carlitz_series_oracle<C: Coeff>(n: usize, window: usize) -> Result<BiPoly<C>> {
    if n == 0 || window < n {
        return Err(Error::OutOfRange(format!(
            "series oracle needs n >= 1 and window >= n (n = {n}, window = {window})"
        )));
    }
    let series = BiPoly::from_polys((0..=window).map(|k| q_int::<C>(k + 1).pow(n as u32)));
    let denom = poch_t::<C>(0, n + 1, Sign::Plus, 1);
    let prod = denom.mul_truncated(&series, window);
    if let Some(d) = (n..=window).find(|&d| !prod.term(d).is_zero()) {
        return Err(Error::NonzeroTail { n, degree: d });
    }
    Ok(prod.truncate(n - 1))
}

/// Right side of the gamma expansion
/// `sum_k a_{n,k}(q) t^{k-1} (-t q^k; q)_{n+1-2k}`.
pub fn gamma_expand_a_from<C: Coeff>(gamma: &Triangle<C>, n: usize) -> BiPoly<C> {
    assert_eq!(gamma.family(), Family::GammaA);
    gamma
        .row_entries(n)
        .map(|(k, a)| {
            let ku = k as usize;
            poch_t::<C>(k, n + 1 - 2 * ku, Sign::Minus, 1).shift_t(ku - 1).scale(&Laurent::from(a.clone()))
        })
        .sum()
}

pub fn gamma_expand_a<C: Coeff>(n: usize) -> BiPoly<C> {
    gamma_expand_a_from(&gamma_a_triangle(n), n)
}

/// `A_{n,k}(q) = sum_{s>=1} [n+1-2s, k-s]_q q^{(k-s)s + C(k-s,2)} a_{n,s}(q)`.
pub fn basis_change_a_with<C: Coeff>(gamma: &Triangle<C>, binoms: &mut QBinomials<C>, n: usize, k: usize) -> Poly<C> {
    let (lo, hi) = Family::GammaA.k_range(n);
    (lo..=hi.min(k as i64))
        .map(|s| {
            let s = s as usize;
            let d = k - s;
            let e = d * s + d * d.saturating_sub(1) / 2;
            (&binoms.get(n + 1 - 2 * s, d as i64) * &gamma.entry(n, s as i64)).shift(e)
        })
        .sum()
}

pub fn basis_change_a<C: Coeff>(n: usize, k: usize) -> Poly<C> {
    basis_change_a_with(&gamma_a_triangle(n), &mut QBinomials::new(), n, k)
}
