//! The `q = 1` integer triangles, built by their own recurrences.
//!
//! Row `n` of each result holds the entries for `k` in `Family::k_range(n)`.

use super::Family;
use crate::scalar::Coeff;

fn build<C: Coeff>(
    family: Family,
    max_n: usize,
    first: Vec<Vec<C>>,
    rule: impl Fn(i64, i64, &C, &C) -> C,
) -> Vec<Vec<C>> {
    let mut rows = first;
    while rows.len() <= max_n {
        let n = rows.len();
        let prev = &rows[n - 1];
        let (plo, phi) = family.k_range(n - 1);
        let at = |k: i64| if k < plo || k > phi { C::zero() } else { prev[(k - plo) as usize].clone() };
        let (lo, hi) = family.k_range(n);
        let row = (lo..=hi).map(|k| rule(n as i64, k, &at(k), &at(k - 1))).collect();
        rows.push(row);
    }
    rows.truncate(max_n + 1);
    rows
}

fn int<C: Coeff>(n: i64) -> C {
    C::from_int(n)
}

/// `a_{n,k} = k a_{n-1,k} + 2 (n+2-2k) a_{n-1,k-1}`, `a_{1,1} = 1`.
pub fn classical_gamma_a<C: Coeff>(max_n: usize) -> Vec<Vec<C>> {
    build(Family::GammaA, max_n, vec![vec![], vec![C::one()]], |n, k, same, left| {
        int::<C>(k) * same.clone() + int::<C>(2 * (n + 2 - 2 * k)) * left.clone()
    })
}

/// `b_{n,k} = (2k+1) b_{n-1,k} + 4 (n+1-2k) b_{n-1,k-1}`, `b_{0,0} = 1`.
pub fn classical_gamma_b<C: Coeff>(max_n: usize) -> Vec<Vec<C>> {
    build(Family::GammaB, max_n, vec![vec![C::one()]], |n, k, same, left| {
        int::<C>(2 * k + 1) * same.clone() + int::<C>(4 * (n + 1 - 2 * k)) * left.clone()
    })
}

/// Eulerian numbers `A_{n,k} = k A_{n-1,k} + (n+1-k) A_{n-1,k-1}`.
pub fn classical_eulerian_a<C: Coeff>(max_n: usize) -> Vec<Vec<C>> {
    build(Family::CarlitzA, max_n, vec![vec![], vec![C::one()]], |n, k, same, left| {
        int::<C>(k) * same.clone() + int::<C>(n + 1 - k) * left.clone()
    })
}

/// Type-B Eulerian numbers `B_{n,k} = (2k+1) B_{n-1,k} + (2n-2k+1) B_{n-1,k-1}`.
pub fn classical_eulerian_b<C: Coeff>(max_n: usize) -> Vec<Vec<C>> {
    build(Family::TypeB, max_n, vec![vec![C::one()]], |n, k, same, left| {
        int::<C>(2 * k + 1) * same.clone() + int::<C>(2 * n - 2 * k + 1) * left.clone()
    })
}
