//! The q-integer identities that remain after cancelling the common
//! Gaussian-binomial factors in the two expansion proofs.
//!
//! Arguments may go negative at the edges of the index range, so the
//! brackets are the Laurent q-integers `(1 - q^m)/(1 - q)`.

use crate::qring::{q_int_laurent, Laurent};
use crate::scalar::Coeff;

fn br<C: Coeff>(m: i64) -> Laurent<C> {
    q_int_laurent(m)
}

fn br2<C: Coeff>(m: i64) -> Laurent<C> {
    q_int_laurent::<C>(m).subst_power(2)
}

fn one_plus_q_pow<C: Coeff>(e: i64) -> Laurent<C> {
    &Laurent::one() + &Laurent::q_pow(e)
}

/// Both sides of
/// `[n+1-2s][s] + [n-k-s+1](1+q^s)[k-s] = [k][n-k-s+1] + [n+1-k][k-s]`.
pub fn bracket_sides_a<C: Coeff>(n: i64, k: i64, s: i64) -> (Laurent<C>, Laurent<C>) {
    let lhs = &(&br::<C>(n + 1 - 2 * s) * &br(s)) + &(&(&br::<C>(n - k - s + 1) * &one_plus_q_pow(s)) * &br(k - s));
    let rhs = &(&br::<C>(k) * &br(n - k - s + 1)) + &(&br::<C>(n + 1 - k) * &br(k - s));
    (lhs, rhs)
}

/// Both sides of
/// `[n-2s]_{q^2}[2s+1] + [n-k-s]_{q^2}(1+q)(1+q^{2s+1})[k-s]_{q^2}
///   = [2k+1][n-k-s]_{q^2} + [2n+1-2k][k-s]_{q^2}`.
pub fn bracket_sides_b<C: Coeff>(n: i64, k: i64, s: i64) -> (Laurent<C>, Laurent<C>) {
    let mid = &(&br2::<C>(n - k - s) * &one_plus_q_pow(1)) * &(&one_plus_q_pow(2 * s + 1) * &br2(k - s));
    let lhs = &(&br2::<C>(n - 2 * s) * &br(2 * s + 1)) + &mid;
    let rhs = &(&br::<C>(2 * k + 1) * &br2(n - k - s)) + &(&br::<C>(2 * n + 1 - 2 * k) * &br2(k - s));
    (lhs, rhs)
}

/// Index triples `1 <= s <= k <= n <= max_n` where the type-A identity fails.
pub fn bracket_failures_a<C: Coeff>(max_n: i64) -> Vec<(i64, i64, i64)> {
    let mut bad = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            for s in 1..=k {
                let (l, r) = bracket_sides_a::<C>(n, k, s);
                if l != r {
                    bad.push((n, k, s));
                }
            }
        }
    }
    bad
}

/// Index triples `0 <= s <= k <= n <= max_n` where the type-B identity fails.
pub fn bracket_failures_b<C: Coeff>(max_n: i64) -> Vec<(i64, i64, i64)> {
    let mut bad = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            for s in 0..=k {
                let (l, r) = bracket_sides_b::<C>(n, k, s);
                if l != r {
                    bad.push((n, k, s));
                }
            }
        }
    }
    bad
}
