//! Row symmetry and monotonicity of the q-Eulerian triangles.
//!
//! The real-`q` statements are sampled at exact rational points; a `true`
//! result is evidence at those points only.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::eulerian::{carlitz_triangle, type_b_triangle, Family, Triangle};
use crate::qring::{is_unimodal_ints, predicates::is_symmetric_seq, subst_q_recip, Laurent};
use crate::{Int, Rat};

fn reciprocity(tri: &Triangle<Int>, n: usize, exponent: i64, mirror: impl Fn(i64) -> i64) -> bool {
    tri.row_entries(n).all(|(k, p)| {
        let rhs = subst_q_recip(p).shift(exponent);
        Laurent::from(tri.entry(n, mirror(k))) == rhs
    })
}

/// `A_{n,n-k+1}(q) = q^{n(n-1)/2} A_{n,k}(1/q)` for every `k`.
pub fn reciprocity_a(n: usize) -> bool {
    let tri = carlitz_triangle::<Int>(n);
    let nn = n as i64;
    reciprocity(&tri, n, nn * (nn - 1) / 2, |k| nn - k + 1)
}

/// `B_{n,n-k}(q) = q^{n^2} B_{n,k}(1/q)` for every `k`.
pub fn reciprocity_b(n: usize) -> bool {
    let tri = type_b_triangle::<Int>(n);
    let nn = n as i64;
    reciprocity(&tri, n, nn * nn, |k| nn - k)
}

fn check_point(n: usize, q0: &Rat) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("monotonicity check needs n >= 2, got {n}")));
    }
    if *q0 <= Rat::zero() || q0.is_one() {
        return Err(Error::OutOfRange(format!("sample point must satisfy q > 0 and q != 1, got {q0}")));
    }
    Ok(())
}

fn value(tri: &Triangle<Int>, n: usize, k: i64, q0: &Rat) -> Rat {
    tri.entry(n, k).eval(q0)
}

/// For `j = floor((n+1)/2)` and `k = 1..j-1`: `A_{n,k+1} > A_{n,k}` at
/// `q0 > 1`, and `A_{n,n-k+1} < A_{n,n-k}` at `0 < q0 < 1`.
pub fn monotone_check_a(n: usize, q0: &Rat) -> Result<bool> {
    check_point(n, q0)?;
    let tri = carlitz_triangle::<Int>(n);
    let nn = n as i64;
    let j = (nn + 1) / 2;
    let above = *q0 > Rat::one();
    Ok((1..j).all(|k| {
        if above {
            value(&tri, n, k + 1, q0) > value(&tri, n, k, q0)
        } else {
            value(&tri, n, nn - k + 1, q0) < value(&tri, n, nn - k, q0)
        }
    }))
}

/// For `j = floor(n/2)` and `k = 1..j-1`: `B_{n,k+1} > B_{n,k}` at `q0 > 1`,
/// and `B_{n,n-k} < B_{n,n-k-1}` at `0 < q0 < 1`.
pub fn monotone_check_b(n: usize, q0: &Rat) -> Result<bool> {
    check_point(n, q0)?;
    let tri = type_b_triangle::<Int>(n);
    let nn = n as i64;
    let j = nn / 2;
    let above = *q0 > Rat::one();
    Ok((1..j).all(|k| {
        if above {
            value(&tri, n, k + 1, q0) > value(&tri, n, k, q0)
        } else {
            value(&tri, n, nn - k, q0) < value(&tri, n, nn - k - 1, q0)
        }
    }))
}

/// Whether the row `(P_{n,k}(q0))_k` is unimodal; report-only, since full
/// unimodality is not established for every family.
pub fn row_unimodal_at(family: Family, n: usize, q0: &Rat) -> bool {
    let tri = Triangle::<Int>::build(family, n);
    let vals: Vec<Rat> = tri.row(n).iter().map(|p| p.eval(q0)).collect();
    is_unimodal_ints(&vals)
}

/// At `q = 1` every row `1..=max_n` of family A or B is symmetric and unimodal.
pub fn q1_unimodality(family: Family, max_n: usize) -> Result<bool> {
    let tri = match family {
        Family::CarlitzA | Family::TypeB => Triangle::<Int>::build(family, max_n),
        other => return Err(Error::OutOfRange(format!("q = 1 unimodality is checked for A and B, not {other}"))),
    };
    let rows = tri.at_q_one();
    Ok((1..=max_n).all(|n| is_unimodal_ints(&rows[n]) && is_symmetric_seq(&rows[n])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rat {
        Rat::new(Int::from(a), Int::from(b))
    }

    #[test]
    fn reciprocity_small() {
        for n in 0..=5 {
            assert!(reciprocity_b(n));
        }
        for n in 1..=5 {
            assert!(reciprocity_a(n));
        }
    }

    #[test]
    fn monotone_examples() {
        let tri = carlitz_triangle::<Int>(3);
        assert_eq!(tri.entry(3, 2).eval(&r(2, 1)), r(12, 1));
        assert!(monotone_check_a(3, &r(2, 1)).unwrap());
        assert!(monotone_check_a(6, &r(3, 2)).unwrap());
        assert!(monotone_check_a(4, &r(1, 2)).unwrap());
        assert!(monotone_check_b(4, &r(2, 1)).unwrap());
        assert!(monotone_check_b(5, &r(7, 3)).unwrap());
        assert!(monotone_check_b(6, &r(2, 3)).unwrap());
    }

    #[test]
    fn bad_points_rejected() {
        assert!(monotone_check_a(4, &r(1, 1)).is_err());
        assert!(monotone_check_a(4, &r(0, 1)).is_err());
        assert!(monotone_check_b(4, &r(-2, 1)).is_err());
        assert!(monotone_check_a(1, &r(2, 1)).is_err());
    }

    #[test]
    fn q1_rows() {
        assert!(q1_unimodality(Family::CarlitzA, 1).unwrap());
        assert!(q1_unimodality(Family::CarlitzA, 8).unwrap());
        assert!(q1_unimodality(Family::TypeB, 8).unwrap());
        assert!(q1_unimodality(Family::GammaA, 3).is_err());
    }

    #[test]
    fn row_unimodality_report() {
        assert!(row_unimodal_at(Family::TypeB, 6, &r(2, 1)));
    }
}
