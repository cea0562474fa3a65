//! q-tangent numbers and the type-A quotients.

use num_traits::{One, Signed, Zero};

use super::points::{admissible_points, generic_point};
use crate::error::{Error, Result};
use crate::eulerian::{carlitz_poly, gamma_a_triangle, Family, Triangle};
use crate::qring::{binomial, is_nonneg, poch_num, q_int, BiPoly, Laurent, Sign};
use crate::{Int, QLaurent, QPoly, Rat, TQPoly};

fn require_nonneg(p: QPoly, what: &str) -> Result<QPoly> {
    if is_nonneg(&p) {
        Ok(p)
    } else {
        Err(Error::NegativeCoefficient { what: what.to_string() })
    }
}

/// `T_{2n+1}(q) = (-1)^n q^{C(n,2)} A_{2n+1}(-q^{-n}, q)`.
///
/// Fails if the substitution leaves negative powers or negative
/// coefficients, neither of which can happen for a correct `A_{2n+1}`.
pub fn q_tangent(n: usize) -> Result<QPoly> {
    let a = carlitz_poly::<Int>(2 * n + 1);
    let v = a.subst_t_signed_power(Sign::Minus, -(n as i64)).shift((n * n.saturating_sub(1) / 2) as i64);
    let v = if n % 2 == 1 { -v } else { v };
    let what = format!("T_{}", 2 * n + 1);
    require_nonneg(v.into_poly(&what)?, &what)
}

/// `q^{-exponent} a_{n,k}(q)` without any polynomiality check.
pub fn rescaled_gamma_a(gamma: &Triangle<Int>, n: usize, k: i64, exponent: i64) -> QLaurent {
    Laurent::from(gamma.entry(n, k)).shift(-exponent)
}

/// `a*_{n,k}(q) = q^{-k(k-1)/2} a_{n,k}(q)`.
pub fn a_star(n: usize, k: usize) -> Result<QPoly> {
    let (lo, hi) = Family::GammaA.k_range(n);
    if (k as i64) < lo || (k as i64) > hi {
        return Err(Error::OutOfRange(format!("a*_{{{n},{k}}} needs 1 <= k <= floor((n+1)/2)")));
    }
    let gamma = gamma_a_triangle::<Int>(n);
    let e = (k * (k - 1) / 2) as i64;
    let what = format!("a*_{{{n},{k}}}");
    require_nonneg(rescaled_gamma_a(&gamma, n, k as i64, e).into_poly(&what)?, &what)
}

/// Rows `0..=max_n` of `a*` built by the rescaled recurrence
/// `a*_{n,k} = [k] a*_{n-1,k} + (1 + q^{k-1}) [n+2-2k] a*_{n-1,k-1}`.
pub fn a_star_by_recurrence(max_n: usize) -> Vec<Vec<QPoly>> {
    let mut rows: Vec<Vec<QPoly>> = vec![vec![], vec![QPoly::one()]];
    for n in 2..=max_n {
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k.wrapping_sub(1)).cloned().unwrap_or_else(QPoly::zero);
        let (_, hi) = Family::GammaA.k_range(n);
        let row = (1..=hi as usize)
            .map(|k| {
                let factor = &QPoly::one() + &QPoly::q_pow(k - 1);
                &(&q_int::<Int>(k) * &at(k)) + &(&(&factor * &q_int::<Int>(n + 2 - 2 * k)) * &at(k - 1))
            })
            .collect();
        rows.push(row);
    }
    rows.truncate(max_n + 1);
    rows
}

/// `prod_{i=1}^{n} (1 + q^i)`.
fn one_plus_q_powers(n: usize) -> QPoly {
    (1..=n).map(|i| &QPoly::one() + &QPoly::q_pow(i)).product()
}

/// `d_n(q) = T_{2n+1}(q) / ((1+q)(1+q^2)...(1+q^n))`.
pub fn d_poly(n: usize) -> Result<QPoly> {
    let t = q_tangent(n)?;
    t.exact_div(&one_plus_q_powers(n))?
        .ok_or_else(|| Error::NotDivisible { what: format!("T_{} by (1+q)...(1+q^{n})", 2 * n + 1) })
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

fn check_generic(q0: &Rat) -> Result<()> {
    if generic_point(q0) {
        Ok(())
    } else {
        Err(Error::Pole(format!("q = {q0} is excluded (0, 1 and -1 are poles of the identity)")))
    }
}

/// `f_n(q) = sum_{k=0}^{2n+1} C(2n+1, k) (-1)^k / (1 + q^{k-n})` at `q0`.
pub fn f_eval(n: usize, q0: &Rat) -> Result<Rat> {
    check_generic(q0)?;
    let m = 2 * n + 1;
    let mut acc = Rat::zero();
    for k in 0..=m {
        let den = Rat::one() + Laurent::<Int>::q_pow(k as i64 - n as i64).eval(q0)?;
        if den.is_zero() {
            return Err(Error::Pole(format!("1 + q^{} vanishes at q = {q0}", k as i64 - n as i64)));
        }
        let term = Rat::from_integer(binomial::<Int>(m, k)) / den;
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    Ok(acc)
}

/// `(-1)^{n+1} (-1; q)_{n+2} f_n(q) / (1 - q)^{2n+1}` at `q0`.
pub fn d_identity_rhs(n: usize, q0: &Rat) -> Result<Rat> {
    let f = f_eval(n, q0)?;
    let g = poch_num(&Laurent::from(QPoly::from_ints(&[-1])), n + 2, 1).eval(q0)?;
    let den = num_traits::pow::pow(rat(1) - q0, 2 * n + 1);
    let v = g * f / den;
    Ok(if n.is_multiple_of(2) { -v } else { v })
}

/// Compare `d_n` with the rational-function expression at `deg d_n + 1`
/// admissible points, which determines a polynomial of that degree.
pub fn verify_d_identity(n: usize) -> Result<bool> {
    let d = d_poly(n)?;
    let count = d.degree().map_or(1, |x| x + 1);
    for q0 in admissible_points(count, |x| f_eval(n, x).is_ok()) {
        if d.eval(&q0) != d_identity_rhs(n, &q0)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `A_{2n}(t, q) / (1 + t q^n)`, required to have nonnegative polynomial
/// coefficients.
pub fn even_quotient(n: usize) -> Result<TQPoly> {
    if n == 0 {
        return Err(Error::OutOfRange("even quotient needs n >= 1".into()));
    }
    let a = carlitz_poly::<Int>(2 * n);
    let div = BiPoly::from_polys([QPoly::one(), QPoly::q_pow(n)]);
    let quot =
        a.exact_div(&div)?.ok_or_else(|| Error::NotDivisible { what: format!("A_{}(t,q) by 1 + t q^{n}", 2 * n) })?;
    let what = format!("A_{}(t,q)/(1+tq^{n})", 2 * n);
    for c in quot.terms() {
        if c.offset() < 0 {
            return Err(Error::NotPolynomial { what, offset: c.offset() });
        }
        if c.base().coeffs().iter().any(|x| x.is_negative()) {
            return Err(Error::NegativeCoefficient { what });
        }
    }
    Ok(quot)
}
