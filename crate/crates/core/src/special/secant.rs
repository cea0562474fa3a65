//! Type-B substitutions: vanishing at `t = -q^{-2n-1}`, the q-secant
//! families `E*_{2n}`, `G*_{2n}` and `E_{2n}(q)`.

use num_traits::{One, Zero};

use super::points::{admissible_points, generic_point};
use crate::error::{Error, Result};
use crate::eulerian::classical::classical_eulerian_b;
use crate::eulerian::type_b_poly;
use crate::qring::{binomial, poch_num, Laurent, Sign};
use crate::{Int, QLaurent, QPoly, Rat};

fn b_at_minus_q_power(n: usize, e: i64) -> QLaurent {
    type_b_poly::<Int>(n).subst_t_signed_power(Sign::Minus, e)
}

fn signed(n: usize, v: QLaurent) -> QLaurent {
    if n % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `B_{2n+1}(-q^{-2n-1}, q) == 0`.
pub fn b_odd_vanish(n: usize) -> bool {
    b_at_minus_q_power(2 * n + 1, -(2 * n as i64 + 1)).is_zero()
}

/// `(-1)^n q^{n(2n+1)} B_{2n}(-q^{-2n-1}, q)`, which equals `b_{2n,n}(q)`.
pub fn b_central(n: usize) -> Result<QPoly> {
    let v = b_at_minus_q_power(2 * n, -(2 * n as i64 + 1)).shift((n * (2 * n + 1)) as i64);
    signed(n, v).into_poly(&format!("central value for n = {n}"))
}

/// `E*_{2n}(q) = (-1)^n q^{n(n+1)} B_{2n}(-q^{-2n-1}, q)`.
pub fn e_star(n: usize) -> Result<QPoly> {
    let v = b_at_minus_q_power(2 * n, -(2 * n as i64 + 1)).shift((n * (n + 1)) as i64);
    signed(n, v).into_poly(&format!("E*_{}", 2 * n))
}

/// `(1+q)(1+q^3)...(1+q^{2n-1}) (1+q)^n`.
fn g_star_divisor(n: usize) -> QPoly {
    let odd = poch_num(&Laurent::monomial(-Int::one(), 1), n, 2);
    let odd = odd.to_poly().expect("product of polynomials");
    &odd * &QPoly::from_ints(&[1, 1]).pow(n as u32)
}

/// `G*_{2n}(q) = E*_{2n}(q) / ((1+q)(1+q^3)...(1+q^{2n-1}) (1+q)^n)`.
pub fn g_star(n: usize) -> Result<QPoly> {
    e_star(n)?
        .exact_div(&g_star_divisor(n))?
        .ok_or_else(|| Error::NotDivisible { what: format!("E*_{} by its secant divisor", 2 * n) })
}

/// `E_{2n}(q) = (-1)^n q^{n^2} B_{2n}(-q^{-2n}, q)`.
pub fn e_q_secant(n: usize) -> QLaurent {
    let v = b_at_minus_q_power(2 * n, -(2 * n as i64)).shift((n * n) as i64);
    signed(n, v)
}

/// Secant numbers `E_0, E_2, ..., E_{2 max_n}` from the type-B Eulerian
/// numbers: `B_{2n}(-1) = (-1)^n 4^n E_{2n}` at `q = 1`.
pub fn secant_numbers(max_n: usize) -> Vec<Int> {
    let rows = classical_eulerian_b::<Int>(2 * max_n);
    (0..=max_n)
        .map(|n| {
            let alt: Int =
                rows[2 * n].iter().enumerate().map(|(k, b)| if k % 2 == 0 { b.clone() } else { -b.clone() }).sum();
            let alt = if n % 2 == 1 { -alt } else { alt };
            let four_n = num_traits::pow::pow(Int::from(4), n);
            let (e, r) = num_integer::Integer::div_rem(&alt, &four_n);
            assert!(r.is_zero(), "B_{}(-1) is divisible by 4^{n}", 2 * n);
            e
        })
        .collect()
}

/// `f*_n(q) = sum_{k=0}^{2n} C(2n, k) (-q)^k / (1 + q^{2k-2n-1})` at `q0`.
pub fn f_star_eval(n: usize, q0: &Rat) -> Result<Rat> {
    if !generic_point(q0) {
        return Err(Error::Pole(format!("q = {q0} is excluded (0, 1 and -1 are poles of the identity)")));
    }
    let mut acc = Rat::zero();
    for k in 0..=2 * n {
        let e = 2 * k as i64 - 2 * n as i64 - 1;
        let den = Rat::one() + Laurent::<Int>::q_pow(e).eval(q0)?;
        if den.is_zero() {
            return Err(Error::Pole(format!("1 + q^{e} vanishes at q = {q0}")));
        }
        let num = Rat::from_integer(binomial::<Int>(2 * n, k)) * num_traits::pow::pow(-q0.clone(), k);
        acc += num / den;
    }
    Ok(acc)
}

/// `(-1)^n q^{-n-1} (-q; q^2)_{n+1} f*_n(q) / ((1+q)^n (1-q)^{2n})` at `q0`.
pub fn g_star_rhs(n: usize, q0: &Rat) -> Result<Rat> {
    let f = f_star_eval(n, q0)?;
    let poch = poch_num(&Laurent::monomial(-Int::one(), 1), n + 1, 2).eval(q0)?;
    let pre = Laurent::<Int>::q_pow(-(n as i64) - 1).eval(q0)?;
    let one = Rat::one();
    let den = num_traits::pow::pow(&one + q0, n) * num_traits::pow::pow(&one - q0, 2 * n);
    let v = pre * poch * f / den;
    Ok(if n % 2 == 1 { -v } else { v })
}

/// Compare `G*_{2n}` with its rational-function expression at
/// `deg G* + 1` admissible points.
pub fn verify_gstar_identity(n: usize) -> Result<bool> {
    let g = g_star(n)?;
    let count = g.degree().map_or(1, |d| d + 1);
    for q0 in admissible_points(count, |x| f_star_eval(n, x).is_ok()) {
        if g.eval(&q0) != g_star_rhs(n, &q0)? {
            return Ok(false);
        }
    }
    Ok(true)
}
