//! q-integers, Gaussian binomials and finite q-Pochhammer products.

use super::{BiPoly, Laurent, Poly, Sign};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn q_int<C: Coeff>(n: usize) -> Poly<C> {
    Poly::new(vec![C::one(); n])
}

/// [`q_int`] for a signed argument, rejecting negatives.
pub fn try_q_int<C: Coeff>(n: i64) -> Result<Poly<C>> {
    usize::try_from(n).map(q_int).map_err(|_| Error::NegativeArgument { what: "q-integer argument", value: n })
}

/// `[n]_{q^step}`.
pub fn q_int_step<C: Coeff>(n: usize, step: usize) -> Poly<C> {
    q_int::<C>(n).subst_power(step)
}

/// `[m]_q = (1 - q^m)/(1 - q)` for any integer `m`.
///
/// For negative `m` this is the Laurent polynomial `-q^m [-m]_q`.
pub fn q_int_laurent<C: Coeff>(m: i64) -> Laurent<C> {
    if m >= 0 {
        Laurent::from(q_int::<C>(m as usize))
    } else {
        -Laurent::new(q_int::<C>(m.unsigned_abs() as usize), m)
    }
}

/// Pascal triangle of Gaussian binomials, filled on demand.
///
/// Uses `[n, k] = [n-1, k-1] + q^k [n-1, k]`, so no division is needed.
#[derive(Clone, Debug)]
pub struct QBinomials<C> {
    rows: Vec<Vec<Poly<C>>>,
}

impl<C: Coeff> QBinomials<C> {
    pub fn new() -> Self {
        QBinomials { rows: vec![vec![Poly::one()]] }
    }

    fn fill(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 is always present");
            let m = prev.len();
            let mut row = Vec::with_capacity(m + 1);
            row.push(Poly::one());
            for k in 1..m {
                row.push(&prev[k - 1] + &prev[k].shift(k));
            }
            row.push(Poly::one());
            self.rows.push(row);
        }
    }

    /// `[n choose k]_q`, zero when `k < 0` or `k > n`.
    pub fn get(&mut self, n: usize, k: i64) -> Poly<C> {
        if k < 0 || k as usize > n {
            return Poly::zero();
        }
        self.fill(n);
        self.rows[n][k as usize].clone()
    }
}

impl<C: Coeff> Default for QBinomials<C> {
    fn default() -> Self {
        Self::new()
    }
}

/// `[n choose k]_q`.
pub fn q_binom<C: Coeff>(n: usize, k: i64) -> Poly<C> {
    QBinomials::new().get(n, k)
}

/// `[n choose k]_q` through `(q;q)_n / ((q;q)_k (q;q)_{n-k})`.
pub fn q_binom_by_division<C: Coeff>(n: usize, k: i64) -> Poly<C> {
    if k < 0 || k as usize > n {
        return Poly::zero();
    }
    let k = k as usize;
    let qfact = |m: usize| -> Poly<C> { (1..=m).map(|j| &Poly::one() - &Poly::q_pow(j)).product() };
    let den = &qfact(k) * &qfact(n - k);
    qfact(n).exact_div(&den).expect("nonzero divisor").expect("q-factorial quotient is a polynomial")
}

/// `(sign * t * q^{k_exp}; q^step)_m = prod_{j<m} (1 - sign * t * q^{k_exp + step*j})`.
pub fn poch_t<C: Coeff>(k_exp: i64, m: usize, sign: Sign, step: usize) -> BiPoly<C> {
    (0..m)
        .map(|j| {
            let c = Laurent::monomial(sign.apply(-C::one()), k_exp + (step * j) as i64);
            BiPoly::new(vec![Laurent::one(), c])
        })
        .product()
}

/// `(a; q^step)_m = prod_{j<m} (1 - a q^{step*j})`.
pub fn poch_num<C: Coeff>(a: &Laurent<C>, m: usize, step: usize) -> Laurent<C> {
    (0..m).map(|j| &Laurent::one() - &a.shift((step * j) as i64)).product()
}
