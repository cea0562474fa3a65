//! Exact arithmetic kernel: dense polynomials in `q`, Laurent polynomials,
//! polynomials in `t` over those, and the q-analogue building blocks.

mod bivar;
mod laurent;
mod poly;
pub mod predicates;
pub mod qcomb;

pub use bivar::{BiPoly, Sign};
pub use laurent::Laurent;
pub use poly::Poly;
pub use predicates::{is_nonneg, is_palindromic, is_unimodal_ints};
pub use qcomb::{poch_num, poch_t, q_binom, q_int, q_int_laurent, q_int_step, try_q_int, QBinomials};

/// `p(1/q)` as a Laurent polynomial.
pub fn subst_q_recip<C: crate::Coeff>(p: &Poly<C>) -> Laurent<C> {
    Laurent::from(p.clone()).recip()
}

/// Integer binomial coefficient.
pub fn binomial<C: crate::Coeff>(n: usize, k: usize) -> C {
    if k > n {
        return C::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(C::one(), |acc, i| {
        (acc * C::from_int((n - i) as i64)).exact_quotient(&C::from_int((i + 1) as i64)).expect("exact")
    })
}
