use super::{Laurent, Poly};
use crate::scalar::Coeff;

/// All coefficients are `>= 0`.
pub fn is_nonneg<C: Coeff>(p: &Poly<C>) -> bool {
    p.coeffs().iter().all(|c| *c >= C::zero())
}

pub fn is_nonneg_laurent<C: Coeff>(p: &Laurent<C>) -> bool {
    is_nonneg(p.base())
}

/// The coefficient sequence from the lowest to the highest nonzero term reads
/// the same backwards.
pub fn is_palindromic<C: Coeff>(p: &Poly<C>) -> bool {
    let Some(low) = p.valuation() else {
        return true;
    };
    let c = &p.coeffs()[low..];
    c.iter().eq(c.iter().rev())
}

/// `coeff(i) == coeff(twice_center - i)` for every `i`, i.e. symmetric about
/// `q^{twice_center / 2}`.
pub fn is_palindromic_about<C: Coeff>(p: &Poly<C>, twice_center: usize) -> bool {
    match p.degree() {
        None => true,
        Some(d) if d > twice_center => false,
        Some(_) => (0..=twice_center).all(|i| p.coeff(i) == p.coeff(twice_center - i)),
    }
}

/// Weakly increasing up to some peak, then weakly decreasing.
pub fn is_unimodal_ints<C: PartialOrd>(s: &[C]) -> bool {
    let mut i = 1;
    while i < s.len() && s[i - 1] <= s[i] {
        i += 1;
    }
    while i < s.len() && s[i - 1] >= s[i] {
        i += 1;
    }
    i >= s.len()
}

pub fn is_symmetric_seq<C: PartialEq>(s: &[C]) -> bool {
    s.iter().eq(s.iter().rev())
}
