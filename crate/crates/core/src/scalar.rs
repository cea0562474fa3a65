//! Coefficient rings.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// A commutative ring usable as polynomial coefficients.
///
/// Division is only ever used through [`Coeff::div_exact`], so integer types
/// (where `/` truncates) and fields both work.
pub trait Coeff:
    Clone + Debug + PartialEq + PartialOrd + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
    /// `self / rhs` when the quotient is exact in this ring.
    fn exact_quotient(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let quot = self.clone() / rhs.clone();
        if quot.clone() * rhs.clone() == *self {
            Some(quot)
        } else {
            None
        }
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every coefficient ring contains the integers")
    }
}

impl<T> Coeff for T where T: Clone + Debug + PartialEq + PartialOrd + Num + Neg<Output = T> + FromPrimitive + Send + Sync
{}
