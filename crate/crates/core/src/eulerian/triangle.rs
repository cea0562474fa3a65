use std::fmt;

use crate::qring::{q_int, q_int_step, Poly};
use crate::scalar::Coeff;

/// Which doubly-indexed family a [`Triangle`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Carlitz q-Eulerian coefficients `A_{n,k}(q)`, `1 <= k <= n`.
    CarlitzA,
    /// Type-B q-Eulerian coefficients `B_{n,k}(q)`, `0 <= k <= n`.
    TypeB,
    /// Gamma coefficients `a_{n,k}(q)`, `1 <= k <= floor((n+1)/2)`.
    GammaA,
    /// Gamma coefficients `b_{n,k}(q)`, `0 <= k <= floor(n/2)`.
    GammaB,
}

impl Family {
    /// Inclusive `k` range stored for row `n`; empty when `lo > hi`.
    pub fn k_range(self, n: usize) -> (i64, i64) {
        let n = n as i64;
        match self {
            Family::CarlitzA => (1, n),
            Family::TypeB => (0, n),
            Family::GammaA => (1, (n + 1) / 2),
            Family::GammaB => (0, n / 2),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::CarlitzA => "A",
            Family::TypeB => "B",
            Family::GammaA => "a",
            Family::GammaB => "b",
        }
    }

    fn first_row(self) -> usize {
        match self {
            Family::CarlitzA | Family::GammaA => 1,
            Family::TypeB | Family::GammaB => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Rows `0..=max_n` of one family, built by its recurrence.
///
/// Only in-range entries are stored; [`Triangle::entry`] returns zero
/// outside the range so recurrences need no boundary cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle<C> {
    family: Family,
    rows: Vec<Vec<Poly<C>>>,
}

impl<C: Coeff> Triangle<C> {
    /// Empty triangle with only the initial condition in place.
    pub fn new(family: Family) -> Self {
        let first = match family {
            Family::CarlitzA | Family::GammaA => vec![vec![], vec![Poly::one()]],
            Family::TypeB | Family::GammaB => vec![vec![Poly::one()]],
        };
        Triangle { family, rows: first }
    }

    pub fn build(family: Family, max_n: usize) -> Self {
        let mut t = Self::new(family);
        t.extend_to(max_n);
        t
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Materialize rows up to `n`.
    pub fn extend_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let row = self.next_row(self.rows.len());
            self.rows.push(row);
        }
    }

    /// Entries of row `n` in ascending `k`, starting at `k_range(n).0`.
    pub fn row(&self, n: usize) -> &[Poly<C>] {
        &self.rows[n]
    }

    /// `(k, entry)` pairs of row `n`.
    pub fn row_entries(&self, n: usize) -> impl Iterator<Item = (i64, &Poly<C>)> {
        let (lo, _) = self.family.k_range(n);
        self.rows[n].iter().enumerate().map(move |(i, p)| (lo + i as i64, p))
    }

    /// Rows that carry data, i.e. `n >= 1` for type A families.
    pub fn row_indices(&self) -> std::ops::RangeInclusive<usize> {
        self.family.first_row()..=self.max_n()
    }

    pub fn get(&self, n: usize, k: i64) -> Option<&Poly<C>> {
        let (lo, hi) = self.family.k_range(n);
        if k < lo || k > hi {
            return None;
        }
        self.rows.get(n).map(|r| &r[(k - lo) as usize])
    }

    /// The entry, or zero outside the stored range.
    ///
    /// Panics if row `n` has not been built.
    pub fn entry(&self, n: usize, k: i64) -> Poly<C> {
        assert!(n <= self.max_n(), "row {n} of family {} not built", self.family);
        self.get(n, k).cloned().unwrap_or_else(Poly::zero)
    }

    /// Every row evaluated at `q = 1`.
    pub fn at_q_one(&self) -> Vec<Vec<C>> {
        self.rows.iter().map(|r| r.iter().map(Poly::at_one).collect()).collect()
    }

    fn next_row(&self, n: usize) -> Vec<Poly<C>> {
        let (lo, hi) = self.family.k_range(n);
        (lo..=hi).map(|k| self.recurrence(n, k)).collect()
    }

    fn recurrence(&self, n: usize, k: i64) -> Poly<C> {
        let prev = |kk: i64| self.entry(n - 1, kk);
        let ku = k as usize;
        let nn = n as i64;
        match self.family {
            Family::CarlitzA => {
                // A_{n,k} = [k] A_{n-1,k} + q^{k-1} [n+1-k] A_{n-1,k-1}
                let left = &q_int(ku) * &prev(k);
                let right = (&q_int((nn + 1 - k) as usize) * &prev(k - 1)).shift(ku - 1);
                &left + &right
            }
            Family::GammaA => {
                // a_{n,k} = [k] a_{n-1,k} + (1 + q^{k-1}) q^{k-1} [n+2-2k] a_{n-1,k-1}
                let left = &q_int(ku) * &prev(k);
                let factor = &Poly::one() + &Poly::q_pow(ku - 1);
                let right = (&(&factor * &q_int((nn + 2 - 2 * k) as usize)) * &prev(k - 1)).shift(ku - 1);
                &left + &right
            }
            Family::TypeB => {
                // B_{n,k} = [2k+1] B_{n-1,k} + q^{2k-1} [2n-2k+1] B_{n-1,k-1}
                let left = &q_int(2 * ku + 1) * &prev(k);
                if k == 0 {
                    return left;
                }
                let right = (&q_int((2 * nn - 2 * k + 1) as usize) * &prev(k - 1)).shift(2 * ku - 1);
                &left + &right
            }
            Family::GammaB => {
                // b_{n,k} = [2k+1] b_{n-1,k}
                //         + (1+q)(1+q^{2k-1}) q^{2k-1} [n+1-2k]_{q^2} b_{n-1,k-1}
                let left = &q_int(2 * ku + 1) * &prev(k);
                if k == 0 {
                    return left;
                }
                let factor = &Poly::from_ints(&[1, 1]) * &(&Poly::one() + &Poly::q_pow(2 * ku - 1));
                let bracket = q_int_step((nn + 1 - 2 * k) as usize, 2);
                let right = (&(&factor * &bracket) * &prev(k - 1)).shift(2 * ku - 1);
                &left + &right
            }
        }
    }
}
