//! Brute-force doubloon model for the central coefficients `a_{2n+1,n+1}(q)`.
//!
//! A doubloon of order `2n+1` is a `2 x (n+1)` array holding each of
//! `0, 1, ..., 2n+1` once. Doubloons here are rooted: the top-left cell is
//! always `0`. Without rooting the order-3 count is 8 instead of
//! `a_{3,2}(1) = 2`.

use crate::error::{Error, Result};
use crate::QPoly;

/// Largest `n` enumerated unless the caller raises the limit.
pub const DEFAULT_MAX_N: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Doubloon {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl Doubloon {
    /// Validates that `top` and `bottom` have equal length `n+1`, together
    /// hold `0..=2n+1`, and that `top[0] == 0`.
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if top.is_empty() || top.len() != bottom.len() {
            return Err(Error::OutOfRange("doubloon rows must be nonempty and of equal length".into()));
        }
        let size = 2 * top.len();
        let mut seen = vec![false; size];
        for &v in top.iter().chain(&bottom) {
            let slot =
                seen.get_mut(v as usize).ok_or_else(|| Error::OutOfRange(format!("entry {v} exceeds {}", size - 1)))?;
            if *slot {
                return Err(Error::OutOfRange(format!("entry {v} repeated")));
            }
            *slot = true;
        }
        if top[0] != 0 {
            return Err(Error::OutOfRange("doubloons are rooted at a_0 = 0".into()));
        }
        Ok(Doubloon { top, bottom })
    }

    /// `n` for a doubloon of order `2n+1`.
    pub fn n(&self) -> usize {
        self.top.len() - 1
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// `a_0 ... a_n b_n ... b_0`.
    pub fn reading_word(&self) -> Vec<u32> {
        self.top.iter().chain(self.bottom.iter().rev()).copied().collect()
    }

    pub fn cmaj_prime(&self) -> i64 {
        cmaj_prime_parts(&self.top, &self.bottom)
    }

    pub fn is_interlaced(&self) -> bool {
        interlaced_parts(&self.top, &self.bottom)
    }
}

/// Descent positions `i` (1-based) with `w_i > w_{i+1}`.
fn descents<T: PartialOrd>(w: &[T]) -> impl Iterator<Item = usize> + '_ {
    w.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1)
}

pub fn word_des<T: PartialOrd>(w: &[T]) -> usize {
    descents(w).count()
}

pub fn word_maj<T: PartialOrd>(w: &[T]) -> usize {
    descents(w).sum()
}

fn cmaj_prime_parts(top: &[u32], bottom: &[u32]) -> i64 {
    let n = top.len() as i64 - 1;
    let mut maj = 0i64;
    let mut des = 0i64;
    let mut prev: Option<u32> = None;
    for (i, &x) in top.iter().chain(bottom.iter().rev()).enumerate() {
        if prev.is_some_and(|p| p > x) {
            maj += i as i64;
            des += 1;
        }
        prev = Some(x);
    }
    maj - (n + 1) * des + n * n
}

fn strictly_monotone(s: &[u32; 4]) -> bool {
    (s[0] < s[1] && s[1] < s[2] && s[2] < s[3]) || (s[0] > s[1] && s[1] > s[2] && s[2] > s[3])
}

/// Every quadruple `(a_{k-1}, a_k, b_{k-1}, b_k)` has a strictly monotone
/// cyclic rotation.
fn interlaced_parts(top: &[u32], bottom: &[u32]) -> bool {
    (1..top.len()).all(|k| {
        let quad = [top[k - 1], top[k], bottom[k - 1], bottom[k]];
        (0..4).any(|r| {
            let rot = [quad[r], quad[(r + 1) % 4], quad[(r + 2) % 4], quad[(r + 3) % 4]];
            strictly_monotone(&rot)
        })
    })
}

/// Advance to the next permutation in lexicographic order.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("v[i+1] > v[i]");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Visit every rooted doubloon of order `2n+1` whose cells
/// `a_1..a_n, b_0..b_n` are filled in lexicographic order.
fn for_each_doubloon(n: usize, mut visit: impl FnMut(&[u32], &[u32])) {
    let mut cells: Vec<u32> = (1..=2 * n as u32 + 1).collect();
    let mut top = vec![0u32; n + 1];
    loop {
        top[1..].copy_from_slice(&cells[..n]);
        visit(&top, &cells[n..]);
        if !next_permutation(&mut cells) {
            break;
        }
    }
}

/// Number of interlaced doubloons and their `cmaj'` generating function.
pub fn interlaced_census(n: usize, max_n: usize) -> Result<(u64, QPoly)> {
    if n > max_n {
        return Err(Error::Infeasible { n, limit: max_n });
    }
    let mut counts: Vec<i64> = Vec::new();
    let mut total = 0u64;
    let mut negative = false;
    for_each_doubloon(n, |top, bottom| {
        if interlaced_parts(top, bottom) {
            let c = cmaj_prime_parts(top, bottom);
            if c < 0 {
                negative = true;
                return;
            }
            let c = c as usize;
            if counts.len() <= c {
                counts.resize(c + 1, 0);
            }
            counts[c] += 1;
            total += 1;
        }
    });
    if negative {
        return Err(Error::OutOfRange(format!("negative cmaj' among interlaced doubloons of order {}", 2 * n + 1)));
    }
    Ok((total, QPoly::from_ints(&counts)))
}

/// `sum q^{cmaj'}` over interlaced doubloons of order `2n+1`, `n <= 4`.
pub fn interlaced_gf(n: usize) -> Result<QPoly> {
    interlaced_gf_with_limit(n, DEFAULT_MAX_N)
}

pub fn interlaced_gf_with_limit(n: usize, max_n: usize) -> Result<QPoly> {
    if n == 0 {
        return Err(Error::OutOfRange("interlaced doubloons need n >= 1".into()));
    }
    interlaced_census(n, max_n).map(|(_, gf)| gf)
}
