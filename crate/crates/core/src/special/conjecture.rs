//! Evidence scan for the positivity of the coefficients of `G*_{2n}(q)`.
//!
//! A counterexample is data, not an error: the scan records it and moves on.

use super::secant::{g_star, secant_numbers};
use crate::error::Result;
use crate::qring::is_palindromic;
use crate::{Int, QPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    /// First coefficient that is not strictly positive.
    Counterexample {
        exponent: usize,
        coeff: Int,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GStarRow {
    pub n: usize,
    pub poly: QPoly,
    pub degree: usize,
    pub min_coeff: Int,
    /// Recorded only; not a claimed property.
    pub palindromic: bool,
    pub value_at_one: Int,
    /// `E_{2n}` computed independently at `q = 1`.
    pub secant: Int,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub rows: Vec<GStarRow>,
}

impl ConjectureReport {
    pub fn is_consistent(&self) -> bool {
        self.rows.iter().all(|r| r.verdict == Verdict::Consistent)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &GStarRow> {
        self.rows.iter().filter(|r| r.verdict != Verdict::Consistent)
    }
}

fn scan_row(n: usize, poly: QPoly, secant: Int) -> GStarRow {
    let degree = poly.degree().unwrap_or(0);
    let min_coeff = poly.coeffs().iter().min().cloned().unwrap_or_default();
    let verdict = match poly.coeffs().iter().position(|c| *c <= Int::default()) {
        Some(i) => Verdict::Counterexample { exponent: i, coeff: poly.coeff(i) },
        None if poly.is_zero() => Verdict::Counterexample { exponent: 0, coeff: Int::default() },
        None => Verdict::Consistent,
    };
    GStarRow {
        n,
        degree,
        min_coeff,
        palindromic: is_palindromic(&poly),
        value_at_one: poly.at_one(),
        secant,
        verdict,
        poly,
    }
}

/// `G*_0, ..., G*_{2 max_n}` with per-row statistics.
///
/// Errors only if some `G*_{2n}` fails to exist as a polynomial.
pub fn conjecture_scan_gstar(max_n: usize) -> Result<ConjectureReport> {
    let secants = secant_numbers(max_n);
    let rows = (0..=max_n).zip(secants).map(|(n, e)| Ok(scan_row(n, g_star(n)?, e))).collect::<Result<Vec<_>>>()?;
    Ok(ConjectureReport { rows })
}
