//! Verification suites. Each item is an exact check; items within a suite
//! run in parallel and are reported in index order.

use std::time::Instant;

use rayon::prelude::*;

use crate::render::poly_text;
use crate::report::{Item, Report, Status};
use qeuler_core::doubloon::interlaced_census;
use qeuler_core::eulerian::brackets::{bracket_failures_a, bracket_failures_b};
use qeuler_core::eulerian::classical::classical_gamma_a;
use qeuler_core::eulerian::type_a::{basis_change_a_with, carlitz_poly_from, gamma_expand_a_from};
use qeuler_core::eulerian::type_b::{basis_change_b_with, gamma_expand_b_from, type_b_poly_from};
use qeuler_core::eulerian::*;
use qeuler_core::qring::{is_nonneg, QBinomials};
use qeuler_core::special::*;
use qeuler_core::unimodality::*;
use qeuler_core::{Family, Int, QLaurent, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    ExpansionA,
    ExpansionB,
    Series,
    Tangent,
    Secant,
    Doubloon,
    Reciprocity,
    Monotone,
    Brackets,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::ExpansionA,
        Suite::ExpansionB,
        Suite::Series,
        Suite::Tangent,
        Suite::Secant,
        Suite::Doubloon,
        Suite::Reciprocity,
        Suite::Monotone,
        Suite::Brackets,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ExpansionA => "expansionA",
            Suite::ExpansionB => "expansionB",
            Suite::Series => "series",
            Suite::Tangent => "tangent",
            Suite::Secant => "secant",
            Suite::Doubloon => "doubloon",
            Suite::Reciprocity => "reciprocity",
            Suite::Monotone => "monotone",
            Suite::Brackets => "brackets",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::ExpansionA | Suite::ExpansionB => 14,
            Suite::Series => 10,
            Suite::Tangent => 6,
            Suite::Secant => 5,
            Suite::Doubloon => 3,
            Suite::Reciprocity | Suite::Brackets => 12,
            Suite::Monotone => 10,
        }
    }
}

pub fn default_points() -> Vec<Rat> {
    [(3, 2), (2, 1), (7, 3), (5, 1), (1, 2), (2, 3)]
        .iter()
        .map(|&(a, b)| Rat::new(Int::from(a), Int::from(b)))
        .collect()
}

pub struct Options {
    pub max_n: usize,
    pub points: Vec<Rat>,
    /// Largest doubloon order enumerated without complaint.
    pub doubloon_limit: usize,
}

pub fn run(suite: Suite, opts: &Options) -> Report {
    let start = Instant::now();
    let n = opts.max_n;
    let items = match suite {
        Suite::ExpansionA => expansion_a(n),
        Suite::ExpansionB => expansion_b(n),
        Suite::Series => series(n),
        Suite::Tangent => tangent(n),
        Suite::Secant => secant(n),
        Suite::Doubloon => doubloon(n, opts.doubloon_limit),
        Suite::Reciprocity => reciprocity(n),
        Suite::Monotone => monotone(n, &opts.points),
        Suite::Brackets => brackets(n),
    };
    Report::new(suite.name(), items, start.elapsed())
}

fn per_n<F>(range: std::ops::RangeInclusive<usize>, f: F) -> Vec<Item>
where
    F: Fn(usize) -> Vec<Item> + Sync + Send,
{
    let range: Vec<usize> = range.collect();
    range.into_par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

fn expansion_a(max_n: usize) -> Vec<Item> {
    let big = carlitz_triangle::<Int>(max_n);
    let gamma = gamma_a_triangle::<Int>(max_n);
    per_n(1..=max_n, |n| {
        let target = carlitz_poly_from(&big, n);
        let mut binoms = QBinomials::new();
        let bad: Vec<usize> =
            (1..=n).filter(|&k| basis_change_a_with(&gamma, &mut binoms, n, k) != big.entry(n, k as i64)).collect();
        vec![
            Item::check(format!("gamma expansion n={n}"), gamma_expand_a_from(&gamma, n) == target, ""),
            Item::check(format!("basis change n={n}"), bad.is_empty(), mismatch_detail(n, &bad)),
        ]
    })
}

fn expansion_b(max_n: usize) -> Vec<Item> {
    let big = type_b_triangle::<Int>(max_n);
    let gamma = gamma_b_triangle::<Int>(max_n);
    per_n(1..=max_n, |n| {
        let target = type_b_poly_from(&big, n);
        let mut binoms = QBinomials::new();
        let bad: Vec<usize> =
            (0..=n).filter(|&k| basis_change_b_with(&gamma, &mut binoms, n, k) != big.entry(n, k as i64)).collect();
        vec![
            Item::check(format!("gamma expansion n={n}"), gamma_expand_b_from(&gamma, n) == target, ""),
            Item::check(format!("basis change n={n}"), bad.is_empty(), mismatch_detail(n, &bad)),
        ]
    })
}

fn mismatch_detail(n: usize, bad: &[usize]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("mismatched k in row {n}: {bad:?}")
    }
}

fn series(max_n: usize) -> Vec<Item> {
    per_n(1..=max_n, |n| {
        let window = (2 * n).max(n + 1);
        vec![
            Item::from_result(
                format!("carlitz series n={n}"),
                carlitz_series_oracle::<Int>(n, window)
                    .map(|s| (s == carlitz_poly::<Int>(n), format!("window {window}"))),
            ),
            Item::from_result(
                format!("type B series n={n}"),
                type_b_series_oracle::<Int>(n, window)
                    .map(|s| (s == type_b_poly::<Int>(n), format!("window {window}"))),
            ),
        ]
    })
}

fn tangent(max_n: usize) -> Vec<Item> {
    let ints = classical_gamma_a::<Int>(2 * max_n + 1);
    per_n(0..=max_n, |n| {
        let mut items = vec![Item::from_result(
            format!("T_{} = a*({},{})", 2 * n + 1, 2 * n + 1, n + 1),
            q_tangent(n).and_then(|t| {
                let star = a_star(2 * n + 1, n + 1)?;
                let at_one = t.at_one();
                let ok = t == star && at_one == ints[2 * n + 1][n];
                Ok((ok, format!("T(1) = {at_one}; {}", poly_text(&t))))
            }),
        )];
        if n >= 1 {
            items.push(Item::from_result(
                format!("A_{}(t,q) / (1 + tq^{n})", 2 * n),
                even_quotient(n).map(|quot| {
                    let ok = quot.to_polys().is_some_and(|ps| ps.iter().all(is_nonneg));
                    (ok, format!("t-degree {}", quot.degree().unwrap_or(0)))
                }),
            ));
            items.push(Item::from_result(format!("d_{n} in N[q]"), d_poly(n).map(|d| (is_nonneg(&d), poly_text(&d)))));
            items.push(Item::from_result(
                format!("d_{n} rational identity"),
                verify_d_identity(n).map(|ok| (ok, String::new())),
            ));
        }
        items
    })
}

fn secant(max_n: usize) -> Vec<Item> {
    let gamma = gamma_b_triangle::<Int>(2 * max_n);
    let secants = secant_numbers(max_n);
    per_n(0..=max_n, |n| {
        let central = gamma.entry(2 * n, n as i64);
        vec![
            Item::check(format!("B_{}(-q^-{}) = 0", 2 * n + 1, 2 * n + 1), b_odd_vanish(n), ""),
            Item::from_result(format!("central value n={n}"), b_central(n).map(|c| (c == central, String::new()))),
            Item::from_result(
                format!("E*_{} q^{} = b({},{n})", 2 * n, n * n, 2 * n),
                e_star(n).map(|e| {
                    (QLaurent::from(e).shift((n * n) as i64) == QLaurent::from(central.clone()), String::new())
                }),
            ),
            Item::from_result(
                format!("G*_{}(1) = E_{}", 2 * n, 2 * n),
                g_star(n).map(|g| {
                    let v = g.at_one();
                    (v == secants[n], format!("{v}; {}", poly_text(&g)))
                }),
            ),
            Item::from_result(
                format!("G*_{} rational identity", 2 * n),
                verify_gstar_identity(n).map(|ok| (ok, String::new())),
            ),
        ]
    })
}

fn doubloon(max_n: usize, limit: usize) -> Vec<Item> {
    let gamma = gamma_a_triangle::<Int>(2 * max_n + 1);
    per_n(1..=max_n, |n| {
        vec![Item::from_result(
            format!("interlaced doubloons n={n}"),
            interlaced_census(n, limit).map(|(count, gf)| {
                let ok = gf == gamma.entry(2 * n + 1, n as i64 + 1);
                (ok, format!("{count} interlaced; {}", poly_text(&gf)))
            }),
        )]
    })
}

fn reciprocity(max_n: usize) -> Vec<Item> {
    let mut items = per_n(0..=max_n, |n| {
        let mut v = Vec::new();
        if n >= 1 {
            v.push(Item::check(format!("type A n={n}"), reciprocity_a(n), ""));
        }
        v.push(Item::check(format!("type B n={n}"), reciprocity_b(n), ""));
        v
    });
    if max_n >= 1 {
        for fam in [Family::CarlitzA, Family::TypeB] {
            items.push(Item::from_result(
                format!("q=1 rows of {fam} symmetric and unimodal"),
                q1_unimodality(fam, max_n).map(|ok| (ok, format!("n <= {max_n}"))),
            ));
        }
    }
    items
}

fn monotone(max_n: usize, points: &[Rat]) -> Vec<Item> {
    per_n(2..=max_n, |n| {
        let mut v = Vec::new();
        for q0 in points {
            v.push(Item::from_result(
                format!("type A n={n} q={q0}"),
                monotone_check_a(n, q0).map(|ok| (ok, String::new())),
            ));
            v.push(Item::from_result(
                format!("type B n={n} q={q0}"),
                monotone_check_b(n, q0).map(|ok| (ok, String::new())),
            ));
            let uni = row_unimodal_at(Family::TypeB, n, q0);
            v.push(Item::new(
                format!("type B row n={n} q={q0}"),
                Status::Reported,
                if uni { "unimodal" } else { "not unimodal" },
            ));
        }
        v
    })
}

fn brackets(max_n: usize) -> Vec<Item> {
    let m = max_n as i64;
    let (a, b) = rayon::join(|| bracket_failures_a::<Int>(m), || bracket_failures_b::<Int>(m));
    let detail = |bad: &Vec<(i64, i64, i64)>| {
        if bad.is_empty() {
            format!("all triples with n <= {max_n}")
        } else {
            format!("failing (n,k,s): {bad:?}")
        }
    };
    vec![
        Item::check("type A bracket identity", a.is_empty(), detail(&a)),
        Item::check("type B bracket identity", b.is_empty(), detail(&b)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(max_n: usize) -> Options {
        Options { max_n, points: default_points(), doubloon_limit: 3 }
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let r = run(s, &opts(3));
            assert!(r.passed(), "{}", r.text());
        }
    }

    #[test]
    fn doubloon_limit_is_enforced() {
        let r = run(Suite::Doubloon, &Options { max_n: 2, points: vec![], doubloon_limit: 1 });
        assert!(!r.passed());
        assert_eq!(r.counters.fail, 1);
    }
}
