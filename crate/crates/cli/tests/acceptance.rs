//! The fourteen acceptance criteria, each with its own time budget.
//! Prints one `criterion N: PASS|FAIL` line per criterion and fails at the
//! end with a nonzero status if any criterion failed or ran over budget.

use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::pow;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use qeuler::render::Value;
use qeuler_core::doubloon::interlaced_census;
use qeuler_core::eulerian::brackets::{bracket_failures_a, bracket_failures_b};
use qeuler_core::eulerian::type_a::{basis_change_a_with, carlitz_poly_from, gamma_expand_a_from};
use qeuler_core::eulerian::type_b::{basis_change_b_with, gamma_expand_b_from, type_b_poly_from};
use qeuler_core::eulerian::*;
use qeuler_core::qring::{is_nonneg, q_binom, QBinomials};
use qeuler_core::special::*;
use qeuler_core::unimodality::*;
use qeuler_core::{BiPoly, Int, QLaurent, QPoly, Rat, TQPoly};

type Check = Result<(), String>;
type Criterion = (u32, fn() -> Check, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(c: &[i64]) -> QPoly {
    QPoly::from_ints(c)
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn rat(a: i64, b: i64) -> Rat {
    Rat::new(Int::from(a), Int::from(b))
}

/// `1 + t q^e`.
fn lin(e: usize) -> TQPoly {
    TQPoly::from_polys([QPoly::one(), QPoly::q_pow(e)])
}

fn t_pow(d: usize) -> TQPoly {
    BiPoly::monomial(QLaurent::one(), d)
}

fn c1() -> Check {
    let table_a: [&[i64]; 6] = [&[1], &[1], &[1, 2], &[1, 8], &[1, 22, 16], &[1, 52, 136]];
    let table_b: [&[i64]; 6] = [&[1], &[1, 4], &[1, 20], &[1, 72, 80], &[1, 232, 976], &[1, 716, 7664, 3904]];
    let a = gamma_a_triangle::<Int>(6).at_q_one();
    let b = gamma_b_triangle::<Int>(6).at_q_one();
    for n in 1..=6 {
        ensure(a[n] == ints(table_a[n - 1]), || format!("a row {n}: {:?}", a[n]))?;
        ensure(b[n] == ints(table_b[n - 1]), || format!("b row {n}: {:?}", b[n]))?;
    }
    let sum: Int = b[6].iter().enumerate().map(|(k, x)| x * pow(Int::from(2), 6 - 2 * k)).sum();
    ensure(sum == Int::from(46080), || format!("row sum {sum}"))
}

fn c2() -> Check {
    let one_q = p(&[1, 1]);
    let one_q2 = p(&[1, 0, 1]);
    let sq = &one_q * &one_q;
    let printed: Vec<(usize, i64, QPoly)> = vec![
        (1, 1, p(&[1])),
        (2, 1, p(&[1])),
        (3, 1, p(&[1])),
        (3, 2, p(&[0, 1, 1])),
        (4, 1, p(&[1])),
        (4, 2, &p(&[0, 2]) * &sq),
        (5, 1, p(&[1])),
        (5, 2, &(&p(&[0, 1]) * &one_q) * &p(&[3, 5, 3])),
        (5, 3, &(&p(&[0, 0, 0, 2]) * &sq) * &one_q2),
        (6, 1, p(&[1])),
        (6, 2, &(&p(&[0, 1]) * &sq) * &p(&[4, 5, 4])),
        (6, 3, &(&(&QPoly::q_pow(3) * &sq) * &one_q2) * &p(&[5, 7, 5])),
    ];
    let gamma = gamma_a_triangle::<Int>(6);
    for n in 1..=6 {
        ensure(gamma.row(n).len() == printed.iter().filter(|e| e.0 == n).count(), || format!("row {n} length"))?;
    }
    for (n, k, want) in printed {
        ensure(gamma.entry(n, k) == want, || format!("a({n},{k}) = {:?}", gamma.entry(n, k)))?;
    }
    let poch = |m: usize| (0..m).map(|j| lin(1 + 2 * j)).product::<TQPoly>();
    let coef = |c: &[i64]| TQPoly::from_polys([p(c)]);
    let displayed = [
        TQPoly::from_polys([p(&[1]), p(&[0, 1])]),
        &poch(2) + &(&coef(&[0, 1, 2, 1]) * &t_pow(1)),
        &poch(3) + &(&(&coef(&[0, 2, 5, 6, 5, 2]) * &t_pow(1)) * &lin(3)),
        &(&poch(4) + &(&(&coef(&[0, 3, 9, 15, 18, 15, 9, 3]) * &t_pow(1)) * &(&lin(3) * &lin(5))))
            + &(&coef(&[0, 0, 0, 0, 2, 7, 11, 13, 14, 13, 11, 7, 2]) * &t_pow(2)),
    ];
    for (i, want) in displayed.iter().enumerate() {
        let n = i + 1;
        ensure(type_b_poly::<Int>(n) == *want, || format!("B_{n}(t,q) differs from the displayed line"))?;
    }
    Ok(())
}

fn c3() -> Check {
    let big = carlitz_triangle::<Int>(14);
    let gamma = gamma_a_triangle::<Int>(14);
    let mut binoms = QBinomials::new();
    for n in 1..=14 {
        ensure(gamma_expand_a_from(&gamma, n) == carlitz_poly_from(&big, n), || format!("expansion n={n}"))?;
        for k in 1..=n {
            ensure(basis_change_a_with(&gamma, &mut binoms, n, k) == big.entry(n, k as i64), || format!("A({n},{k})"))?;
        }
    }
    Ok(())
}

fn c4() -> Check {
    let big = type_b_triangle::<Int>(14);
    let gamma = gamma_b_triangle::<Int>(14);
    let mut binoms = QBinomials::new();
    for n in 1..=14 {
        ensure(gamma_expand_b_from(&gamma, n) == type_b_poly_from(&big, n), || format!("expansion n={n}"))?;
        for k in 0..=n {
            ensure(basis_change_b_with(&gamma, &mut binoms, n, k) == big.entry(n, k as i64), || format!("B({n},{k})"))?;
        }
    }
    Ok(())
}

fn c5() -> Check {
    for n in 1..=10 {
        let a = carlitz_series_oracle::<Int>(n, 2 * n).map_err(|e| e.to_string())?;
        ensure(a == carlitz_poly::<Int>(n), || format!("A_{n} series"))?;
        let b = type_b_series_oracle::<Int>(n, 2 * n).map_err(|e| e.to_string())?;
        ensure(b == type_b_poly::<Int>(n), || format!("B_{n} series"))?;
    }
    Ok(())
}

fn c6() -> Check {
    for n in 0..=6 {
        let t = q_tangent(n).map_err(|e| e.to_string())?;
        ensure(is_nonneg(&t), || format!("T_{} has a negative coefficient", 2 * n + 1))?;
        ensure(a_star(2 * n + 1, n + 1).map_err(|e| e.to_string())? == t, || format!("a* mismatch n={n}"))?;
    }
    let t3 = q_tangent(1).map_err(|e| e.to_string())?;
    let t5 = q_tangent(2).map_err(|e| e.to_string())?;
    ensure(t3 == p(&[1, 1]), || format!("T_3 = {t3:?}"))?;
    ensure(t5 == p(&[2, 4, 4, 4, 2]), || format!("T_5 = {t5:?}"))?;
    ensure(t3.at_one() == Int::from(2) && t5.at_one() == Int::from(16), || "central values".into())
}

fn c7() -> Check {
    for n in 1..=6 {
        let quot = even_quotient(n).map_err(|e| e.to_string())?;
        let polys = quot.to_polys().ok_or_else(|| format!("negative q-power in quotient n={n}"))?;
        ensure(polys.iter().all(is_nonneg), || format!("negative coefficient in quotient n={n}"))?;
        ensure(&quot * &lin(n) == carlitz_poly::<Int>(2 * n), || format!("quotient n={n} does not multiply back"))?;
    }
    Ok(())
}

fn c8() -> Check {
    for n in 1..=8 {
        let d = d_poly(n).map_err(|e| e.to_string())?;
        ensure(is_nonneg(&d), || format!("d_{n} has a negative coefficient"))?;
    }
    for n in 1..=5 {
        ensure(verify_d_identity(n).map_err(|e| e.to_string())?, || format!("d_{n} identity"))?;
    }
    Ok(())
}

fn c9() -> Check {
    let gamma = gamma_b_triangle::<Int>(10);
    let secants = secant_numbers(5);
    ensure(secants[..5] == ints(&[1, 1, 5, 61, 1385])[..], || format!("secant numbers {secants:?}"))?;
    for (n, secant) in secants.iter().enumerate() {
        let central = gamma.entry(2 * n, n as i64);
        ensure(b_odd_vanish(n), || format!("B_{} does not vanish", 2 * n + 1))?;
        ensure(b_central(n).map_err(|e| e.to_string())? == central, || format!("central n={n}"))?;
        let e = e_star(n).map_err(|e| e.to_string())?;
        ensure(e.shift(n * n) == central, || format!("E* n={n}"))?;
        let g = g_star(n).map_err(|e| e.to_string())?;
        ensure(g.at_one() == *secant, || format!("G*_{}(1) = {}", 2 * n, g.at_one()))?;
    }
    for n in 0..=4 {
        ensure(verify_gstar_identity(n).map_err(|e| e.to_string())?, || format!("G* identity n={n}"))?;
    }
    Ok(())
}

fn c10() -> Check {
    let report = conjecture_scan_gstar(6).map_err(|e| e.to_string())?;
    ensure(report.rows.len() == 7, || "scan length".into())?;
    ensure(report.rows.iter().all(|r| is_nonneg(&r.poly)), || "negative coefficient".into())?;
    ensure(report.is_consistent(), || "scan reported a counterexample".into())?;
    let out = qeuler::run(["qeuler", "conjecture", "--max-n", "6"]);
    ensure(out.code == 0 && out.stdout.ends_with("status: consistent\n"), || out.stdout.clone())
}

fn c11() -> Check {
    let gamma = gamma_a_triangle::<Int>(7);
    for (n, count) in [(1, Some(2u64)), (2, Some(16)), (3, None)] {
        let (c, gf) = interlaced_census(n, 3).map_err(|e| e.to_string())?;
        ensure(gf == gamma.entry(2 * n + 1, n as i64 + 1), || format!("gf n={n}"))?;
        ensure(count.is_none_or(|x| x == c), || format!("count n={n}: {c}"))?;
        ensure(Int::from(c) == gf.at_one(), || format!("count vs gf(1) n={n}"))?;
    }
    Ok(())
}

fn c12() -> Check {
    for n in 1..=12 {
        ensure(reciprocity_a(n), || format!("reciprocity A n={n}"))?;
    }
    for n in 0..=12 {
        ensure(reciprocity_b(n), || format!("reciprocity B n={n}"))?;
    }
    let points = [rat(3, 2), rat(2, 1), rat(7, 3), rat(5, 1), rat(1, 2), rat(2, 3)];
    for n in 2..=10 {
        for q0 in &points {
            ensure(monotone_check_a(n, q0).map_err(|e| e.to_string())?, || format!("monotone A n={n} q={q0}"))?;
            ensure(monotone_check_b(n, q0).map_err(|e| e.to_string())?, || format!("monotone B n={n} q={q0}"))?;
        }
    }
    Ok(())
}

fn c13() -> Check {
    let a = bracket_failures_a::<Int>(12);
    let b = bracket_failures_b::<Int>(12);
    ensure(a.is_empty(), || format!("type A failures {a:?}"))?;
    ensure(b.is_empty(), || format!("type B failures {b:?}"))
}

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-1000i64..1000, 0..=20).prop_map(|c| QPoly::from_ints(&c))
}

fn qlaurent() -> impl Strategy<Value = QLaurent> {
    (qpoly(), -15i64..15).prop_map(|(p, off)| QLaurent::new(p, off))
}

fn tqpoly() -> impl Strategy<Value = TQPoly> {
    prop::collection::vec(qlaurent(), 0..=5).prop_map(BiPoly::new)
}

fn ring_axioms<T, S>(strategy: impl Fn() -> S) -> Check
where
    S: Strategy<Value = T>,
    T: Clone + std::fmt::Debug + PartialEq,
    for<'a> &'a T: std::ops::Add<&'a T, Output = T> + std::ops::Mul<&'a T, Output = T>,
{
    let mut runner = TestRunner::new(Config { cases: 200, failure_persistence: None, ..Config::default() });
    runner
        .run(&(strategy(), strategy(), strategy()), |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn json_round_trip() -> Check {
    let mut runner = TestRunner::new(Config { cases: 200, failure_persistence: None, ..Config::default() });
    let values = prop_oneof![
        qpoly().prop_map(Value::Poly),
        qlaurent().prop_map(Value::Laurent),
        tqpoly().prop_map(Value::Bivar),
    ];
    runner
        .run(&values, |v| {
            let back = Value::parse_json(&v.to_json_string()).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(back, v);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn run_binary(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qeuler")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn c14() -> Check {
    for big_n in 0..=12usize {
        let product: TQPoly = (0..big_n).map(|j| TQPoly::from_polys([QPoly::one(), -QPoly::q_pow(j)])).product();
        let sum = TQPoly::from_polys((0..=big_n).map(|j| {
            let term = q_binom::<Int>(big_n, j as i64).shift(j * j.saturating_sub(1) / 2);
            if j % 2 == 1 {
                -term
            } else {
                term
            }
        }));
        ensure(product == sum, || format!("q-binomial theorem N={big_n}"))?;
    }
    ring_axioms(qpoly)?;
    ring_axioms(qlaurent)?;
    ring_axioms(tqpoly)?;
    json_round_trip()?;
    for args in [
        &["verify", "all"][..],
        &["verify", "secant", "--format", "json"],
        &["table", "b", "--max-n", "8", "--format", "csv"],
        &["conjecture", "--format", "json"],
        &["poly", "Eq", "--n", "4"],
    ] {
        let first = run_binary(args)?;
        let second = run_binary(args)?;
        ensure(first.0 == 0, || format!("{args:?} exited with {}", first.0))?;
        ensure(first == second, || format!("{args:?} is not deterministic"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 14] = [
        (1, c1, Duration::from_millis(100)),
        (2, c2, Duration::from_millis(100)),
        (3, c3, Duration::from_secs(10)),
        (4, c4, Duration::from_secs(20)),
        (5, c5, Duration::from_secs(10)),
        (6, c6, Duration::from_secs(5)),
        (7, c7, Duration::from_secs(5)),
        (8, c8, Duration::from_secs(10)),
        (9, c9, Duration::from_secs(10)),
        (10, c10, Duration::from_secs(10)),
        (11, c11, Duration::from_secs(1)),
        (12, c12, Duration::from_secs(5)),
        (13, c13, Duration::from_secs(5)),
        (14, c14, Duration::from_secs(60)),
    ];
    let mut failed = Vec::new();
    for (id, check, budget) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let verdict = match (&result, elapsed <= budget) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over budget {budget:?})"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        println!("criterion {id}: {verdict} ({:.3} s)", elapsed.as_secs_f64());
        if !verdict.starts_with("PASS") {
            failed.push(id);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
