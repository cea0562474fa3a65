use std::time::Instant;

use num_traits::{One, Zero};
use serde_json::json;

use crate::args::{FamilyArg, Format, PolyName, SequenceArg, SuiteArg};
use crate::error::CliError;
use crate::oeis::{self, Sequence};
use crate::render::{poly_text, Value};
use crate::report::{csv_field, Report};
use crate::suites::{self, Options, Suite};
use crate::Outcome;
use qeuler_core::doubloon::DEFAULT_MAX_N;
use qeuler_core::eulerian::{carlitz_poly, gamma_a_triangle, type_b_poly};
use qeuler_core::special::{conjecture_scan_gstar, d_poly, e_q_secant, e_star, g_star, q_tangent, Verdict};
use qeuler_core::{Family, Int, Rat, Triangle};

fn family(f: FamilyArg) -> Family {
    match f {
        FamilyArg::GammaA => Family::GammaA,
        FamilyArg::GammaB => Family::GammaB,
        FamilyArg::CarlitzA => Family::CarlitzA,
        FamilyArg::TypeB => Family::TypeB,
    }
}

pub fn table(f: FamilyArg, max_n: usize, q1: bool, format: Format) -> Result<Outcome, CliError> {
    let fam = family(f);
    let tri = Triangle::<Int>::build(fam, max_n);
    let rows = 1..=max_n;
    let out = match format {
        Format::Text if q1 => {
            let ints = tri.at_q_one();
            rows.map(|n| ints[n].iter().map(Int::to_string).collect::<Vec<_>>().join(" ") + "\n").collect()
        }
        Format::Text => {
            let mut s = String::new();
            for n in rows {
                for (k, p) in tri.row_entries(n) {
                    s.push_str(&format!("{fam}({n},{k}) = {}\n", poly_text(p)));
                }
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("n,k,value\n");
            for n in rows {
                for (k, p) in tri.row_entries(n) {
                    let v = if q1 { p.at_one().to_string() } else { poly_text(p) };
                    s.push_str(&format!("{n},{k},{}\n", csv_field(&v)));
                }
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .map(|n| {
                    let entries: Vec<_> = tri
                        .row_entries(n)
                        .map(|(k, p)| {
                            let v = if q1 {
                                json!(p.at_one().to_string())
                            } else {
                                serde_json::to_value(Value::Poly(p.clone()).to_json()).expect("serializable")
                            };
                            json!({"k": k, "value": v})
                        })
                        .collect();
                    json!({"n": n, "entries": entries})
                })
                .collect();
            json!({"family": fam.symbol(), "q1": q1, "rows": rows}).to_string() + "\n"
        }
    };
    Ok(Outcome::ok(out))
}

fn out_of_range(name: &str, n: usize, min: usize) -> Result<Value, CliError> {
    Err(CliError::Usage(format!("poly {name} needs n >= {min}, got {n}")))
}

pub fn poly_value(name: PolyName, n: usize) -> Result<Value, CliError> {
    Ok(match name {
        PolyName::A if n == 0 => return out_of_range("A", n, 1),
        PolyName::A => Value::Bivar(carlitz_poly::<Int>(n)),
        PolyName::B => Value::Bivar(type_b_poly::<Int>(n)),
        PolyName::T => Value::Poly(q_tangent(n)?),
        PolyName::Dn if n == 0 => return out_of_range("dn", n, 1),
        PolyName::Dn => Value::Poly(d_poly(n)?),
        PolyName::Estar => Value::Poly(e_star(n)?),
        PolyName::Gstar => Value::Poly(g_star(n)?),
        PolyName::Eq => Value::Laurent(e_q_secant(n)),
        PolyName::Central => Value::Poly(gamma_a_triangle::<Int>(2 * n + 1).entry(2 * n + 1, n as i64 + 1)),
    })
}

pub fn poly(name: PolyName, n: usize, format: Format) -> Result<Outcome, CliError> {
    let v = poly_value(name, n)?;
    Ok(Outcome::ok(match format {
        Format::Text => v.text() + "\n",
        Format::Csv => v.csv(),
        Format::Json => v.to_json_string() + "\n",
    }))
}

fn suite_of(s: SuiteArg) -> Option<Suite> {
    Some(match s {
        SuiteArg::All => return None,
        SuiteArg::ExpansionA => Suite::ExpansionA,
        SuiteArg::ExpansionB => Suite::ExpansionB,
        SuiteArg::Series => Suite::Series,
        SuiteArg::Tangent => Suite::Tangent,
        SuiteArg::Secant => Suite::Secant,
        SuiteArg::Doubloon => Suite::Doubloon,
        SuiteArg::Reciprocity => Suite::Reciprocity,
        SuiteArg::Monotone => Suite::Monotone,
        SuiteArg::Brackets => Suite::Brackets,
    })
}

pub fn verify(
    suite: SuiteArg,
    max_n: Option<usize>,
    points: Option<Vec<Rat>>,
    force: bool,
    format: Format,
) -> Result<Outcome, CliError> {
    let points = points.unwrap_or_else(suites::default_points);
    if let Some(bad) = points.iter().find(|q| **q <= Rat::zero() || q.is_one()) {
        return Err(CliError::Usage(format!("sample points must be positive and different from 1, got {bad}")));
    }
    let plan: Vec<(Suite, usize)> = match suite_of(suite) {
        Some(s) => vec![(s, max_n.unwrap_or(s.default_max_n()))],
        None => Suite::ALL
            .iter()
            .map(|&s| {
                let n = max_n.unwrap_or(s.default_max_n());
                (s, if s == Suite::Doubloon { n.min(Suite::Doubloon.default_max_n()) } else { n })
            })
            .collect(),
    };
    for &(s, n) in &plan {
        if s == Suite::Doubloon && n > DEFAULT_MAX_N && !force {
            return Err(CliError::Usage(format!(
                "doubloon enumeration beyond n = {DEFAULT_MAX_N} needs --force ((2n+1)! candidates)"
            )));
        }
    }
    let reports: Vec<Report> = plan
        .into_iter()
        .map(|(s, n)| {
            let limit = if force { n.max(DEFAULT_MAX_N) } else { DEFAULT_MAX_N };
            suites::run(s, &Options { max_n: n, points: points.clone(), doubloon_limit: limit })
        })
        .collect();
    let passed = reports.iter().all(Report::passed);
    let verdict = if passed { "pass" } else { "fail" };
    let stdout = match format {
        Format::Text => {
            let mut s: String = reports.iter().map(|r| r.text() + "\n").collect();
            s.push_str(&format!("overall: {}\n", verdict.to_uppercase()));
            s
        }
        Format::Csv => {
            let mut s = String::from("suite,item,status,detail\n");
            reports.iter().for_each(|r| r.csv_rows(&mut s));
            s
        }
        Format::Json => json!({"status": verdict, "suites": reports}).to_string() + "\n",
    };
    let stderr = reports.iter().map(Report::timing_line).collect();
    Ok(Outcome { stdout, stderr, code: if passed { 0 } else { 1 } })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn conjecture(max_n: usize, format: Format) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let report = conjecture_scan_gstar(max_n)?;
    let consistent = report.is_consistent();
    let status = if consistent { "consistent" } else { "counterexample" };
    let stdout = match format {
        Format::Text => {
            let mut s = String::from("n  degree  min  palindromic  G*(1)  E_2n  verdict  G*_2n(q)\n");
            for r in &report.rows {
                let v = match &r.verdict {
                    Verdict::Consistent => "consistent".to_string(),
                    Verdict::Counterexample { exponent, coeff } => format!("counterexample (q^{exponent}: {coeff})"),
                };
                s.push_str(&format!(
                    "{}  {}  {}  {}  {}  {}  {}  {}\n",
                    r.n,
                    r.degree,
                    r.min_coeff,
                    yes_no(r.palindromic),
                    r.value_at_one,
                    r.secant,
                    v,
                    poly_text(&r.poly)
                ));
            }
            for r in report.counterexamples() {
                if let Verdict::Counterexample { exponent, coeff } = &r.verdict {
                    s.push_str(&format!("counterexample: n = {}, coefficient of q^{exponent} is {coeff}\n", r.n));
                }
            }
            s.push_str(&format!("status: {status}\n"));
            s
        }
        Format::Csv => {
            let mut s = String::from("n,degree,min_coeff,palindromic,value_at_one,secant,verdict\n");
            for r in &report.rows {
                let v = match &r.verdict {
                    Verdict::Consistent => "consistent".to_string(),
                    Verdict::Counterexample { exponent, coeff } => format!("counterexample q^{exponent} {coeff}"),
                };
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.n, r.degree, r.min_coeff, r.palindromic, r.value_at_one, r.secant, v
                ));
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = report
                .rows
                .iter()
                .map(|r| {
                    let verdict = match &r.verdict {
                        Verdict::Consistent => json!("consistent"),
                        Verdict::Counterexample { exponent, coeff } => {
                            json!({"counterexample": {"exponent": exponent, "coeff": coeff.to_string()}})
                        }
                    };
                    json!({
                        "n": r.n,
                        "degree": r.degree,
                        "min_coeff": r.min_coeff.to_string(),
                        "palindromic": r.palindromic,
                        "value_at_one": r.value_at_one.to_string(),
                        "secant": r.secant.to_string(),
                        "verdict": verdict,
                        "poly": Value::Poly(r.poly.clone()).to_json(),
                    })
                })
                .collect();
            json!({"status": status, "rows": rows}).to_string() + "\n"
        }
    };
    let stderr = format!("wall-time conjecture: {:.3} ms\n", start.elapsed().as_secs_f64() * 1e3);
    Ok(Outcome { stdout, stderr, code: if consistent { 0 } else { 1 } })
}

pub fn oeis_check(
    seq: SequenceArg,
    max_n: usize,
    fixture: Option<&std::path::Path>,
    format: Format,
) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let seq = match seq {
        SequenceArg::A101280 => Sequence::A101280,
        SequenceArg::A008971 => Sequence::A008971,
    };
    let src = match fixture {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("cannot read fixture {}: {e}", p.display())))?,
        None => seq.bundled().to_string(),
    };
    let terms = oeis::parse_bfile(&src)?;
    let report = Report::new(format!("oeis {}", seq.id()), oeis::compare(seq, max_n, &terms), start.elapsed());
    let stdout = match format {
        Format::Text => report.text(),
        Format::Csv => {
            let mut s = String::from("suite,item,status,detail\n");
            report.csv_rows(&mut s);
            s
        }
        Format::Json => serde_json::to_string(&report).expect("serializable") + "\n",
    };
    let code = if report.passed() { 0 } else { 1 };
    Ok(Outcome { stdout, stderr: report.timing_line(), code })
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_ranges() {
        assert!(matches!(poly_value(PolyName::A, 0), Err(CliError::Usage(_))));
        assert!(matches!(poly_value(PolyName::Dn, 0), Err(CliError::Usage(_))));
        assert_eq!(poly_value(PolyName::Gstar, 0).unwrap().text(), "1");
        assert_eq!(poly_value(PolyName::T, 1).unwrap().text(), "1 + q");
        assert_eq!(poly_value(PolyName::Central, 2).unwrap().text(), "2q^3 + 4q^4 + 4q^5 + 4q^6 + 2q^7");
    }

    #[test]
    fn bad_points_are_usage_errors() {
        let r = verify(SuiteArg::Monotone, Some(3), Some(vec![Rat::one()]), false, Format::Text);
        assert!(matches!(r, Err(CliError::Usage(_))));
    }

    #[test]
    fn doubloon_guard() {
        let r = verify(SuiteArg::Doubloon, Some(5), None, false, Format::Text);
        assert!(matches!(r, Err(CliError::Usage(_))));
    }
}
