//! Text, CSV and JSON renderings of polynomial values.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use qeuler_core::{Int, QLaurent, QPoly, TQPoly};

/// Any of the three polynomial kinds the tool prints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Poly(QPoly),
    Laurent(QLaurent),
    Bivar(TQPoly),
}

fn power(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// A signed term: `(negative, magnitude text)`.
type Term = (bool, String);

fn term(c: &BigInt, monomial: String) -> Term {
    let mag = c.abs();
    let body = if monomial.is_empty() {
        mag.to_string()
    } else if mag.is_one() {
        monomial
    } else {
        format!("{mag}{monomial}")
    };
    (c.is_negative(), body)
}

fn join(terms: Vec<Term>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn laurent_terms(p: &QLaurent, suffix: &str) -> Vec<Term> {
    p.terms().map(|(e, c)| term(c, power("q", e) + suffix)).collect()
}

pub fn laurent_text(p: &QLaurent) -> String {
    join(laurent_terms(p, ""))
}

pub fn poly_text(p: &QPoly) -> String {
    laurent_text(&QLaurent::from(p.clone()))
}

/// Ascending in `t`; a coefficient with several terms is parenthesised.
pub fn bivar_text(p: &TQPoly) -> String {
    let mut terms = Vec::new();
    for (d, c) in p.terms().iter().enumerate() {
        let t = power("t", d as i64);
        match c.terms().count() {
            0 => {}
            1 => terms.extend(laurent_terms(c, &t)),
            _ if d == 0 => terms.extend(laurent_terms(c, "")),
            _ => terms.push((false, format!("({}){t}", laurent_text(c)))),
        }
    }
    join(terms)
}

impl Value {
    pub fn text(&self) -> String {
        match self {
            Value::Poly(p) => poly_text(p),
            Value::Laurent(p) => laurent_text(p),
            Value::Bivar(p) => bivar_text(p),
        }
    }

    /// `exponent,coeff` rows, or `tdeg,exponent,coeff` for bivariate values.
    pub fn csv(&self) -> String {
        let mut out = String::new();
        match self {
            Value::Poly(p) => {
                out.push_str("exponent,coeff\n");
                for (e, c) in p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    out.push_str(&format!("{e},{c}\n"));
                }
            }
            Value::Laurent(p) => {
                out.push_str("exponent,coeff\n");
                for (e, c) in p.terms() {
                    out.push_str(&format!("{e},{c}\n"));
                }
            }
            Value::Bivar(p) => {
                out.push_str("tdeg,exponent,coeff\n");
                for (d, l) in p.terms().iter().enumerate() {
                    for (e, c) in l.terms() {
                        out.push_str(&format!("{d},{e},{c}\n"));
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> PolyJson {
        match self {
            Value::Poly(p) => PolyJson::Poly { var: "q".into(), coeffs: decimal(p.coeffs()) },
            Value::Laurent(p) => laurent_json(p),
            Value::Bivar(p) => PolyJson::Bivar {
                terms: p
                    .terms()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(tdeg, c)| TermJson { tdeg, coeff: laurent_json(c) })
                    .collect(),
            },
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self, CliError> {
        match j {
            PolyJson::Poly { var, coeffs } => {
                check_var(var)?;
                Ok(Value::Poly(QPoly::new(parse_coeffs(coeffs)?)))
            }
            PolyJson::Laurent { .. } => parse_laurent(j).map(Value::Laurent),
            PolyJson::Bivar { terms } => {
                let mut out: Vec<QLaurent> = Vec::new();
                for t in terms {
                    if out.len() <= t.tdeg {
                        out.resize(t.tdeg + 1, QLaurent::zero());
                    }
                    if !out[t.tdeg].is_zero() {
                        return Err(CliError::Parse(format!("duplicate t-degree {}", t.tdeg)));
                    }
                    out[t.tdeg] = parse_laurent(&t.coeff)?;
                }
                Ok(Value::Bivar(TQPoly::new(out)))
            }
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn parse_json(s: &str) -> Result<Self, CliError> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| CliError::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PolyJson {
    Poly { var: String, coeffs: Vec<String> },
    Laurent { var: String, offset: i64, coeffs: Vec<String> },
    Bivar { terms: Vec<TermJson> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub tdeg: usize,
    pub coeff: PolyJson,
}

fn decimal(cs: &[Int]) -> Vec<String> {
    cs.iter().map(Int::to_string).collect()
}

fn laurent_json(p: &QLaurent) -> PolyJson {
    PolyJson::Laurent { var: "q".into(), offset: p.offset(), coeffs: decimal(p.base().coeffs()) }
}

fn check_var(var: &str) -> Result<(), CliError> {
    if var == "q" {
        Ok(())
    } else {
        Err(CliError::Parse(format!("unknown variable {var:?}")))
    }
}

fn parse_coeffs(cs: &[String]) -> Result<Vec<Int>, CliError> {
    cs.iter().map(|s| s.parse::<Int>().map_err(|_| CliError::Parse(format!("bad coefficient {s:?}")))).collect()
}

fn parse_laurent(j: &PolyJson) -> Result<QLaurent, CliError> {
    match j {
        PolyJson::Laurent { var, offset, coeffs } => {
            check_var(var)?;
            Ok(QLaurent::new(QPoly::new(parse_coeffs(coeffs)?), *offset))
        }
        _ => Err(CliError::Parse("expected a laurent value".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qeuler_core::eulerian::carlitz_poly;

    #[test]
    fn text_forms() {
        assert_eq!(poly_text(&QPoly::from_ints(&[1, 1])), "1 + q");
        assert_eq!(poly_text(&QPoly::from_ints(&[2, 4, 4])), "2 + 4q + 4q^2");
        assert_eq!(poly_text(&QPoly::from_ints(&[0, -1, 0, 3])), "-q + 3q^3");
        assert_eq!(poly_text(&QPoly::zero()), "0");
        assert_eq!(laurent_text(&QLaurent::q_pow(-1)), "q^-1");
        assert_eq!(laurent_text(&QLaurent::new(QPoly::from_ints(&[2, -1]), -2)), "2q^-2 - q^-1");
        assert_eq!(bivar_text(&carlitz_poly::<Int>(3)), "1 + (2q + 2q^2)t + q^3t^2");
        let neg = TQPoly::new(vec![QLaurent::from(QPoly::from_ints(&[1, 1])), QLaurent::monomial(Int::from(-1), 0)]);
        assert_eq!(bivar_text(&neg), "1 + q - t");
    }

    #[test]
    fn json_shape() {
        let v = Value::Poly(QPoly::from_ints(&[1, 1]));
        assert_eq!(v.to_json_string(), r#"{"kind":"poly","var":"q","coeffs":["1","1"]}"#);
        let l = Value::Laurent(QLaurent::q_pow(-2));
        assert_eq!(l.to_json_string(), r#"{"kind":"laurent","var":"q","offset":-2,"coeffs":["1"]}"#);
        let b = Value::Bivar(carlitz_poly::<Int>(2));
        assert_eq!(
            b.to_json_string(),
            r#"{"kind":"bivar","terms":[{"tdeg":0,"coeff":{"kind":"laurent","var":"q","offset":0,"coeffs":["1"]}},{"tdeg":1,"coeff":{"kind":"laurent","var":"q","offset":1,"coeffs":["1"]}}]}"#
        );
        assert_eq!(Value::parse_json(&b.to_json_string()).unwrap(), b);
    }

    #[test]
    fn json_rejects_garbage() {
        assert!(Value::parse_json(r#"{"kind":"poly","var":"x","coeffs":["1"]}"#).is_err());
        assert!(Value::parse_json(r#"{"kind":"poly","var":"q","coeffs":["1.5"]}"#).is_err());
        assert!(Value::parse_json(
            r#"{"kind":"bivar","terms":[{"tdeg":0,"coeff":{"kind":"poly","var":"q","coeffs":[]}}]}"#
        )
        .is_err());
    }
}
