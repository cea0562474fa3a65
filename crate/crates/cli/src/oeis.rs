//! Comparison of the q = 1 gamma triangles with OEIS b-file snapshots.

use num_traits::{pow, Zero};

use crate::error::CliError;
use crate::report::{Item, Status};
use qeuler_core::eulerian::classical::{classical_gamma_a, classical_gamma_b};
use qeuler_core::Int;

pub const A101280: &str = include_str!("../fixtures/b101280.txt");
pub const A008971: &str = include_str!("../fixtures/b008971.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    A101280,
    A008971,
}

impl Sequence {
    pub fn id(self) -> &'static str {
        match self {
            Sequence::A101280 => "A101280",
            Sequence::A008971 => "A008971",
        }
    }

    pub fn bundled(self) -> &'static str {
        match self {
            Sequence::A101280 => A101280,
            Sequence::A008971 => A008971,
        }
    }
}

/// Values of a two-column b-file; `#` lines and blank lines are skipped and
/// indices must be consecutive.
pub fn parse_bfile(src: &str) -> Result<Vec<Int>, CliError> {
    let mut out = Vec::new();
    let mut last: Option<i64> = None;
    for (lineno, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || CliError::Usage(format!("malformed b-file line {}: {line:?}", lineno + 1));
        let mut cols = line.split_whitespace();
        let (Some(i), Some(v), None) = (cols.next(), cols.next(), cols.next()) else {
            return Err(bad());
        };
        let i: i64 = i.parse().map_err(|_| bad())?;
        let v: Int = v.parse().map_err(|_| bad())?;
        if last.is_some_and(|l| i != l + 1) {
            return Err(bad());
        }
        last = Some(i);
        out.push(v);
    }
    Ok(out)
}

/// Terms in reading order for rows `1..=max_n`, labelled `T(n,k)`.
/// For A008971 a term is `None` when `4^k` does not divide `b_{n,k}(1)`.
pub fn expected_terms(seq: Sequence, max_n: usize) -> Vec<(String, Option<Int>, String)> {
    let mut out = Vec::new();
    match seq {
        Sequence::A101280 => {
            let a = classical_gamma_a::<Int>(max_n);
            for (n, row) in a.iter().enumerate().skip(1) {
                for (i, v) in row.iter().enumerate() {
                    out.push((format!("T({n},{})", i + 1), Some(v.clone()), format!("a({n},{})", i + 1)));
                }
            }
        }
        Sequence::A008971 => {
            let b = classical_gamma_b::<Int>(max_n);
            for (n, row) in b.iter().enumerate().skip(1) {
                for (k, v) in row.iter().enumerate() {
                    let d = pow(Int::from(4), k);
                    let q = if (v % &d).is_zero() { Some(v / &d) } else { None };
                    out.push((format!("T({n},{k})"), q, format!("b({n},{k}) = {v}")));
                }
            }
        }
    }
    out
}

pub fn compare(seq: Sequence, max_n: usize, fixture: &[Int]) -> Vec<Item> {
    expected_terms(seq, max_n)
        .into_iter()
        .enumerate()
        .map(|(i, (name, want, source))| match (want, fixture.get(i)) {
            (None, _) => Item::new(name, Status::Fail, format!("{source} is not divisible by 4^k")),
            (Some(w), Some(f)) => Item::check(name, &w == f, format!("computed {w}, fixture {f}")),
            (Some(w), None) => Item::new(name, Status::Reported, format!("computed {w}, beyond fixture")),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_parse() {
        assert_eq!(parse_bfile(A101280).unwrap().len(), 12);
        assert_eq!(parse_bfile(A008971).unwrap().len(), 15);
    }

    #[test]
    fn malformed_lines_rejected() {
        assert!(parse_bfile("1 2 3").is_err());
        assert!(parse_bfile("1 x").is_err());
        assert!(parse_bfile("1 1\n3 1").is_err());
        assert_eq!(parse_bfile("# c\n\n5 7\n6 -1\n").unwrap(), vec![Int::from(7), Int::from(-1)]);
    }

    #[test]
    fn divisibility_through_ten() {
        assert!(expected_terms(Sequence::A008971, 10).iter().all(|(_, v, _)| v.is_some()));
    }

    #[test]
    fn snapshots_match() {
        for seq in [Sequence::A101280, Sequence::A008971] {
            let f = parse_bfile(seq.bundled()).unwrap();
            let items = compare(seq, 6, &f);
            assert_eq!(items.len(), f.len());
            assert!(items.iter().all(|i| i.status == Status::Pass), "{seq:?}");
        }
    }
}
