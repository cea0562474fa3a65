//! Suite reports. Wall time is kept out of the serialized data so repeated
//! runs print identical bytes; it is written to stderr instead.

use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Reported,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Reported => "INFO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Item {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Item {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Item { name: name.into(), status, detail: detail.into() }
    }

    pub fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(name, if ok { Status::Pass } else { Status::Fail }, detail)
    }

    /// A check whose computation may itself fail; an error counts as a failure.
    pub fn from_result(name: impl Into<String>, r: qeuler_core::Result<(bool, String)>) -> Self {
        match r {
            Ok((ok, detail)) => Self::check(name, ok, detail),
            Err(e) => Self::new(name, Status::Fail, format!("error: {e}")),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    pub pass: usize,
    pub fail: usize,
    pub reported: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub status: Status,
    pub counters: Counters,
    pub items: Vec<Item>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    pub fn new(suite: impl Into<String>, items: Vec<Item>, wall_time: Duration) -> Self {
        let mut counters = Counters::default();
        for it in &items {
            match it.status {
                Status::Pass => counters.pass += 1,
                Status::Fail => counters.fail += 1,
                Status::Reported => counters.reported += 1,
            }
        }
        let status = if counters.fail > 0 { Status::Fail } else { Status::Pass };
        Report { suite: suite.into(), status, counters, items, wall_time }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn text(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        for it in &self.items {
            out.push_str(&format!("  {}  {}", it.status.label(), it.name));
            if !it.detail.is_empty() {
                out.push_str(&format!("  {}", it.detail));
            }
            out.push('\n');
        }
        let c = self.counters;
        out.push_str(&format!(
            "  {} pass, {} fail, {} reported: {}\n",
            c.pass,
            c.fail,
            c.reported,
            self.status.label()
        ));
        out
    }

    pub fn csv_rows(&self, out: &mut String) {
        for it in &self.items {
            out.push_str(&format!(
                "{},{},{},{}\n",
                csv_field(&self.suite),
                csv_field(&it.name),
                status_name(it.status),
                csv_field(&it.detail)
            ));
        }
    }

    pub fn timing_line(&self) -> String {
        format!("wall-time {}: {:.3} ms\n", self.suite, self.wall_time.as_secs_f64() * 1e3)
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Reported => "reported",
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn any_failure_fails_the_suite() {
        let items =
            vec![Item::check("a", true, ""), Item::new("b", Status::Reported, "note"), Item::check("c", false, "x")];
        let r = Report::new("demo", items, Duration::ZERO);
        assert!(!r.passed());
        assert_eq!(r.counters, Counters { pass: 1, fail: 1, reported: 1 });
        let r = Report::new("demo", vec![Item::new("b", Status::Reported, "")], Duration::ZERO);
        assert!(r.passed());
    }

    #[test]
    fn json_has_no_timing() {
        let r = Report::new("demo", vec![Item::check("a", true, "")], Duration::from_millis(7));
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"suite":"demo","status":"pass","counters":{"pass":1,"fail":0,"reported":0},"items":[{"name":"a","status":"pass","detail":""}]}"#
        );
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
        assert_eq!(csv_field("plain"), "plain");
    }
}
