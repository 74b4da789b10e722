//! Verification reports and their text and JSON renderings.
//!
//! JSON shape: `{"suite": .., "checks": [{"name", "status", "expected", "actual", "ms"}]}`.
//! `ms` is only measured when timings are switched on, so reports are byte-stable by default.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub ms: u64,
}

/// What a check computes: whether it passed, and renderings of the expected and actual values.
pub struct Outcome {
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl Outcome {
    /// Compares two renderable values for equality.
    pub fn eq<T: PartialEq + std::fmt::Display>(expected: &T, actual: &T) -> Self {
        Outcome { pass: expected == actual, expected: expected.to_string(), actual: actual.to_string() }
    }

    pub fn new(pass: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Outcome { pass, expected: expected.into(), actual: actual.into() }
    }

    /// A yes/no property, rendered as `true`/`false`.
    pub fn holds(pass: bool) -> Self {
        Outcome::new(pass, "true", pass.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    #[serde(skip)]
    timings: bool,
}

impl Report {
    pub fn new(suite: impl Into<String>, timings: bool) -> Self {
        Report { suite: suite.into(), checks: Vec::new(), timings }
    }

    /// Runs `f` and records its outcome; an `Err` becomes status `error`.
    pub fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<Outcome>) {
        let start = Instant::now();
        let res = f();
        let ms = if self.timings { start.elapsed().as_millis() as u64 } else { 0 };
        let check = match res {
            Ok(o) => Check {
                name: name.into(),
                status: if o.pass { Status::Pass } else { Status::Fail },
                expected: o.expected,
                actual: o.actual,
                ms,
            },
            Err(e) => Check { name: name.into(), status: Status::Error, expected: String::new(), actual: e.to_string(), ms },
        };
        self.checks.push(check);
    }

    /// Appends the checks of `other`, prefixing their names with its suite.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}: {}", other.suite, c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        writeln!(out, "suite {}", self.suite).unwrap();
        for c in &self.checks {
            let pad = width - c.name.chars().count();
            write!(out, "  [{:<5}] {}{}", c.status.as_str(), c.name, " ".repeat(pad)).unwrap();
            if self.timings {
                write!(out, "  {:>5} ms", c.ms).unwrap();
            }
            out.push('\n');
            if c.status != Status::Pass {
                if !c.expected.is_empty() {
                    writeln!(out, "          expected: {}", indent(&c.expected)).unwrap();
                }
                writeln!(out, "          actual:   {}", indent(&c.actual)).unwrap();
            }
        }
        writeln!(
            out,
            "{} passed, {} failed, {} errors",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error)
        )
        .unwrap();
        out
    }
}

fn indent(s: &str) -> String {
    s.replace('\n', "\n                    ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn empty_report_is_valid_json() {
        let r = Report::new("torus", false);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["suite"], "torus");
        assert_eq!(v["checks"].as_array().unwrap().len(), 0);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn statuses_and_exit_code() {
        let mut r = Report::new("t", false);
        r.run("ok", || Ok(Outcome::holds(true)));
        assert_eq!(r.exit_code(), 0);
        r.run("bad", || Ok(Outcome::eq(&1, &2)));
        r.run("boom", || Err(Error::DivisionByZero));
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.count(Status::Error), 1);
        let json = r.to_json();
        assert!(json.contains("\"status\": \"fail\""));
        assert_eq!(Report::from_json(&json).unwrap().checks, r.checks);
        assert!(r.to_text().contains("expected: 1"));
    }
}
