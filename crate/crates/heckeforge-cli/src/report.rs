use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub inputs: Value,
    pub expected: String,
    pub got: String,
    pub status: Status,
}

impl Case {
    pub fn check(id: impl Into<String>, inputs: Value, expected: impl Into<String>, got: impl Into<String>, ok: bool) -> Self {
        Case {
            id: id.into(),
            inputs,
            expected: expected.into(),
            got: got.into(),
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    /// A case whose computation returned an error.
    pub fn error(id: impl Into<String>, inputs: Value, expected: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Case::check(id, inputs, expected, format!("error: {err}"), false)
    }

    pub fn skip(id: impl Into<String>, inputs: Value, why: impl Into<String>) -> Self {
        Case { id: id.into(), inputs, expected: String::new(), got: why.into(), status: Status::Skip }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub summary: Summary,
    pub version: String,
}

impl Report {
    /// Cases keep the order given; the caller orders by id.
    pub fn new(suite: &str, cases: Vec<Case>) -> Self {
        let mut summary = Summary::default();
        for c in &cases {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
            }
        }
        Report { suite: suite.into(), cases, summary, version: concat!("heckeforge ", env!("CARGO_PKG_VERSION")).into() }
    }

    pub fn ok(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            let _ = writeln!(s, "{tag} {}: {}", c.id, c.got);
            if c.status == Status::Fail {
                let _ = writeln!(s, "     expected {}", c.expected);
            }
        }
        let _ = writeln!(
            s,
            "{}: {} passed, {} failed, {} skipped ({})",
            self.suite, self.summary.pass, self.summary.fail, self.summary.skip, self.version
        );
        s
    }
}
