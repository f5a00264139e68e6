//! JSON-lines reports shared by the verification suites and the CLI.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One line of a report: `{check, n, degree, status, witness}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub degree: Option<u32>,
    pub status: Status,
    pub witness: Value,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, n: usize, degree: Option<u32>, ok: bool, witness: Value) -> Self {
        Self {
            check: check.into(),
            n,
            degree,
            status: Status::from_bool(ok),
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}
