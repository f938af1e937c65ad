//! Versioned JSON-lines check reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: &str = "torelli-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Verdict {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// One check result. `timing_ms` is only filled on request so that reports
/// stay byte-identical across runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub check: String,
    pub surface: Option<[u32; 2]>,
    pub params: Value,
    pub verdict: Verdict,
    pub certificates: Value,
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(check: &str, surface: Option<(u32, u32)>, params: Value, verdict: Verdict, certificates: Value) -> Report {
        Report {
            schema: SCHEMA.into(),
            check: check.into(),
            surface: surface.map(|(g, p)| [g, p]),
            params,
            verdict,
            certificates,
            timing_ms: None,
        }
    }

    pub fn error(check: &str, surface: Option<(u32, u32)>, params: Value, err: &torelli_core::Error) -> Report {
        let verdict = match err {
            torelli_core::Error::Inconclusive(_) => Verdict::Inconclusive,
            _ => Verdict::Fail,
        };
        Report::new(check, surface, params, verdict, serde_json::json!({ "error": err.to_string() }))
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}
