//! Machine-readable verification reports and their text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Bumped whenever a field changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail => f.write_str("FAIL"),
            Verdict::Skipped(why) => write!(f, "skipped ({why})"),
        }
    }
}

/// One checked statement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// The mathematical statement being checked, in words.
    pub statement: String,
    pub parameters: BTreeMap<String, String>,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// A counterexample or a summary of what was computed.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub millis: u128,
}

impl CheckRecord {
    pub fn new(id: &str, statement: &str) -> Self {
        CheckRecord {
            id: id.into(),
            statement: statement.into(),
            parameters: BTreeMap::new(),
            verdict: Verdict::Skipped("not run".into()),
            witness: None,
            millis: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    pub fn skip(mut self, reason: &str) -> Self {
        self.verdict = Verdict::Skipped(reason.into());
        self
    }

    /// Runs `body` and records its verdict, witness and timing. Errors count
    /// as failures with the error message as witness.
    pub fn run(mut self, body: impl FnOnce() -> Result<(bool, Option<String>)>) -> Self {
        let start = Instant::now();
        let (verdict, witness) = match body() {
            Ok((ok, w)) => (Verdict::from_bool(ok), w),
            Err(e) => (Verdict::Fail, Some(format!("error: {e}"))),
        };
        self.millis = start.elapsed().as_millis();
        self.verdict = verdict;
        self.witness = witness;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub suite: String,
    pub seed: u64,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<CheckRecord>,
    pub millis: u128,
}

impl VerificationReport {
    pub fn new(suite: &str, seed: u64) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").into(),
            suite: suite.into(),
            seed,
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            millis: 0,
        }
    }

    pub fn passed(&self) -> bool {
        !self.checks.iter().any(|c| c.verdict.is_fail())
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        self.checks.iter().fold((0, 0, 0), |(p, f, s), c| match c.verdict {
            Verdict::Pass => (p + 1, f, s),
            Verdict::Fail => (p, f + 1, s),
            Verdict::Skipped(_) => (p, f, s + 1),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Fixed-width table, one line per check, with a summary footer.
    pub fn table(&self) -> String {
        let id_w = self.checks.iter().map(|c| c.id.chars().count()).max().unwrap_or(2).max(2);
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (seed {})", self.suite, self.seed);
        for c in &self.checks {
            let params: Vec<String> = c.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = write!(out, "{:<id_w$}  {:<8}  {}", c.id, c.verdict.to_string(), c.statement);
            if !params.is_empty() {
                let _ = write!(out, " [{}]", params.join(", "));
            }
            let _ = writeln!(out, "  {} ms", c.millis);
            if let (Verdict::Fail, Some(w)) = (&c.verdict, &c.witness) {
                let _ = writeln!(out, "{:id_w$}    witness: {w}", "");
            }
        }
        let (p, f, s) = self.counts();
        let _ = writeln!(out, "{p} passed, {f} failed, {s} skipped in {} ms", self.millis);
        out
    }
}
