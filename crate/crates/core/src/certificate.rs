//! Machine-checkable records of finite verifications.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Outcome of one bounded check. A failing certificate always carries a witness.
///
/// `params` records the finite scale (word length `L`, degree `d`, budget `e`, ...)
/// the check ran at; a PASS says nothing beyond that scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    pub witness: Option<Value>,
    pub statement: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Certificate>,
}

impl Certificate {
    pub fn pass(kind: &str, statement: impl Into<String>) -> Self {
        Self {
            kind: kind.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            rank: None,
            count: None,
            witness: None,
            statement: statement.into(),
            checks: Vec::new(),
        }
    }

    pub fn fail(kind: &str, statement: impl Into<String>, witness: Value) -> Self {
        Self { status: Status::Fail, witness: Some(witness), ..Self::pass(kind, statement) }
    }

    /// PASS when `witness` is `None`, FAIL with that witness otherwise.
    pub fn from_witness(kind: &str, statement: impl Into<String>, witness: Option<Value>) -> Self {
        match witness {
            None => Self::pass(kind, statement),
            Some(w) => Self::fail(kind, statement, w),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }

    pub fn rank(mut self, rank: usize) -> Self {
        self.rank = Some(rank);
        self
    }

    pub fn count(mut self, count: usize) -> Self {
        self.count = Some(count);
        self
    }

    /// Attach sub-checks; the certificate fails if any of them fails.
    pub fn with_checks(mut self, checks: Vec<Certificate>) -> Self {
        if self.status == Status::Pass {
            if let Some(bad) = checks.iter().find(|c| !c.is_pass()) {
                self.status = Status::Fail;
                self.witness = Some(serde_json::json!({ "failed_check": bad.kind }));
            }
        }
        self.checks = checks;
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.status, self.kind)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
            write!(f, " ({})", ps.join(", "))?;
        }
        if let Some(r) = self.rank {
            write!(f, " rank {r}")?;
        }
        if let Some(c) = self.count {
            write!(f, " count {c}")?;
        }
        write!(f, ": {}", self.statement)?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {}", plain(w))?;
        }
        for c in &self.checks {
            for line in c.to_string().lines() {
                write!(f, "\n  {line}")?;
            }
        }
        Ok(())
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
