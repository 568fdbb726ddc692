use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use wielandt_core::actions::ActionError;
use wielandt_core::atlas::AtlasError;
use wielandt_core::groupkit::GroupError;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("bad parameters: {0}")]
    Params(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Atlas(#[from] AtlasError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// Scenario parameters, ordered by key so that keys and reports are stable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params(pub BTreeMap<String, Value>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), value.into());
        self
    }

    pub fn int(&self, key: &str) -> Result<i64, ScenarioError> {
        self.0
            .get(key)
            .and_then(Value::as_i64)
            .ok_or_else(|| ScenarioError::Params(format!("missing integer parameter {key:?}")))
    }

    pub fn int_or(&self, key: &str, default: i64) -> Result<i64, ScenarioError> {
        match self.0.get(key) {
            None => Ok(default),
            Some(_) => self.int(key),
        }
    }

    pub fn text(&self, key: &str) -> Result<&str, ScenarioError> {
        self.0
            .get(key)
            .and_then(Value::as_str)
            .ok_or_else(|| ScenarioError::Params(format!("missing text parameter {key:?}")))
    }

    /// Parses `key=value`; integers become numbers, anything else text.
    pub fn parse_assignment(&mut self, assignment: &str) -> Result<(), ScenarioError> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| ScenarioError::Params(format!("expected key=value, got {assignment:?}")))?;
        let value = match value.parse::<i64>() {
            Ok(n) => Value::from(n),
            Err(_) => Value::from(value),
        };
        self.0.insert(key.to_string(), value);
        Ok(())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Observation {
    pub label: String,
    pub value: Value,
}

pub fn obs(label: &str, value: impl Into<Value>) -> Observation {
    Observation {
        label: label.to_string(),
        value: value.into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioResult {
    pub id: String,
    pub params: Params,
    pub status: Status,
    pub observations: Vec<Observation>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub mismatches: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<u64>,
}

/// One parameter set that `run-all` exercises.
#[derive(Clone, Debug)]
pub struct Case {
    pub params: Params,
    pub slow: bool,
}

impl Case {
    pub fn fast(params: Params) -> Self {
        Case { params, slow: false }
    }

    pub fn slow(params: Params) -> Self {
        Case { params, slow: true }
    }
}

/// Settings shared by every scenario in a run.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunContext {
    /// Seeds the sampled action-axiom spot checks; observations never depend on it.
    pub seed: u64,
}

/// An executable check of one computational claim.
pub trait Scenario: Send + Sync {
    fn id(&self) -> &'static str;
    /// The claim, in one line, for `list`.
    fn claim(&self) -> &'static str;
    /// Parameter sets run by `run-all` (and by `run` without overrides).
    fn cases(&self) -> Vec<Case>;
    /// Computes the observations. Errors make the run fail.
    fn observe(&self, params: &Params, ctx: &RunContext) -> Result<Vec<Observation>, ScenarioError>;
}
