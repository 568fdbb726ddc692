use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::scenario::{Observation, Params, ScenarioResult};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// A value stated in the published classification.
    Published,
    /// Obtained by brute-force computation and cross-checked independently.
    Computed,
    /// Immediate from definitions.
    Elementary,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenObservation {
    pub label: String,
    pub value: Value,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenEntry {
    pub id: String,
    pub params: Params,
    pub observations: Vec<GoldenObservation>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenTable {
    pub entries: Vec<GoldenEntry>,
}

pub const SHIPPED: &str = include_str!("../golden/golden.json");

#[derive(Debug, thiserror::Error)]
pub enum GoldenError {
    #[error("golden file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("golden file: {0}")]
    Io(#[from] std::io::Error),
    #[error("duplicate golden entry {id} [{params}]")]
    Duplicate { id: String, params: String },
}

impl GoldenTable {
    pub fn parse(text: &str) -> Result<Self, GoldenError> {
        let table: GoldenTable = serde_json::from_str(text)?;
        let mut seen = std::collections::HashSet::new();
        for e in &table.entries {
            if !seen.insert((e.id.clone(), e.params.to_string())) {
                return Err(GoldenError::Duplicate {
                    id: e.id.clone(),
                    params: e.params.to_string(),
                });
            }
        }
        Ok(table)
    }

    pub fn shipped() -> Self {
        GoldenTable::parse(SHIPPED).expect("shipped golden file parses")
    }

    pub fn load(path: &Path) -> Result<Self, GoldenError> {
        GoldenTable::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn entry(&self, id: &str, params: &Params) -> Option<&GoldenEntry> {
        self.entries.iter().find(|e| e.id == id && &e.params == params)
    }

    /// Differences between observations and the golden entry; empty means
    /// every observation has a golden counterpart with an identical value and
    /// vice versa.
    pub fn compare(entry: &GoldenEntry, observations: &[Observation]) -> Vec<String> {
        let expected: BTreeMap<&str, &Value> =
            entry.observations.iter().map(|o| (o.label.as_str(), &o.value)).collect();
        let got: BTreeMap<&str, &Value> = observations.iter().map(|o| (o.label.as_str(), &o.value)).collect();
        let mut out = Vec::new();
        for (label, want) in &expected {
            match got.get(label) {
                None => out.push(format!("{label}: missing, expected {want}")),
                Some(have) if have != want => out.push(format!("{label}: got {have}, expected {want}")),
                _ => {}
            }
        }
        for label in got.keys().filter(|l| !expected.contains_key(*l)) {
            out.push(format!("{label}: no golden value"));
        }
        out
    }

    /// Replaces or inserts entries from fresh results. Labels that already
    /// exist keep their source; new labels are marked computed.
    pub fn absorb(&mut self, results: &[ScenarioResult]) {
        for r in results {
            if r.observations.is_empty() {
                continue;
            }
            let old: BTreeMap<String, Source> = self
                .entry(&r.id, &r.params)
                .map(|e| e.observations.iter().map(|o| (o.label.clone(), o.source)).collect())
                .unwrap_or_default();
            let entry = GoldenEntry {
                id: r.id.clone(),
                params: r.params.clone(),
                observations: r
                    .observations
                    .iter()
                    .map(|o| GoldenObservation {
                        label: o.label.clone(),
                        value: o.value.clone(),
                        source: old.get(&o.label).copied().unwrap_or(Source::Computed),
                    })
                    .collect(),
            };
            match self.entries.iter_mut().find(|e| e.id == r.id && e.params == r.params) {
                Some(slot) => *slot = entry,
                None => self.entries.push(entry),
            }
        }
    }
}
