use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::Value;

use crate::golden::GoldenTable;
use crate::scenario::{Params, RunContext, Scenario, ScenarioResult, Status};
use crate::scenarios;

pub struct Registry {
    scenarios: Vec<Box<dyn Scenario>>,
}

impl Registry {
    pub fn standard() -> Self {
        Registry {
            scenarios: scenarios::standard(),
        }
    }

    pub fn all(&self) -> &[Box<dyn Scenario>] {
        &self.scenarios
    }

    pub fn find(&self, id: &str) -> Option<&dyn Scenario> {
        self.scenarios.iter().find(|s| s.id() == id).map(|s| s.as_ref())
    }

    /// Every `(scenario, params)` pair `run-all` executes, in listing order.
    /// A nonempty `only` keeps just the named scenarios.
    pub fn plan(&self, skip_slow: bool, only: &[String]) -> Vec<(&dyn Scenario, Params)> {
        self.scenarios
            .iter()
            .filter(|s| only.is_empty() || only.iter().any(|id| id == s.id()))
            .flat_map(|s| {
                s.cases()
                    .into_iter()
                    .filter(move |c| !(skip_slow && c.slow))
                    .map(move |c| (s.as_ref(), c.params))
            })
            .collect()
    }
}

/// Cases of `scenario` selected by `overrides`: the registered cases whose
/// parameters agree on every overridden key, or, if none do, the first case
/// with the overrides applied.
pub fn select_cases(scenario: &dyn Scenario, overrides: &Params) -> Vec<Params> {
    let cases: Vec<Params> = scenario.cases().into_iter().map(|c| c.params).collect();
    if overrides.0.is_empty() {
        return cases;
    }
    let matching: Vec<Params> = cases
        .iter()
        .filter(|p| overrides.0.iter().all(|(k, v)| p.0.get(k) == Some(v)))
        .cloned()
        .collect();
    if !matching.is_empty() {
        return matching;
    }
    let mut merged = cases.into_iter().next().unwrap_or_default();
    for (k, v) in &overrides.0 {
        merged.0.insert(k.clone(), v.clone());
    }
    vec![merged]
}

/// Runs one case. Errors fail the run, a missing golden entry skips it, and
/// otherwise it passes exactly when every observation matches.
pub fn run_case(scenario: &dyn Scenario, params: &Params, ctx: &RunContext, golden: &GoldenTable) -> ScenarioResult {
    let start = Instant::now();
    let outcome = scenario.observe(params, ctx);
    let runtime_ms = Some(start.elapsed().as_millis() as u64);
    let (status, observations, mismatches) = match outcome {
        Err(e) => (Status::Fail, Vec::new(), vec![format!("error: {e}")]),
        Ok(observations) => match golden.entry(scenario.id(), params) {
            None => (Status::Skip, observations, vec!["no golden entry".to_string()]),
            Some(entry) => {
                let mismatches = GoldenTable::compare(entry, &observations);
                let status = if mismatches.is_empty() { Status::Pass } else { Status::Fail };
                (status, observations, mismatches)
            }
        },
    };
    ScenarioResult {
        id: scenario.id().to_string(),
        params: params.clone(),
        status,
        observations,
        mismatches,
        runtime_ms,
    }
}

/// Runs the plan on `jobs` workers; results keep plan order.
pub fn run_plan(
    plan: &[(&dyn Scenario, Params)],
    ctx: &RunContext,
    golden: &GoldenTable,
    jobs: usize,
) -> Vec<ScenarioResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| plan.par_iter().map(|(s, p)| run_case(*s, p, ctx, golden)).collect())
}

pub fn all_ok(results: &[ScenarioResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

pub fn strip_timings(results: &mut [ScenarioResult]) {
    for r in results {
        r.runtime_ms = None;
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn render(results: &[ScenarioResult], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(results).expect("serializable") + "\n",
        Format::Text => {
            let mut out = String::new();
            for r in results {
                let time = r.runtime_ms.map(|t| format!(" ({t} ms)")).unwrap_or_default();
                let _ = writeln!(out, "{:<4} {} [{}]{}", r.status, r.id, r.params, time);
                for o in &r.observations {
                    let _ = writeln!(out, "       {} = {}", o.label, compact(&o.value));
                }
                for m in &r.mismatches {
                    let _ = writeln!(out, "     ! {m}");
                }
            }
            let count = |s: Status| results.iter().filter(|r| r.status == s).count();
            let _ = writeln!(
                out,
                "{} passed, {} failed, {} skipped",
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Skip)
            );
            out
        }
        Format::Tsv => {
            let mut out = String::from("id\tparams\tstatus\tlabel\tvalue\truntime_ms\n");
            for r in results {
                let time = r.runtime_ms.map(|t| t.to_string()).unwrap_or_default();
                if r.observations.is_empty() {
                    let _ = writeln!(out, "{}\t{}\t{}\t\t\t{}", r.id, r.params, r.status, time);
                }
                for o in &r.observations {
                    let _ = writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}",
                        r.id,
                        r.params,
                        r.status,
                        o.label,
                        compact(&o.value),
                        time
                    );
                }
            }
            out
        }
    }
}
