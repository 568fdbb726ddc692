use std::collections::BTreeMap;

use serde_json::json;

use wielandt_core::actions::{frobenius_zassenhaus, transitivity_profile};
use wielandt_core::atlas::named_permgroup;

use crate::scenario::{obs, Case, Observation, Params, RunContext, Scenario, ScenarioError};

/// Catalogue members with the deepest level profiled, slow ones flagged.
const SUITE: [(&str, usize, bool); 12] = [
    ("A7_pairs", 2, false),
    ("S7_pairs", 2, false),
    ("PSL2(8)_deg28", 2, false),
    ("PGammaL2(8)_deg9", 4, false),
    ("AGammaL1(8)", 3, false),
    ("PGL2(7)_projline", 4, false),
    ("PSL2(7)_projline", 3, false),
    ("M11_deg11", 5, false),
    ("M11_deg12", 4, false),
    ("M12", 6, false),
    ("M22", 4, false),
    ("M23", 5, true),
];

fn depth_for(name: &str) -> Option<usize> {
    SUITE.iter().find(|(n, _, _)| *n == name).map(|&(_, k, _)| k)
}

pub struct PermutationSuite;

impl Scenario for PermutationSuite {
    fn id(&self) -> &'static str {
        "permutation_suite"
    }

    fn claim(&self) -> &'static str {
        "transitivity profiles (k, sharp, k+1/2), 3/2-transitivity, Frobenius and Zassenhaus flags of named groups"
    }

    fn cases(&self) -> Vec<Case> {
        SUITE
            .iter()
            .map(|&(name, _, slow)| {
                let p = Params::new().with("group", name);
                if slow {
                    Case::slow(p)
                } else {
                    Case::fast(p)
                }
            })
            .collect()
    }

    fn observe(&self, params: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let name = params.text("group")?;
        let g = named_permgroup(name)?;
        let depth = match params.int_or("k_max", 0)? {
            0 => depth_for(name).unwrap_or(3),
            k => k as usize,
        };
        let depth = depth.min(g.degree - 1);
        let profile = transitivity_profile(&g.generators, g.degree, depth)?;
        if profile.order != g.order {
            return Err(ScenarioError::Invariant(format!(
                "stabilizer chain gives order {}, expected {}",
                profile.order, g.order
            )));
        }
        if !profile.is_consistent() {
            return Err(ScenarioError::Invariant("k-transitive without (k-1/2)-transitive".into()));
        }
        let transitive_levels = profile.transitivity_degree();
        let sharp: Vec<usize> = profile.levels.iter().filter(|l| l.sharp).map(|l| l.k).collect();
        let half: Vec<usize> = profile.levels.iter().filter(|l| l.half).map(|l| l.k).collect();
        let stabilizer_orbits: BTreeMap<String, _> = profile
            .levels
            .iter()
            .filter(|l| l.transitive)
            .map(|l| (l.k.to_string(), json!(l.stabilizer_orbits)))
            .collect();
        let stabilizer_orders: BTreeMap<String, _> = profile
            .levels
            .iter()
            .filter_map(|l| l.stabilizer_order.map(|o| (l.k.to_string(), o)))
            .collect();
        let fz = frobenius_zassenhaus(&g.generators, g.degree)?;
        Ok(vec![
            obs("degree", g.degree),
            obs("order", g.order),
            obs("levels_checked", depth),
            obs("transitivity_degree", transitive_levels),
            obs("sharp_levels", sharp),
            obs("half_levels", half),
            obs("stabilizer_orbits", json!(stabilizer_orbits)),
            obs("stabilizer_orders", json!(stabilizer_orders)),
            obs("three_halves_transitive", profile.is_three_halves_transitive()),
            obs("frobenius", fz.frobenius),
            obs("zassenhaus", fz.zassenhaus),
        ])
    }
}
