use std::collections::BTreeMap;

use serde_json::json;

use wielandt_core::actions::{ActionInstance, NonzeroVectors, OrbitPartition};
use wielandt_core::atlas::{gamma_normalizer, lift, sl25_in_gl2};
use wielandt_core::gfield::Field;
use wielandt_core::groupkit::{subgroups_between, GeneratedGroup, DEFAULT_CAP};
use wielandt_core::matsemi::{SemilinearMap, VectorSpace};

use super::spot_check_action;
use crate::scenario::{obs, Case, Observation, Params, RunContext, Scenario, ScenarioError};

/// Field sizes swept by default; 59 and 61 are slow.
pub const SWEEP: [u32; 9] = [11, 19, 29, 31, 41, 49, 59, 61, 169];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Row {
    pub order: u64,
    pub orbit_size: usize,
    pub orbit_count: usize,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub normalizer_order: u64,
    pub quotient_order: usize,
    pub subgroups: usize,
    /// Distinct rows, each with the number of subgroups realizing it.
    pub rows: BTreeMap<Row, usize>,
    /// Every orbit partition covered `V^♯` exactly.
    pub covers: bool,
    /// The half-transitive, non-semiregular subgroups themselves.
    pub qualifying: Vec<GeneratedGroup<SemilinearMap>>,
}

/// Every `G` with `R ⊴ G ≤ N_{ΓL_2(q)}(R)`, `R = SL_2(5)`, that is
/// half-transitive and not semiregular on `V^♯`.
pub fn enumerate(q: u32, ctx: &RunContext) -> Result<Enumeration, ScenarioError> {
    let field = Field::of_order(q).map_err(wielandt_core::atlas::AtlasError::from)?;
    let r = sl25_in_gl2(&field)?;
    let n = gamma_normalizer(&field, &r.group)?;
    let r_semi = GeneratedGroup::closure(lift(r.generators()), DEFAULT_CAP)?;
    let (quot, subs) = subgroups_between(&n, &r_semi)?;
    let space = VectorSpace::new(&field, 2);
    spot_check_action(&space, n.elements()?, ctx.seed)?;
    let vsharp = space.nonzero_count();
    let mut rows = BTreeMap::new();
    let mut covers = true;
    let mut qualifying = Vec::new();
    for g in subs.iter() {
        let order = g.order().expect("pullbacks carry their order");
        let partition = orbits(g.generators(), &space)?;
        covers &= partition.sizes.iter().sum::<usize>() == vsharp;
        let (half, size) = partition.is_half_transitive();
        if half && !partition.is_semiregular(order) {
            let row = Row {
                order,
                orbit_size: size.expect("nonempty"),
                orbit_count: partition.count(),
            };
            *rows.entry(row).or_insert(0) += 1;
            qualifying.push(g.clone());
        }
    }
    Ok(Enumeration {
        normalizer_order: n.order().expect("enumerated"),
        quotient_order: quot.order(),
        subgroups: subs.len(),
        rows,
        covers,
        qualifying,
    })
}

pub(crate) fn orbits(gens: &[SemilinearMap], space: &VectorSpace) -> Result<OrbitPartition, ScenarioError> {
    Ok(ActionInstance::new(gens.to_vec(), NonzeroVectors(space.clone()), None).orbits()?)
}

pub struct Table1;

impl Scenario for Table1 {
    fn id(&self) -> &'static str {
        "table1"
    }

    fn claim(&self) -> &'static str {
        "half-transitive, non-semiregular overgroups of SL2(5) in GammaL2(q): rows (|G|, orbit size, orbit count)"
    }

    fn cases(&self) -> Vec<Case> {
        SWEEP
            .iter()
            .map(|&q| {
                let p = Params::new().with("q", q);
                if q == 59 || q == 61 {
                    Case::slow(p)
                } else {
                    Case::fast(p)
                }
            })
            .collect()
    }

    fn observe(&self, params: &Params, ctx: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let q = params.int("q")? as u32;
        let e = enumerate(q, ctx)?;
        let rows: Vec<_> = e
            .rows
            .keys()
            .map(|r| json!([r.order, r.orbit_size, r.orbit_count]))
            .collect();
        let multiplicity: Vec<_> = e.rows.values().copied().collect();
        Ok(vec![
            obs("rows", rows),
            obs("row_multiplicity", multiplicity),
            obs("normalizer_order", e.normalizer_order),
            obs("quotient_order", e.quotient_order),
            obs("subgroups_examined", e.subgroups),
            obs("orbits_cover_nonzero_vectors", e.covers),
        ])
    }
}
