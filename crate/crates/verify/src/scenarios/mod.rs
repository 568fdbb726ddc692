mod bounds;
mod linear;
mod perms;
pub mod table1;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use wielandt_core::groupkit::GroupElement;
use wielandt_core::matsemi::{RowAction, VectorSpace};

use crate::scenario::{Scenario, ScenarioError};

/// All scenarios, in listing order.
pub fn standard() -> Vec<Box<dyn Scenario>> {
    vec![
        Box::new(table1::Table1),
        Box::new(linear::ScalarTransitive),
        Box::new(linear::ProjectiveOrbits),
        Box::new(linear::ScalarChoices),
        Box::new(linear::SemiregularSl25),
        Box::new(linear::RegularOrbitsA5),
        Box::new(linear::RegularOrbitsS4),
        Box::new(linear::TensorStabilizer),
        Box::new(linear::DeletedModule),
        Box::new(linear::A5CyclicSubgroups),
        Box::new(linear::MonomialS0),
        Box::new(linear::GammaL1),
        Box::new(linear::SylowSl25),
        Box::new(linear::Normalizer),
        Box::new(perms::PermutationSuite),
        Box::new(bounds::PolyY6),
        Box::new(bounds::Ineq2Hcf2),
        Box::new(bounds::Ineq2SixR),
    ]
}

/// Samples `(g, h, v)` and checks `v(gh) = (vg)h` on nonzero vectors.
pub(crate) fn spot_check_action<G: GroupElement + RowAction>(
    space: &VectorSpace,
    elements: &[G],
    seed: u64,
) -> Result<(), ScenarioError> {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..64 {
        let g = &elements[rng.gen_range(0..elements.len())];
        let h = &elements[rng.gen_range(0..elements.len())];
        let v = rng.gen_range(0..space.nonzero_count());
        let direct = space.act_vector(&g.compose(h), v);
        let stepwise = space.act_vector(h, space.act_vector(g, v));
        if direct != stepwise {
            return Err(ScenarioError::Invariant(format!(
                "right action fails on vector {v} (seed {seed})"
            )));
        }
    }
    Ok(())
}
