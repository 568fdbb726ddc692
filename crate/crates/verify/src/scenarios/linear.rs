use std::collections::{BTreeMap, HashSet};

use serde_json::{json, Value};

use wielandt_core::actions::{
    affine_complement_verdict, chain_order, induced_permutation, ActionInstance, NonzeroVectors, OrbitPartition,
    ProjectivePoints,
};
use wielandt_core::atlas::{
    deleted_perm_module, gamma_normalizer, gammal1, lift, normalizer_extension, s0, scalars, sl23_ext,
    sl25_in_gl2, tensor_group, Alternation, AtlasError, TensorKind,
};
use wielandt_core::gfield::Field;
use wielandt_core::groupkit::{
    divisor_count, sylow_shape, table_subgroups, GeneratedGroup, GroupElement, Permutation, QuotientGroup,
    SylowKind, DEFAULT_CAP,
};
use wielandt_core::matsemi::{Matrix, VectorPoint, VectorSpace};

use super::spot_check_action;
use super::table1::orbits;
use crate::scenario::{obs, Case, Observation, Params, RunContext, Scenario, ScenarioError};

fn field(q: i64) -> Result<Field, ScenarioError> {
    let q = u32::try_from(q).map_err(|_| ScenarioError::Params(format!("q = {q} out of range")))?;
    Ok(Field::of_order(q).map_err(AtlasError::from)?)
}

fn q_cases(qs: &[u32]) -> Vec<Case> {
    qs.iter().map(|&q| Case::fast(Params::new().with("q", q))).collect()
}

fn sorted_sizes(p: &OrbitPartition) -> Vec<usize> {
    p.sorted_sizes()
}

/// Permutations induced on `P_1(F_q^2)` and the order of their group.
fn projective_image(field: &Field, gens: &[Matrix]) -> Result<(Vec<Permutation>, u64), ScenarioError> {
    let action = ProjectivePoints(VectorSpace::new(field, 2));
    let perms = gens
        .iter()
        .map(|g| induced_permutation(&action, g))
        .collect::<Result<Vec<_>, _>>()?;
    let order = chain_order(&perms)?;
    Ok((perms, order))
}

pub struct ScalarTransitive;

impl Scenario for ScalarTransitive {
    fn id(&self) -> &'static str {
        "scalar_transitive"
    }

    fn claim(&self) -> &'static str {
        "F_p^* SL2(5) is transitive on the nonzero vectors of F_p^2"
    }

    fn cases(&self) -> Vec<Case> {
        q_cases(&[11, 19, 29])
    }

    fn observe(&self, params: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let f = field(params.int("q")?)?;
        let r = sl25_in_gl2(&f)?;
        let z = scalars(&f, 2, f.q() as u64 - 1)?;
        let mut gens = z.generators().to_vec();
        gens.extend(r.generators().iter().cloned());
        let g = GeneratedGroup::closure(gens, DEFAULT_CAP)?;
        let space = VectorSpace::new(&f, 2);
        let p = ActionInstance::from_group(&g, NonzeroVectors(space)).orbits()?;
        Ok(vec![
            obs("group_order", g.order()),
            obs("orbit_sizes", sorted_sizes(&p)),
            obs("transitive", p.count() == 1),
        ])
    }
}

pub struct ProjectiveOrbits;

impl Scenario for ProjectiveOrbits {
    fn id(&self) -> &'static str {
        "projective_orbits"
    }

    fn claim(&self) -> &'static str {
        "Z0 SL2(5) with |Z0| = 28 in GL2(169) has orbit sizes 20, 30, 60, 60 on 1-spaces"
    }

    fn cases(&self) -> Vec<Case> {
        vec![Case::fast(Params::new().with("q", 169).with("z0", 28))]
    }

    fn observe(&self, params: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let f = field(params.int("q")?)?;
        let z0 = params.int("z0")? as u64;
        let r = sl25_in_gl2(&f)?;
        let z = scalars(&f, 2, z0)?;
        let mut gens = z.generators().to_vec();
        gens.extend(r.generators().iter().cloned());
        let g = GeneratedGroup::closure(gens, DEFAULT_CAP)?;
        let (perms, image_order) = projective_image(&f, g.generators())?;
        let p = OrbitPartition::from_permutations(f.q() as usize + 1, &perms);
        Ok(vec![
            obs("group_order", g.order()),
            obs("projective_image_order", image_order),
            obs("projective_orbit_sizes", sorted_sizes(&p)),
        ])
    }
}

/// For each `m | q - 1`, whether `Z_0 R` (and, over `F_{p^2}`, its extension
/// by the normalizing semilinear element) is half-transitive and not
/// semiregular on `V^♯`.
pub struct ScalarChoices;

impl Scenario for ScalarChoices {
    fn id(&self) -> &'static str {
        "scalar_choices"
    }

    fn claim(&self) -> &'static str {
        "which scalar subgroups Z0 make Z0 SL2(5) or (Z0 SL2(5)).2 half-transitive and not semiregular"
    }

    fn cases(&self) -> Vec<Case> {
        q_cases(&[29, 169])
    }

    fn observe(&self, params: &Params, ctx: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let q = params.int("q")?;
        let f = field(q)?;
        let r = sl25_in_gl2(&f)?;
        let space = VectorSpace::new(&f, 2);
        let q1 = f.q() as u64 - 1;
        let mut linear = Vec::new();
        for m in (1..=q1).filter(|m| q1 % m == 0) {
            let mut gens = lift(scalars(&f, 2, m)?.generators());
            gens.extend(lift(r.generators()));
            let g = GeneratedGroup::closure(gens, DEFAULT_CAP)?;
            let order = g.order().unwrap();
            let p = orbits(g.generators(), &space)?;
            if let (true, Some(size)) = p.is_half_transitive() {
                if !p.is_semiregular(order) {
                    linear.push(json!([m, order, size, p.count()]));
                }
            }
        }
        let mut out = vec![obs("half_transitive_linear", linear)];
        if f.a() == 2 {
            // the semilinear overgroups need not contain any fixed lift of the
            // Frobenius, so read them off the full lattice over R
            let e = super::table1::enumerate(q as u32, ctx)?;
            let mut extended = Vec::new();
            for g in &e.qualifying {
                let elements = GeneratedGroup::closure(g.generators().to_vec(), DEFAULT_CAP)?;
                let elements = elements.elements()?;
                if elements.iter().all(|x| x.frob() == 0) {
                    continue;
                }
                let m = elements
                    .iter()
                    .filter(|x| x.frob() == 0 && x.matrix().as_scalar().is_some())
                    .count();
                let p = orbits(g.generators(), &space)?;
                extended.push((m, elements.len(), p.sizes[0], p.count()));
            }
            extended.sort();
            let extended: Vec<_> = extended.iter().map(|&(m, o, s, c)| json!([m, o, s, c])).collect();
            out.push(obs("half_transitive_extended", extended));
        }
        Ok(out)
    }
}

pub struct SemiregularSl25;

impl Scenario for SemiregularSl25 {
    fn id(&self) -> &'static str {
        "semiregular_sl25"
    }

    fn claim(&self) -> &'static str {
        "SL2(5) in GL2(q) is semiregular on nonzero vectors (a Frobenius complement)"
    }

    fn cases(&self) -> Vec<Case> {
        q_cases(&[11, 19, 29, 169])
    }

    fn observe(&self, params: &Params, ctx: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let f = field(params.int("q")?)?;
        let r = sl25_in_gl2(&f)?;
        let space = VectorSpace::new(&f, 2);
        spot_check_action(&space, r.group.elements()?, ctx.seed)?;
        let p = ActionInstance::from_group(&r.group, NonzeroVectors(space)).orbits()?;
        let id = Matrix::identity(&f, 2);
        let fixed_point_free = r
            .group
            .elements()?
            .iter()
            .filter(|g| !g.is_identity())
            .all(|g| !g.sub(&id).expect("same shape").det().is_zero());
        Ok(vec![
            obs("group_order", r.order()),
            obs("orbit_count", p.count()),
            obs("semiregular", p.is_semiregular(r.order())),
            obs("fixed_point_free", fixed_point_free),
            obs("frobenius_complement", affine_complement_verdict(&p, r.order())),
        ])
    }
}

/// Regular-orbit statistics of a projective image on `P_1(F_q^2)`.
fn regular_orbit_observations(field: &Field, gens: &[Matrix]) -> Result<Vec<Observation>, ScenarioError> {
    let (perms, image_order) = projective_image(field, gens)?;
    let n = field.q() as usize + 1;
    let p = OrbitPartition::from_permutations(n, &perms);
    Ok(vec![
        obs("projective_image_order", image_order),
        obs("regular_orbits", p.regular_orbit_count(image_order)),
        obs("points_in_regular_orbits", p.points_in_regular_orbits(image_order)),
    ])
}

fn value_of(observations: &[Observation], label: &str) -> i64 {
    observations
        .iter()
        .find(|o| o.label == label)
        .and_then(|o| o.value.as_i64())
        .expect("observation present")
}

pub struct RegularOrbitsA5;

impl Scenario for RegularOrbitsA5 {
    fn id(&self) -> &'static str {
        "regular_orbits_a5"
    }

    fn claim(&self) -> &'static str {
        "A5 on P1(F_q) has at least (q - 62)/60 regular orbits and q - 62 points in them"
    }

    fn cases(&self) -> Vec<Case> {
        q_cases(&[71, 101])
    }

    fn observe(&self, params: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let q = params.int("q")?;
        let f = field(q)?;
        let r = sl25_in_gl2(&f)?;
        let mut out = regular_orbit_observations(&f, r.generators())?;
        let orbit_bound = (q - 62 + 59).div_euclid(60);
        let point_bound = q - 62;
        out.push(obs("regular_orbit_bound", orbit_bound));
        out.push(obs("regular_orbit_bound_holds", value_of(&out, "regular_orbits") >= orbit_bound));
        out.push(obs("point_bound_holds", value_of(&out, "points_in_regular_orbits") >= point_bound));
        Ok(out)
    }
}

pub struct RegularOrbitsS4;

impl Scenario for RegularOrbitsS4 {
    fn id(&self) -> &'static str {
        "regular_orbits_s4"
    }

    fn claim(&self) -> &'static str {
        "S4 (image of SL2(3).2) on P1(F_q) has at least q - 32 points in regular orbits"
    }

    fn cases(&self) -> Vec<Case> {
        q_cases(&[67])
    }

    fn observe(&self, params: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let q = params.int("q")?;
        let f = field(q)?;
        let g = sl23_ext(&f)?;
        let mut out = regular_orbit_observations(&f, g.generators())?;
        out.push(obs("point_bound", q - 32));
        out.push(obs("point_bound_holds", value_of(&out, "points_in_regular_orbits") >= q - 32));
        Ok(out)
    }
}

pub struct TensorStabilizer;

impl Scenario for TensorStabilizer {
    fn id(&self) -> &'static str {
        "tensor_stabilizer"
    }

    fn claim(&self) -> &'static str {
        "in Z(R1 x R2) <= GL4(q) with R1 = R2^T, the stabilizer of e1(x)e1 + e2(x)e2 is {B (x) B^-T}"
    }

    fn cases(&self) -> Vec<Case> {
        q_cases(&[11])
    }

    fn observe(&self, params: &Params, ctx: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let f = field(params.int("q")?)?;
        let t = tensor_group(&f, TensorKind::Sl25Sl25, f.q() as u64 - 1)?;
        let elements = t.recipe.group.elements()?;
        spot_check_action(&VectorSpace::new(&f, 4), elements, ctx.seed)?;
        let v = VectorPoint::from_ints(&f, &[1, 0, 0, 1]);
        let stabilizer: HashSet<&Matrix> = elements
            .iter()
            .filter(|g| v.apply_matrix(g).expect("dimension 4") == v)
            .collect();
        let formula: HashSet<Matrix> = t
            .left
            .elements()?
            .iter()
            .map(|b| b.tensor(&b.inverse().expect("invertible").transpose()))
            .collect::<Result<_, _>>()
            .map_err(AtlasError::from)?;
        let equal = stabilizer.len() == formula.len() && formula.iter().all(|m| stabilizer.contains(m));
        Ok(vec![
            obs("group_order", t.recipe.order()),
            obs("factor_order", t.left.order().expect("enumerated")),
            // B and -B give the same tensor, so the stabilizer is half the factor
            obs("stabilizer_order", stabilizer.len()),
            obs("stabilizer_matches_formula", equal),
        ])
    }
}

pub struct DeletedModule;

impl Scenario for DeletedModule {
    fn id(&self) -> &'static str {
        "deleted_perm_module"
    }

    fn claim(&self) -> &'static str {
        "Z0 S_c on the sum-zero module: orbits of (1,-1,0..) and (1,1,-2,0..) have the stated sizes and differ"
    }

    fn cases(&self) -> Vec<Case> {
        [1, 2]
            .iter()
            .map(|&z0| {
                Case::fast(
                    Params::new()
                        .with("c", 5)
                        .with("p", 7)
                        .with("group", "symmetric")
                        .with("z0", z0),
                )
            })
            .collect()
    }

    fn observe(&self, params: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let c = params.int("c")? as usize;
        let p = params.int("p")? as u32;
        let z0 = params.int("z0")?;
        let kind = match params.text("group")? {
            "symmetric" => Alternation::Symmetric,
            "alternating" => Alternation::Alternating,
            other => return Err(ScenarioError::Params(format!("unknown group {other:?}"))),
        };
        let module = deleted_perm_module(c, p, kind, z0 as u64)?;
        let partition = module.instance().orbits()?;
        let size_of = |coords: &[i64]| -> Result<usize, ScenarioError> {
            let v = module.vector(coords);
            let i = module
                .points
                .iter()
                .position(|w| w == &v)
                .ok_or_else(|| ScenarioError::Invariant("vector not in the module".into()))?;
            Ok(partition.sizes[partition.orbit_of[i] as usize])
        };
        let mut v1 = vec![0; c];
        v1[0] = 1;
        v1[1] = -1;
        let mut v2 = vec![0; c];
        v2[0] = 1;
        v2[1] = 1;
        v2[2] = -2;
        let c = c as i64;
        let gcd2 = if z0 % 2 == 0 { 2 } else { 1 };
        let (s1, s2) = (size_of(&v1)?, size_of(&v2)?);
        Ok(vec![
            obs("orbit_v1", s1),
            obs("orbit_v2", s2),
            obs("formula_v1", c * (c - 1) * z0 / gcd2),
            obs("formula_v2", 3 * z0 * c * (c - 1) * (c - 2) / 6),
            obs("sizes_differ", s1 != s2),
            obs("half_transitive", partition.is_half_transitive().0),
        ])
    }
}

pub struct A5CyclicSubgroups;

impl Scenario for A5CyclicSubgroups {
    fn id(&self) -> &'static str {
        "a5_cyclic_subgroups"
    }

    fn claim(&self) -> &'static str {
        "A5 has 31 nontrivial cyclic subgroups, each fixing at most two points of P1(F_q)"
    }

    fn cases(&self) -> Vec<Case> {
        q_cases(&[71])
    }

    fn observe(&self, params: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let f = field(params.int("q")?)?;
        let r = sl25_in_gl2(&f)?;
        let (perms, _) = projective_image(&f, r.generators())?;
        let a5 = GeneratedGroup::closure(perms, DEFAULT_CAP)?;
        let histogram: BTreeMap<String, usize> = a5
            .order_histogram()?
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        let max_fixed = a5
            .elements()?
            .iter()
            .filter(|g| !g.is_identity())
            .map(Permutation::fixed_points)
            .max()
            .unwrap_or(0);
        Ok(vec![
            obs("order", a5.order()),
            obs("order_histogram", json!(histogram)),
            obs("nontrivial_cyclic_subgroups", a5.nontrivial_cyclic_subgroup_count()?),
            obs("max_fixed_points_of_nontrivial_element", max_fixed),
        ])
    }
}

pub struct MonomialS0;

impl Scenario for MonomialS0 {
    fn id(&self) -> &'static str {
        "s0"
    }

    fn claim(&self) -> &'static str {
        "monomial S0(q) has order 4(q - 1), is not perfect, and is half-transitive on nonzero vectors"
    }

    fn cases(&self) -> Vec<Case> {
        q_cases(&[11])
    }

    fn observe(&self, params: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let f = field(params.int("q")?)?;
        let g = s0(&f)?;
        let p = ActionInstance::from_group(&g.group, NonzeroVectors(VectorSpace::new(&f, 2))).orbits()?;
        let mut sizes = p.sorted_sizes();
        sizes.dedup();
        Ok(vec![
            obs("order", g.order()),
            obs("perfect", g.group.is_perfect(DEFAULT_CAP)?),
            obs("half_transitive", p.is_half_transitive().0),
            obs("distinct_orbit_sizes", sizes),
            obs("orbit_count", p.count()),
        ])
    }
}

pub struct GammaL1;

impl Scenario for GammaL1 {
    fn id(&self) -> &'static str {
        "gammal1"
    }

    fn claim(&self) -> &'static str {
        "GammaL1(p^d) in GLd(p) has order d(p^d - 1) and is half-transitive on nonzero vectors"
    }

    fn cases(&self) -> Vec<Case> {
        [(2, 3), (3, 2), (2, 4)]
            .iter()
            .map(|&(p, d)| Case::fast(Params::new().with("p", p).with("d", d)))
            .collect()
    }

    fn observe(&self, params: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let p = params.int("p")? as u32;
        let d = params.int("d")? as u32;
        let g = gammal1(p, d)?;
        let f = Field::new(p, 1).map_err(AtlasError::from)?;
        let part = ActionInstance::from_group(&g.group, NonzeroVectors(VectorSpace::new(&f, d as usize))).orbits()?;
        Ok(vec![
            obs("order", g.order()),
            obs("orbit_sizes", part.sorted_sizes()),
            obs("half_transitive", part.is_half_transitive().0),
        ])
    }
}

fn sylow_label(kind: SylowKind) -> &'static str {
    match kind {
        SylowKind::Cyclic => "cyclic",
        SylowKind::GeneralizedQuaternion => "generalized_quaternion",
        SylowKind::Other => "other",
    }
}

pub struct SylowSl25;

impl Scenario for SylowSl25 {
    fn id(&self) -> &'static str {
        "sylow_sl25"
    }

    fn claim(&self) -> &'static str {
        "Sylow subgroups of SL2(5) are cyclic or generalized quaternion; SL2(5) is perfect with one involution"
    }

    fn cases(&self) -> Vec<Case> {
        q_cases(&[11])
    }

    fn observe(&self, params: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let f = field(params.int("q")?)?;
        let r = sl25_in_gl2(&f)?;
        let shape: BTreeMap<String, Value> = sylow_shape(&r.group, DEFAULT_CAP)?
            .into_iter()
            .map(|(p, s)| (p.to_string(), json!([s.order, sylow_label(s.kind)])))
            .collect();
        let involutions = r.group.order_histogram()?.get(&2).copied().unwrap_or(0);
        Ok(vec![
            obs("sylow", json!(shape)),
            obs("perfect", r.group.is_perfect(DEFAULT_CAP)?),
            obs("involutions", involutions),
        ])
    }
}

pub struct Normalizer;

impl Scenario for Normalizer {
    fn id(&self) -> &'static str {
        "normalizer"
    }

    fn claim(&self) -> &'static str {
        "N = normalizer of SL2(5) in GammaL2(q); |N| and the subgroup lattice of N/SL2(5)"
    }

    fn cases(&self) -> Vec<Case> {
        q_cases(&[19, 49, 169])
    }

    fn observe(&self, params: &Params, _: &RunContext) -> Result<Vec<Observation>, ScenarioError> {
        let f = field(params.int("q")?)?;
        let r = sl25_in_gl2(&f)?;
        let n = gamma_normalizer(&f, &r.group)?;
        let r_semi = GeneratedGroup::closure(lift(r.generators()), DEFAULT_CAP)?;
        let quot = QuotientGroup::new(&n, &r_semi)?;
        let subgroups = table_subgroups(&quot).len();
        let cyclic = (0..quot.order()).any(|i| quot.element_order(i) == quot.order());
        let mut out = vec![
            obs("normalizer_order", n.order()),
            obs("quotient_order", quot.order()),
            obs("quotient_is_group", quot.satisfies_group_axioms()),
            obs("quotient_subgroups", subgroups),
            obs("quotient_cyclic", cyclic),
        ];
        if cyclic {
            out.push(obs("subgroups_match_divisor_count", subgroups == divisor_count(quot.order() as u64)));
        }
        if f.a() == 2 {
            let c = normalizer_extension(&f, &r.group)?;
            out.push(obs("extension_frob", c.frob()));
            out.push(obs("extension_square_linear", c.compose(&c).frob() == 0));
        }
        Ok(out)
    }
}
