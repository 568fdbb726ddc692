use wielandt_core::actions::{
    frobenius_zassenhaus, transitivity_profile, tuple_orbit_stabilizer, ActionInstance, NonzeroVectors,
    OrbitPartition, ProjectivePoints,
};
use wielandt_core::atlas::{
    gamma_normalizer, lift, named_permgroup, normalizer_extension, sl25_in_gl2, GroupRecipe,
};
use wielandt_core::gfield::Field;
use wielandt_core::groupkit::{
    element_order, subgroups_between, GeneratedGroup, GroupElement, QuotientGroup, DEFAULT_CAP,
};
use wielandt_core::matsemi::{SemilinearMap, VectorSpace};

fn field(q: u32) -> Field {
    Field::of_order(q).unwrap()
}

fn lifted(r: &GroupRecipe<wielandt_core::matsemi::Matrix>) -> GeneratedGroup<SemilinearMap> {
    GeneratedGroup::closure(lift(r.generators()), DEFAULT_CAP).unwrap()
}

#[test]
fn normalizer_over_f169() {
    let f = field(169);
    let r = sl25_in_gl2(&f).unwrap();
    let c = normalizer_extension(&f, &r.group).unwrap();
    assert_eq!(c.frob(), 1);
    assert_eq!(c.compose(&c).frob(), 0);
    let five = r.group.elements().unwrap().iter().find(|g| element_order(*g) == 5).unwrap();
    let five = SemilinearMap::linear(five.clone()).unwrap();
    assert_eq!(element_order(&five.conjugate_by(&c)), 5);

    let n = gamma_normalizer(&f, &r.group).unwrap();
    assert_eq!(n.order(), Some(20160));
    let r_semi = lifted(&r);
    let quot = QuotientGroup::new(&n, &r_semi).unwrap();
    assert_eq!(quot.order(), 168);
}

#[test]
fn normalizer_over_f49_has_quotient_48() {
    let f = field(49);
    let r = sl25_in_gl2(&f).unwrap();
    let n = gamma_normalizer(&f, &r.group).unwrap();
    let quot = QuotientGroup::new(&n, &lifted(&r)).unwrap();
    assert_eq!(quot.order(), 48);
}

#[test]
fn scalar_extension_quotient_for_q19_is_cyclic_of_order_9() {
    let f = field(19);
    let r = sl25_in_gl2(&f).unwrap();
    let n = gamma_normalizer(&f, &r.group).unwrap();
    assert_eq!(n.order(), Some(1080));
    let (quot, subs) = subgroups_between(&n, &lifted(&r)).unwrap();
    assert_eq!(quot.order(), 9);
    assert!(quot.satisfies_group_axioms());
    assert!((0..9).any(|i| quot.element_order(i) == 9));
    let orders: Vec<u64> = subs.iter().map(|g| g.order().unwrap()).collect();
    assert_eq!(orders, vec![120, 360, 1080]);
}

#[test]
fn sl25_semiregular_on_nonzero_vectors() {
    for q in [11, 19, 29, 169] {
        let f = field(q);
        let r = sl25_in_gl2(&f).unwrap();
        let inst = ActionInstance::from_group(&r.group, NonzeroVectors(VectorSpace::new(&f, 2)));
        let orbits = inst.orbits().unwrap();
        assert!(orbits.is_semiregular(120), "q = {q}");
        // fixed-point-free: det(g - 1) != 0 for every g != 1
        for g in r.group.elements().unwrap().iter().filter(|g| !g.is_identity()) {
            let shifted = g.sub(&g.identity_like()).unwrap();
            assert!(!shifted.det().is_zero());
        }
    }
}

#[test]
fn a5_image_on_projective_line() {
    let f = field(71);
    let r = sl25_in_gl2(&f).unwrap();
    let inst = ActionInstance::from_group(&r.group, ProjectivePoints(VectorSpace::new(&f, 2)));
    let orbits = inst.orbits().unwrap();
    assert_eq!(orbits.sizes.iter().sum::<usize>(), 72);
    assert!(orbits.regular_orbit_exists(60));
}

#[test]
fn mathieu_profiles() {
    let m11 = named_permgroup("M11_deg11").unwrap();
    let p = transitivity_profile(&m11.generators, 11, 4).unwrap();
    assert_eq!(p.order, 7920);
    assert!(p.level(4).transitive && p.level(4).sharp);
    assert!(p.is_consistent());

    let m12 = named_permgroup("M12").unwrap();
    let p = transitivity_profile(&m12.generators, 12, 5).unwrap();
    assert!(p.level(5).sharp);

    let m11_12 = named_permgroup("M11_deg12").unwrap();
    let p = transitivity_profile(&m11_12.generators, 12, 3).unwrap();
    assert!(p.level(3).transitive);
    assert_eq!(p.level(3).stabilizer_orbits, vec![3, 6]);

    let m22 = named_permgroup("M22").unwrap();
    let p = transitivity_profile(&m22.generators, 22, 3).unwrap();
    assert_eq!(p.order, 443520);
    assert_eq!(p.level(3).stabilizer_orbits, vec![3, 16]);
}

#[test]
fn projective_and_affine_suite() {
    let g = named_permgroup("PGammaL2(8)_deg9").unwrap();
    let p = transitivity_profile(&g.generators, 9, 4).unwrap();
    assert_eq!(p.transitivity_degree(), 3);
    assert!(p.level(3).half);
    assert_eq!(p.level(3).stabilizer_orbits, vec![3, 3]);
    assert_eq!(p.level(3).stabilizer_order, Some(3));

    let g = named_permgroup("AGammaL1(8)").unwrap();
    let v = frobenius_zassenhaus(&g.generators, 8).unwrap();
    assert!(v.zassenhaus && !v.frobenius);

    let g = named_permgroup("PGL2(7)_projline").unwrap();
    let p = transitivity_profile(&g.generators, 8, 3).unwrap();
    assert!(p.level(3).sharp);

    let g = named_permgroup("PSL2(8)_deg28").unwrap();
    let p = transitivity_profile(&g.generators, 28, 1).unwrap();
    assert!(p.is_three_halves_transitive());
    assert_eq!(p.level(1).stabilizer_orbits, vec![9, 9, 9]);

    for name in ["A7_pairs", "S7_pairs"] {
        let g = named_permgroup(name).unwrap();
        let p = transitivity_profile(&g.generators, 21, 1).unwrap();
        assert!(p.is_three_halves_transitive());
        assert_eq!(p.level(1).stabilizer_orbits, vec![10, 10]);
    }
}

#[test]
fn orbit_stabilizer_on_pairs_of_m11() {
    let g = named_permgroup("M11_deg11").unwrap();
    let r = tuple_orbit_stabilizer(&g.generators, &[0, 1], 1 << 20).unwrap();
    assert_eq!(r.orbit_size, 110);
    let stab = GeneratedGroup::closure(r.stabilizer, DEFAULT_CAP).unwrap();
    assert_eq!(r.orbit_size as u64 * stab.order().unwrap(), 7920);
    let orbits = OrbitPartition::from_permutations(11, stab.generators());
    assert!(orbits.is_closed_under(stab.generators()));
}

#[test]
fn m23_four_point_stabilizer() {
    let g = named_permgroup("M23").unwrap();
    let p = transitivity_profile(&g.generators, 23, 4).unwrap();
    assert_eq!(p.order, 10200960);
    assert!(p.level(4).transitive);
    assert_eq!(p.level(4).stabilizer_order, Some(48));
    assert_eq!(p.level(4).stabilizer_orbits, vec![3, 16]);
    assert!(!p.level(4).half);
}
