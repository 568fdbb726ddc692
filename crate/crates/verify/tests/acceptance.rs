//! Acceptance checks, one line per criterion. Expected values are written out
//! here rather than read from the golden file, so the two sources of truth
//! check each other.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use wielandt_core::actions::{chain_order, ActionInstance, NonzeroVectors};
use wielandt_core::atlas::{gamma_normalizer, lift, named_permgroup, scalars, sl25_in_gl2};
use wielandt_core::gfield::Field;
use wielandt_core::groupkit::{subgroups_between, table_subgroups, GeneratedGroup, Permutation, QuotientGroup, DEFAULT_CAP};
use wielandt_core::matsemi::VectorSpace;
use wielandt_verify::scenario::{Params, RunContext};
use wielandt_verify::Registry;

type Check = Result<String, String>;

fn observe(id: &str, params: Params) -> Result<BTreeMap<String, Value>, String> {
    let registry = Registry::standard();
    let s = registry.find(id).ok_or_else(|| format!("no scenario {id}"))?;
    let obs = s
        .observe(&params, &RunContext::default())
        .map_err(|e| format!("{id} [{params}]: {e}"))?;
    Ok(obs.into_iter().map(|o| (o.label, o.value)).collect())
}

fn q(n: i64) -> Params {
    Params::new().with("q", n)
}

fn expect(what: &str, got: &Value, want: Value) -> Result<(), String> {
    if *got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn timed(budget: Duration, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    let out = f()?;
    let t = start.elapsed();
    if t > budget {
        return Err(format!("{out}; took {t:.1?}, budget {budget:?}"));
    }
    Ok(format!("{out} in {t:.1?}"))
}

fn table1_rows() -> Check {
    let cases = [
        (11, json!([[600, 120, 1]]), 5),
        (19, json!([[360, 120, 3], [1080, 360, 1]]), 5),
        (29, json!([[240, 120, 7], [1680, 840, 1]]), 5),
        (169, json!([[3360, 1680, 17]]), 60),
    ];
    let mut parts = Vec::new();
    for (n, want, secs) in cases {
        parts.push(timed(Duration::from_secs(secs), || {
            let o = observe("table1", q(n))?;
            expect(&format!("q={n} rows"), &o["rows"], want.clone())?;
            Ok(format!("q={n} {want}"))
        })?);
    }
    Ok(parts.join("; "))
}

fn negative_sweep() -> Check {
    let mut parts = Vec::new();
    for n in [31, 41, 49, 59, 61] {
        let line = timed(Duration::from_secs(30), || {
            let o = observe("table1", q(n))?;
            expect(&format!("q={n} rows"), &o["rows"], json!([]))?;
            Ok(format!("q={n} empty"))
        })?;
        parts.push(line);
    }
    Ok(parts.join("; "))
}

fn projective_orbits() -> Check {
    timed(Duration::from_secs(10), || {
        let o = observe("projective_orbits", q(169).with("z0", 28))?;
        expect("1-space orbits", &o["projective_orbit_sizes"], json!([20, 30, 60, 60]))?;
        Ok("orbits on 1-spaces [20,30,60,60]".into())
    })
}

fn scalar_transitive() -> Check {
    timed(Duration::from_secs(5), || {
        for p in [11i64, 19, 29] {
            let o = observe("scalar_transitive", q(p))?;
            expect(&format!("p={p} orbits"), &o["orbit_sizes"], json!([p * p - 1]))?;
        }
        Ok("single orbit of size p^2-1 for p = 11, 19, 29".into())
    })
}

fn semiregular() -> Check {
    timed(Duration::from_secs(5), || {
        for n in [11, 19, 29, 169] {
            let o = observe("semiregular_sl25", q(n))?;
            expect(&format!("q={n} semiregular"), &o["semiregular"], json!(true))?;
            expect(&format!("q={n} fixed-point-free"), &o["fixed_point_free"], json!(true))?;
        }
        Ok("SL2(5) fixed-point-free for q = 11, 19, 29, 169".into())
    })
}

fn regular_orbits() -> Check {
    timed(Duration::from_secs(5), || {
        let mut parts = Vec::new();
        for n in [71i64, 101] {
            let o = observe("regular_orbits_a5", q(n))?;
            let bound = (n - 62 + 59) / 60;
            let got = o["regular_orbits"].as_i64().ok_or("regular_orbits missing")?;
            if got < bound {
                return Err(format!("q={n}: {got} regular orbits < {bound}"));
            }
            parts.push(format!("A5 q={n}: {got} >= {bound}"));
        }
        let o = observe("regular_orbits_s4", q(67))?;
        let got = o["points_in_regular_orbits"].as_i64().ok_or("points missing")?;
        if got < 67 - 32 {
            return Err(format!("S4 q=67: {got} points < 35"));
        }
        parts.push(format!("S4 q=67: {got} >= 35 points"));
        Ok(parts.join("; "))
    })
}

fn tensor() -> Check {
    timed(Duration::from_secs(60), || {
        let o = observe("tensor_stabilizer", q(11))?;
        expect("|G|", &o["group_order"], json!(36000))?;
        expect("stabilizer = {B (x) B^-T}", &o["stabilizer_matches_formula"], json!(true))?;
        expect("|R1|", &o["factor_order"], json!(120))?;
        // B and -B give the same tensor: 120 parameters, 60 distinct elements
        expect("stabilizer order", &o["stabilizer_order"], json!(60))?;
        Ok("stabilizer equals {B (x) B^-T : B in R1} elementwise; |R1| = 120, 60 distinct elements".into())
    })
}

fn deleted_module() -> Check {
    timed(Duration::from_secs(5), || {
        for z0 in [1i64, 2] {
            let p = Params::new().with("c", 5).with("p", 7).with("group", "symmetric").with("z0", z0);
            let o = observe("deleted_perm_module", p)?;
            let (c, z) = (5i64, z0);
            let gcd2 = if z % 2 == 0 { 2 } else { 1 };
            let v1 = c * (c - 1) * z / gcd2;
            let v2 = 3 * z * (c * (c - 1) * (c - 2) / 6);
            expect(&format!("z0={z0} v1"), &o["orbit_v1"], json!(v1))?;
            expect(&format!("z0={z0} v2"), &o["orbit_v2"], json!(v2))?;
            expect(&format!("z0={z0} differ"), &o["sizes_differ"], json!(true))?;
        }
        Ok("|v1^G|, |v2^G| = (20,30) for |Z0|=1 and (20,60) for |Z0|=2".into())
    })
}

fn permutation_suite() -> Check {
    timed(Duration::from_secs(120), || {
        let g = |name: &str| observe("permutation_suite", Params::new().with("group", name));
        for name in ["A7_pairs", "S7_pairs"] {
            let o = g(name)?;
            expect(name, &o["three_halves_transitive"], json!(true))?;
            expect(name, &o["stabilizer_orbits"]["1"], json!([10, 10]))?;
        }
        let o = g("PSL2(8)_deg28")?;
        expect("PSL2(8) deg 28", &o["three_halves_transitive"], json!(true))?;
        expect("PSL2(8) deg 28", &o["stabilizer_orbits"]["1"], json!([9, 9, 9]))?;
        let o = g("PGammaL2(8)_deg9")?;
        expect("PGammaL2(8) degree", &o["transitivity_degree"], json!(3))?;
        let half = o["half_levels"].as_array().ok_or("half_levels")?;
        if !half.contains(&json!(3)) {
            return Err("PGammaL2(8) not (3+1/2)-transitive".into());
        }
        expect("AGammaL1(8) Zassenhaus", &g("AGammaL1(8)")?["zassenhaus"], json!(true))?;
        let o = g("PGL2(7)_projline")?;
        expect("PGL2(7) transitivity", &o["transitivity_degree"], json!(3))?;
        expect("PGL2(7) sharp", &o["sharp_levels"], json!([3]))?;
        let o = g("M11_deg11")?;
        expect("M11 transitivity", &o["transitivity_degree"], json!(4))?;
        expect("M11 sharp", &o["sharp_levels"], json!([4]))?;
        let a = g("M11_deg12")?["stabilizer_orbits"]["3"].clone();
        let b = g("M22")?["stabilizer_orbits"]["3"].clone();
        let mut pair = vec![a.to_string(), b.to_string()];
        pair.sort();
        if pair != ["[3,16]", "[3,6]"] {
            return Err(format!("M11 deg 12 / M22 3-point stabilizer orbits {pair:?}"));
        }
        let o = g("M23")?;
        expect("M23 transitivity", &o["transitivity_degree"], json!(4))?;
        expect("M23 4-point orbits", &o["stabilizer_orbits"]["4"], json!([3, 16]))?;
        if o["half_levels"].as_array().ok_or("half_levels")?.contains(&json!(4)) {
            return Err("M23 reported (4+1/2)-transitive".into());
        }
        Ok(format!("all flags exact; M11 deg 12 -> {a}, M22 -> {b}, M23 -> [3,16] not 4.5"))
    })
}

fn inequalities() -> Check {
    timed(Duration::from_secs(1), || {
        let o = observe("poly_y6", Params::new())?;
        expect("poly_y6", &o["false_for_7_to_200"], json!(true))?;
        expect("poly_y6 at 7", &o["sides_at_7"], json!([44342, 117649]))?;
        let o = observe("ineq2_hcf2", Params::new())?;
        expect("sqrt(q) bound", &o["largest_root_bound"], json!(121))?;
        expect("beyond bound", &o["fails_beyond_bound"], json!(true))?;
        Ok("y^6 form false for 7..200; sqrt(q) <= 121".into())
    })
}

/// Normal subgroups of the transitive group `Z R` are half-transitive.
fn normal_subgroups_half_transitive() -> Result<usize, String> {
    let mut checked = 0;
    for n in [11u32, 19, 29] {
        let f = Field::of_order(n).map_err(|e| e.to_string())?;
        let r = sl25_in_gl2(&f).map_err(|e| e.to_string())?;
        let space = VectorSpace::new(&f, 2);
        let q1 = n as u64 - 1;
        for m in (1..=q1).filter(|m| q1 % m == 0) {
            let z0 = lift(scalars(&f, 2, m).map_err(|e| e.to_string())?.generators());
            let mut with_r = z0.clone();
            with_r.extend(lift(r.generators()));
            for gens in [z0, with_r] {
                let p = ActionInstance::new(gens, NonzeroVectors(space.clone()), None)
                    .orbits()
                    .map_err(|e| e.to_string())?;
                if !p.is_half_transitive().0 {
                    return Err(format!("q={n}, |Z0|={m}: orbit sizes {:?}", p.sorted_sizes()));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn properties() -> Check {
    timed(Duration::from_secs(120), || {
        // field axioms, exhaustively on small fields
        for order in [4u32, 8, 9, 25] {
            let f = Field::of_order(order).map_err(|e| e.to_string())?;
            let els: Vec<_> = f.elements().collect();
            for &x in &els {
                for &y in &els {
                    for &z in &els {
                        if f.mul(x, f.add(y, z)) != f.add(f.mul(x, y), f.mul(x, z))
                            || f.mul(f.mul(x, y), z) != f.mul(x, f.mul(y, z))
                        {
                            return Err(format!("field axioms fail in F_{order}"));
                        }
                    }
                }
                if !x.is_zero() && f.mul(x, f.inv(x).map_err(|e| e.to_string())?) != f.one() {
                    return Err(format!("inverse fails in F_{order}"));
                }
            }
        }
        // right action of SL2(5) on F_11^2, every pair and vector
        let f = Field::of_order(11).map_err(|e| e.to_string())?;
        let r = GeneratedGroup::closure(lift(sl25_in_gl2(&f).map_err(|e| e.to_string())?.generators()), DEFAULT_CAP)
            .map_err(|e| e.to_string())?;
        let space = VectorSpace::new(&f, 2);
        let els = r.elements().map_err(|e| e.to_string())?;
        for g in els.iter().step_by(7) {
            for h in els {
                let gh = g.compose(h);
                for v in 0..space.nonzero_count() {
                    if space.act_vector(&gh, v) != space.act_vector(h, space.act_vector(g, v)) {
                        return Err("right action law fails".into());
                    }
                }
            }
        }
        // orbit-stabilizer and chain order against closure
        let m11 = named_permgroup("M11_deg12").map_err(|e| e.to_string())?;
        let closed = GeneratedGroup::closure(m11.generators.clone(), DEFAULT_CAP).map_err(|e| e.to_string())?;
        let order = closed.order().unwrap();
        for point in 0..m11.degree {
            let stab = closed.filter_subgroup(|x: &Permutation| x.image(point) == point).map_err(|e| e.to_string())?;
            if stab.order().unwrap() * m11.degree as u64 != order {
                return Err(format!("orbit-stabilizer fails at point {point}"));
            }
        }
        if chain_order(&m11.generators).map_err(|e| e.to_string())? != order {
            return Err("chain order disagrees with closure".into());
        }
        // closure is independent of generator order
        let mut rev = m11.generators.clone();
        rev.reverse();
        let again = GeneratedGroup::closure(rev, DEFAULT_CAP).map_err(|e| e.to_string())?;
        if !closed.same_elements(&again).map_err(|e| e.to_string())? {
            return Err("closure depends on generator order".into());
        }
        // Lagrange over the lattice between R and its normalizer in GammaL2(49)
        let f = Field::of_order(49).map_err(|e| e.to_string())?;
        let r = sl25_in_gl2(&f).map_err(|e| e.to_string())?;
        let n = gamma_normalizer(&f, &r.group).map_err(|e| e.to_string())?;
        let r_semi = GeneratedGroup::closure(lift(r.generators()), DEFAULT_CAP).map_err(|e| e.to_string())?;
        let (quot, subs): (QuotientGroup<_>, _) = subgroups_between(&n, &r_semi).map_err(|e| e.to_string())?;
        let n_order = n.order().unwrap();
        for s in table_subgroups(&quot) {
            if quot.order() % s.elements.len() != 0 {
                return Err("subgroup order does not divide |N/R|".into());
            }
        }
        for s in &subs {
            if n_order % s.order().unwrap() != 0 {
                return Err("pullback order does not divide |N|".into());
            }
        }
        let normal = normal_subgroups_half_transitive()?;
        Ok(format!(
            "axioms, action law, orbit-stabilizer, Lagrange ({} subgroups), closure determinism; {normal} normal subgroups half-transitive",
            subs.len()
        ))
    })
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("Table 1 rows", table1_rows),
        ("negative sweep", negative_sweep),
        ("1-space orbits of Z0 R over F_169", projective_orbits),
        ("F_p^* SL2(5) transitive", scalar_transitive),
        ("SL2(5) semiregular", semiregular),
        ("regular-orbit counting", regular_orbits),
        ("tensor stabilizer", tensor),
        ("deleted permutation module", deleted_module),
        ("permutation suite", permutation_suite),
        ("inequality checks", inequalities),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
