use std::collections::{BTreeMap, HashMap};

use super::AtlasError;
use crate::actions::{chain_order, induced_permutation, ProjectivePoints};
use crate::gfield::Field;
use crate::groupkit::{element_order, GeneratedGroup, GroupElement, Permutation, DEFAULT_CAP};
use crate::matsemi::{Matrix, RowAction, SemilinearMap, VectorSpace};

const M11_DEG11: &str = include_str!("../../data/m11_deg11.perm");
const M11_DEG12: &str = include_str!("../../data/m11_deg12.perm");
const M12: &str = include_str!("../../data/m12.perm");
const M22: &str = include_str!("../../data/m22.perm");
const M23: &str = include_str!("../../data/m23.perm");

/// Above this order validation uses the stabilizer chain instead of closure.
const CLOSURE_LIMIT: u64 = 100_000;

#[derive(Clone, Debug)]
pub struct NamedPermGroup {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub order: u64,
}

/// Names accepted by [`named_permgroup`]. `PSL2(q)_projline` and
/// `PGL2(q)_projline` take any prime power `q`; the listed ones are examples.
pub fn catalogue() -> &'static [&'static str] {
    &[
        "A7_pairs",
        "S7_pairs",
        "PSL2(7)_projline",
        "PGL2(7)_projline",
        "PGammaL2(8)_deg9",
        "PSL2(8)_deg28",
        "AGammaL1(8)",
        "M11_deg11",
        "M11_deg12",
        "M12",
        "M22",
        "M23",
    ]
}

/// Parses `#` comments, a degree line, then one image list per line.
pub fn parse_perm_data(text: &str) -> Result<(usize, Vec<Permutation>), AtlasError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let degree: usize = lines
        .next()
        .ok_or_else(|| AtlasError::DataInvalid("missing degree line".into()))?
        .parse()
        .map_err(|e| AtlasError::DataInvalid(format!("degree: {e}")))?;
    let mut gens = Vec::new();
    for line in lines {
        let images = line
            .split_whitespace()
            .map(str::parse::<usize>)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| AtlasError::DataInvalid(format!("{line:?}: {e}")))?;
        if images.len() != degree {
            return Err(AtlasError::DataInvalid(format!(
                "{} images on a line, expected {degree}",
                images.len()
            )));
        }
        gens.push(Permutation::new(images).map_err(|e| AtlasError::DataInvalid(e.to_string()))?);
    }
    if gens.is_empty() {
        return Err(AtlasError::DataInvalid("no generators".into()));
    }
    Ok((degree, gens))
}

fn validated(name: &str, degree: usize, generators: Vec<Permutation>, order: u64) -> Result<NamedPermGroup, AtlasError> {
    let found = if order <= CLOSURE_LIMIT {
        GeneratedGroup::closure(generators.clone(), CLOSURE_LIMIT as usize + 1)?
            .order()
            .unwrap()
    } else {
        chain_order(&generators)?
    };
    if found != order {
        return Err(AtlasError::ValidationFailed {
            name: name.into(),
            detail: format!("order {found}, expected {order}"),
        });
    }
    Ok(NamedPermGroup {
        name: name.into(),
        degree,
        generators,
        order,
    })
}

fn from_data(name: &str, text: &str, order: u64) -> Result<NamedPermGroup, AtlasError> {
    let (degree, gens) = parse_perm_data(text)?;
    validated(name, degree, gens, order)
}

/// Induced permutations on the pairs `{i < j}` of `0..n`, in lexicographic order.
fn on_pairs(n: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    gens.iter()
        .map(|g| {
            let images = pairs
                .iter()
                .map(|&(i, j)| {
                    let (a, b) = (g.image(i), g.image(j));
                    index[&(a.min(b), a.max(b))]
                })
                .collect();
            Permutation::new(images).expect("pairs map to pairs")
        })
        .collect()
}

fn on_projective_line<G: RowAction>(field: &Field, gens: &[G]) -> Result<Vec<Permutation>, AtlasError> {
    let action = ProjectivePoints(VectorSpace::new(field, 2));
    Ok(gens
        .iter()
        .map(|g| induced_permutation(&action, g))
        .collect::<Result<_, _>>()?)
}

fn sl2_generators(field: &Field) -> Result<Vec<Matrix>, AtlasError> {
    let f = field;
    let t = f.primitive_element();
    Ok(vec![
        Matrix::from_ints(f, &[&[1, 1], &[0, 1]])?,
        Matrix::from_ints(f, &[&[0, 1], &[-1, 0]])?,
        Matrix::diagonal(f, &[t, f.inv(t)?]),
    ])
}

fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / if q % 2 == 0 { 1 } else { 2 }
}

fn projective_linear(q: u32, general: bool) -> Result<NamedPermGroup, AtlasError> {
    let f = Field::of_order(q)?;
    let mut gens = sl2_generators(&f)?;
    if general {
        gens.push(Matrix::diagonal(&f, &[f.primitive_element(), f.one()]));
    }
    let q = q as u64;
    let (name, order) = if general {
        (format!("PGL2({q})_projline"), q * (q * q - 1))
    } else {
        (format!("PSL2({q})_projline"), psl2_order(q))
    };
    validated(&name, q as usize + 1, on_projective_line(&f, &gens)?, order)
}

fn pgammal2_8() -> Result<NamedPermGroup, AtlasError> {
    let f = Field::new(2, 3)?;
    let mut gens: Vec<SemilinearMap> = sl2_generators(&f)?
        .into_iter()
        .map(SemilinearMap::linear)
        .collect::<Result<_, _>>()?;
    gens.push(SemilinearMap::field_automorphism(&f, 2, 1));
    validated("PGammaL2(8)_deg9", 9, on_projective_line(&f, &gens)?, 1512)
}

/// `PSL_2(8)` on the 28 right cosets of a dihedral subgroup of order 18:
/// the first element of order 9 in enumeration order and the first
/// involution inverting it.
fn psl2_8_deg28() -> Result<NamedPermGroup, AtlasError> {
    let base = projective_linear(8, false)?;
    let group = GeneratedGroup::closure(base.generators.clone(), DEFAULT_CAP)?;
    let elements = group.elements()?;
    let x = elements
        .iter()
        .find(|g| element_order(*g) == 9)
        .ok_or_else(|| AtlasError::ConstructionFailed("no element of order 9".into()))?;
    let x_inv = x.inverse();
    let y = elements
        .iter()
        .find(|g| element_order(*g) == 2 && x.conjugate_by(g) == x_inv)
        .ok_or_else(|| AtlasError::ConstructionFailed("no involution inverts x".into()))?;
    let dihedral = GeneratedGroup::closure(vec![x.clone(), y.clone()], DEFAULT_CAP)?;
    if dihedral.order() != Some(18) {
        return Err(AtlasError::ConstructionFailed("dihedral subgroup has wrong order".into()));
    }
    let d = dihedral.elements()?;
    // a coset D g is named by its smallest element
    let coset_key = |g: &Permutation| d.iter().map(|h| h.compose(g)).min().expect("nonempty");
    let mut keys: BTreeMap<Permutation, usize> = BTreeMap::new();
    for g in elements {
        let len = keys.len();
        keys.entry(coset_key(g)).or_insert(len);
    }
    let reps: Vec<Permutation> = keys.keys().cloned().collect();
    let index: HashMap<&Permutation, usize> = reps.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let gens = base
        .generators
        .iter()
        .map(|s| {
            let images = reps.iter().map(|r| index[&coset_key(&r.compose(s))]).collect();
            Permutation::new(images).expect("cosets are permuted")
        })
        .collect();
    validated("PSL2(8)_deg28", reps.len(), gens, 504)
}

fn agammal1_8() -> Result<NamedPermGroup, AtlasError> {
    let f = Field::new(2, 3)?;
    let t = f.generator_root();
    let points: Vec<_> = f.elements().collect();
    let perm = |map: &dyn Fn(crate::gfield::FieldElement) -> crate::gfield::FieldElement| {
        Permutation::new(points.iter().map(|&x| map(x).index() as usize).collect()).expect("bijection")
    };
    let gens = vec![
        perm(&|x| f.add(x, f.one())),
        perm(&|x| f.mul(x, t)),
        perm(&|x| f.frobenius(x, 1)),
    ];
    validated("AGammaL1(8)", 8, gens, 168)
}

fn parse_q(name: &str, prefix: &str) -> Option<u32> {
    name.strip_prefix(prefix)?.strip_suffix(")_projline")?.parse().ok()
}

pub fn named_permgroup(name: &str) -> Result<NamedPermGroup, AtlasError> {
    let seven: Vec<usize> = (0..7).collect();
    match name {
        "A7_pairs" => {
            let gens = vec![
                Permutation::from_cycles(7, &[&[0, 1, 2]])?,
                Permutation::from_cycles(7, &[&seven])?,
            ];
            validated(name, 21, on_pairs(7, &gens), 2520)
        }
        "S7_pairs" => {
            let gens = vec![
                Permutation::from_cycles(7, &[&[0, 1]])?,
                Permutation::from_cycles(7, &[&seven])?,
            ];
            validated(name, 21, on_pairs(7, &gens), 5040)
        }
        "PGammaL2(8)_deg9" => pgammal2_8(),
        "PSL2(8)_deg28" => psl2_8_deg28(),
        "AGammaL1(8)" => agammal1_8(),
        "M11_deg11" => from_data(name, M11_DEG11, 7920),
        "M11_deg12" => from_data(name, M11_DEG12, 7920),
        "M12" => from_data(name, M12, 95040),
        "M22" => from_data(name, M22, 443520),
        "M23" => from_data(name, M23, 10200960),
        _ => {
            if let Some(q) = parse_q(name, "PSL2(") {
                projective_linear(q, false)
            } else if let Some(q) = parse_q(name, "PGL2(") {
                projective_linear(q, true)
            } else {
                Err(AtlasError::NotFound(name.into()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parser_rejects_bad_data() {
        assert!(parse_perm_data("# only a comment\n").is_err());
        assert!(parse_perm_data("3\n0 1\n").is_err());
        assert!(parse_perm_data("3\n0 0 1\n").is_err());
        assert!(parse_perm_data("3\n").is_err());
        let (n, gens) = parse_perm_data("# c\n3\n1 2 0\n").unwrap();
        assert_eq!((n, gens.len()), (3, 1));
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(named_permgroup("M24"), Err(AtlasError::NotFound(_))));
    }

    #[test]
    fn small_catalogue_orders() {
        for (name, degree, order) in [
            ("A7_pairs", 21, 2520),
            ("PSL2(7)_projline", 8, 168),
            ("PGL2(7)_projline", 8, 336),
            ("PSL2(9)_projline", 10, 360),
            ("PGammaL2(8)_deg9", 9, 1512),
            ("PSL2(8)_deg28", 28, 504),
            ("AGammaL1(8)", 8, 168),
            ("M11_deg11", 11, 7920),
            ("M11_deg12", 12, 7920),
        ] {
            let g = named_permgroup(name).unwrap();
            assert_eq!((g.degree, g.order), (degree, order), "{name}");
            assert!(g.generators.iter().all(|p| p.degree() == degree));
        }
    }
}
