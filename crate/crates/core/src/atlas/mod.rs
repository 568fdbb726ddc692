//! Deterministic constructions of the linear, semilinear and permutation
//! groups used by the verifier. Every recipe is closed and checked against an
//! order/structure oracle before it is returned.

mod perms;

pub use perms::{catalogue, named_permgroup, parse_perm_data, NamedPermGroup};

use thiserror::Error;

use crate::actions::{ActionError, ActionInstance, ListedAction};
use crate::gfield::{Field, FieldElement, FieldError};
use crate::groupkit::{GeneratedGroup, GroupElement, GroupError, Permutation, DEFAULT_CAP};
use crate::matsemi::{nullspace, Matrix, MatrixError, SemilinearMap, VectorPoint};

#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("unsupported field F_{q}: {reason}")]
    UnsupportedField { q: u32, reason: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("no group named {0:?} in the catalogue")]
    NotFound(String),
    #[error("generator data invalid: {0}")]
    DataInvalid(String),
    #[error("{name} failed validation: {detail}")]
    ValidationFailed { name: String, detail: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// Properties a constructed group must have.
#[derive(Clone, Debug, Default)]
pub struct Oracle<E> {
    pub order: Option<u64>,
    pub perfect: bool,
    pub unique_involution: bool,
    pub must_contain: Vec<E>,
}

impl<E: GroupElement> Oracle<E> {
    pub fn order(order: u64) -> Self {
        Oracle {
            order: Some(order),
            perfect: false,
            unique_involution: false,
            must_contain: Vec::new(),
        }
    }

    /// First failed property, if any.
    pub fn check(&self, g: &GeneratedGroup<E>) -> Result<Option<String>, GroupError> {
        if let Some(n) = self.order {
            if g.order() != Some(n) {
                return Ok(Some(format!("order {:?}, expected {n}", g.order())));
            }
        }
        if self.perfect && !g.is_perfect(DEFAULT_CAP)? {
            return Ok(Some("not perfect".into()));
        }
        if self.unique_involution {
            let involutions = g.order_histogram()?.get(&2).copied().unwrap_or(0);
            if involutions != 1 {
                return Ok(Some(format!("{involutions} involutions")));
            }
        }
        for x in &self.must_contain {
            if !g.contains(x)? {
                return Ok(Some(format!("missing {x:?}")));
            }
        }
        Ok(None)
    }
}

/// A named, validated, enumerated group.
#[derive(Clone, Debug)]
pub struct GroupRecipe<E> {
    pub name: String,
    pub params: Vec<(String, i64)>,
    pub group: GeneratedGroup<E>,
    pub oracle: Oracle<E>,
}

impl<E: GroupElement> GroupRecipe<E> {
    pub fn build(
        name: &str,
        params: Vec<(String, i64)>,
        generators: Vec<E>,
        oracle: Oracle<E>,
    ) -> Result<Self, AtlasError> {
        let group = GeneratedGroup::closure(generators, DEFAULT_CAP)?;
        if let Some(detail) = oracle.check(&group)? {
            return Err(AtlasError::ValidationFailed {
                name: name.into(),
                detail,
            });
        }
        Ok(GroupRecipe {
            name: name.into(),
            params,
            group,
            oracle,
        })
    }

    pub fn generators(&self) -> &[E] {
        self.group.generators()
    }

    pub fn order(&self) -> u64 {
        self.group.order().expect("recipes are enumerated")
    }
}

fn param(name: &str, value: i64) -> (String, i64) {
    (name.to_string(), value)
}

/// `⟨λ I_n⟩` with `λ = ω^((q-1)/m)` for the primitive element `ω`.
pub fn scalars(field: &Field, n: usize, m: u64) -> Result<GroupRecipe<Matrix>, AtlasError> {
    let q = field.q() as u64;
    if m == 0 || (q - 1) % m != 0 {
        return Err(AtlasError::InvalidArgument(format!("{m} does not divide {}", q - 1)));
    }
    let lambda = field.pow(field.primitive_element(), (q - 1) / m);
    GroupRecipe::build(
        "scalars",
        vec![param("q", q as i64), param("n", n as i64), param("m", m as i64)],
        vec![Matrix::scalar(field, n, lambda)],
        Oracle::order(m),
    )
}

fn require_sl25(field: &Field) -> Result<(), AtlasError> {
    let (p, q) = (field.p(), field.q());
    if p == 2 || p == 5 {
        return Err(AtlasError::UnsupportedField {
            q,
            reason: "characteristic 2 or 5".into(),
        });
    }
    if q % 5 != 1 && q % 5 != 4 {
        return Err(AtlasError::UnsupportedField {
            q,
            reason: "SL2(5) needs q = ±1 mod 5".into(),
        });
    }
    Ok(())
}

fn sl25_oracle(field: &Field) -> Oracle<Matrix> {
    Oracle {
        order: Some(120),
        perfect: true,
        unique_involution: true,
        must_contain: vec![Matrix::scalar(field, 2, field.from_int(-1))],
    }
}

/// `SL_2(5) ≤ SL_2(q)`: `s = [[0,1],[-1,τ]]` of order 5 with `τ` the
/// smallest root of `t^2 + t - 1`, and the first `u` of trace `-1`,
/// determinant 1 and `tr(su) = 0` (in canonical order of `(u00, u01)`) whose
/// closure passes the oracle.
pub fn sl25_in_gl2(field: &Field) -> Result<GroupRecipe<Matrix>, AtlasError> {
    require_sl25(field)?;
    let f = field;
    let roots = f.roots_of_quadratic(f.one(), f.from_int(-1));
    let tau = *roots.first().ok_or_else(|| AtlasError::UnsupportedField {
        q: f.q(),
        reason: "t^2 + t - 1 has no root".into(),
    })?;
    let s = Matrix::new(f, 2, vec![f.zero(), f.one(), f.from_int(-1), tau])?;
    let oracle = sl25_oracle(f);
    for a in f.elements() {
        let d = f.sub(f.from_int(-1), a);
        for b in f.elements().filter(|b| !b.is_zero()) {
            let c = f.div(f.sub(f.mul(a, d), f.one()), b)?;
            let u = Matrix::new(f, 2, vec![a, b, c, d])?;
            if !s.mul(&u).trace().is_zero() {
                continue;
            }
            let Ok(group) = GeneratedGroup::closure(vec![s.clone(), u], 121) else {
                continue;
            };
            if oracle.check(&group)?.is_none() {
                return Ok(GroupRecipe {
                    name: "SL2(5)".into(),
                    params: vec![param("q", f.q() as i64)],
                    group,
                    oracle,
                });
            }
        }
    }
    Err(AtlasError::ConstructionFailed(format!("no SL2(5) found in SL2({})", f.q())))
}

/// Monomial matrices of determinant `±1`, order `4(q-1)`.
pub fn s0(field: &Field) -> Result<GroupRecipe<Matrix>, AtlasError> {
    let f = field;
    if f.p() == 2 {
        return Err(AtlasError::UnsupportedField {
            q: f.q(),
            reason: "q must be odd".into(),
        });
    }
    let w = f.primitive_element();
    let gens = vec![
        Matrix::diagonal(f, &[w, f.inv(w)?]),
        Matrix::diagonal(f, &[f.one(), f.from_int(-1)]),
        Matrix::from_ints(f, &[&[0, 1], &[1, 0]])?,
    ];
    GroupRecipe::build(
        "S0",
        vec![param("q", f.q() as i64)],
        gens,
        Oracle::order(4 * (f.q() as u64 - 1)),
    )
}

/// `ΓL_1(p^d) ≤ GL_d(p)`: multiplication by a primitive element of
/// `F_{p^d}` and the Frobenius `x -> x^p`, written in the basis
/// `1, t, .., t^(d-1)` of the extension.
pub fn gammal1(p: u32, d: u32) -> Result<GroupRecipe<Matrix>, AtlasError> {
    if d > crate::matsemi::MAX_DIM as u32 {
        return Err(AtlasError::InvalidArgument(format!("degree {d} too large")));
    }
    let big = Field::new(p, d)?;
    let small = Field::new(p, 1)?;
    let n = d as usize;
    let t = big.generator_root();
    let basis: Vec<FieldElement> = (0..d as u64).map(|i| big.pow(t, i)).collect();
    let matrix_of = |image: &dyn Fn(FieldElement) -> FieldElement| -> Result<Matrix, MatrixError> {
        let entries = basis
            .iter()
            .flat_map(|&b| big.coeffs(image(b)))
            .map(|c| small.from_int(c as i64))
            .collect();
        Matrix::new(&small, n, entries)
    };
    let mult = matrix_of(&|x| big.mul(x, t))?;
    let frob = matrix_of(&|x| big.frobenius(x, 1))?;
    let q = big.q() as u64;
    GroupRecipe::build(
        "GammaL1",
        vec![param("p", p as i64), param("d", d as i64)],
        vec![mult, frob],
        Oracle::order(d as u64 * (q - 1)),
    )
}

/// `SL_2(3).2 ≤ GL_2(q)`: quaternions `i = [[0,1],[-1,0]]`,
/// `j = [[a,b],[b,-a]]` with `a^2 + b^2 = -1`, the element
/// `-(1+i+j+k)/2` of order 3 and `1 + i`. The image in `PGL_2(q)` is `S_4`.
pub fn sl23_ext(field: &Field) -> Result<GroupRecipe<Matrix>, AtlasError> {
    let f = field;
    if f.p() == 2 || f.p() == 3 {
        return Err(AtlasError::UnsupportedField {
            q: f.q(),
            reason: "characteristic 2 or 3".into(),
        });
    }
    let minus_one = f.from_int(-1);
    let (a, b) = f
        .elements()
        .flat_map(|a| f.elements().map(move |b| (a, b)))
        .find(|&(a, b)| f.add(f.mul(a, a), f.mul(b, b)) == minus_one)
        .expect("every element of a finite field is a sum of two squares");
    let one = Matrix::identity(f, 2);
    let i = Matrix::from_ints(f, &[&[0, 1], &[-1, 0]])?;
    let j = Matrix::new(f, 2, vec![a, b, b, f.neg(a)])?;
    let k = i.mul(&j);
    let half = f.inv(f.from_int(-2))?;
    let w = one.add(&i)?.add(&j)?.add(&k)?.scale(half);
    let r = one.add(&i)?;
    let group = GeneratedGroup::closure(vec![i.clone(), j, w, r], DEFAULT_CAP)?;
    let image = projective_image_order(&group)?;
    if image != 24 {
        return Err(AtlasError::ValidationFailed {
            name: "SL2(3).2".into(),
            detail: format!("projective image of order {image}"),
        });
    }
    let mut oracle = Oracle::order(group.order().unwrap());
    oracle.must_contain.push(i);
    Ok(GroupRecipe {
        name: "SL2(3).2".into(),
        params: vec![param("q", f.q() as i64)],
        group,
        oracle,
    })
}

/// `|G / (G ∩ scalars)|` for an enumerated matrix group.
pub fn projective_image_order(g: &GeneratedGroup<Matrix>) -> Result<u64, GroupError> {
    let scalars = g.elements()?.iter().filter(|m| m.as_scalar().is_some()).count() as u64;
    Ok(g.order().unwrap() / scalars)
}

/// Semilinear versions of matrices, with trivial field automorphism.
pub fn lift(matrices: &[Matrix]) -> Vec<SemilinearMap> {
    matrices
        .iter()
        .map(|m| SemilinearMap::linear(m.clone()).expect("group elements are invertible"))
        .collect()
}

/// Solutions `X` (up to the kernel basis) of `A_k^σ X = X B_k` for each
/// pair, as `2 x 2` matrices over the field, where `σ` is the `i`-th
/// Frobenius power.
fn intertwiners(field: &Field, pairs: &[(Matrix, Matrix)], i: u32) -> Vec<Matrix> {
    let f = field;
    let n = 2;
    let mut rows = Vec::new();
    for (a, b) in pairs {
        let a = a.frobenius(i);
        // (A X - X B)_{rc} = Σ_k A_rk X_kc - Σ_k X_rk B_kc, X flattened row-major
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![f.zero(); n * n];
                for k in 0..n {
                    row[k * n + c] = f.add(row[k * n + c], a.get(r, k));
                    row[r * n + k] = f.sub(row[r * n + k], b.get(k, c));
                }
                rows.push(row);
            }
        }
    }
    nullspace(f, &rows, n * n)
        .into_iter()
        .filter_map(|x| Matrix::new(f, n, x).ok())
        .collect()
}

/// Elements `(X, i)` of `ΓL_2(q)` normalizing `r = ⟨s, u⟩`, one for each
/// image pair `(s', u')` in `r` with matching traces; `X` solves
/// `s^σ X = X s'` and `u^σ X = X u'` so that `X^-1 r^σ X = r`. Results are in
/// canonical order: by `i`, then by the enumeration order of `s'`, `u'`.
pub fn normalizing_elements(
    field: &Field,
    r: &GeneratedGroup<Matrix>,
    frob: u32,
) -> Result<Vec<SemilinearMap>, AtlasError> {
    let f = field;
    let gens = r.generators();
    let elements = r.elements()?;
    let mut found = Vec::new();
    let targets: Vec<Vec<&Matrix>> = gens
        .iter()
        .map(|g| {
            let tr = f.frobenius(g.trace(), frob);
            elements.iter().filter(|h| h.trace() == tr).collect()
        })
        .collect();
    if targets.iter().any(Vec::is_empty) {
        return Ok(found);
    }
    let lifted = lift(gens);
    let mut choice = vec![0usize; gens.len()];
    'search: loop {
        let pairs: Vec<(Matrix, Matrix)> = gens
            .iter()
            .zip(&choice)
            .enumerate()
            .map(|(k, (g, &c))| (g.clone(), targets[k][c].clone()))
            .collect();
        for x in intertwiners(f, &pairs, frob) {
            if x.det().is_zero() {
                continue;
            }
            let candidate = SemilinearMap::new(x, frob)?;
            if lifted
                .iter()
                .all(|h| r.contains(h.conjugate_by(&candidate).matrix()).unwrap_or(false))
            {
                found.push(candidate);
            }
        }
        for k in (0..choice.len()).rev() {
            choice[k] += 1;
            if choice[k] < targets[k].len() {
                continue 'search;
            }
            choice[k] = 0;
        }
        break;
    }
    Ok(found)
}

/// The first `(C, 1)` in canonical order that normalizes `R`.
pub fn normalizer_extension(field: &Field, r: &GeneratedGroup<Matrix>) -> Result<SemilinearMap, AtlasError> {
    if field.a() < 2 {
        return Err(AtlasError::UnsupportedField {
            q: field.q(),
            reason: "no field automorphism over a prime field".into(),
        });
    }
    normalizing_elements(field, r, 1)?
        .into_iter()
        .next()
        .ok_or_else(|| AtlasError::ConstructionFailed("no semilinear element normalizes R".into()))
}

/// `N_{ΓL_2(q)}(R)` for `R = SL_2(5)`, generated by the scalars, `R` and
/// every normalizing `(X, i)` not already in the group built so far.
pub fn gamma_normalizer(
    field: &Field,
    r: &GeneratedGroup<Matrix>,
) -> Result<GeneratedGroup<SemilinearMap>, AtlasError> {
    let z = scalars(field, 2, field.q() as u64 - 1)?;
    let mut gens = lift(z.generators());
    gens.extend(lift(r.generators()));
    let mut n = GeneratedGroup::closure(gens.clone(), DEFAULT_CAP)?;
    for i in 0..field.a() {
        for x in normalizing_elements(field, r, i)? {
            if !n.contains(&x)? {
                gens.push(x);
                n = GeneratedGroup::closure(gens.clone(), DEFAULT_CAP)?;
            }
        }
    }
    Ok(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alternation {
    Alternating,
    Symmetric,
}

/// `Z_0 × H` acting on the sum-zero hyperplane of `F_p^c`, `H = A_c` or `S_c`
/// permuting coordinates.
#[derive(Clone, Debug)]
pub struct DeletedModule {
    pub field: Field,
    pub c: usize,
    pub group: GeneratedGroup<Matrix>,
    pub points: Vec<VectorPoint>,
}

pub fn deleted_perm_module(c: usize, p: u32, kind: Alternation, z0: u64) -> Result<DeletedModule, AtlasError> {
    if c < 5 || c as u64 >= p as u64 {
        return Err(AtlasError::InvalidArgument(format!("need 5 <= c < p, got c = {c}, p = {p}")));
    }
    if c > crate::matsemi::MAX_DIM {
        return Err(AtlasError::InvalidArgument(format!("c = {c} exceeds the dimension limit")));
    }
    let field = Field::new(p, 1)?;
    let cycle: Vec<usize> = (0..c).collect();
    let perms = match kind {
        Alternation::Symmetric => vec![
            Permutation::from_cycles(c, &[&[0, 1]])?,
            Permutation::from_cycles(c, &[&cycle])?,
        ],
        Alternation::Alternating if c % 2 == 1 => vec![
            Permutation::from_cycles(c, &[&[0, 1, 2]])?,
            Permutation::from_cycles(c, &[&cycle])?,
        ],
        Alternation::Alternating => vec![
            Permutation::from_cycles(c, &[&[0, 1, 2]])?,
            Permutation::from_cycles(c, &[&cycle[1..]])?,
        ],
    };
    let mut gens: Vec<Matrix> = perms.iter().map(|g| permutation_matrix(&field, g)).collect();
    let z = scalars(&field, c, z0)?;
    gens.extend(z.generators().iter().cloned());
    let factorial: u64 = (1..=c as u64).product();
    let h_order = match kind {
        Alternation::Symmetric => factorial,
        Alternation::Alternating => factorial / 2,
    };
    let group = GroupRecipe::build(
        "deleted permutation module",
        vec![param("c", c as i64), param("p", p as i64), param("z0", z0 as i64)],
        gens,
        Oracle::order(h_order * z0),
    )?
    .group;
    let space = crate::matsemi::VectorSpace::new(&field, c);
    let points: Vec<VectorPoint> = (0..space.nonzero_count())
        .map(|i| space.vector_at(i))
        .filter(|v| v.coords().iter().fold(field.zero(), |acc, &x| field.add(acc, x)).is_zero())
        .collect();
    let module = DeletedModule {
        field,
        c,
        group,
        points,
    };
    module.check_invariant()?;
    Ok(module)
}

/// Row-vector permutation matrix: `e_i · P = e_{π(i)}`.
pub fn permutation_matrix(field: &Field, g: &Permutation) -> Matrix {
    let n = g.degree();
    let mut entries = vec![field.zero(); n * n];
    for i in 0..n {
        entries[i * n + g.image(i)] = field.one();
    }
    Matrix::new(field, n, entries).expect("square")
}

pub type SubspaceAction = ListedAction<Matrix, VectorPoint, fn(&Matrix, &VectorPoint) -> VectorPoint>;

fn apply_matrix(m: &Matrix, v: &VectorPoint) -> VectorPoint {
    v.apply_matrix(m).expect("dimensions agree")
}

impl DeletedModule {
    pub fn dim(&self) -> usize {
        self.c - 1
    }

    pub fn instance(&self) -> ActionInstance<Matrix, SubspaceAction> {
        let action: SubspaceAction = ListedAction::new(self.points.clone(), apply_matrix);
        ActionInstance::from_group(&self.group, action)
    }

    /// Every generator maps every sum-zero vector to a sum-zero vector.
    pub fn check_invariant(&self) -> Result<(), AtlasError> {
        let count = self.field.q() as usize;
        if self.points.len() != count.pow(self.dim() as u32) - 1 {
            return Err(AtlasError::ConstructionFailed("sum-zero hyperplane has the wrong size".into()));
        }
        self.instance().generator_permutations()?;
        Ok(())
    }

    pub fn vector(&self, coords: &[i64]) -> VectorPoint {
        VectorPoint::from_ints(&self.field, coords)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorKind {
    /// `R_1 ⊗ R_2` with `R_1 = SL_2(5)` and `R_2 = R_1^T`.
    Sl25Sl25,
    /// `SL_2(5) ⊗ SL_2(3).2`.
    Sl25Sl23Ext,
}

#[derive(Clone, Debug)]
pub struct TensorGroup {
    pub recipe: GroupRecipe<Matrix>,
    pub left: GeneratedGroup<Matrix>,
    pub right: GeneratedGroup<Matrix>,
}

/// `Z_0 · (R_1 ⊗ R_2) ≤ GL_4(q)`, generated by `g ⊗ I`, `I ⊗ h` and a
/// scalar of order `z0`. The order is computed by closure.
pub fn tensor_group(field: &Field, kind: TensorKind, z0: u64) -> Result<TensorGroup, AtlasError> {
    let f = field;
    let left = sl25_in_gl2(f)?.group;
    let right = match kind {
        TensorKind::Sl25Sl25 => {
            let gens: Vec<Matrix> = left.generators().iter().map(Matrix::transpose).collect();
            GeneratedGroup::closure(gens, DEFAULT_CAP)?
        }
        TensorKind::Sl25Sl23Ext => sl23_ext(f)?.group,
    };
    let id = Matrix::identity(f, 2);
    let mut gens = Vec::new();
    for g in left.generators() {
        gens.push(g.tensor(&id)?);
    }
    for h in right.generators() {
        gens.push(id.tensor(h)?);
    }
    gens.extend(scalars(f, 4, z0)?.generators().iter().cloned());
    let group = GeneratedGroup::closure(gens.clone(), DEFAULT_CAP)?;
    let oracle = Oracle::order(group.order().unwrap());
    let recipe = GroupRecipe {
        name: format!("{kind:?}"),
        params: vec![param("q", f.q() as i64), param("z0", z0 as i64)],
        group,
        oracle,
    };
    Ok(TensorGroup { recipe, left, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::element_order;

    fn f(q: u32) -> Field {
        Field::of_order(q).unwrap()
    }

    #[test]
    fn scalar_groups() {
        assert_eq!(scalars(&f(11), 2, 1).unwrap().order(), 1);
        assert_eq!(scalars(&f(29), 2, 4).unwrap().order(), 4);
        assert_eq!(scalars(&f(169), 2, 28).unwrap().order(), 28);
        assert!(scalars(&f(11), 2, 3).is_err());
    }

    #[test]
    fn sl25_embeddings() {
        for q in [11, 19, 29, 31, 49] {
            let r = sl25_in_gl2(&f(q)).unwrap();
            assert_eq!(r.order(), 120);
            assert!(r.generators().iter().all(|g| g.det() == f(q).one()));
        }
        assert!(matches!(sl25_in_gl2(&f(13)), Err(AtlasError::UnsupportedField { .. })));
        assert!(matches!(sl25_in_gl2(&f(7)), Err(AtlasError::UnsupportedField { .. })));
    }

    #[test]
    fn sl25_is_deterministic() {
        let a = sl25_in_gl2(&f(19)).unwrap();
        let b = sl25_in_gl2(&f(19)).unwrap();
        assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn monomial_and_gamma_orders() {
        assert_eq!(s0(&f(11)).unwrap().order(), 40);
        assert!(s0(&f(8)).is_err());
        assert_eq!(gammal1(2, 3).unwrap().order(), 21);
        assert_eq!(gammal1(3, 2).unwrap().order(), 16);
        let g = gammal1(2, 4).unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(element_order(&g.generators()[0]), 15);
        assert_eq!(element_order(&g.generators()[1]), 4);
    }

    #[test]
    fn s0_is_not_perfect() {
        assert!(!s0(&f(11)).unwrap().group.is_perfect(DEFAULT_CAP).unwrap());
    }

    #[test]
    fn sl23_ext_images() {
        for q in [11, 67] {
            let g = sl23_ext(&f(q)).unwrap();
            assert_eq!(projective_image_order(&g.group).unwrap(), 24);
        }
    }

    #[test]
    fn no_linear_outer_normalizer_over_prime_field() {
        let field = f(11);
        let r = sl25_in_gl2(&field).unwrap().group;
        let n = gamma_normalizer(&field, &r).unwrap();
        assert_eq!(n.order(), Some(600));
        assert!(normalizer_extension(&field, &r).is_err());
    }

    #[test]
    fn deleted_module_shape() {
        let m = deleted_perm_module(5, 7, Alternation::Symmetric, 1).unwrap();
        assert_eq!(m.dim(), 4);
        assert_eq!(m.points.len(), 2400);
        assert_eq!(m.group.order(), Some(120));
        assert!(deleted_perm_module(7, 7, Alternation::Symmetric, 1).is_err());
        let a = deleted_perm_module(6, 7, Alternation::Alternating, 2).unwrap();
        assert_eq!(a.group.order(), Some(720));
    }

    #[test]
    fn tensor_of_minus_identities_is_identity() {
        let field = f(11);
        let m = Matrix::scalar(&field, 2, field.from_int(-1));
        assert!(m.tensor(&m).unwrap().is_identity());
    }
}
