//! Group actions on finite indexed point sets: orbit partitions, tuple
//! stabilizers by Schreier's lemma, and the transitivity hierarchy.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;
use std::marker::PhantomData;

use thiserror::Error;

use crate::groupkit::{GeneratedGroup, GroupElement, GroupError, Permutation, DEFAULT_CAP};
use crate::matsemi::{RowAction, VectorSpace};

/// Schreier generators kept per stabilizer, first found.
pub const SCHREIER_CAP: usize = 5000;
/// Largest tuple orbit explored.
pub const TUPLE_ORBIT_CAP: usize = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("action maps point {point} outside the point set")]
    InconsistentAction { point: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("orbit exceeded the cap of {cap}")]
    CapacityExceeded { cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A right action of elements of type `E` on points `0..degree()`.
pub trait Action<E> {
    fn degree(&self) -> usize;
    /// Image of `point` under `g`, or `None` if it leaves the point set.
    fn act(&self, g: &E, point: usize) -> Option<usize>;
}

/// Permutations acting on their own points.
#[derive(Clone, Copy, Debug)]
pub struct NaturalAction {
    pub degree: usize,
}

impl Action<Permutation> for NaturalAction {
    fn degree(&self) -> usize {
        self.degree
    }

    fn act(&self, g: &Permutation, point: usize) -> Option<usize> {
        (g.degree() == self.degree).then(|| g.image(point))
    }
}

/// Linear or semilinear maps on the nonzero vectors `V^♯`.
#[derive(Clone, Debug)]
pub struct NonzeroVectors(pub VectorSpace);

impl<G: RowAction> Action<G> for NonzeroVectors {
    fn degree(&self) -> usize {
        self.0.nonzero_count()
    }

    fn act(&self, g: &G, point: usize) -> Option<usize> {
        (g.dim() == self.0.dim()).then(|| self.0.act_vector(g, point))
    }
}

/// Linear or semilinear maps on the 1-spaces `P_1(V)`.
#[derive(Clone, Debug)]
pub struct ProjectivePoints(pub VectorSpace);

impl<G: RowAction> Action<G> for ProjectivePoints {
    fn degree(&self) -> usize {
        self.0.projective_count()
    }

    fn act(&self, g: &G, point: usize) -> Option<usize> {
        (g.dim() == self.0.dim()).then(|| self.0.act_projective(g, point))
    }
}

/// An explicit list of points with an action function on them.
pub struct ListedAction<E, P, F> {
    points: Vec<P>,
    index: HashMap<P, usize>,
    act: F,
    _element: PhantomData<fn(&E)>,
}

impl<E, P, F> ListedAction<E, P, F>
where
    P: Clone + Eq + Hash,
    F: Fn(&E, &P) -> P,
{
    pub fn new(points: Vec<P>, act: F) -> Self {
        let index = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        ListedAction {
            points,
            index,
            act,
            _element: PhantomData,
        }
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn index_of(&self, p: &P) -> Option<usize> {
        self.index.get(p).copied()
    }
}

impl<E, P, F> Action<E> for ListedAction<E, P, F>
where
    P: Clone + Eq + Hash,
    F: Fn(&E, &P) -> P,
{
    fn degree(&self) -> usize {
        self.points.len()
    }

    fn act(&self, g: &E, point: usize) -> Option<usize> {
        self.index.get(&(self.act)(g, &self.points[point])).copied()
    }
}

/// A group (by generators) together with an action.
pub struct ActionInstance<E, A> {
    pub generators: Vec<E>,
    pub action: A,
    pub group_order: Option<u64>,
}

impl<E: GroupElement, A: Action<E>> ActionInstance<E, A> {
    pub fn new(generators: Vec<E>, action: A, group_order: Option<u64>) -> Self {
        ActionInstance {
            generators,
            action,
            group_order,
        }
    }

    pub fn from_group(group: &GeneratedGroup<E>, action: A) -> Self {
        ActionInstance::new(group.generators().to_vec(), action, group.order())
    }

    /// Permutations induced by the generators on the point set.
    pub fn generator_permutations(&self) -> Result<Vec<Permutation>, ActionError> {
        self.generators
            .iter()
            .map(|g| induced_permutation(&self.action, g))
            .collect()
    }

    pub fn orbits(&self) -> Result<OrbitPartition, ActionError> {
        Ok(OrbitPartition::from_permutations(
            self.action.degree(),
            &self.generator_permutations()?,
        ))
    }
}

pub fn induced_permutation<E, A: Action<E>>(action: &A, g: &E) -> Result<Permutation, ActionError> {
    let images = (0..action.degree())
        .map(|p| action.act(g, p).ok_or(ActionError::InconsistentAction { point: p }))
        .collect::<Result<Vec<usize>, _>>()?;
    Permutation::new(images).map_err(|_| ActionError::InconsistentAction { point: 0 })
}

/// Orbits of a set of permutations, ids assigned in order of smallest point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub orbit_of: Vec<u32>,
    pub sizes: Vec<usize>,
    pub reps: Vec<usize>,
}

impl OrbitPartition {
    pub fn from_permutations(degree: usize, gens: &[Permutation]) -> OrbitPartition {
        let mut orbit_of = vec![u32::MAX; degree];
        let mut sizes = Vec::new();
        let mut reps = Vec::new();
        let mut queue = Vec::new();
        for start in 0..degree {
            if orbit_of[start] != u32::MAX {
                continue;
            }
            let id = sizes.len() as u32;
            orbit_of[start] = id;
            queue.push(start);
            let mut size = 0;
            while let Some(x) = queue.pop() {
                size += 1;
                for g in gens {
                    let y = g.image(x);
                    if orbit_of[y] == u32::MAX {
                        orbit_of[y] = id;
                        queue.push(y);
                    }
                }
            }
            sizes.push(size);
            reps.push(start);
        }
        OrbitPartition {
            orbit_of,
            sizes,
            reps,
        }
    }

    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn sorted_sizes(&self) -> Vec<usize> {
        let mut s = self.sizes.clone();
        s.sort_unstable();
        s
    }

    /// Sizes of orbits contained in `points` (a union of orbits).
    pub fn sizes_within(&self, points: &[usize]) -> Vec<usize> {
        let ids: HashSet<u32> = points.iter().map(|&p| self.orbit_of[p]).collect();
        let mut s: Vec<usize> = ids.into_iter().map(|i| self.sizes[i as usize]).collect();
        s.sort_unstable();
        s
    }

    /// All orbits of equal size? Returns the common size when they are.
    pub fn is_half_transitive(&self) -> (bool, Option<usize>) {
        match self.sizes.first() {
            Some(&s) if self.sizes.iter().all(|&t| t == s) => (true, Some(s)),
            _ => (false, None),
        }
    }

    pub fn is_semiregular(&self, group_order: u64) -> bool {
        self.sizes.iter().all(|&s| s as u64 == group_order)
    }

    pub fn regular_orbit_exists(&self, group_order: u64) -> bool {
        self.regular_orbit_count(group_order) > 0
    }

    pub fn regular_orbit_count(&self, group_order: u64) -> usize {
        self.sizes.iter().filter(|&&s| s as u64 == group_order).count()
    }

    pub fn points_in_regular_orbits(&self, group_order: u64) -> usize {
        self.sizes
            .iter()
            .filter(|&&s| s as u64 == group_order)
            .sum()
    }

    /// Every generator maps every point into its own orbit.
    pub fn is_closed_under(&self, gens: &[Permutation]) -> bool {
        gens.iter().all(|g| {
            (0..self.orbit_of.len()).all(|x| self.orbit_of[g.image(x)] == self.orbit_of[x])
        })
    }
}

#[derive(Clone, Debug)]
pub struct TupleOrbit {
    pub orbit_size: usize,
    pub stabilizer: Vec<Permutation>,
}

/// Orbit of the tuple `base` under `⟨gens⟩`, and Schreier generators of its
/// pointwise stabilizer (deduplicated, identity dropped, at most
/// [`SCHREIER_CAP`] kept). The stabilizer list is never empty: the trivial
/// stabilizer is returned as `[identity]`.
pub fn tuple_orbit_stabilizer(
    gens: &[Permutation],
    base: &[usize],
    cap: usize,
) -> Result<TupleOrbit, ActionError> {
    let n = gens
        .first()
        .map(Permutation::degree)
        .ok_or_else(|| ActionError::PreconditionViolation("no generators".into()))?;
    if base.is_empty() || base.iter().any(|&b| b >= n) {
        return Err(ActionError::PreconditionViolation(format!(
            "base {base:?} on {n} points"
        )));
    }
    let start: Vec<u32> = base.iter().map(|&b| b as u32).collect();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut tuples = vec![start];
    let mut transversal = vec![Permutation::identity(n)];
    let mut head = 0;
    while head < tuples.len() {
        for g in gens {
            let image: Vec<u32> = tuples[head].iter().map(|&x| g.image(x as usize) as u32).collect();
            if !index.contains_key(&image) {
                if tuples.len() >= cap {
                    return Err(ActionError::CapacityExceeded { cap });
                }
                index.insert(image.clone(), tuples.len());
                transversal.push(transversal[head].compose(g));
                tuples.push(image);
            }
        }
        head += 1;
    }
    let inverses: Vec<Permutation> = transversal.iter().map(|t| t.inverse()).collect();
    let mut seen = HashSet::new();
    let mut stabilizer = Vec::new();
    'outer: for (i, tuple) in tuples.iter().enumerate() {
        for g in gens {
            let image: Vec<u32> = tuple.iter().map(|&x| g.image(x as usize) as u32).collect();
            let j = index[&image];
            let s = transversal[i].compose(g).compose(&inverses[j]);
            if !s.is_identity() && seen.insert(s.clone()) {
                stabilizer.push(s);
                if stabilizer.len() >= SCHREIER_CAP {
                    break 'outer;
                }
            }
        }
    }
    if stabilizer.is_empty() {
        stabilizer.push(Permutation::identity(n));
    }
    Ok(TupleOrbit {
        orbit_size: tuples.len(),
        stabilizer,
    })
}

/// Same as [`tuple_orbit_stabilizer`], additionally asserting
/// `|orbit| · |stabilizer| = group_order` by enumerating the stabilizer.
pub fn tuple_orbit_stabilizer_checked(
    gens: &[Permutation],
    base: &[usize],
    group_order: u64,
) -> Result<TupleOrbit, ActionError> {
    let result = tuple_orbit_stabilizer(gens, base, TUPLE_ORBIT_CAP)?;
    let stab = GeneratedGroup::closure(result.stabilizer.clone(), DEFAULT_CAP)?;
    let product = result.orbit_size as u64 * stab.order().unwrap();
    if product != group_order {
        return Err(ActionError::PreconditionViolation(format!(
            "orbit-stabilizer mismatch: {} x {} != {group_order}",
            result.orbit_size,
            stab.order().unwrap()
        )));
    }
    Ok(result)
}

fn all_identity(gens: &[Permutation]) -> bool {
    gens.iter().all(|g| g.is_identity())
}

/// Order of `⟨gens⟩` as a product of orbit lengths along a stabilizer chain.
pub fn chain_order(gens: &[Permutation]) -> Result<u64, ActionError> {
    let mut current = gens.to_vec();
    let mut order = 1u64;
    while !all_identity(&current) {
        let n = current[0].degree();
        let point = (0..n)
            .find(|&x| current.iter().any(|g| g.image(x) != x))
            .expect("some generator moves a point");
        let step = tuple_orbit_stabilizer(&current, &[point], TUPLE_ORBIT_CAP)?;
        order *= step.orbit_size as u64;
        current = step.stabilizer;
    }
    Ok(order)
}

/// Transitivity data at one level `k` of the base `0, 1, .., k-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityLevel {
    pub k: usize,
    pub transitive: bool,
    pub sharp: bool,
    /// `(k + 1/2)`-transitive.
    pub half: bool,
    /// Orbit sizes of the `k`-point stabilizer on the other `n - k` points
    /// (only when `k`-transitive).
    pub stabilizer_orbits: Vec<usize>,
    pub stabilizer_order: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityProfile {
    pub degree: usize,
    pub order: u64,
    pub levels: Vec<TransitivityLevel>,
}

impl TransitivityProfile {
    pub fn level(&self, k: usize) -> &TransitivityLevel {
        &self.levels[k - 1]
    }

    pub fn is_k_transitive(&self, k: usize) -> bool {
        self.level(k).transitive
    }

    /// Largest `k` with the group `k`-transitive.
    pub fn transitivity_degree(&self) -> usize {
        self.levels.iter().take_while(|l| l.transitive).count()
    }

    /// Transitive, not regular, point stabilizer with equal orbits on the rest.
    pub fn is_three_halves_transitive(&self) -> bool {
        let l = self.level(1);
        l.transitive && l.half && l.stabilizer_order != Some(1)
    }

    /// `k`-transitive implies `(k-1/2)`-transitive implies `(k-1)`-transitive.
    pub fn is_consistent(&self) -> bool {
        self.levels.windows(2).all(|w| {
            let (lo, hi) = (&w[0], &w[1]);
            (!hi.transitive || lo.half) && (!lo.half || lo.transitive)
        })
    }
}

/// Transitivity flags for `k = 1..=k_max` on the base `0, .., k_max - 1`.
pub fn transitivity_profile(
    gens: &[Permutation],
    n: usize,
    k_max: usize,
) -> Result<TransitivityProfile, ActionError> {
    if k_max == 0 || n < k_max + 1 {
        return Err(ActionError::PreconditionViolation(format!(
            "degree {n} too small for k_max {k_max}"
        )));
    }
    if gens.iter().any(|g| g.degree() != n) {
        return Err(ActionError::PreconditionViolation("generator degree mismatch".into()));
    }
    let order = chain_order(gens)?;
    let mut levels = Vec::with_capacity(k_max);
    let mut current = gens.to_vec();
    let mut still = true;
    for k in 1..=k_max {
        if !still {
            levels.push(TransitivityLevel {
                k,
                transitive: false,
                sharp: false,
                half: false,
                stabilizer_orbits: Vec::new(),
                stabilizer_order: None,
            });
            continue;
        }
        let step = tuple_orbit_stabilizer(&current, &[k - 1], TUPLE_ORBIT_CAP)?;
        let transitive = step.orbit_size == n - k + 1;
        if !transitive {
            still = false;
            levels.push(TransitivityLevel {
                k,
                transitive,
                sharp: false,
                half: false,
                stabilizer_orbits: Vec::new(),
                stabilizer_order: None,
            });
            continue;
        }
        current = step.stabilizer;
        let stab_order = chain_order(&current)?;
        let partition = OrbitPartition::from_permutations(n, &current);
        let rest: Vec<usize> = (k..n).collect();
        let stabilizer_orbits = partition.sizes_within(&rest);
        let half = stabilizer_orbits.windows(2).all(|w| w[0] == w[1]);
        levels.push(TransitivityLevel {
            k,
            transitive,
            sharp: stab_order == 1,
            half,
            stabilizer_orbits,
            stabilizer_order: Some(stab_order),
        });
    }
    Ok(TransitivityProfile {
        degree: n,
        order,
        levels,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrobeniusVerdict {
    pub frobenius: bool,
    pub zassenhaus: bool,
}

/// Frobenius: transitive, point stabilizer nontrivial, 2-point stabilizers
/// trivial. Zassenhaus: 2-transitive with trivial 3-point stabilizers.
pub fn frobenius_zassenhaus(gens: &[Permutation], n: usize) -> Result<FrobeniusVerdict, ActionError> {
    let partition = OrbitPartition::from_permutations(n, gens);
    if partition.count() != 1 {
        return Err(ActionError::PreconditionViolation("group is not transitive".into()));
    }
    let point_stab = tuple_orbit_stabilizer(gens, &[0], TUPLE_ORBIT_CAP)?.stabilizer;
    let point_order = chain_order(&point_stab)?;
    // 2-point stabilizers trivial <=> every orbit of G_0 off 0 is regular
    let orbits = OrbitPartition::from_permutations(n, &point_stab);
    let rest: Vec<usize> = (1..n).collect();
    let frobenius = point_order > 1
        && orbits.sizes_within(&rest).iter().all(|&s| s as u64 == point_order);
    let zassenhaus = if orbits.sizes_within(&rest) == vec![n - 1] {
        let two = tuple_orbit_stabilizer(&point_stab, &[1], TUPLE_ORBIT_CAP)?.stabilizer;
        let two_order = chain_order(&two)?;
        let rest2: Vec<usize> = (2..n).collect();
        OrbitPartition::from_permutations(n, &two)
            .sizes_within(&rest2)
            .iter()
            .all(|&s| s as u64 == two_order)
    } else {
        false
    };
    Ok(FrobeniusVerdict {
        frobenius,
        zassenhaus,
    })
}

/// `G ≤ GL(V)` is a Frobenius complement in `T(V)G` exactly when it is
/// semiregular on `V^♯`; read off the linear orbit partition directly.
pub fn affine_complement_verdict(partition: &OrbitPartition, group_order: u64) -> bool {
    group_order > 1 && partition.is_semiregular(group_order)
}
