//! Finite groups given by generators, over any element kind.
//!
//! Elements compose left to right: `a.compose(b)` is "first `a`, then `b`",
//! matching right actions on points.

mod perm;
mod quotient;
mod sylow;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use crate::matsemi::{Matrix, SemilinearMap};

pub use perm::Permutation;
pub use quotient::{subgroups_between, table_subgroups, QuotientGroup, TableSubgroup};
pub use sylow::{sylow_shape, SylowKind, SylowSummary};

/// Default enumeration cap.
pub const DEFAULT_CAP: usize = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group closure exceeded the cap of {cap} elements")]
    CapacityExceeded { cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group has not been enumerated")]
    NotEnumerated,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

pub trait GroupElement: Clone + Eq + Hash + Debug {
    /// `self` followed by `other`.
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// Identity of the ambient group `self` lives in.
    fn identity_like(&self) -> Self;
    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }
    /// Byte serialization of the canonical form.
    fn canonical_key(&self) -> Vec<u8>;

    fn pow(&self, mut k: u64) -> Self {
        let mut acc = self.identity_like();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// `g^-1 · self · g`
    fn conjugate_by(&self, g: &Self) -> Self {
        g.inverse().compose(self).compose(g)
    }
}

impl GroupElement for Matrix {
    fn compose(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Self {
        Matrix::inverse(self).expect("group elements are invertible")
    }

    fn identity_like(&self) -> Self {
        Matrix::identity(self.field(), self.n())
    }

    fn is_identity(&self) -> bool {
        Matrix::is_identity(self)
    }

    fn canonical_key(&self) -> Vec<u8> {
        Matrix::canonical_key(self)
    }
}

impl GroupElement for SemilinearMap {
    fn compose(&self, other: &Self) -> Self {
        SemilinearMap::compose(self, other)
    }

    fn inverse(&self) -> Self {
        SemilinearMap::inverse(self)
    }

    fn identity_like(&self) -> Self {
        SemilinearMap::identity(self.field(), self.n())
    }

    fn is_identity(&self) -> bool {
        SemilinearMap::is_identity(self)
    }

    fn canonical_key(&self) -> Vec<u8> {
        SemilinearMap::canonical_key(self)
    }
}

/// Smallest `k >= 1` with `g^k = 1`.
pub fn element_order<E: GroupElement>(g: &E) -> u64 {
    let mut k = 1;
    let mut x = g.clone();
    while !x.is_identity() {
        x = x.compose(g);
        k += 1;
    }
    k
}

#[derive(Clone, Debug)]
struct Enumeration<E> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
}

/// A group given by generators, optionally with its full element list.
#[derive(Clone, Debug)]
pub struct GeneratedGroup<E> {
    generators: Vec<E>,
    order: Option<u64>,
    enumeration: Option<Enumeration<E>>,
}

impl<E: GroupElement> GeneratedGroup<E> {
    /// Generators only; the order may be supplied when known by other means.
    pub fn from_generators(generators: Vec<E>, order: Option<u64>) -> Result<Self, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::InvalidArgument("empty generator list".into()));
        }
        Ok(GeneratedGroup {
            generators,
            order,
            enumeration: None,
        })
    }

    /// Enumerates `⟨generators⟩` by breadth-first product closure.
    /// Elements appear in BFS order from the identity, trying generators in
    /// list order, so the enumeration is deterministic.
    pub fn closure(generators: Vec<E>, cap: usize) -> Result<Self, GroupError> {
        let group = GeneratedGroup::from_generators(generators, None)?;
        group.enumerate(cap)
    }

    pub fn enumerate(mut self, cap: usize) -> Result<Self, GroupError> {
        if self.enumeration.is_some() {
            return Ok(self);
        }
        let id = self.generators[0].identity_like();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in &self.generators {
                let y = x.compose(g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapacityExceeded { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        self.order = Some(elements.len() as u64);
        self.enumeration = Some(Enumeration { elements, index });
        Ok(self)
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn order(&self) -> Option<u64> {
        self.order
    }

    pub fn is_enumerated(&self) -> bool {
        self.enumeration.is_some()
    }

    fn enumeration(&self) -> Result<&Enumeration<E>, GroupError> {
        self.enumeration.as_ref().ok_or(GroupError::NotEnumerated)
    }

    pub fn elements(&self) -> Result<&[E], GroupError> {
        Ok(&self.enumeration()?.elements)
    }

    pub fn index_of(&self, g: &E) -> Option<usize> {
        self.enumeration.as_ref()?.index.get(g).copied()
    }

    pub fn contains(&self, g: &E) -> Result<bool, GroupError> {
        Ok(self.enumeration()?.index.contains_key(g))
    }

    pub fn identity(&self) -> E {
        self.generators[0].identity_like()
    }

    /// Canonical keys of all elements, sorted.
    pub fn key_set(&self) -> Result<Vec<Vec<u8>>, GroupError> {
        let mut keys: Vec<Vec<u8>> = self.elements()?.iter().map(|g| g.canonical_key()).collect();
        keys.sort();
        Ok(keys)
    }

    pub fn same_elements(&self, other: &Self) -> Result<bool, GroupError> {
        let mine = self.enumeration()?;
        let theirs = other.enumeration()?;
        Ok(mine.elements.len() == theirs.elements.len()
            && mine.elements.iter().all(|g| theirs.index.contains_key(g)))
    }

    pub fn is_subgroup_of(&self, other: &Self) -> Result<bool, GroupError> {
        let theirs = other.enumeration()?;
        Ok(self.elements()?.iter().all(|g| theirs.index.contains_key(g)))
    }

    /// Is `sub` normalized by every generator of `self`? Requires `sub` enumerated.
    pub fn normalizes(&self, sub: &Self) -> Result<bool, GroupError> {
        for g in &self.generators {
            for h in &sub.generators {
                if !sub.contains(&h.conjugate_by(g))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Number of elements of each order.
    pub fn order_histogram(&self) -> Result<BTreeMap<u64, usize>, GroupError> {
        let mut hist = BTreeMap::new();
        for g in self.elements()? {
            *hist.entry(element_order(g)).or_insert(0) += 1;
        }
        Ok(hist)
    }

    /// Number of nontrivial cyclic subgroups: `Σ_{d>1} #{order d} / φ(d)`.
    pub fn nontrivial_cyclic_subgroup_count(&self) -> Result<usize, GroupError> {
        Ok(self
            .order_histogram()?
            .into_iter()
            .filter(|&(d, _)| d > 1)
            .map(|(d, count)| count / euler_phi(d) as usize)
            .sum())
    }

    /// Subgroup generated by all commutators, computed as the normal closure
    /// of the commutators of the generators.
    pub fn derived_subgroup(&self, cap: usize) -> Result<Self, GroupError> {
        self.enumeration()?;
        let id = self.identity();
        let mut gens: Vec<E> = Vec::new();
        let mut seen = HashSet::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() && seen.insert(c.clone()) {
                    gens.push(c);
                }
            }
        }
        if gens.is_empty() {
            gens.push(id);
        }
        let mut sub = GeneratedGroup::closure(gens.clone(), cap)?;
        loop {
            let mut grew = false;
            for g in &self.generators {
                for h in sub.generators.clone() {
                    let c = h.conjugate_by(g);
                    if !sub.contains(&c)? {
                        gens.push(c);
                        sub = GeneratedGroup::closure(gens.clone(), cap)?;
                        grew = true;
                    }
                }
            }
            if !grew {
                return Ok(sub);
            }
        }
    }

    pub fn is_perfect(&self, cap: usize) -> Result<bool, GroupError> {
        Ok(self.derived_subgroup(cap)?.order() == self.order())
    }

    /// Elements fixing a predicate, as a subgroup (the caller guarantees
    /// closure, e.g. a point stabilizer).
    pub fn filter_subgroup(&self, keep: impl Fn(&E) -> bool) -> Result<Self, GroupError> {
        let elements: Vec<E> = self.elements()?.iter().filter(|g| keep(g)).cloned().collect();
        let index = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        Ok(GeneratedGroup {
            generators: elements.clone(),
            order: Some(elements.len() as u64),
            enumeration: Some(Enumeration { elements, index }),
        })
    }
}

pub fn euler_phi(n: u64) -> u64 {
    crate::gfield::prime_divisors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

pub fn divisor_count(n: u64) -> usize {
    (1..=n).filter(|d| n % d == 0).count()
}
