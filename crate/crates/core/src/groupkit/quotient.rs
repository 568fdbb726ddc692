use std::collections::{BTreeSet, HashSet};

use super::{GeneratedGroup, GroupElement, GroupError};

/// Largest quotient for which a full multiplication table is built.
pub const MAX_QUOTIENT: usize = 10_000;

/// `G / N` as coset representatives with a multiplication table.
/// Coset 0 is `N` itself.
#[derive(Clone, Debug)]
pub struct QuotientGroup<E> {
    reps: Vec<E>,
    table: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    /// Coset of each element of `G`, by enumeration index.
    coset_of: Vec<u32>,
}

impl<E: GroupElement> QuotientGroup<E> {
    pub fn new(g: &GeneratedGroup<E>, n: &GeneratedGroup<E>) -> Result<Self, GroupError> {
        let g_elems = g.elements()?;
        let n_elems = n.elements()?;
        for h in n.generators() {
            if !g.contains(h)? {
                return Err(GroupError::InvalidArgument("N is not contained in G".into()));
            }
        }
        if !g.normalizes(n)? {
            return Err(GroupError::NotNormal);
        }
        let m = g_elems.len() / n_elems.len();
        if m > MAX_QUOTIENT {
            return Err(GroupError::CapacityExceeded { cap: MAX_QUOTIENT });
        }
        let mut coset_of = vec![u32::MAX; g_elems.len()];
        let mut reps = Vec::with_capacity(m);
        for (i, x) in g_elems.iter().enumerate() {
            if coset_of[i] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x.clone());
            for h in n_elems {
                let j = g.index_of(&x.compose(h)).expect("G is closed");
                coset_of[j] = c;
            }
        }
        let table: Vec<Vec<u32>> = reps
            .iter()
            .map(|a| {
                reps.iter()
                    .map(|b| coset_of[g.index_of(&a.compose(b)).expect("closed")])
                    .collect()
            })
            .collect();
        let inverse = (0..m)
            .map(|i| table[i].iter().position(|&c| c == 0).expect("inverse exists") as u32)
            .collect();
        Ok(QuotientGroup {
            reps,
            table,
            inverse,
            coset_of,
        })
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[E] {
        &self.reps
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// Natural projection `G -> G/N`.
    pub fn project(&self, g: &GeneratedGroup<E>, x: &E) -> Option<usize> {
        g.index_of(x).map(|i| self.coset_of[i] as usize)
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// Exhaustive check of associativity, identity and inverses.
    pub fn satisfies_group_axioms(&self) -> bool {
        let m = self.order();
        for a in 0..m {
            if self.mul(0, a) != a || self.mul(a, 0) != a || self.mul(a, self.inv(a)) != 0 {
                return false;
            }
            for b in 0..m {
                let ab = self.mul(a, b);
                for c in 0..m {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Subgroup of the table generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([0]);
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }
}

/// A subgroup of a [`QuotientGroup`], as a set of coset indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableSubgroup {
    pub elements: Vec<usize>,
    pub generators: Vec<usize>,
}

/// Every subgroup of a table group, found by closing the set of cyclic
/// subgroups under joins. Sorted by order, then by element list.
pub fn table_subgroups<E: GroupElement>(quot: &QuotientGroup<E>) -> Vec<TableSubgroup> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut cyclic: Vec<TableSubgroup> = Vec::new();
    for x in 0..quot.order() {
        let gens = if x == 0 { vec![] } else { vec![x] };
        let elements: Vec<usize> = quot.generate(&gens).into_iter().collect();
        if seen.insert(elements.clone()) {
            cyclic.push(TableSubgroup {
                elements,
                generators: gens,
            });
        }
    }
    let mut all = cyclic.clone();
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            let members: HashSet<usize> = h.elements.iter().copied().collect();
            for c in &cyclic {
                let Some(&g) = c.generators.first() else { continue };
                if members.contains(&g) {
                    continue;
                }
                let mut gens = h.generators.clone();
                gens.push(g);
                let elements: Vec<usize> = quot.generate(&gens).into_iter().collect();
                if seen.insert(elements.clone()) {
                    next.push(TableSubgroup {
                        elements,
                        generators: gens,
                    });
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort_by(|a, b| (a.elements.len(), &a.elements).cmp(&(b.elements.len(), &b.elements)));
    all
}

/// All `G` with `R ⊴ G ≤ N`, enumerated in `N/R` and pulled back. Each
/// result carries generators (those of `R` plus lifts) and its order; none
/// is enumerated.
pub fn subgroups_between<E: GroupElement>(
    n_big: &GeneratedGroup<E>,
    r: &GeneratedGroup<E>,
) -> Result<(QuotientGroup<E>, Vec<GeneratedGroup<E>>), GroupError> {
    let quot = QuotientGroup::new(n_big, r)?;
    let r_order = r.order().ok_or(GroupError::NotEnumerated)?;
    let groups = table_subgroups(&quot)
        .into_iter()
        .map(|sub| {
            let mut gens = r.generators().to_vec();
            gens.extend(sub.generators.iter().map(|&i| quot.reps()[i].clone()));
            GeneratedGroup::from_generators(gens, Some(sub.elements.len() as u64 * r_order))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((quot, groups))
}
