use std::fmt;

use super::{GroupElement, GroupError};

/// A permutation of `{0, .., n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::InvalidArgument(format!(
                    "{images:?} is not a permutation"
                )));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Permutation, GroupError> {
        let mut perm = Permutation::identity(n);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..n).collect();
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x >= n || y >= n {
                    return Err(GroupError::InvalidArgument(format!("cycle {cycle:?} on {n} points")));
                }
                images[x] = y;
            }
            perm = perm.compose(&Permutation::new(images)?);
        }
        Ok(perm)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &x)| i as u32 == x).count()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl GroupElement for Permutation {
    fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }

    fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    fn canonical_key(&self) -> Vec<u8> {
        self.images.iter().flat_map(|x| x.to_le_bytes()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 5]]).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.compose(&b).image(0), 2);
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn group_axioms(a in arb_perm(9), b in arb_perm(9), c in arb_perm(9)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert_eq!(a.compose(&a.identity_like()), a.clone());
            prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
        }
    }
}
