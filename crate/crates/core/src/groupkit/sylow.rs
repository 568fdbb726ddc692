use std::collections::{BTreeMap, HashSet};

use super::{element_order, GeneratedGroup, GroupElement, GroupError};
use crate::gfield::prime_divisors;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SylowKind {
    Cyclic,
    GeneralizedQuaternion,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowSummary {
    pub order: u64,
    pub kind: SylowKind,
}

fn is_power_of(mut n: u64, r: u64) -> bool {
    while n % r == 0 {
        n /= r;
    }
    n == 1
}

/// One Sylow subgroup per prime divisor of `|G|`, classified.
///
/// Each Sylow `r`-subgroup is grown from an `r`-element of maximal order by
/// adjoining `r`-elements that normalize the current `r`-group. A proper
/// `r`-subgroup always has such an element outside it, so failure to grow is
/// reported as an error.
pub fn sylow_shape<E: GroupElement>(
    g: &GeneratedGroup<E>,
    cap: usize,
) -> Result<BTreeMap<u64, SylowSummary>, GroupError> {
    let elements = g.elements()?;
    let order = elements.len() as u64;
    let orders: Vec<u64> = elements.iter().map(element_order).collect();
    let mut out = BTreeMap::new();
    for r in prime_divisors(order) {
        let mut target = 1;
        while order % (target * r) == 0 {
            target *= r;
        }
        let r_elements: Vec<usize> = (0..elements.len())
            .filter(|&i| orders[i] > 1 && is_power_of(orders[i], r))
            .collect();
        let start = *r_elements
            .iter()
            .max_by_key(|&&i| (orders[i], std::cmp::Reverse(i)))
            .expect("Cauchy: an element of order r exists");
        let mut gens = vec![elements[start].clone()];
        let mut p = GeneratedGroup::closure(gens.clone(), cap)?;
        while p.order().unwrap() < target {
            let members: HashSet<&E> = p.elements()?.iter().collect();
            let next = r_elements.iter().map(|&i| &elements[i]).find(|y| {
                !members.contains(y)
                    && p.generators().iter().all(|h| members.contains(&h.conjugate_by(y)))
            });
            let Some(y) = next else {
                return Err(GroupError::ConstructionFailed(format!(
                    "Sylow {r}-subgroup stuck at order {}",
                    p.order().unwrap()
                )));
            };
            gens.push(y.clone());
            p = GeneratedGroup::closure(gens.clone(), cap)?;
        }
        out.insert(r, SylowSummary { order: target, kind: classify(&p, r)? });
    }
    Ok(out)
}

fn classify<E: GroupElement>(p: &GeneratedGroup<E>, r: u64) -> Result<SylowKind, GroupError> {
    let n = p.order().unwrap();
    let hist = p.order_histogram()?;
    if hist.contains_key(&n) {
        return Ok(SylowKind::Cyclic);
    }
    let involutions = hist.get(&2).copied().unwrap_or(0);
    if r == 2 && n >= 8 && involutions == 1 && hist.contains_key(&(n / 2)) {
        return Ok(SylowKind::GeneralizedQuaternion);
    }
    Ok(SylowKind::Other)
}
