use std::fmt;
use std::sync::Arc;

use super::{FiniteGroup, GroupHom, GroupRef};
use crate::error::{Error, Result};

/// Elements of the subgroup generated by `seeds`, sorted.
pub(crate) fn closure(g: &FiniteGroup, seeds: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut members = vec![0];
    let mut head = 0;
    while head < members.len() {
        let x = members[head];
        head += 1;
        for &s in seeds {
            let y = g.mul(x, s);
            if !inside[y] {
                inside[y] = true;
                members.push(y);
            }
        }
    }
    members.sort_unstable();
    members
}

/// A subgroup, stored as the sorted list of its elements in the parent group.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: GroupRef,
    elements: Vec<usize>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

/// Smallest subgroup containing every seed.
pub fn subgroup_generated(g: &GroupRef, seeds: &[usize]) -> Result<Subgroup> {
    if let Some(&s) = seeds.iter().find(|&&s| s >= g.order()) {
        return Err(Error::InvalidSubgroup(format!(
            "seed {s} is not an element"
        )));
    }
    Ok(Subgroup {
        parent: g.clone(),
        elements: closure(g, seeds),
    })
}

/// Every subgroup of `g`, ordered by size and then by element list.
pub fn all_subgroups(g: &GroupRef) -> Vec<Subgroup> {
    let mut found: std::collections::BTreeSet<(usize, Vec<usize>)> =
        std::collections::BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = g.elements().map(|x| closure(g, &[x])).collect();
    while let Some(members) = frontier.pop() {
        if !found.insert((members.len(), members.clone())) {
            continue;
        }
        for x in g.elements() {
            if members.binary_search(&x).is_err() {
                let mut seeds = members.clone();
                seeds.push(x);
                let bigger = closure(g, &seeds);
                if !found.contains(&(bigger.len(), bigger.clone())) {
                    frontier.push(bigger);
                }
            }
        }
    }
    found
        .into_iter()
        .map(|(_, elements)| Subgroup {
            parent: g.clone(),
            elements,
        })
        .collect()
}

/// Whether `whole` is the internal direct product of `a` and `b`.
pub fn is_internal_direct_product(whole: &Subgroup, a: &Subgroup, b: &Subgroup) -> bool {
    let g = whole.parent();
    a.is_subset_of(whole)
        && b.is_subset_of(whole)
        && a.intersection(b).is_trivial()
        && a.order() * b.order() == whole.order()
        && a.elements()
            .iter()
            .all(|&x| b.elements().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

impl Subgroup {
    /// Validates that `elements` is closed under products and inverses.
    pub fn new(parent: &GroupRef, mut elements: Vec<usize>) -> Result<Subgroup> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::InvalidSubgroup("missing the identity".into()));
        }
        if let Some(&x) = elements.iter().find(|&&x| x >= parent.order()) {
            return Err(Error::InvalidSubgroup(format!("{x} is not an element")));
        }
        let mut inside = vec![false; parent.order()];
        for &x in &elements {
            inside[x] = true;
        }
        for &a in &elements {
            if !inside[parent.inv(a)] {
                return Err(Error::InvalidSubgroup(format!(
                    "not closed under inverse at {a}"
                )));
            }
            for &b in &elements {
                if !inside[parent.mul(a, b)] {
                    return Err(Error::InvalidSubgroup(format!("not closed: {a}*{b}")));
                }
            }
        }
        Ok(Subgroup {
            parent: parent.clone(),
            elements,
        })
    }

    pub(crate) fn from_sorted_unchecked(parent: &GroupRef, elements: Vec<usize>) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            parent: parent.clone(),
            elements,
        }
    }

    pub fn whole(parent: &GroupRef) -> Subgroup {
        Subgroup::from_sorted_unchecked(parent, parent.elements().collect())
    }

    pub fn trivial(parent: &GroupRef) -> Subgroup {
        Subgroup::from_sorted_unchecked(parent, vec![0])
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Position of `g` in the sorted element list, i.e. its index in [`Subgroup::to_group`].
    pub fn position(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal(&self) -> bool {
        self.parent.elements().all(|x| {
            self.elements
                .iter()
                .all(|&k| self.contains(self.parent.conjugate(x, k)))
        })
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        assert!(Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent);
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Subgroup::from_sorted_unchecked(&self.parent, elements)
    }

    /// `x H x⁻¹`.
    pub fn conjugate_by(&self, x: usize) -> Subgroup {
        let mut elements: Vec<usize> = self
            .elements
            .iter()
            .map(|&h| self.parent.conjugate(x, h))
            .collect();
        elements.sort_unstable();
        Subgroup::from_sorted_unchecked(&self.parent, elements)
    }

    /// The subgroup as a group in its own right; element `i` is `elements()[i]`.
    pub fn to_group(&self) -> GroupRef {
        let n = self.elements.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.elements {
            for &b in &self.elements {
                table.push(self.position(self.parent.mul(a, b)).expect("closed"));
            }
        }
        let labels = self
            .elements
            .iter()
            .map(|&x| self.parent.label(x))
            .collect();
        Arc::new(FiniteGroup::new_unchecked(table, n).with_labels(labels))
    }

    /// Inclusion of [`Subgroup::to_group`] into the parent.
    pub fn inclusion(&self) -> GroupHom {
        GroupHom::from_map_trusted(self.to_group(), self.parent.clone(), self.elements.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_from_permutations, parse_cycles};

    fn s3() -> GroupRef {
        let gens = [
            parse_cycles("(0 1)", 3).unwrap(),
            parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        group_from_permutations(3, &gens).unwrap().0
    }

    #[test]
    fn generated_examples() {
        let g = s3();
        assert!(subgroup_generated(&g, &[]).unwrap().is_trivial());
        let three_cycle = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = subgroup_generated(&g, &[three_cycle]).unwrap();
        assert_eq!(a3.order(), 3);
        assert!(a3.is_normal());
        let all: Vec<usize> = g.elements().collect();
        assert!(subgroup_generated(&g, &all).unwrap().is_whole());
        assert!(subgroup_generated(&g, &[9]).is_err());
    }

    #[test]
    fn transposition_not_normal() {
        let g = s3();
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let h = subgroup_generated(&g, &[t]).unwrap();
        assert!(!h.is_normal());
        assert_eq!(h.index(), 3);
        let hg = h.to_group();
        assert_eq!(hg.order(), 2);
        hg.validate().unwrap();
        let inc = h.inclusion();
        assert!(inc.is_injective());
    }

    #[test]
    fn new_validates_closure() {
        let g = s3();
        let c = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        assert!(Subgroup::new(&g, vec![0, c]).is_err());
        assert!(Subgroup::new(&g, vec![0, c, g.inv(c)]).is_ok());
        assert!(Subgroup::new(&g, vec![1]).is_err());
        let whole: Vec<usize> = g.elements().collect();
        assert!(Subgroup::new(&g, whole).unwrap().is_whole());
    }

    #[test]
    fn subgroup_lattices() {
        assert_eq!(all_subgroups(&s3()).len(), 6);
        let d4 = group_from_permutations(
            4,
            &[
                parse_cycles("(0 1 2 3)", 4).unwrap(),
                parse_cycles("(0 2)", 4).unwrap(),
            ],
        )
        .unwrap()
        .0;
        assert_eq!(all_subgroups(&d4).len(), 10);
        let a4 = group_from_permutations(
            4,
            &[
                parse_cycles("(0 1 2)", 4).unwrap(),
                parse_cycles("(0 1)(2 3)", 4).unwrap(),
            ],
        )
        .unwrap()
        .0;
        let subs = all_subgroups(&a4);
        assert_eq!(subs.len(), 10);
        assert!(subs[0].is_trivial() && subs[9].is_whole());
        assert_eq!(subs.iter().filter(|h| h.order() == 4).count(), 1);
    }

    #[test]
    fn direct_factors() {
        let v4 = group_from_permutations(
            4,
            &[
                parse_cycles("(0 1)(2 3)", 4).unwrap(),
                parse_cycles("(0 2)(1 3)", 4).unwrap(),
            ],
        )
        .unwrap()
        .0;
        let whole = Subgroup::whole(&v4);
        let order_two: Vec<Subgroup> = all_subgroups(&v4)
            .into_iter()
            .filter(|h| h.order() == 2)
            .collect();
        assert!(is_internal_direct_product(
            &whole,
            &order_two[0],
            &order_two[1]
        ));
        assert!(!is_internal_direct_product(
            &whole,
            &order_two[0],
            &order_two[0]
        ));
        assert!(is_internal_direct_product(
            &whole,
            &whole,
            &Subgroup::trivial(&v4)
        ));
        let g = s3();
        let c3 = all_subgroups(&g)
            .into_iter()
            .find(|h| h.order() == 3)
            .unwrap();
        let c2 = all_subgroups(&g)
            .into_iter()
            .find(|h| h.order() == 2)
            .unwrap();
        // Orders multiply to 6, but the factors do not commute.
        assert!(!is_internal_direct_product(&Subgroup::whole(&g), &c3, &c2));
    }
}
