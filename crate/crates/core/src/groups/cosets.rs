use std::sync::Arc;

use super::{FiniteGroup, GroupHom, GroupRef, Subgroup};
use crate::error::{Error, Result};

/// Left cosets `gH`, each represented by its minimal element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftCosets {
    /// Representatives in increasing order; `representatives[0] == 0`.
    pub representatives: Vec<usize>,
    /// For each group element, the position of its coset's representative.
    pub membership: Vec<usize>,
}

impl LeftCosets {
    pub fn new(h: &Subgroup) -> LeftCosets {
        let g = h.parent();
        let mut membership = vec![usize::MAX; g.order()];
        let mut representatives = Vec::with_capacity(h.index());
        for x in g.elements() {
            if membership[x] != usize::MAX {
                continue;
            }
            let pos = representatives.len();
            representatives.push(x);
            for &k in h.elements() {
                membership[g.mul(x, k)] = pos;
            }
        }
        LeftCosets {
            representatives,
            membership,
        }
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

/// One representative per left coset of `h`, minimal index in each; the identity comes first.
pub fn left_coset_transversal(h: &Subgroup) -> Vec<usize> {
    LeftCosets::new(h).representatives
}

/// Partition of a group into double cosets `L x R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetDecomposition {
    pub ambient: GroupRef,
    pub left: Subgroup,
    pub right: Subgroup,
    /// Minimal element of each double coset, increasing.
    pub representatives: Vec<usize>,
    /// For each group element, the position of its double coset.
    pub membership: Vec<usize>,
    pub sizes: Vec<usize>,
}

pub fn double_cosets(left: &Subgroup, right: &Subgroup) -> Result<DoubleCosetDecomposition> {
    let g = left.parent();
    if **g != **right.parent() {
        return Err(Error::GroupMismatch(
            "double cosets need two subgroups of one group".into(),
        ));
    }
    let mut membership = vec![usize::MAX; g.order()];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    for x in g.elements() {
        if membership[x] != usize::MAX {
            continue;
        }
        let pos = representatives.len();
        representatives.push(x);
        let mut size = 0;
        for &l in left.elements() {
            let lx = g.mul(l, x);
            for &r in right.elements() {
                let y = g.mul(lx, r);
                if membership[y] == usize::MAX {
                    membership[y] = pos;
                    size += 1;
                }
            }
        }
        sizes.push(size);
    }
    debug_assert_eq!(sizes.iter().sum::<usize>(), g.order());
    Ok(DoubleCosetDecomposition {
        ambient: g.clone(),
        left: left.clone(),
        right: right.clone(),
        representatives,
        membership,
        sizes,
    })
}

/// `G/K` as a group of its own, together with the quotient map.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    pub group: GroupRef,
    pub projection: GroupHom,
    /// Minimal element of each coset; coset `i` of the quotient is `coset_representatives[i] K`.
    pub coset_representatives: Vec<usize>,
}

pub fn quotient_group(k: &Subgroup) -> Result<QuotientGroup> {
    if !k.is_normal() {
        return Err(Error::NotNormal(format!("{:?}", k.elements())));
    }
    let g = k.parent();
    let cosets = LeftCosets::new(k);
    let m = cosets.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &cosets.representatives {
        for &b in &cosets.representatives {
            table.push(cosets.membership[g.mul(a, b)]);
        }
    }
    let labels = cosets
        .representatives
        .iter()
        .map(|&x| format!("{}K", g.label(x)))
        .collect();
    let group: GroupRef = Arc::new(FiniteGroup::new_unchecked(table, m).with_labels(labels));
    let projection =
        GroupHom::from_map_trusted(g.clone(), group.clone(), cosets.membership.clone());
    Ok(QuotientGroup {
        group,
        projection,
        coset_representatives: cosets.representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_from_permutations, parse_cycles, subgroup_generated};

    fn s3() -> GroupRef {
        let gens = [
            parse_cycles("(0 1)", 3).unwrap(),
            parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        group_from_permutations(3, &gens).unwrap().0
    }

    #[test]
    fn transversals() {
        let g = s3();
        assert_eq!(left_coset_transversal(&Subgroup::whole(&g)), vec![0]);
        assert_eq!(
            left_coset_transversal(&Subgroup::trivial(&g)),
            (0..6).collect::<Vec<_>>()
        );
        let c = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = subgroup_generated(&g, &[c]).unwrap();
        let t = left_coset_transversal(&a3);
        assert_eq!(t.len(), 2);
        assert_eq!(t[0], 0);
    }

    #[test]
    fn double_coset_examples() {
        let g = s3();
        let whole = Subgroup::whole(&g);
        assert_eq!(
            double_cosets(&whole, &whole).unwrap().representatives,
            vec![0]
        );
        let e = Subgroup::trivial(&g);
        assert_eq!(double_cosets(&e, &e).unwrap().representatives.len(), 6);
        let c = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let a3 = subgroup_generated(&g, &[c]).unwrap();
        let ht = subgroup_generated(&g, &[t]).unwrap();
        let d = double_cosets(&a3, &ht).unwrap();
        assert_eq!(d.representatives, vec![0]);
        let d = double_cosets(&ht, &ht).unwrap();
        assert_eq!(d.sizes.iter().sum::<usize>(), 6);
        assert_eq!(d.representatives.len(), 2);
    }

    #[test]
    fn quotient_by_a3() {
        let g = s3();
        let c = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = subgroup_generated(&g, &[c]).unwrap();
        let q = quotient_group(&a3).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(*q.projection.kernel(), a3);
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let ht = subgroup_generated(&g, &[t]).unwrap();
        assert!(matches!(quotient_group(&ht), Err(Error::NotNormal(_))));
    }
}
