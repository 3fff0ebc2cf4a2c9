use std::sync::Arc;

use super::hom::same_group;
use super::{FiniteGroup, GroupHom, GroupRef, Subgroup};
use crate::error::{Error, Result};

/// `A × B` with element `(a, b)` stored at index `a·|B| + b`.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: GroupRef,
    pub proj_left: GroupHom,
    pub proj_right: GroupHom,
    pub inj_left: GroupHom,
    pub inj_right: GroupHom,
}

pub fn direct_product(a: &GroupRef, b: &GroupRef) -> DirectProduct {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            table.push(a.mul(xa, ya) * nb + b.mul(xb, yb));
        }
    }
    let mut gens: Vec<usize> = a.generators().iter().map(|&g| g * nb).collect();
    gens.extend(b.generators().iter().copied());
    let labels = (0..n)
        .map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb)))
        .collect();
    let group: GroupRef = Arc::new(
        FiniteGroup::new_unchecked(table, n)
            .with_generators(gens)
            .with_labels(labels),
    );
    DirectProduct {
        proj_left: GroupHom::from_map_trusted(
            group.clone(),
            a.clone(),
            (0..n).map(|x| x / nb).collect(),
        ),
        proj_right: GroupHom::from_map_trusted(
            group.clone(),
            b.clone(),
            (0..n).map(|x| x % nb).collect(),
        ),
        inj_left: GroupHom::from_map_trusted(
            a.clone(),
            group.clone(),
            (0..na).map(|x| x * nb).collect(),
        ),
        inj_right: GroupHom::from_map_trusted(b.clone(), group.clone(), (0..nb).collect()),
        group,
    }
}

/// Fiber product `{(k, h) : f(k) = g(h)}` with its two projections.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub group: GroupRef,
    /// `(k, h) ↦ k`
    pub to_left: GroupHom,
    /// `(k, h) ↦ h`
    pub to_right: GroupHom,
    /// The pair behind each element, in lexicographic order; `pairs[0] == (0, 0)`.
    pub pairs: Vec<(usize, usize)>,
}

pub fn pullback(f: &GroupHom, g: &GroupHom) -> Result<Pullback> {
    if !same_group(f.codomain(), g.codomain()) {
        return Err(Error::GroupMismatch(
            "pullback needs maps into the same group".into(),
        ));
    }
    let (k, h) = (f.domain(), g.domain());
    let product = direct_product(k, h);
    let nh = h.order();
    let elements: Vec<usize> = (0..product.group.order())
        .filter(|&x| f.apply(x / nh) == g.apply(x % nh))
        .collect();
    let sub = Subgroup::from_sorted_unchecked(&product.group, elements);
    let group = sub.to_group();
    let pairs: Vec<(usize, usize)> = sub.elements().iter().map(|&x| (x / nh, x % nh)).collect();
    Ok(Pullback {
        to_left: GroupHom::from_map_trusted(
            group.clone(),
            k.clone(),
            pairs.iter().map(|p| p.0).collect(),
        ),
        to_right: GroupHom::from_map_trusted(
            group.clone(),
            h.clone(),
            pairs.iter().map(|p| p.1).collect(),
        ),
        group,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_from_permutations, parse_cycles};

    #[test]
    fn products() {
        let t = FiniteGroup::trivial();
        let c3 = FiniteGroup::cyclic(3);
        let p = direct_product(&t, &c3);
        assert_eq!(*p.group, *c3);

        let c2 = FiniteGroup::cyclic(2);
        let v4 = direct_product(&c2, &c2);
        assert_eq!(v4.group.order(), 4);
        assert_eq!(v4.group.exponent(), 2);

        let c6 = direct_product(&c2, &c3);
        assert_eq!(c6.group.order(), 6);
        assert_eq!(c6.group.exponent(), 6);
        assert!(c6.proj_left.is_surjective() && c6.inj_right.is_injective());
        assert_eq!(c6.group.generators().len(), 2);
    }

    #[test]
    fn pullback_examples() {
        let gens = [
            parse_cycles("(0 1)", 3).unwrap(),
            parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        let (s3, _) = group_from_permutations(3, &gens).unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let c = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        let c4 = FiniteGroup::cyclic(4);
        let c6 = FiniteGroup::cyclic(6);
        let f = GroupHom::from_generator_images(c4.clone(), s3.clone(), &[1], &[t]).unwrap();
        let g = GroupHom::from_generator_images(c6.clone(), s3.clone(), &[1], &[c]).unwrap();
        let pb = pullback(&f, &g).unwrap();
        assert_eq!(pb.group.order(), 4);
        assert_eq!(pb.group.exponent(), 2);
        for b in pb.group.elements() {
            assert_eq!(f.apply(pb.to_left.apply(b)), g.apply(pb.to_right.apply(b)));
        }

        let id = GroupHom::identity(&s3);
        let pb = pullback(&f, &id).unwrap();
        assert_eq!(pb.group.order(), 4);
        assert!(pb.to_left.is_injective() && pb.to_left.is_surjective());

        let f0 = GroupHom::trivial(&c4, &s3);
        let g0 = GroupHom::trivial(&c6, &s3);
        assert_eq!(pullback(&f0, &g0).unwrap().group.order(), 24);

        let other = GroupHom::identity(&c6);
        assert!(pullback(&f, &other).is_err());
    }
}
