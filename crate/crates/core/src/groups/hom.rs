use std::fmt;
use std::sync::Arc;

use super::{GroupRef, Subgroup};
use crate::error::{Error, Result};

/// A validated homomorphism between finite groups, with cached kernel and image.
#[derive(Clone)]
pub struct GroupHom {
    domain: GroupRef,
    codomain: GroupRef,
    map: Vec<usize>,
    kernel: Subgroup,
    image: Subgroup,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}, {:?})",
            self.domain.order(),
            self.codomain.order(),
            self.map
        )
    }
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && self.domain == other.domain && self.codomain == other.codomain
    }
}

impl Eq for GroupHom {}

impl GroupHom {
    /// Validates `map` as a homomorphism by checking every pair of domain elements.
    pub fn from_map(domain: GroupRef, codomain: GroupRef, map: Vec<usize>) -> Result<GroupHom> {
        if map.len() != domain.order() {
            return Err(Error::InvalidMap(format!(
                "{} images for a domain of order {}",
                map.len(),
                domain.order()
            )));
        }
        if let Some(&y) = map.iter().find(|&&y| y >= codomain.order()) {
            return Err(Error::InvalidMap(format!(
                "image {y} outside codomain of order {}",
                codomain.order()
            )));
        }
        for a in domain.elements() {
            for b in domain.elements() {
                if map[domain.mul(a, b)] != codomain.mul(map[a], map[b]) {
                    return Err(Error::NotHomomorphism { a, b });
                }
            }
        }
        Ok(GroupHom::from_map_trusted(domain, codomain, map))
    }

    /// Builds a hom whose validity follows from the construction (inclusions,
    /// projections, composites of validated maps).
    pub(crate) fn from_map_trusted(
        domain: GroupRef,
        codomain: GroupRef,
        map: Vec<usize>,
    ) -> GroupHom {
        debug_assert!(domain.elements().all(|a| domain
            .elements()
            .all(|b| map[domain.mul(a, b)] == codomain.mul(map[a], map[b]))));
        let kernel = Subgroup::from_sorted_unchecked(
            &domain,
            domain.elements().filter(|&g| map[g] == 0).collect(),
        );
        let mut img: Vec<usize> = map.clone();
        img.sort_unstable();
        img.dedup();
        let image = Subgroup::from_sorted_unchecked(&codomain, img);
        GroupHom {
            domain,
            codomain,
            map,
            kernel,
            image,
        }
    }

    /// Extends generator images along words, then validates over the whole table.
    pub fn from_generator_images(
        domain: GroupRef,
        codomain: GroupRef,
        generators: &[usize],
        images: &[usize],
    ) -> Result<GroupHom> {
        if generators.len() != images.len() {
            return Err(Error::InvalidMap(format!(
                "{} generators but {} images",
                generators.len(),
                images.len()
            )));
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= domain.order()) {
            return Err(Error::InvalidMap(format!(
                "generator {g} outside the domain"
            )));
        }
        if let Some(&y) = images.iter().find(|&&y| y >= codomain.order()) {
            return Err(Error::InvalidMap(format!("image {y} outside the codomain")));
        }
        let tree = domain.word_tree(generators)?;
        let mut map = vec![usize::MAX; domain.order()];
        map[0] = 0;
        for (h, parent, i) in tree {
            map[h] = codomain.mul(map[parent], images[i]);
        }
        GroupHom::from_map(domain, codomain, map)
    }

    pub fn identity(g: &GroupRef) -> GroupHom {
        GroupHom::from_map_trusted(g.clone(), g.clone(), g.elements().collect())
    }

    /// The hom sending everything to the identity.
    pub fn trivial(domain: &GroupRef, codomain: &GroupRef) -> GroupHom {
        GroupHom::from_map_trusted(domain.clone(), codomain.clone(), vec![0; domain.order()])
    }

    pub fn domain(&self) -> &GroupRef {
        &self.domain
    }

    pub fn codomain(&self) -> &GroupRef {
        &self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self) -> &Subgroup {
        &self.image
    }

    pub fn is_injective(&self) -> bool {
        self.kernel.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.image.is_whole()
    }

    /// `f(s)` for a subgroup `s` of the domain.
    pub fn image_of(&self, s: &Subgroup) -> Result<Subgroup> {
        if **s.parent() != *self.domain {
            return Err(Error::GroupMismatch(
                "subgroup does not live in the domain".into(),
            ));
        }
        let mut elements: Vec<usize> = s.elements().iter().map(|&x| self.map[x]).collect();
        elements.sort_unstable();
        elements.dedup();
        Ok(Subgroup::from_sorted_unchecked(&self.codomain, elements))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom> {
        if *self.codomain != *next.domain {
            return Err(Error::GroupMismatch(
                "codomain of the first map is not the domain of the second".into(),
            ));
        }
        let map = self.map.iter().map(|&x| next.map[x]).collect();
        Ok(GroupHom::from_map_trusted(
            self.domain.clone(),
            next.codomain.clone(),
            map,
        ))
    }

    /// Whether `self` and `other` agree on every element (same domain and codomain).
    pub fn agrees_with(&self, other: &GroupHom) -> bool {
        self == other
    }
}

/// Splits `f` as `inclusion ∘ onto` with `onto: G ↠ f(G)` and `inclusion: f(G) ↪ G₁`.
pub fn factorize(f: &GroupHom) -> (GroupHom, GroupHom) {
    let inclusion = f.image().inclusion();
    let map = f
        .map
        .iter()
        .map(|&y| f.image().position(y).expect("value lies in the image"))
        .collect();
    let onto = GroupHom::from_map_trusted(f.domain.clone(), inclusion.domain().clone(), map);
    (onto, inclusion)
}

/// `k ↦ x a(k) x⁻¹`.
pub fn conjugate_hom(a: &GroupHom, x: usize) -> Result<GroupHom> {
    if x >= a.codomain.order() {
        return Err(Error::InvalidMap(format!(
            "{x} is not an element of the codomain"
        )));
    }
    let g = &a.codomain;
    let map = a.map.iter().map(|&y| g.conjugate(x, y)).collect();
    Ok(GroupHom::from_map_trusted(a.domain.clone(), g.clone(), map))
}

/// Restriction of `f` to `sub_domain → sub_codomain`, between the subgroups realized as groups.
pub fn restrict_hom_to(
    f: &GroupHom,
    sub_domain: &Subgroup,
    sub_codomain: &Subgroup,
) -> Result<GroupHom> {
    if **sub_domain.parent() != *f.domain || **sub_codomain.parent() != *f.codomain {
        return Err(Error::GroupMismatch(
            "subgroups must live in the domain and codomain".into(),
        ));
    }
    let map = sub_domain
        .elements()
        .iter()
        .map(|&g| {
            sub_codomain.position(f.apply(g)).ok_or_else(|| {
                Error::Containment(format!(
                    "f({g}) = {} lies outside the target subgroup",
                    f.apply(g)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupHom::from_map_trusted(
        sub_domain.to_group(),
        sub_codomain.to_group(),
        map,
    ))
}

/// Convenience: do the two handles denote the same group?
pub(crate) fn same_group(a: &GroupRef, b: &GroupRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_from_permutations, parse_cycles, FiniteGroup};

    fn s3() -> GroupRef {
        let gens = [
            parse_cycles("(0 1)", 3).unwrap(),
            parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        group_from_permutations(3, &gens).unwrap().0
    }

    fn sign(g: &GroupRef) -> GroupHom {
        let c2 = FiniteGroup::cyclic(2);
        let gens = g.generators().to_vec();
        GroupHom::from_generator_images(g.clone(), c2, &gens, &[1, 0]).unwrap()
    }

    #[test]
    fn identity_and_sign() {
        let g = s3();
        let id = GroupHom::identity(&g);
        assert!(id.is_injective() && id.is_surjective());
        let s = sign(&g);
        assert_eq!(s.kernel().order(), 3);
        assert!(s.kernel().is_normal());
        assert!(s.is_surjective());
        assert_eq!(s.image().order() * s.kernel().order(), g.order());
    }

    #[test]
    fn order_four_cannot_map_to_three_cycle() {
        let g = s3();
        let c4 = FiniteGroup::cyclic(4);
        let three = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let err = GroupHom::from_generator_images(c4, g, &[1], &[three]).unwrap_err();
        assert!(matches!(err, Error::NotHomomorphism { .. }));
    }

    #[test]
    fn factorize_through_image() {
        let g = s3();
        let c6 = FiniteGroup::cyclic(6);
        let three = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let f = GroupHom::from_generator_images(c6, g.clone(), &[1], &[three]).unwrap();
        let (onto, inc) = factorize(&f);
        assert!(onto.is_surjective());
        assert_eq!(onto.codomain().order(), 3);
        assert_eq!(onto.kernel().order(), 2);
        assert!(inc.is_injective());
        assert_eq!(onto.then(&inc).unwrap(), f);

        let s = sign(&g);
        let (onto, inc) = factorize(&s);
        assert!(inc.is_surjective() && inc.is_injective());
        assert_eq!(*onto.codomain(), *s.codomain());
    }

    #[test]
    fn conjugation() {
        let g = s3();
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let c2 = FiniteGroup::cyclic(2);
        let a = GroupHom::from_generator_images(c2, g.clone(), &[1], &[t]).unwrap();
        assert_eq!(conjugate_hom(&a, 0).unwrap(), a);
        let c = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let b = conjugate_hom(&a, c).unwrap();
        assert_ne!(b, a);
        assert_eq!(*b.image(), a.image().conjugate_by(c));
        assert_eq!(conjugate_hom(&b, g.inv(c)).unwrap(), a);
        assert!(conjugate_hom(&a, 99).is_err());
    }

    #[test]
    fn restriction() {
        let g = s3();
        let s = sign(&g);
        let same =
            restrict_hom_to(&s, &Subgroup::whole(&g), &Subgroup::whole(s.codomain())).unwrap();
        assert_eq!(same, s);
        let to_e = restrict_hom_to(&s, s.kernel(), &Subgroup::trivial(s.codomain())).unwrap();
        assert_eq!(to_e.codomain().order(), 1);
        assert_eq!(to_e.domain().order(), 3);
        let err = restrict_hom_to(&s, &Subgroup::whole(&g), &Subgroup::trivial(s.codomain()));
        assert!(matches!(err, Err(Error::Containment(_))));
    }
}
