use super::invariants::{augmentation, CofixedQuotient};
use super::Representation;
use crate::error::{Error, Result};
use crate::groups::{factorize, same_group, GroupHom, LeftCosets, Subgroup};
use crate::linalg::{quotient_map, Matrix};

/// `Ind_f V` together with the unit `V → Res_f Ind_f V`.
///
/// The induced module is `⊕_i t_i ⊗ V_K` over the transversal `t_i` of `im f`,
/// where `K = ker f` and `V_K` is written in the quotient coordinates given by
/// `projection`/`section`. For injective `f` the projection is the identity.
#[derive(Clone, Debug)]
pub struct InductionResult {
    pub rep: Representation,
    pub unit_map: Matrix,
    /// Minimal representatives of the left cosets of `im f`, identity first.
    pub transversal: Vec<usize>,
    pub image: Subgroup,
    pub projection: Matrix,
    pub section: Matrix,
}

impl InductionResult {
    /// Dimension of each block `t_i ⊗ V_K`.
    pub fn block_dim(&self) -> usize {
        self.projection.rows()
    }
}

/// Induction along a surjection `f : G ↠ H`: the coinvariants `V_{ker f}` with `H` acting through preimages.
pub fn induce_onto(f: &GroupHom, v: &Representation) -> Result<CofixedQuotient> {
    if !same_group(f.domain(), v.group()) {
        return Err(Error::GroupMismatch(
            "module is not over the domain of the map".into(),
        ));
    }
    if !f.is_surjective() {
        return Err(Error::InvalidMap("expected a surjective map".into()));
    }
    let augmentation = augmentation(v, f.kernel());
    let (projection, section) = quotient_map(v.dim(), &augmentation)?;
    let h = f.codomain();
    let mut preimage = vec![usize::MAX; h.order()];
    for g in v.group().elements().rev() {
        preimage[f.apply(g)] = g;
    }
    let matrices = preimage
        .iter()
        .map(|&g| &(&projection * v.matrix(g)) * &section)
        .collect();
    let rep = Representation::new_trusted(h.clone(), v.field(), projection.rows(), matrices);
    Ok(CofixedQuotient {
        rep,
        projection,
        section,
        augmentation,
    })
}

/// Classical induction from a subgroup, `w` being a module over `h.to_group()`.
///
/// For `g t_i = t_j h'` the block `(j, i)` of `ρ(g)` is `ρ_W(h')`.
pub fn induce_classical(h: &Subgroup, w: &Representation) -> Result<InductionResult> {
    if **w.group() != *h.to_group() {
        return Err(Error::GroupMismatch(
            "module is not over the given subgroup".into(),
        ));
    }
    let g = h.parent();
    let field = w.field();
    let cosets = LeftCosets::new(h);
    let m = cosets.len();
    let q = w.dim();
    let matrices = g
        .elements()
        .map(|x| {
            let mut big = Matrix::zeros(field, m * q, m * q);
            for (i, &t) in cosets.representatives.iter().enumerate() {
                let y = g.mul(x, t);
                let j = cosets.membership[y];
                let h_prime = g.mul(g.inv(cosets.representatives[j]), y);
                let pos = h
                    .position(h_prime)
                    .expect("t_j⁻¹ g t_i lies in the subgroup");
                big.paste(j * q, i * q, w.matrix(pos));
            }
            big
        })
        .collect();
    let rep = Representation::new_trusted(g.clone(), field, m * q, matrices);
    let mut unit_map = Matrix::zeros(field, m * q, q);
    unit_map.paste(0, 0, &Matrix::identity(field, q));
    Ok(InductionResult {
        rep,
        unit_map,
        transversal: cosets.representatives,
        image: h.clone(),
        projection: Matrix::identity(field, q),
        section: Matrix::identity(field, q),
    })
}

/// `Ind_f V` for an arbitrary homomorphism `f : G → G₁`: coinvariants along `G ↠ im f`, then classical induction.
pub fn induce_along(f: &GroupHom, v: &Representation) -> Result<InductionResult> {
    let (onto, _) = factorize(f);
    let coinv = induce_onto(&onto, v)?;
    let classical = induce_classical(f.image(), &coinv.rep)?;
    Ok(InductionResult {
        unit_map: &classical.unit_map * &coinv.projection,
        rep: classical.rep,
        transversal: classical.transversal,
        image: classical.image,
        projection: coinv.projection,
        section: coinv.section,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{
        group_from_permutations, parse_cycles, subgroup_generated, FiniteGroup, GroupRef,
    };
    use crate::linalg::Field;
    use crate::rep::{regular_rep, restrict_along, trivial_rep};

    const Q: Field = Field::Rationals;

    fn s3() -> GroupRef {
        let gens = [
            parse_cycles("(0 1)", 3).unwrap(),
            parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        group_from_permutations(3, &gens).unwrap().0
    }

    fn unit_is_equivariant(f: &GroupHom, v: &Representation, ind: &InductionResult) -> bool {
        let res = restrict_along(f, &ind.rep).unwrap();
        v.group()
            .elements()
            .all(|g| res.matrix(g) * &ind.unit_map == &ind.unit_map * v.matrix(g))
    }

    #[test]
    fn induction_examples() {
        let g = s3();
        let one = FiniteGroup::trivial();
        let into = GroupHom::trivial(&one, &g);
        let ind = induce_along(&into, &trivial_rep(&one, Q, 1)).unwrap();
        assert_eq!(ind.rep.dim(), 6);
        ind.rep.validate().unwrap();

        let id = GroupHom::identity(&g);
        let r = regular_rep(&g, Q);
        let ind = induce_along(&id, &r).unwrap();
        assert!(ind.rep.is_identical(&r));
        assert!(ind.unit_map.is_identity());

        let to_one = GroupHom::trivial(&g, &one);
        let ind = induce_along(&to_one, &r).unwrap();
        assert_eq!(ind.rep.dim(), 1);
        assert!(unit_is_equivariant(&to_one, &r, &ind));

        let c = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = subgroup_generated(&g, &[c]).unwrap();
        let inc = a3.inclusion();
        let w = trivial_rep(inc.domain(), Q, 1);
        let ind = induce_along(&inc, &w).unwrap();
        assert_eq!(ind.rep.dim(), 2);
        assert!(unit_is_equivariant(&inc, &w, &ind));
    }

    #[test]
    fn mixed_map_induction() {
        // C4 → S3 sending the generator to a transposition: kernel C2, image of order 2.
        let g = s3();
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let c4 = FiniteGroup::cyclic(4);
        let f = GroupHom::from_generator_images(c4.clone(), g.clone(), &[1], &[t]).unwrap();
        for field in [Q, Field::Prime(2), Field::Prime(3)] {
            let v = regular_rep(&c4, field);
            let ind = induce_along(&f, &v).unwrap();
            assert_eq!(ind.block_dim(), 2);
            assert_eq!(ind.rep.dim(), 6);
            ind.rep.validate().unwrap();
            assert!(unit_is_equivariant(&f, &v, &ind));
        }
    }

    #[test]
    fn onto_requires_surjection() {
        let g = s3();
        let c2 = FiniteGroup::cyclic(2);
        let f = GroupHom::trivial(&c2, &g);
        assert!(induce_onto(&f, &trivial_rep(&c2, Q, 1)).is_err());
    }
}
