//! Representations of finite groups and the functors between them.
//!
//! Basis conventions are fixed so that every matrix produced here is stable:
//! tensor products use the lexicographic basis `e_i ⊗ f_j ↦ i·dim(f) + j`,
//! induced modules list the identity coset block first, and quotients use the
//! non-pivot coordinates of the subspace being factored out.
//!
//! Inflation along `G ↠ G/K` needs no separate operation: it is
//! [`restrict_along`] applied to the quotient map.

mod induce;
mod invariants;

use std::fmt;

pub use induce::{induce_along, induce_classical, induce_onto, InductionResult};
pub use invariants::{
    cofixed_quotient, fixed_point_rep, fixed_points, higman_sum, is_relatively_one_projective,
    norm_map, CofixedQuotient, FixedPointRep, NormMap,
};

use crate::error::{Error, Result};
use crate::groups::{same_group, GroupHom, GroupRef};
use crate::linalg::{Field, Matrix};

/// A module over the group algebra `field[G]`: one matrix per group element.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    group: GroupRef,
    field: Field,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Representation(|G|={}, {}, dim={})",
            self.group.order(),
            self.field,
            self.dim
        )
    }
}

impl Representation {
    /// Validates shapes, fields, `ρ(e) = I` and `ρ(gh) = ρ(g)ρ(h)` for every pair.
    pub fn new(
        group: GroupRef,
        field: Field,
        dim: usize,
        matrices: Vec<Matrix>,
    ) -> Result<Representation> {
        if matrices.len() != group.order() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        for (g, m) in matrices.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::InvalidRepresentation(format!(
                    "matrix of element {g} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(Error::MixedFields {
                    expected: field,
                    found: m.field(),
                });
            }
        }
        let rep = Representation {
            group,
            field,
            dim,
            matrices,
        };
        rep.validate()?;
        Ok(rep)
    }

    /// For outputs of functors whose validity follows from the construction.
    /// Tests re-run [`Representation::validate`] on these.
    pub(crate) fn new_trusted(
        group: GroupRef,
        field: Field,
        dim: usize,
        matrices: Vec<Matrix>,
    ) -> Representation {
        let rep = Representation {
            group,
            field,
            dim,
            matrices,
        };
        debug_assert!(
            rep.validate().is_ok(),
            "functor produced an invalid representation"
        );
        rep
    }

    /// Exhaustive check of the representation axioms.
    pub fn validate(&self) -> Result<()> {
        if !self.matrices[0].is_identity() {
            return Err(Error::InvalidRepresentation(
                "identity does not act as I".into(),
            ));
        }
        for a in self.group.elements() {
            for b in self.group.elements() {
                let lhs = &self.matrices[self.group.mul(a, b)];
                if *lhs != &self.matrices[a] * &self.matrices[b] {
                    return Err(Error::InvalidRepresentation(format!(
                        "ρ({a}·{b}) != ρ({a})ρ({b})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Completes generator matrices along words in the generators, then validates.
    pub fn from_generator_matrices(
        group: GroupRef,
        field: Field,
        dim: usize,
        generators: &[usize],
        images: Vec<Matrix>,
    ) -> Result<Representation> {
        if generators.len() != images.len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} generators but {} matrices",
                generators.len(),
                images.len()
            )));
        }
        for m in &images {
            if m.rows() != dim || m.cols() != dim || m.field() != field {
                return Err(Error::InvalidRepresentation(format!(
                    "generator matrix must be {dim}x{dim} over {field}"
                )));
            }
        }
        let tree = group.word_tree(generators)?;
        let mut matrices = vec![Matrix::identity(field, dim); group.order()];
        for (h, parent, i) in tree {
            matrices[h] = &matrices[parent] * &images[i];
        }
        Representation::new(group, field, dim, matrices)
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    fn check_compatible(&self, other: &Representation) -> Result<()> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch(
                "representations of different groups".into(),
            ));
        }
        if self.field != other.field {
            return Err(Error::MixedFields {
                expected: self.field,
                found: other.field,
            });
        }
        Ok(())
    }

    /// Same group, field and matrices.
    pub fn is_identical(&self, other: &Representation) -> bool {
        same_group(&self.group, &other.group)
            && self.field == other.field
            && self.matrices == other.matrices
    }
}

/// `dim` copies of the trivial action.
pub fn trivial_rep(group: &GroupRef, field: Field, dim: usize) -> Representation {
    Representation::new_trusted(
        group.clone(),
        field,
        dim,
        vec![Matrix::identity(field, dim); group.order()],
    )
}

/// Left regular representation: `ρ(g) e_x = e_{gx}`.
pub fn regular_rep(group: &GroupRef, field: Field) -> Representation {
    let n = group.order();
    let matrices = group
        .elements()
        .map(|g| {
            let mut m = Matrix::zeros(field, n, n);
            for x in group.elements() {
                m.set(group.mul(g, x), x, field.one());
            }
            m
        })
        .collect();
    Representation::new_trusted(group.clone(), field, n, matrices)
}

/// Permutation module of an action; `action[g][i]` is the image of point `i` under `g`.
pub fn permutation_rep(
    group: &GroupRef,
    field: Field,
    action: &[Vec<usize>],
) -> Result<Representation> {
    let degree = action.first().map_or(0, Vec::len);
    let mut matrices = Vec::with_capacity(action.len());
    for (g, perm) in action.iter().enumerate() {
        if perm.len() != degree || perm.iter().any(|&i| i >= degree) {
            return Err(Error::InvalidRepresentation(format!(
                "action of element {g} is not a map on {degree} points"
            )));
        }
        let mut m = Matrix::zeros(field, degree, degree);
        for (i, &j) in perm.iter().enumerate() {
            m.set(j, i, field.one());
        }
        matrices.push(m);
    }
    Representation::new(group.clone(), field, degree, matrices)
}

/// `Res_f v`: `g` acts through `f(g)`.
pub fn restrict_along(f: &GroupHom, v: &Representation) -> Result<Representation> {
    if !same_group(f.codomain(), &v.group) {
        return Err(Error::GroupMismatch(
            "module is not over the codomain of the map".into(),
        ));
    }
    let matrices = f.map().iter().map(|&y| v.matrices[y].clone()).collect();
    Ok(Representation::new_trusted(
        f.domain().clone(),
        v.field,
        v.dim,
        matrices,
    ))
}

/// `v ⊗ w` with the diagonal action.
pub fn tensor(v: &Representation, w: &Representation) -> Result<Representation> {
    v.check_compatible(w)?;
    let matrices = v
        .matrices
        .iter()
        .zip(&w.matrices)
        .map(|(a, b)| a.kron(b))
        .collect();
    Ok(Representation::new_trusted(
        v.group.clone(),
        v.field,
        v.dim * w.dim,
        matrices,
    ))
}

/// Contragredient: `ρ*(g) = ρ(g⁻¹)ᵀ`.
pub fn dual(v: &Representation) -> Representation {
    let matrices = v
        .group
        .elements()
        .map(|g| v.matrices[v.group.inv(g)].transpose())
        .collect();
    Representation::new_trusted(v.group.clone(), v.field, v.dim, matrices)
}

/// Block-diagonal sum with the offset of each summand.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub rep: Representation,
    pub offsets: Vec<usize>,
    pub dims: Vec<usize>,
}

pub fn direct_sum(
    group: &GroupRef,
    field: Field,
    summands: &[&Representation],
) -> Result<DirectSum> {
    for s in summands {
        if !same_group(&s.group, group) {
            return Err(Error::GroupMismatch(
                "summand over a different group".into(),
            ));
        }
        if s.field != field {
            return Err(Error::MixedFields {
                expected: field,
                found: s.field,
            });
        }
    }
    let dims: Vec<usize> = summands.iter().map(|s| s.dim).collect();
    let offsets = dims
        .iter()
        .scan(0, |acc, d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let matrices = group
        .elements()
        .map(|g| {
            let blocks: Vec<&Matrix> = summands.iter().map(|s| &s.matrices[g]).collect();
            Matrix::block_diagonal(field, &blocks)
        })
        .collect();
    let dim = dims.iter().sum();
    Ok(DirectSum {
        rep: Representation::new_trusted(group.clone(), field, dim, matrices),
        offsets,
        dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_from_permutations, parse_cycles, FiniteGroup};

    const Q: Field = Field::Rationals;

    fn s3() -> (GroupRef, Vec<Vec<usize>>) {
        let gens = [
            parse_cycles("(0 1)", 3).unwrap(),
            parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        group_from_permutations(3, &gens).unwrap()
    }

    fn sign_hom(g: &GroupRef) -> GroupHom {
        GroupHom::from_generator_images(g.clone(), FiniteGroup::cyclic(2), g.generators(), &[1, 0])
            .unwrap()
    }

    pub(crate) fn sign_rep(g: &GroupRef, field: Field) -> Representation {
        let c2 = FiniteGroup::cyclic(2);
        let sgn_c2 = Representation::new(
            c2.clone(),
            field,
            1,
            vec![
                Matrix::identity(field, 1),
                Matrix::from_i64(field, &[&[-1]]),
            ],
        )
        .unwrap();
        restrict_along(&sign_hom(g), &sgn_c2).unwrap()
    }

    #[test]
    fn basic_constructors() {
        let (g, perms) = s3();
        let t = trivial_rep(&g, Q, 1);
        assert!(t.matrices().iter().all(Matrix::is_identity));
        let c2 = FiniteGroup::cyclic(2);
        let r = regular_rep(&c2, Field::Prime(2));
        assert_eq!(r.dim(), 2);
        assert_eq!(
            *r.matrix(1),
            Matrix::from_i64(Field::Prime(2), &[&[0, 1], &[1, 0]])
        );
        r.validate().unwrap();
        let p = permutation_rep(&g, Q, &perms).unwrap();
        assert_eq!(p.dim(), 3);
        regular_rep(&g, Field::Prime(3)).validate().unwrap();
    }

    #[test]
    fn rejects_non_representations() {
        let c2 = FiniteGroup::cyclic(2);
        let bad = vec![Matrix::identity(Q, 1), Matrix::from_i64(Q, &[&[2]])];
        assert!(Representation::new(c2.clone(), Q, 1, bad).is_err());
        let short = vec![Matrix::identity(Q, 1)];
        assert!(Representation::new(c2.clone(), Q, 1, short).is_err());
        let wrong_field = vec![Matrix::identity(Field::Prime(2), 1); 2];
        assert!(Representation::new(c2, Q, 1, wrong_field).is_err());
    }

    #[test]
    fn generator_completion() {
        let (g, _) = s3();
        let swap = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        let sgn = Matrix::from_i64(Q, &[&[-1, 0], &[0, -1]]);
        // (0 1) ↦ swap, (0 1 2) ↦ I is not a representation: the relation (ts)² = e fails.
        let bad = Representation::from_generator_matrices(
            g.clone(),
            Q,
            2,
            g.generators(),
            vec![swap.clone(), sgn],
        );
        assert!(bad.is_err());
        let ok = Representation::from_generator_matrices(
            g.clone(),
            Q,
            2,
            g.generators(),
            vec![swap, Matrix::identity(Q, 2)],
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn restriction_examples() {
        let (g, _) = s3();
        let id = GroupHom::identity(&g);
        let r = regular_rep(&g, Q);
        assert!(restrict_along(&id, &r).unwrap().is_identical(&r));

        let c2 = FiniteGroup::cyclic(2);
        let triv_hom = GroupHom::trivial(&g, &c2);
        let res = restrict_along(&triv_hom, &regular_rep(&c2, Q)).unwrap();
        assert!(res.matrices().iter().all(Matrix::is_identity));

        let res = restrict_along(&sign_hom(&g), &regular_rep(&c2, Q)).unwrap();
        res.validate().unwrap();
        for x in g.elements() {
            let m = res.matrix(x);
            if g.element_order(x) == 2 {
                assert_eq!(*m, Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]));
            } else {
                assert!(m.is_identity());
            }
        }
        assert!(restrict_along(&id, &regular_rep(&c2, Q)).is_err());
    }

    #[test]
    fn tensor_dual_sum() {
        let (g, _) = s3();
        let sgn = sign_rep(&g, Q);
        let sq = tensor(&sgn, &sgn).unwrap();
        assert!(sq.is_identical(&trivial_rep(&g, Q, 1)));
        let r = regular_rep(&g, Q);
        let t = tensor(&r, &trivial_rep(&g, Q, 1)).unwrap();
        assert!(t.is_identical(&r));
        assert_eq!(tensor(&r, &sgn).unwrap().dim(), 6);
        assert!(dual(&dual(&r)).is_identical(&r));
        assert!(dual(&trivial_rep(&g, Q, 1)).is_identical(&trivial_rep(&g, Q, 1)));
        tensor(&r, &r).unwrap().validate().unwrap();

        let triv = trivial_rep(&g, Q, 1);
        let s = direct_sum(&g, Q, &[&triv, &sgn]).unwrap();
        assert_eq!(s.rep.dim(), 2);
        assert_eq!(s.offsets, vec![0, 1]);
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(*s.rep.matrix(t), Matrix::from_i64(Q, &[&[1, 0], &[0, -1]]));
        assert_eq!(direct_sum(&g, Q, &[]).unwrap().rep.dim(), 0);
        assert!(direct_sum(&g, Q, &[&r]).unwrap().rep.is_identical(&r));
        assert!(tensor(&r, &regular_rep(&g, Field::Prime(2))).is_err());
    }
}
