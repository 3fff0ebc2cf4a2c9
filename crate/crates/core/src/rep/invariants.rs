use super::{induce_onto, Representation};
use crate::error::{Error, Result};
use crate::groups::{quotient_group, same_group, QuotientGroup, Subgroup};
use crate::linalg::{nullspace_basis, quotient_map, Matrix, SubspaceBasis};

fn check_parent(v: &Representation, k: &Subgroup) -> Result<()> {
    if !same_group(k.parent(), v.group()) {
        return Err(Error::GroupMismatch("subgroup of a different group".into()));
    }
    Ok(())
}

fn minus_identity(m: &Matrix) -> Matrix {
    m - &Matrix::identity(m.field(), m.rows())
}

/// `V^K = {v : ρ(k)v = v for all k ∈ K}`.
pub fn fixed_points(v: &Representation, k: &Subgroup) -> Result<SubspaceBasis> {
    check_parent(v, k)?;
    let blocks: Vec<Matrix> = k
        .elements()
        .iter()
        .map(|&x| minus_identity(v.matrix(x)))
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Ok(nullspace_basis(&Matrix::vstack(v.field(), v.dim(), &refs)))
}

/// `span{(ρ(k) - 1)v}`, the subspace factored out by the coinvariants.
pub(crate) fn augmentation(v: &Representation, k: &Subgroup) -> SubspaceBasis {
    let blocks: Vec<Matrix> = k
        .elements()
        .iter()
        .map(|&x| minus_identity(v.matrix(x)).transpose())
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    SubspaceBasis::from_spanning_rows(&Matrix::vstack(v.field(), v.dim(), &refs))
}

/// Coinvariants `V_K = V / span{(ρ(k) - 1)v}` with the induced action of the target group.
#[derive(Clone, Debug)]
pub struct CofixedQuotient {
    pub rep: Representation,
    /// `V → V_K` in quotient coordinates.
    pub projection: Matrix,
    /// A linear right inverse of `projection`.
    pub section: Matrix,
    pub augmentation: SubspaceBasis,
}

/// `V_K` as a representation of `G/K`.
pub fn cofixed_quotient(
    v: &Representation,
    k: &Subgroup,
) -> Result<(QuotientGroup, CofixedQuotient)> {
    check_parent(v, k)?;
    let q = quotient_group(k)?;
    let c = induce_onto(&q.projection, v)?;
    Ok((q, c))
}

/// `V^K` as a representation of `G/K`, in the coordinates of its rref basis.
#[derive(Clone, Debug)]
pub struct FixedPointRep {
    pub quotient: QuotientGroup,
    pub rep: Representation,
    pub basis: SubspaceBasis,
}

pub fn fixed_point_rep(v: &Representation, k: &Subgroup) -> Result<FixedPointRep> {
    check_parent(v, k)?;
    let quotient = quotient_group(k)?;
    let basis = fixed_points(v, k)?;
    let columns = basis.vectors().transpose();
    let matrices = quotient
        .coset_representatives
        .iter()
        .map(|&g| (v.matrix(g) * &columns).select_rows(basis.pivots()))
        .collect();
    let rep = Representation::new_trusted(quotient.group.clone(), v.field(), basis.dim(), matrices);
    Ok(FixedPointRep {
        quotient,
        rep,
        basis,
    })
}

/// The norm `Σ_{k∈K} ρ(k)` as a map `V_K → V^K`.
#[derive(Clone, Debug)]
pub struct NormMap {
    /// `dim V^K x dim V_K`, in the bases of `fixed` and of the quotient coordinates.
    pub matrix: Matrix,
    pub rank: usize,
    pub fixed: SubspaceBasis,
    pub cofixed_projection: Matrix,
    pub cofixed_section: Matrix,
}

pub fn norm_map(v: &Representation, k: &Subgroup) -> Result<NormMap> {
    check_parent(v, k)?;
    let field = v.field();
    let mut norm = Matrix::zeros(field, v.dim(), v.dim());
    for &x in k.elements() {
        norm = &norm + v.matrix(x);
    }
    let fixed = fixed_points(v, k)?;
    let (projection, section) = quotient_map(v.dim(), &augmentation(v, k))?;
    let matrix = (&norm * &section).select_rows(fixed.pivots());
    let rank = matrix.rank();
    Ok(NormMap {
        matrix,
        rank,
        fixed,
        cofixed_projection: projection,
        cofixed_section: section,
    })
}

/// `Σ_{k∈K} ρ(k) θ ρ(k)⁻¹`.
pub fn higman_sum(v: &Representation, k: &Subgroup, theta: &Matrix) -> Matrix {
    let g = v.group();
    let mut sum = Matrix::zeros(v.field(), v.dim(), v.dim());
    for &x in k.elements() {
        sum = &sum + &(&(v.matrix(x) * theta) * v.matrix(g.inv(x)));
    }
    sum
}

/// A witness `θ` with `Σ_k ρ(k) θ ρ(k)⁻¹ = 1`, if one exists.
///
/// Such a `θ` exists exactly when `V` is relatively `1`-projective over `K`.
/// When `|K|` is invertible the answer is always yes with `θ = 1/|K|`; otherwise
/// the condition is a linear system in the entries of `θ`.
pub fn is_relatively_one_projective(v: &Representation, k: &Subgroup) -> Result<Option<Matrix>> {
    check_parent(v, k)?;
    let field = v.field();
    let d = v.dim();
    let identity = Matrix::identity(field, d);
    let theta = if field.is_unit(k.order() as u64) {
        let s = field
            .from_i64(k.order() as i64)
            .inv()
            .expect("order is a unit");
        identity.scale(&s)
    } else {
        // Row-major vec(A θ B) = (A ⊗ Bᵀ) vec θ.
        let g = v.group();
        let mut system = Matrix::zeros(field, d * d, d * d);
        for &x in k.elements() {
            system = &system + &v.matrix(x).kron(&v.matrix(g.inv(x)).transpose());
        }
        let rhs = Matrix::column_vector(field, identity.flatten());
        match system.solve(&rhs)? {
            Some(x) => Matrix::reshape(field, d, d, x.flatten()),
            None => return Ok(None),
        }
    };
    debug_assert!(higman_sum(v, k, &theta).is_identity());
    Ok(Some(theta))
}
