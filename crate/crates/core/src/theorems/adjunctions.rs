use super::{
    describe_hom, linear_iso_evidence, projectivity_gate, CheckReport, HypothesisStatus, Pending,
    SearchOptions, Verdict,
};
use crate::error::{Error, Result};
use crate::groups::GroupHom;
use crate::homspace::{hom_basis, iso_certificate, HomBasis, IsoCertificate, IsoSearch};
use crate::linalg::Matrix;
use crate::rep::{dual, induce_along, regular_rep, restrict_along, tensor, Representation};

/// `Res_φ Res_ψ W = Res_{ψφ} W` (literal equality) and `Ind_ψ Ind_φ U ≅ Ind_{ψφ} U`.
pub fn check_transitivity(
    phi: &GroupHom,
    psi: &GroupHom,
    u: &Representation,
    w: &Representation,
    opts: &SearchOptions,
) -> Result<[CheckReport; 2]> {
    let psi_phi = phi.then(psi)?;
    let inputs = format!(
        "{}, {}, dim U={}, dim W={}",
        describe_hom("φ", phi),
        describe_hom("ψ", psi),
        u.dim(),
        w.dim()
    );

    let mut pending = Pending::new("transitivity_res", inputs.clone(), opts);
    let lhs = restrict_along(phi, &restrict_along(psi, w)?)?;
    let rhs = restrict_along(&psi_phi, w)?;
    let res = if lhs.is_identical(&rhs) {
        let cert = IsoCertificate::identity(lhs.field(), lhs.dim());
        pending.pass(cert, lhs, rhs)
    } else {
        pending.note("restricted matrix families differ");
        let dims = (lhs.dim(), rhs.dim());
        pending.report(
            HypothesisStatus::Satisfied,
            dims,
            Verdict::NoCertificateFound { trials: 0 },
        )
    };

    let pending = Pending::new("transitivity_ind", inputs, opts);
    let lhs = induce_along(psi, &induce_along(phi, u)?.rep)?.rep;
    let rhs = induce_along(&psi_phi, u)?.rep;
    let ind = pending.compare(HypothesisStatus::Satisfied, lhs, rhs)?;
    Ok([res, ind])
}

/// `Ind_φ V ⊗ V₁ ≅ Ind_φ(V ⊗ Res_φ V₁)` via the explicit maps
/// `(g₁⊗v)⊗v₁ ↦ g₁⊗(v⊗g₁⁻¹v₁)` and `g₁⊗(v⊗v₁) ↦ (g₁⊗v)⊗g₁v₁`.
pub fn check_ind_tensor(
    phi: &GroupHom,
    v: &Representation,
    v1: &Representation,
    opts: &SearchOptions,
) -> Result<CheckReport> {
    let inputs = format!(
        "{}, dim V={}, dim V₁={}",
        describe_hom("φ", phi),
        v.dim(),
        v1.dim()
    );
    let mut pending = Pending::new("ind_tensor", inputs, opts);
    let g1 = phi.codomain();
    let ind = induce_along(phi, v)?;
    let lhs = tensor(&ind.rep, v1)?;
    let mixed = tensor(v, &restrict_along(phi, v1)?)?;
    let ind2 = induce_along(phi, &mixed)?;
    let rhs = ind2.rep.clone();
    if lhs.dim() != rhs.dim() {
        let dims = (lhs.dim(), rhs.dim());
        return Ok(pending.report(HypothesisStatus::Satisfied, dims, Verdict::DimMismatch));
    }
    let field = v.field();
    let (q, q2, d1) = (ind.block_dim(), ind2.block_dim(), v1.dim());
    let mut forward = Matrix::zeros(field, rhs.dim(), lhs.dim());
    let mut backward = Matrix::zeros(field, lhs.dim(), rhs.dim());
    for (i, &t) in ind.transversal.iter().enumerate() {
        // Coset block i of the left side is (t_i ⊗ V_K) ⊗ V₁, ordered lexicographically.
        let twist = ind.section.kron(v1.matrix(g1.inv(t)));
        let block = &(ind2.rep.matrix(t) * &ind2.unit_map) * &twist;
        forward.paste(0, i * q * d1, &block);
        let spread = (ind.rep.matrix(t) * &ind.unit_map).kron(v1.matrix(t));
        backward.paste(0, i * q2, &(&spread * &ind2.section));
    }
    pending.note(format!(
        "explicit maps over {} cosets",
        ind.transversal.len()
    ));
    Ok(pending.pass(
        IsoCertificate {
            intertwiner: forward,
            inverse: backward,
        },
        lhs,
        rhs,
    ))
}

/// `(Res_φ V₁)* ≅ Res_φ V₁*`.
pub fn check_dual_res(
    phi: &GroupHom,
    v1: &Representation,
    opts: &SearchOptions,
) -> Result<CheckReport> {
    let inputs = format!("{}, dim V₁={}", describe_hom("φ", phi), v1.dim());
    let pending = Pending::new("dual_res", inputs, opts);
    let lhs = dual(&restrict_along(phi, v1)?);
    let rhs = restrict_along(phi, &dual(v1))?;
    pending.compare(HypothesisStatus::Satisfied, lhs, rhs)
}

/// `(Ind_φ V)* ≅ Ind_φ V*`, gated on `Res_{Ker φ} V` being relatively 1-projective.
pub fn check_dual_ind(
    phi: &GroupHom,
    v: &Representation,
    opts: &SearchOptions,
) -> Result<CheckReport> {
    let inputs = format!("{}, dim V={}", describe_hom("φ", phi), v.dim());
    let mut pending = Pending::new("dual_ind", inputs, opts);
    let gate = projectivity_gate(v, phi.kernel(), &mut pending.notes)?;
    let lhs = dual(&induce_along(phi, v)?.rep);
    let rhs = induce_along(phi, &dual(v))?.rep;
    pending.compare(gate, lhs, rhs)
}

/// `Hom_{RG}(RG₁, V)` as a module over `G₁`, acting by `(g₁·α)(x) = α(x g₁)`.
#[derive(Clone, Debug)]
pub struct CoinducedRep {
    pub rep: Representation,
    /// Basis of `Hom_G(Res_φ RG₁, V)`; element `i` of `rep` is `basis.basis()[i]`.
    pub basis: HomBasis,
}

impl CoinducedRep {
    /// `α ↦ α(1)` as a `dim V x dim Hom` matrix.
    pub fn evaluation_at_identity(&self) -> Matrix {
        let b = self.basis.basis();
        let rows = self.basis.target_dim();
        Matrix::from_fn(self.basis.field(), rows, b.len(), |r, i| {
            b[i].get(r, 0).clone()
        })
    }
}

pub fn coinduced_rep(phi: &GroupHom, v: &Representation) -> Result<CoinducedRep> {
    let g1 = phi.codomain();
    let field = v.field();
    let res = restrict_along(phi, &regular_rep(g1, field))?;
    let basis = hom_basis(&res, v)?;
    let n = g1.order();
    let mut matrices = Vec::with_capacity(n);
    for y in g1.elements() {
        let mut right = Matrix::zeros(field, n, n);
        for x in g1.elements() {
            right.set(g1.mul(x, y), x, field.one());
        }
        let mut columns = Vec::with_capacity(basis.dim());
        for x in basis.basis() {
            let moved = x * &right;
            let c = basis.coordinates(&moved).ok_or_else(|| {
                Error::InvalidRepresentation("right translation left the hom space".into())
            })?;
            columns.push(c);
        }
        let d = basis.dim();
        matrices.push(Matrix::from_fn(field, d, d, |r, c| columns[c][r].clone()));
    }
    let rep = Representation::new(g1.clone(), field, basis.dim(), matrices)?;
    Ok(CoinducedRep { rep, basis })
}

/// `Hom_{RG}(RG₁, V) ≅ Ind_φ V`, gated on `Res_{Ker φ} V` being relatively 1-projective.
pub fn check_hom_equals_ind(
    phi: &GroupHom,
    v: &Representation,
    opts: &SearchOptions,
) -> Result<CheckReport> {
    let inputs = format!("{}, dim V={}", describe_hom("φ", phi), v.dim());
    let mut pending = Pending::new("hom_equals_ind", inputs, opts);
    let gate = projectivity_gate(v, phi.kernel(), &mut pending.notes)?;
    let lhs = coinduced_rep(phi, v)?.rep;
    let rhs = induce_along(phi, v)?.rep;
    pending.compare(gate, lhs, rhs)
}

/// Coordinates of each `map(X_j)` in `target`, as the columns of a matrix.
fn transport(
    source: &HomBasis,
    target: &HomBasis,
    map: impl Fn(&Matrix) -> Matrix,
) -> Option<Matrix> {
    let mut columns = Vec::with_capacity(source.dim());
    for x in source.basis() {
        columns.push(target.coordinates(&map(x))?);
    }
    let field = source.field();
    Some(Matrix::from_fn(
        field,
        target.dim(),
        source.dim(),
        |r, c| columns[c][r].clone(),
    ))
}

/// Frobenius reciprocity, both sides.
///
/// Part (1) certifies `Hom(Ind_φ V, V₁) → Hom(V, Res_φ V₁)`, `F ↦ F ∘ unit`. Part (2)
/// certifies `Hom(V₁, Ind_φ V) → Hom(Res_φ V₁, V)`, `F ↦ ev₁ ∘ C ∘ F` where `C` is a
/// certified isomorphism `Ind_φ V ≅ Hom_{RG}(RG₁, V)`. Hom spaces appear in the
/// evidence as modules over the trivial group.
pub fn check_frobenius(
    phi: &GroupHom,
    v: &Representation,
    v1: &Representation,
    opts: &SearchOptions,
) -> Result<[CheckReport; 2]> {
    let inputs = format!(
        "{}, dim V={}, dim V₁={}",
        describe_hom("φ", phi),
        v.dim(),
        v1.dim()
    );
    let ind = induce_along(phi, v)?;
    let res_v1 = restrict_along(phi, v1)?;

    let mut pending = Pending::new("frobenius_1", inputs.clone(), opts);
    let left = hom_basis(&ind.rep, v1)?;
    let right = hom_basis(v, &res_v1)?;
    let first = if left.dim() != right.dim() {
        pending.report(
            HypothesisStatus::Satisfied,
            (left.dim(), right.dim()),
            Verdict::DimMismatch,
        )
    } else {
        match transport(&left, &right, |f| f * &ind.unit_map) {
            Some(m) => linear_iso_evidence(pending, m),
            None => {
                pending.note("F ∘ unit is not a G-map");
                pending.report(
                    HypothesisStatus::Satisfied,
                    (left.dim(), right.dim()),
                    Verdict::NoCertificateFound { trials: 0 },
                )
            }
        }
    };

    let mut pending = Pending::new("frobenius_2", inputs, opts);
    let gate = projectivity_gate(v, phi.kernel(), &mut pending.notes)?;
    let left = hom_basis(v1, &ind.rep)?;
    let right = hom_basis(&res_v1, v)?;
    let dims = (left.dim(), right.dim());
    let second = if gate != HypothesisStatus::Satisfied {
        pending.report(gate, dims, Verdict::SkippedHypothesis)
    } else if dims.0 != dims.1 {
        pending.report(gate, dims, Verdict::DimMismatch)
    } else {
        let coind = coinduced_rep(phi, v)?;
        match iso_certificate(&ind.rep, &coind.rep, opts.seed, opts.max_trials)? {
            IsoSearch::Certified(c) => {
                let ev = &coind.evaluation_at_identity() * &c.intertwiner;
                match transport(&left, &right, |f| &ev * f) {
                    Some(m) => linear_iso_evidence(pending, m),
                    None => {
                        pending.note("ev ∘ C ∘ F is not a G-map");
                        pending.report(gate, dims, Verdict::NoCertificateFound { trials: 0 })
                    }
                }
            }
            IsoSearch::DimensionMismatch { .. } => {
                pending.note("Ind_φ V and Hom_G(RG₁, V) differ in dimension");
                pending.report(gate, dims, Verdict::NoCertificateFound { trials: 0 })
            }
            IsoSearch::NoCertificateFound { trials } => {
                pending.note("no certificate for Ind_φ V ≅ Hom_G(RG₁, V)");
                pending.report(gate, dims, Verdict::NoCertificateFound { trials })
            }
        }
    };
    Ok([first, second])
}
