//! Intertwiner spaces and isomorphism certificates.
//!
//! An intertwiner `X: U → V` is stored as a `dim V x dim U` matrix. Hom spaces are
//! solved in the row-major vectorization of `X`, where `ρ_V(s) X - X ρ_U(s) = 0`
//! becomes `(ρ_V(s) ⊗ I - I ⊗ ρ_U(s)ᵀ) vec X = 0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groups::same_group;
use crate::linalg::{nullspace_basis, Field, Matrix, Scalar, SubspaceBasis};
use crate::rep::Representation;

/// A basis of `Hom_{RG}(U, V)`.
#[derive(Clone, Debug)]
pub struct HomBasis {
    field: Field,
    source_dim: usize,
    target_dim: usize,
    space: SubspaceBasis,
    basis: Vec<Matrix>,
}

impl HomBasis {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// Coordinates of `x` in the basis, or `None` if `x` is not an intertwiner.
    pub fn coordinates(&self, x: &Matrix) -> Option<Vec<Scalar>> {
        if x.rows() != self.target_dim || x.cols() != self.source_dim {
            return None;
        }
        self.space.coordinates(&x.flatten())
    }

    /// `Σ c_i X_i`.
    pub fn combine(&self, coefficients: &[Scalar]) -> Matrix {
        assert_eq!(coefficients.len(), self.basis.len());
        let mut sum = Matrix::zeros(self.field, self.target_dim, self.source_dim);
        for (c, x) in coefficients.iter().zip(&self.basis) {
            if !c.is_zero() {
                sum = &sum + &x.scale(c);
            }
        }
        sum
    }
}

fn check_pair(u: &Representation, v: &Representation) -> Result<()> {
    if !same_group(u.group(), v.group()) {
        return Err(Error::GroupMismatch(
            "representations of different groups".into(),
        ));
    }
    if u.field() != v.field() {
        return Err(Error::MixedFields {
            expected: u.field(),
            found: v.field(),
        });
    }
    Ok(())
}

/// Whether `ρ_V(g) X = X ρ_U(g)` for every `g`.
pub fn is_intertwiner(u: &Representation, v: &Representation, x: &Matrix) -> bool {
    x.rows() == v.dim()
        && x.cols() == u.dim()
        && u.group()
            .elements()
            .all(|g| v.matrix(g) * x == x * u.matrix(g))
}

pub fn hom_basis(u: &Representation, v: &Representation) -> Result<HomBasis> {
    check_pair(u, v)?;
    let field = u.field();
    let (du, dv) = (u.dim(), v.dim());
    let (iu, iv) = (Matrix::identity(field, du), Matrix::identity(field, dv));
    let blocks: Vec<Matrix> = u
        .group()
        .generators()
        .iter()
        .map(|&s| &v.matrix(s).kron(&iu) - &iv.kron(&u.matrix(s).transpose()))
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let space = nullspace_basis(&Matrix::vstack(field, dv * du, &refs));
    let basis: Vec<Matrix> = (0..space.dim())
        .map(|i| Matrix::reshape(field, dv, du, space.vector(i).to_vec()))
        .collect();
    for x in &basis {
        if !is_intertwiner(u, v, x) {
            return Err(Error::InvalidRepresentation(
                "hom-space basis fails on a non-generator; group generators are inconsistent"
                    .into(),
            ));
        }
    }
    Ok(HomBasis {
        field,
        source_dim: du,
        target_dim: dv,
        space,
        basis,
    })
}

pub fn dim_hom(u: &Representation, v: &Representation) -> Result<usize> {
    Ok(hom_basis(u, v)?.dim())
}

/// An invertible intertwiner `U → V` together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    pub intertwiner: Matrix,
    pub inverse: Matrix,
}

impl IsoCertificate {
    pub fn identity(field: Field, dim: usize) -> IsoCertificate {
        IsoCertificate {
            intertwiner: Matrix::identity(field, dim),
            inverse: Matrix::identity(field, dim),
        }
    }

    /// The certificate for the opposite direction.
    pub fn reversed(&self) -> IsoCertificate {
        IsoCertificate {
            intertwiner: self.inverse.clone(),
            inverse: self.intertwiner.clone(),
        }
    }
}

/// Checks a certificate from scratch: shapes, both inverse identities, and intertwining on every element.
pub fn verify_certificate(
    u: &Representation,
    v: &Representation,
    cert: &IsoCertificate,
) -> Result<(), String> {
    if !same_group(u.group(), v.group()) || u.field() != v.field() {
        return Err("representations are not over the same group and field".into());
    }
    let (x, y) = (&cert.intertwiner, &cert.inverse);
    if x.rows() != v.dim() || x.cols() != u.dim() || y.rows() != u.dim() || y.cols() != v.dim() {
        return Err(format!(
            "certificate shapes {}x{} / {}x{} do not match dims {} → {}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols(),
            u.dim(),
            v.dim()
        ));
    }
    if !(x * y).is_identity() || !(y * x).is_identity() {
        return Err("certificate matrices are not mutually inverse".into());
    }
    for g in u.group().elements() {
        if v.matrix(g) * x != x * u.matrix(g) {
            return Err(format!("certificate does not intertwine element {g}"));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoSearch {
    Certified(IsoCertificate),
    DimensionMismatch { left: usize, right: usize },
    NoCertificateFound { trials: usize },
}

impl IsoSearch {
    pub fn certificate(&self) -> Option<&IsoCertificate> {
        match self {
            IsoSearch::Certified(c) => Some(c),
            _ => None,
        }
    }
}

/// Combination counts up to which the deterministic passes are exhaustive.
const MAX_SUBSET_BASIS: usize = 8;
const MAX_ENUMERATION_BASIS: usize = 4;
const MAX_ENUMERATION_SIZE: u64 = 65536;
const RATIONAL_COEFFICIENT_BOUND: i64 = 5;

/// Searches `Hom(U, V)` for an invertible element.
///
/// Candidates, in order: `I` when both sides have identical matrices, each basis
/// element, every `0/1` combination (small bases), every combination over small
/// prime fields, then `max_trials` seeded random combinations. Absence of a
/// certificate is a result; it is never evidence of non-isomorphism.
pub fn iso_certificate(
    u: &Representation,
    v: &Representation,
    seed: u64,
    max_trials: usize,
) -> Result<IsoSearch> {
    check_pair(u, v)?;
    if u.dim() != v.dim() {
        return Ok(IsoSearch::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    let field = u.field();
    if u.matrices() == v.matrices() {
        let cert = IsoCertificate::identity(field, u.dim());
        debug_assert!(verify_certificate(u, v, &cert).is_ok());
        return Ok(IsoSearch::Certified(cert));
    }
    let hom = hom_basis(u, v)?;
    let m = hom.dim();
    let mut trials = 0;
    let mut attempt = |coefficients: &[Scalar]| -> Option<IsoCertificate> {
        trials += 1;
        let x = hom.combine(coefficients);
        let inverse = x.inverse()?;
        let cert = IsoCertificate {
            intertwiner: x,
            inverse,
        };
        verify_certificate(u, v, &cert).ok().map(|_| cert)
    };
    if m == 0 {
        return Ok(IsoSearch::NoCertificateFound { trials: 0 });
    }
    let unit = |i: usize| -> Vec<Scalar> {
        let mut c = vec![field.zero(); m];
        c[i] = field.one();
        c
    };
    for i in 0..m {
        if let Some(cert) = attempt(&unit(i)) {
            return Ok(IsoSearch::Certified(cert));
        }
    }
    if m <= MAX_SUBSET_BASIS {
        let mut masks: Vec<u32> = (1..1u32 << m)
            .filter(|mask| mask.count_ones() > 1)
            .collect();
        masks.sort_by_key(|mask| (mask.count_ones(), *mask));
        for mask in masks {
            let c: Vec<Scalar> = (0..m)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        field.one()
                    } else {
                        field.zero()
                    }
                })
                .collect();
            if let Some(cert) = attempt(&c) {
                return Ok(IsoSearch::Certified(cert));
            }
        }
    } else {
        for i in 0..m {
            for j in i + 1..m {
                let mut c = unit(i);
                c[j] = field.one();
                if let Some(cert) = attempt(&c) {
                    return Ok(IsoSearch::Certified(cert));
                }
            }
        }
    }
    if let Field::Prime(p) = field {
        let total = (p as u64).checked_pow(m as u32);
        if p > 2 && m <= MAX_ENUMERATION_BASIS && total.is_some_and(|t| t <= MAX_ENUMERATION_SIZE) {
            // Digits 0..p of a counter; 0/1 vectors were already tried.
            for n in 1..total.expect("checked") {
                let mut rest = n;
                let mut has_big = false;
                let c: Vec<Scalar> = (0..m)
                    .map(|_| {
                        let d = rest % p as u64;
                        rest /= p as u64;
                        has_big |= d > 1;
                        field.from_i64(d as i64)
                    })
                    .collect();
                if has_big {
                    if let Some(cert) = attempt(&c) {
                        return Ok(IsoSearch::Certified(cert));
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_trials {
        let c: Vec<Scalar> = (0..m)
            .map(|_| match field {
                Field::Rationals => field.from_i64(
                    rng.gen_range(-RATIONAL_COEFFICIENT_BOUND..=RATIONAL_COEFFICIENT_BOUND),
                ),
                Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
            })
            .collect();
        if let Some(cert) = attempt(&c) {
            return Ok(IsoSearch::Certified(cert));
        }
    }
    Ok(IsoSearch::NoCertificateFound { trials })
}
