use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A subspace of `field^ambient_dim`, stored as the nonzero rows of an rref matrix.
///
/// Because the basis is reduced, the coordinates of any member vector are simply
/// its entries at the pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Matrix,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(field: Field, ambient_dim: usize) -> SubspaceBasis {
        SubspaceBasis {
            ambient_dim,
            vectors: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn whole(field: Field, ambient_dim: usize) -> SubspaceBasis {
        SubspaceBasis {
            ambient_dim,
            vectors: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row space of `spanning` (rows are the spanning vectors).
    pub fn from_spanning_rows(spanning: &Matrix) -> SubspaceBasis {
        let r = spanning.rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        SubspaceBasis {
            ambient_dim: spanning.cols(),
            vectors: r.matrix.select_rows(&keep),
            pivots: r.pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.vectors.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.rows()
    }

    /// Basis vectors as rows.
    pub fn vectors(&self) -> &Matrix {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vector(&self, i: usize) -> &[Scalar] {
        self.vectors.row(i)
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim);
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![self.field().zero(); self.ambient_dim];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, x) in self.vectors.row(i).iter().enumerate() {
                if !x.is_zero() {
                    rebuilt[j] = &rebuilt[j] + &(c * x);
                }
            }
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace_basis(m: &Matrix) -> SubspaceBasis {
    let field = m.field();
    let n = m.cols();
    let r = m.rref();
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut rows = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![field.zero(); n];
        v[f] = field.one();
        for (row, &p) in r.pivots.iter().enumerate() {
            v[p] = -r.matrix.get(row, f);
        }
        rows.push(v);
    }
    let spanning = Matrix::reshape(field, rows.len(), n, rows.into_iter().flatten().collect());
    SubspaceBasis::from_spanning_rows(&spanning)
}

/// Solves `a x = b`; `None` when inconsistent.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if b.cols() != 1 {
        return Err(Error::Dimension(format!(
            "right-hand side must be a column, got {} columns",
            b.cols()
        )));
    }
    a.solve(b)
}

/// Projection onto `field^ambient / span(w)` and a section of it.
///
/// Quotient coordinates are the non-pivot coordinates of `w`'s rref basis, in
/// increasing order. `projection` is `(ambient - dim w) x ambient`, `section` is
/// `ambient x (ambient - dim w)`, and `projection * section = I`.
pub fn quotient_map(ambient_dim: usize, w: &SubspaceBasis) -> Result<(Matrix, Matrix)> {
    if w.ambient_dim() != ambient_dim {
        return Err(Error::Dimension(format!(
            "subspace lives in dimension {}, not {ambient_dim}",
            w.ambient_dim()
        )));
    }
    let field = w.field();
    let mut is_pivot = vec![false; ambient_dim];
    for &p in w.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    let q = free.len();
    let mut projection = Matrix::zeros(field, q, ambient_dim);
    let mut section = Matrix::zeros(field, ambient_dim, q);
    for (j, &n) in free.iter().enumerate() {
        projection.set(j, n, field.one());
        section.set(n, j, field.one());
        // v - Σ_r v[p_r] w_r zeroes every pivot coordinate; read off the free ones.
        for (r, &p) in w.pivots().iter().enumerate() {
            let x = w.vectors().get(r, n);
            if !x.is_zero() {
                projection.set(j, p, -x);
            }
        }
    }
    Ok((projection, section))
}
