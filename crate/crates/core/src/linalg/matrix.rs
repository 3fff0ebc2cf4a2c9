use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single field.
///
/// Products and eliminations skip zero entries, which keeps the permutation-like
/// matrices that dominate representation work cheap without a sparse format.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let x = f(r, c);
                assert_eq!(x.field(), field, "entry over the wrong field");
                data.push(x);
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from rows, checking shape and field uniformity.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::MixedFields {
                        expected: field,
                        found: x.field(),
                    });
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    /// Integer-literal constructor, mostly for tests and built-in catalogs.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(field, rows.len(), cols, |r, c| field.from_i64(rows[r][c]))
    }

    /// A `len x 1` column vector.
    pub fn column_vector(field: Field, entries: Vec<Scalar>) -> Matrix {
        let rows = entries.len();
        Matrix::reshape(field, rows, 1, entries)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        assert_eq!(x.field(), self.field);
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Matrix {
        Matrix::from_fn(self.field, self.rows, 1, |r, _| self.get(r, c).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .all(|(c, x)| if r == c { x.is_one() } else { x.is_zero() })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            data: self.data.iter().map(|x| x * s).collect(),
            ..self.clone()
        }
    }

    /// Row-major flattening into a single row.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Inverse of [`Matrix::flatten`].
    pub fn reshape(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            field,
            rows,
            cols,
            data: entries,
        }
    }

    fn nonzero_columns(&self, r: usize) -> Vec<usize> {
        self.row(r)
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, _)| c)
            .collect()
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if self.field != rhs.field {
            return Err(Error::MixedFields {
                expected: self.field,
                found: rhs.field,
            });
        }
        let rhs_nz: Vec<Vec<usize>> = (0..rhs.rows).map(|k| rhs.nonzero_columns(k)).collect();
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &j in &rhs_nz[k] {
                    let idx = i * out.cols + j;
                    let term = if a.is_one() {
                        rhs.get(k, j).clone()
                    } else {
                        a * rhs.get(k, j)
                    };
                    out.data[idx] = &out.data[idx] + &term;
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field);
        let mut out = Matrix::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(field: Field, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            assert_eq!(b.field, field);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn hstack(field: Field, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.paste(0, offset, b);
            offset += b.cols;
        }
        out
    }

    pub fn block_diagonal(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.paste(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c).clone();
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |r, c| {
            self.get(r0 + r, c0 + c).clone()
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |r, c| {
            self.get(rows[r], c).clone()
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| {
            self.get(r, cols[c]).clone()
        })
    }

    /// Reduced row-echelon form; pivots are chosen leftmost-first, topmost-first.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    /// Row-reduces in place using only the first `pivot_cols` columns as pivot
    /// candidates (the remaining columns ride along, as in an augmented system).
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..pivot_cols {
            if prow == self.rows {
                break;
            }
            let Some(found) = (prow..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if found != prow {
                for c in 0..self.cols {
                    self.data.swap(found * self.cols + c, prow * self.cols + c);
                }
            }
            let inv = self
                .get(prow, col)
                .inv()
                .expect("nonzero pivot is invertible");
            let nz: Vec<usize> = (col..self.cols)
                .filter(|&c| !self.get(prow, c).is_zero())
                .collect();
            if !inv.is_one() {
                for &c in &nz {
                    let idx = prow * self.cols + c;
                    self.data[idx] = &self.data[idx] * &inv;
                }
            }
            let pivot_row: Vec<(usize, Scalar)> =
                nz.iter().map(|&c| (c, self.get(prow, c).clone())).collect();
            for r in 0..self.rows {
                if r == prow {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for (c, p) in &pivot_row {
                    let idx = r * self.cols + c;
                    self.data[idx] = &self.data[idx] - &(&factor * p);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::hstack(self.field, n, &[self, &Matrix::identity(self.field, n)]);
        let pivots = aug.rref_in_place(n);
        if pivots.len() != n {
            return None;
        }
        Some(aug.submatrix(0, n, n, n))
    }

    /// Solves `self * x = b` for a column (or several columns) `b`.
    ///
    /// Free variables are set to zero; the returned solution is checked by substitution.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != b.rows {
            return Err(Error::Dimension(format!(
                "system has {} equations but right-hand side has {} rows",
                self.rows, b.rows
            )));
        }
        let n = self.cols;
        let mut aug = Matrix::hstack(self.field, self.rows, &[self, b]);
        let pivots = aug.rref_in_place(n);
        let rank = pivots.len();
        // Inconsistent iff a zero row of the coefficient part has a nonzero right side.
        for r in rank..self.rows {
            if (n..aug.cols).any(|c| !aug.get(r, c).is_zero()) {
                return Ok(None);
            }
        }
        let mut x = Matrix::zeros(self.field, n, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(p, c, aug.get(r, n + c).clone());
            }
        }
        let check = self.try_mul(&x)?;
        assert!(check == *b, "substitution check failed");
        Ok(Some(x))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone()
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
            ..self.clone()
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{}[", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(Q, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);

        let z = Matrix::zeros(Field::Prime(3), 2, 2);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);

        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_fractions() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[4, 3]]);
        assert_eq!(m.rref().matrix, Matrix::identity(Q, 2));
        let m = Matrix::from_i64(Q, &[&[2, 1, 1]]);
        let r = m.rref().matrix;
        assert_eq!(r.get(0, 1), &Q.from_ratio(1, 2).unwrap());
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_i64(Q, &[&[3], &[-1]]);
        assert_eq!(Matrix::identity(Q, 2).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(Q, 2, 2).solve(&b).unwrap(), None);
        let x = Matrix::from_i64(Q, &[&[2]])
            .solve(&Matrix::from_i64(Q, &[&[1]]))
            .unwrap()
            .unwrap();
        assert_eq!(x.get(0, 0), &Q.from_ratio(1, 2).unwrap());
        assert!(Matrix::identity(Q, 2)
            .solve(&Matrix::zeros(Q, 3, 1))
            .is_err());
    }

    #[test]
    fn inverse_and_kron() {
        let f = Field::Prime(5);
        let m = Matrix::from_i64(f, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!(Matrix::from_i64(f, &[&[1, 2], &[2, 4]]).inverse().is_none());

        let a = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        // (A⊗B)[(i,k),(j,l)] = A[i,j] B[k,l]
        assert_eq!(k.get(2, 1), &Q.from_i64(3));
        assert_eq!(k.get(3, 2), &Q.from_i64(4));
        assert_eq!(k.get(3, 3), &Q.zero());
    }

    #[test]
    fn from_rows_rejects_mixed_fields() {
        let rows = vec![vec![Q.one(), Field::Prime(2).one()]];
        assert!(matches!(
            Matrix::from_rows(Q, rows),
            Err(Error::MixedFields { .. })
        ));
        let ragged = vec![vec![Q.one()], vec![Q.one(), Q.one()]];
        assert!(Matrix::from_rows(Q, ragged).is_err());
    }
}
