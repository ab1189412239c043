//! Dense exact matrices and the elimination routines everything else
//! reduces to.
//!
//! All pivoting is deterministic (leftmost nonzero column, topmost nonzero
//! row); combined with exact arithmetic this makes every result of the crate
//! reproducible bit for bit. Matrices are row-major and store their own
//! [`FieldSpec`]. Shape or field mismatches in the arithmetic helpers are
//! programming errors and panic; only genuinely data-dependent outcomes
//! (an inconsistent linear system) are reported through return values.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{FieldSpec, Scalar};

/// A dense `rows x cols` matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let entries = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, entries }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    /// Builds a matrix from row slices of integers (test and fixture helper).
    pub fn from_int_rows(field: FieldSpec, rows: usize, cols: usize, data: &[&[i64]]) -> Self {
        assert_eq!(data.len(), rows, "row count mismatch");
        let mut m = Matrix::zero(field, rows, cols);
        for (i, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "column count mismatch in row {i}");
            for (j, n) in row.iter().enumerate() {
                let v = m.field.integer(*n);
                m.set(i, j, v);
            }
        }
        m
    }

    /// Builds a matrix whose entry at `(r, c)` is `f(r, c)`.
    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Matrix::zero(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                m.set(r, c, v);
            }
        }
        m
    }

    /// Builds a matrix from a list of column vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zero(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {c} has the wrong length");
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field.clone(), self.cols, self.rows, |r, c| {
            self.entry(c, r).clone()
        })
    }

    /// Matrix product `self * rhs` (columns act on the right of rows).
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch in matrix product");
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let f = &self.field;
        Matrix::from_fn(f.clone(), self.rows, rhs.cols, |r, c| {
            let mut acc = f.zero();
            for k in 0..self.cols {
                let e = self.entry(r, k);
                if e.is_zero() {
                    continue;
                }
                acc = f.add(&acc, &f.mul(e, rhs.entry(k, c)));
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch in matrix sum");
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in matrix sum");
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.add(self.entry(r, c), rhs.entry(r, c))
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.mul(s, self.entry(r, c))
        })
    }

    /// Horizontal concatenation. All parts must share row count and field.
    pub fn hstack(field: FieldSpec, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let mut offset = 0;
        for part in parts {
            assert_eq!(part.rows, rows, "hstack row mismatch");
            assert_eq!(part.field, out.field, "hstack field mismatch");
            for r in 0..rows {
                for c in 0..part.cols {
                    out.set(r, offset + c, part.entry(r, c).clone());
                }
            }
            offset += part.cols;
        }
        out
    }

    /// Vertical concatenation. All parts must share column count and field.
    pub fn vstack(field: FieldSpec, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let mut offset = 0;
        for part in parts {
            assert_eq!(part.cols, cols, "vstack column mismatch");
            assert_eq!(part.field, out.field, "vstack field mismatch");
            for r in 0..part.rows {
                for c in 0..cols {
                    out.set(offset + r, c, part.entry(r, c).clone());
                }
            }
            offset += part.rows;
        }
        out
    }

    pub fn block_diag(field: FieldSpec, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for part in parts {
            assert_eq!(part.field, out.field, "block_diag field mismatch");
            for r in 0..part.rows {
                for c in 0..part.cols {
                    out.set(ro + r, co + c, part.entry(r, c).clone());
                }
            }
            ro += part.rows;
            co += part.cols;
        }
        out
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // topmost nonzero entry at or below `row` in this column
            let Some(pr) = (row..m.rows).find(|&r| !m.entry(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m.field.inv(m.entry(row, col));
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m.entry(r, col).is_zero() {
                    let factor = m.entry(r, col).clone();
                    m.subtract_scaled_row(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the null space `{v : self * v = 0}`, returned as the
    /// columns of a `cols x nullity` matrix. Basis vectors are indexed by the
    /// free columns of the reduced form, in increasing order, with a `1` in
    /// the free coordinate.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zero(self.field.clone(), self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, self.field.one());
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, self.field.neg(r.entry(i, fc)));
            }
        }
        out
    }

    /// Solves `self * x = b` for a matrix of right-hand sides.
    ///
    /// Returns the deterministic particular solution with all free variables
    /// zero, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve: right-hand side has wrong row count");
        assert_eq!(self.field, b.field, "solve: field mismatch");
        let aug = Matrix::hstack(self.field.clone(), self.rows, &[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(self.field.clone(), self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.entry(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// A canonical basis of the column space, returned as the columns of a
    /// `rows x rank` matrix (the nonzero rows of `rref(self^T)`, transposed).
    pub fn col_space_basis(&self) -> Matrix {
        let (r, pivots) = self.transpose().rref();
        Matrix::from_fn(self.field.clone(), self.rows, pivots.len(), |row, k| {
            r.entry(k, row).clone()
        })
    }

    /// A surjection `q` from the codomain of `self` onto a complement of the
    /// column space, with `q * self = 0`. Returns `(q, dim)` where
    /// `dim = rows - rank` is the dimension of the quotient.
    ///
    /// The complement is spanned by the standard coordinates that are not
    /// pivot coordinates of the column space, which fixes `q` uniquely.
    pub fn coimage_projection(&self) -> (Matrix, usize) {
        let (r, pivots) = self.transpose().rref();
        let basis = Matrix::from_fn(self.field.clone(), self.rows, pivots.len(), |row, k| {
            r.entry(k, row).clone()
        });
        let free: Vec<usize> = (0..self.rows).filter(|c| !pivots.contains(c)).collect();
        let mut unit = Matrix::zero(self.field.clone(), self.rows, free.len());
        for (k, &fc) in free.iter().enumerate() {
            unit.set(fc, k, self.field.one());
        }
        let square = Matrix::hstack(self.field.clone(), self.rows, &[&basis, &unit]);
        let inv = square
            .inverse()
            .expect("column space basis plus coordinate complement is invertible");
        let q = Matrix::from_fn(self.field.clone(), free.len(), self.rows, |r2, c| {
            inv.entry(pivots.len() + r2, c).clone()
        });
        (q, free.len())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let id = Matrix::identity(self.field.clone(), self.rows);
        let x = self.solve(&id)?;
        if self.mul(&x) == id {
            Some(x)
        } else {
            None
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.field.mul(self.entry(r, c), s);
            self.set(r, c, v);
        }
    }

    /// `row r -= factor * row src`
    fn subtract_scaled_row(&mut self, r: usize, src: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self
                .field
                .sub(self.entry(r, c), &self.field.mul(factor, self.entry(src, c)));
            self.set(r, c, v);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    #[test]
    fn rref_empty_and_identity() {
        let (r, p) = Matrix::zero(q(), 0, 0).rref();
        assert_eq!((r.rows(), r.cols()), (0, 0));
        assert!(p.is_empty());

        let id = Matrix::identity(q(), 2);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        // [[1,2],[2,4]]: subtracting twice the first row clears the second.
        let m = Matrix::from_int_rows(q(), 2, 2, &[&[1, 2], &[2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_int_rows(q(), 2, 2, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zero(q(), 3, 3).rank(), 0);
        assert_eq!(Matrix::identity(q(), 4).rank(), 4);
        let f2 = FieldSpec::prime(2).unwrap();
        // over F_2 the second row equals 0, the first stays independent
        let m = Matrix::from_int_rows(f2, 2, 2, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let k = Matrix::identity(q(), 2).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (2, 0));

        let k = Matrix::zero(q(), 2, 3).kernel_basis();
        assert_eq!(k, Matrix::identity(q(), 3));

        // single relation x + y = 0: free column 1 gives (-1, 1)
        let m = Matrix::from_int_rows(q(), 1, 2, &[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, Matrix::from_int_rows(q(), 2, 1, &[&[-1], &[1]]));
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_int_rows(q(), 2, 1, &[&[5], &[7]]);
        assert_eq!(Matrix::identity(q(), 2).solve(&b), Some(b.clone()));

        let m = Matrix::from_int_rows(q(), 2, 1, &[&[1], &[0]]);
        let bad = Matrix::from_int_rows(q(), 2, 1, &[&[0], &[1]]);
        assert_eq!(m.solve(&bad), None);

        let m = Matrix::from_int_rows(q(), 1, 1, &[&[2]]);
        let rhs = Matrix::from_int_rows(q(), 1, 1, &[&[1]]);
        let x = m.solve(&rhs).unwrap();
        assert_eq!(x.entry(0, 0), &q().fraction(1, 2).unwrap());
    }

    #[test]
    fn coimage_examples() {
        let (p, d) = Matrix::identity(q(), 3).coimage_projection();
        assert_eq!((p.rows(), p.cols(), d), (0, 3, 0));

        let (p, d) = Matrix::zero(q(), 2, 2).coimage_projection();
        assert_eq!(p, Matrix::identity(q(), 2));
        assert_eq!(d, 2);

        let col = Matrix::from_int_rows(q(), 2, 1, &[&[1], &[0]]);
        let (p, d) = col.coimage_projection();
        assert_eq!(p, Matrix::from_int_rows(q(), 1, 2, &[&[0, 1]]));
        assert_eq!(d, 1);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_int_rows(q(), 2, 2, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q(), 2));
        assert_eq!(inv.mul(&m), Matrix::identity(q(), 2));
        assert!(Matrix::from_int_rows(q(), 2, 2, &[&[1, 2], &[2, 4]])
            .inverse()
            .is_none());
    }
}
