use std::ops::{Add, Mul, Sub};

use num_traits::{One, ToPrimitive, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::one(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| Scalar::from_integer(rows[i][j].into()))
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Column vector.
    pub fn column(entries: &[Scalar]) -> Self {
        Matrix {
            rows: entries.len(),
            cols: 1,
            data: entries.to_vec(),
        }
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

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|c| c.is_integer())
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    /// Kronecker product: each entry `a_ij` replaced by the block `a_ij · rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        Matrix::from_fn(rows, cols, |i, j| {
            let a = &self[(i / rhs.rows, j / rhs.cols)];
            if a.is_zero() {
                Scalar::zero()
            } else {
                a * &rhs[(i % rhs.rows, j % rhs.cols)]
            }
        })
    }

    /// Assembles `[[tl, tr], [bl, br]]`.
    pub fn block2(tl: &Matrix, tr: &Matrix, bl: &Matrix, br: &Matrix) -> Result<Matrix> {
        if tl.rows != tr.rows || bl.rows != br.rows || tl.cols != bl.cols || tr.cols != br.cols {
            return Err(Error::Dimension("incompatible 2x2 block shapes".into()));
        }
        let (top, left) = (tl.rows, tl.cols);
        Ok(Matrix::from_fn(top + bl.rows, left + tr.cols, |i, j| {
            match (i < top, j < left) {
                (true, true) => tl[(i, j)].clone(),
                (true, false) => tr[(i, j - left)].clone(),
                (false, true) => bl[(i - top, j)].clone(),
                (false, false) => br[(i - top, j - left)].clone(),
            }
        }))
    }

    /// `x·I − self` at a rational point.
    pub fn char_matrix_at(&self, x: &Scalar) -> Result<Matrix> {
        let n = self.ensure_square()?;
        Matrix::identity(n).scale(x).try_sub(self)
    }

    /// Determinant by Gaussian elimination over the rationals.
    pub fn det(&self) -> Result<Scalar> {
        let n = self.ensure_square()?;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det *= &p;
            let p_inv = p.recip();
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] * &p_inv;
                for c in col..n {
                    let v = &factor * &a[(col, c)];
                    a[(r, c)] -= v;
                }
            }
        }
        Ok(det)
    }

    /// Solves `self · X = rhs` exactly; errors when `self` is singular.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix> {
        let n = self.ensure_square()?;
        if rhs.rows != n {
            return Err(Error::Dimension(format!(
                "right-hand side has {} rows, expected {n}",
                rhs.rows
            )));
        }
        let m = rhs.cols;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or_else(|| Error::InvalidParameter("singular matrix in solve".into()))?;
            a.swap_rows(pivot, col);
            b.swap_rows(pivot, col);
            let p_inv = a[(col, col)].recip();
            for c in col..n {
                a[(col, c)] *= &p_inv;
            }
            for c in 0..m {
                b[(col, c)] *= &p_inv;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in col..n {
                    let v = &factor * &a[(col, c)];
                    a[(r, c)] -= v;
                }
                for c in 0..m {
                    let v = &factor * &b[(col, c)];
                    b[(r, c)] -= v;
                }
            }
        }
        Ok(b)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|c| c.to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

// Operator forms panic on shape mismatch; use the `try_*` methods for fallible use.
impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference shape mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_identity_gives_block_diagonal() {
        let b = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let k = Matrix::identity(2).kron(&b);
        let expected = Matrix::from_i64(&[&[1, 2, 0, 0], &[3, 4, 0, 0], &[0, 0, 1, 2], &[0, 0, 3, 4]]);
        assert_eq!(k, expected);
    }

    #[test]
    fn kron_swap_with_ones() {
        let s = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let k = s.kron(&Matrix::ones(2, 2));
        let expected = Matrix::from_i64(&[&[0, 0, 1, 1], &[0, 0, 1, 1], &[1, 1, 0, 0], &[1, 1, 0, 0]]);
        assert_eq!(k, expected);
    }

    #[test]
    fn det_and_solve() {
        let a = Matrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det().unwrap(), Scalar::from_integer(18.into()));
        let b = Matrix::from_i64(&[&[1], &[2], &[3]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(&a * &x, b);
        let singular = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(singular.solve(&Matrix::identity(2)).is_err());
        assert_eq!(singular.det().unwrap(), Scalar::zero());
    }

    #[test]
    fn shape_errors() {
        let a = Matrix::zeros(2, 3);
        assert!(a.det().is_err());
        assert!(a.try_mul(&a).is_err());
        assert!(a.try_add(&Matrix::zeros(3, 2)).is_err());
    }
}
