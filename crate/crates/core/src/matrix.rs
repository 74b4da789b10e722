//! Dense matrices over Q(q): products, Kronecker products, determinants, inverses, rank.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::scalar::ScalarQ;

/// Row-major dense matrix. Columns are the images of basis vectors when used as a linear map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<ScalarQ>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![ScalarQ::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ScalarQ::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ScalarQ>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(cols: Vec<Vec<ScalarQ>>) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ScalarQ {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: ScalarQ) {
        self.data[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<ScalarQ> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ScalarQ::is_zero)
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn map(&self, f: impl Fn(&ScalarQ) -> ScalarQ) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn kron(&self, other: &Matrix) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, x: &[ScalarQ]) -> Vec<ScalarQ> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = ScalarQ::zero();
                for (j, xj) in x.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !xj.is_zero() {
                        acc = &acc + &(a * xj);
                    }
                }
                acc
            })
            .collect()
    }

    /// Gauss-Jordan reduction; returns the reduced matrix, the pivot columns and the product of
    /// the pivots with the row-swap signs.
    fn eliminate(&self) -> (Matrix, Vec<usize>, ScalarQ) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det = ScalarQ::one();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, row * m.cols + j);
                }
                det = -det;
            }
            let piv = m.get(row, col).clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for j in col..m.cols {
                let x = m.get(row, j) * &inv;
                m.set(row, j, x);
            }
            for i in 0..m.rows {
                if i == row {
                    continue;
                }
                let f = m.get(i, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let x = m.get(i, j) - &(&f * m.get(row, j));
                    m.set(i, j, x);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots, det)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1.len()
    }

    pub fn determinant(&self) -> ScalarQ {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let (_, pivots, det) = self.eliminate();
        if pivots.len() < self.rows {
            ScalarQ::zero()
        } else {
            det
        }
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, ScalarQ::one());
        }
        let (red, pivots, _) = aug.eliminate();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularBraiding);
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, red.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    /// Solves `self · x = b` for square invertible `self`.
    pub fn solve(&self, b: &[ScalarQ]) -> Result<Vec<ScalarQ>> {
        Ok(self.inverse()?.apply(b))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let x = out.get(i, j) + &(a * b);
                    out.set(i, j, x);
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> ScalarQ {
        ScalarQ::from_int(n)
    }

    #[test]
    fn inverse_and_det() {
        let q = ScalarQ::q();
        let m = Matrix::from_rows(vec![vec![s(1), q.clone()], vec![s(0), s(2)]]);
        assert_eq!(m.determinant(), s(2));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        let sing = Matrix::from_rows(vec![vec![s(1), q.clone()], vec![s(2), &q * &s(2)]]);
        assert!(sing.determinant().is_zero());
        assert!(matches!(sing.inverse(), Err(Error::SingularBraiding)));
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn swap_has_det_minus_one() {
        let m = Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(0)]]);
        assert_eq!(m.determinant(), s(-1));
    }

    #[test]
    fn kron_of_identities() {
        let a = Matrix::identity(2);
        assert_eq!(a.kron(&Matrix::identity(3)), Matrix::identity(6));
    }
}
