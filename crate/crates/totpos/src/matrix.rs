//! Dense row-major matrices over an exact or high-precision scalar kind.
//!
//! Matrices carry an index-offset tag recording the family convention
//! (0-based for Pascal and Bell, 1-based for beta, Cauchy and Stirling) so
//! that reports and witnesses can label rows and columns the way the family
//! is usually written. Internally everything is 0-based; the offset is
//! presentation metadata only.

use crate::error::Error;
use crate::numerics::{HpReal, Rational};
use num_traits::Zero;
use std::fmt;

/// Labeling convention for row/column indices of a matrix family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexOffset {
    Zero,
    One,
}

impl IndexOffset {
    pub fn base(self) -> usize {
        match self {
            IndexOffset::Zero => 0,
            IndexOffset::One => 1,
        }
    }

    pub fn from_base(b: u8) -> Result<Self, Error> {
        match b {
            0 => Ok(IndexOffset::Zero),
            1 => Ok(IndexOffset::One),
            other => Err(Error::parse(format!("offset must be 0 or 1, got {other}"))),
        }
    }
}

/// Scalar kinds a [`Matrix`] can hold.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_s(&self, rhs: &Self) -> Self;
    fn sub_s(&self, rhs: &Self) -> Self;
    fn mul_s(&self, rhs: &Self) -> Self;
    fn neg_s(&self) -> Self;
    fn is_zero_s(&self) -> bool;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        num_traits::One::one()
    }
    fn add_s(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_s(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_s(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_s(&self) -> Self {
        -self
    }
    fn is_zero_s(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for HpReal {
    fn zero_like(&self) -> Self {
        HpReal::zero(self.precision())
    }
    fn one_like(&self) -> Self {
        HpReal::one(self.precision())
    }
    fn add_s(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_s(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_s(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_s(&self) -> Self {
        self.neg()
    }
    fn is_zero_s(&self) -> bool {
        self.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    offset: IndexOffset,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        offset: IndexOffset,
        mut f: impl FnMut(usize, usize) -> S,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            offset,
            data,
        }
    }

    pub fn from_rows(rows: Vec<Vec<S>>, offset: IndexOffset) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::Dimension {
                    op: "from_rows",
                    details: format!("row {} has {} entries, expected {c}", i + 1, row.len()),
                });
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            offset,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn offset(&self) -> IndexOffset {
        self.offset
    }

    pub fn with_offset(mut self, offset: IndexOffset) -> Self {
        self.offset = offset;
        self
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    /// Entry at 0-based position (i, j).
    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub(crate) fn at_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &S> {
        self.data.iter()
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, self.offset, |i, j| {
            self.at(j, i).clone()
        })
    }

    pub fn map<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            offset: self.offset,
            data: self.data.iter().map(|v| f(v)).collect(),
        }
    }

    /// Ordinary matrix product; the result keeps the left operand's offset.
    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension {
                op: "mul",
                details: format!(
                    "{}x{} times {}x{}",
                    self.rows, self.cols, rhs.rows, rhs.cols
                ),
            });
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, self.offset, |i, j| {
            let mut acc: Option<S> = None;
            for k in 0..self.cols {
                let term = self.at(i, k).mul_s(rhs.at(k, j));
                acc = Some(match acc {
                    Some(a) => a.add_s(&term),
                    None => term,
                });
            }
            acc.unwrap_or_else(|| self.data[0].zero_like())
        }))
    }

    /// Entrywise (Schur/Hadamard) product.
    pub fn schur_product(&self, rhs: &Self) -> Result<Self, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension {
                op: "schur_product",
                details: format!(
                    "{}x{} vs {}x{}",
                    self.rows, self.cols, rhs.rows, rhs.cols
                ),
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols, self.offset, |i, j| {
            self.at(i, j).mul_s(rhs.at(i, j))
        }))
    }

    /// Submatrix on the given 0-based row and column positions.
    pub fn submatrix(&self, row_pos: &[usize], col_pos: &[usize]) -> Result<Self, Error> {
        for &r in row_pos {
            if r >= self.rows {
                return Err(Error::IndexRange(format!("row position {r}")));
            }
        }
        for &c in col_pos {
            if c >= self.cols {
                return Err(Error::IndexRange(format!("column position {c}")));
            }
        }
        Ok(Matrix::from_fn(
            row_pos.len(),
            col_pos.len(),
            self.offset,
            |i, j| self.at(row_pos[i], col_pos[j]).clone(),
        ))
    }

    /// Leading principal k×k submatrix.
    pub fn leading(&self, k: usize) -> Self {
        let pos: Vec<usize> = (0..k).collect();
        self.submatrix(&pos, &pos).expect("leading submatrix")
    }

    /// Strike row `i` and column `j`, both 1-based positions.
    pub fn delete_rc(&self, i: usize, j: usize) -> Result<Self, Error> {
        if i < 1 || i > self.rows {
            return Err(Error::IndexRange(format!(
                "row {i} of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if j < 1 || j > self.cols {
            return Err(Error::IndexRange(format!(
                "column {j} of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let rp: Vec<usize> = (0..self.rows).filter(|&r| r != i - 1).collect();
        let cp: Vec<usize> = (0..self.cols).filter(|&c| c != j - 1).collect();
        self.submatrix(&rp, &cp)
    }

    /// Entry-for-entry equality regardless of the offset tag.
    pub fn same_entries(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

/// n×n exact identity matrix.
pub fn identity_exact(n: usize) -> Matrix<Rational> {
    use num_traits::One;
    Matrix::from_fn(n, n, IndexOffset::One, |i, j| {
        if i == j {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Diagonal matrix from a slice of exact values.
pub fn diagonal_exact(d: &[Rational]) -> Matrix<Rational> {
    Matrix::from_fn(d.len(), d.len(), IndexOffset::One, |i, j| {
        if i == j {
            d[i].clone()
        } else {
            Rational::zero()
        }
    })
}
