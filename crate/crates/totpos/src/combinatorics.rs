//! Exact integer generators: factorials, binomials, Stirling numbers of both
//! kinds, Bell numbers, and the Bell triangles.
//!
//! Everything returns `BigInt`; out-of-range arguments follow the boundary
//! conventions of the defining recurrences and yield 0 instead of erroring.
//! Row tables are memoized per thread, so the generators stay reentrant.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::cell::RefCell;

thread_local! {
    static FACTORIALS: RefCell<Vec<BigInt>> = RefCell::new(vec![BigInt::one()]);
    // row n holds s(n, 0..=n) (unsigned first kind)
    static STIRLING1: RefCell<Vec<Vec<BigInt>>> = RefCell::new(vec![vec![BigInt::one()]]);
    // row n holds S(n, 0..=n) (second kind)
    static STIRLING2: RefCell<Vec<Vec<BigInt>>> = RefCell::new(vec![vec![BigInt::one()]]);
}

/// n!
pub fn factorial(n: usize) -> BigInt {
    FACTORIALS.with(|cell| {
        let mut tab = cell.borrow_mut();
        while tab.len() <= n {
            let next = tab.last().unwrap() * BigInt::from(tab.len());
            tab.push(next);
        }
        tab[n].clone()
    })
}

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = k as usize;
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn stirling1_row(n: usize) -> Vec<BigInt> {
    STIRLING1.with(|cell| {
        let mut tab = cell.borrow_mut();
        while tab.len() <= n {
            let i = tab.len() - 1; // extending from row i to row i+1
            let prev = tab[i].clone();
            let mut row = vec![BigInt::zero(); i + 2];
            for j in 1..=i + 1 {
                // s(i+1, j) = s(i, j-1) + i * s(i, j)
                let carry = if j <= i { &prev[j] * BigInt::from(i) } else { BigInt::zero() };
                row[j] = &prev[j - 1] + carry;
            }
            tab.push(row);
        }
        tab[n].clone()
    })
}

fn stirling2_row(n: usize) -> Vec<BigInt> {
    STIRLING2.with(|cell| {
        let mut tab = cell.borrow_mut();
        while tab.len() <= n {
            let l = tab.len() - 1;
            let prev = tab[l].clone();
            let mut row = vec![BigInt::zero(); l + 2];
            for m in 1..=l + 1 {
                // S(l+1, m) = m * S(l, m) + S(l, m-1)
                let carry = if m <= l { &prev[m] * BigInt::from(m) } else { BigInt::zero() };
                row[m] = carry + &prev[m - 1];
            }
            tab.push(row);
        }
        tab[n].clone()
    })
}

/// Unsigned Stirling number of the first kind; 0 outside 1 ≤ j ≤ i
/// (except for the seed value at i = j = 0).
pub fn stirling_first_unsigned(i: usize, j: i64) -> BigInt {
    if j < 0 || j as usize > i {
        return BigInt::zero();
    }
    stirling1_row(i)[j as usize].clone()
}

/// Stirling number of the second kind S(ℓ, m); S(0,0) = 1 and 0 when
/// m < 0, m > ℓ, or m = 0 with ℓ ≥ 1.
pub fn stirling_second(l: usize, m: i64) -> BigInt {
    if m < 0 || m as usize > l {
        return BigInt::zero();
    }
    stirling2_row(l)[m as usize].clone()
}

/// nth Bell number, the total number of set partitions of n elements.
pub fn bell_number(n: usize) -> BigInt {
    stirling2_row(n).iter().sum()
}

/// Unitriangular recurrence array whose first column runs through the Bell
/// numbers: x₀₀ = 1 and
/// `x_ij = x_{i-1,j-1} + (j+1)·x_{i-1,j} + (j+1)·x_{i-1,j+1}`,
/// with out-of-range terms treated as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellTriangle {
    pub order: usize,
    rows: Vec<Vec<BigInt>>,
}

/// Same shape as [`BellTriangle`] with the shifted recurrence
/// `y_ij = y_{i-1,j-1} + (j+2)·y_{i-1,j} + (j+1)·y_{i-1,j+1}`; its congruence
/// reconstructs the Bell–Hankel matrix with its first column struck.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedBellTriangle {
    pub order: usize,
    rows: Vec<Vec<BigInt>>,
}

fn triangle_rows(n: usize, diag_weight: u64) -> Vec<Vec<BigInt>> {
    // diag_weight w: next(i,j) = prev(j-1) + (j+w)·prev(j) + (j+1)·prev(j+1)
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); n];
        if i == 0 {
            row[0] = BigInt::one();
        } else {
            let prev = &rows[i - 1];
            for j in 0..=i.min(n - 1) {
                let mut v = if j > 0 { prev[j - 1].clone() } else { BigInt::zero() };
                v += &prev[j] * BigInt::from(j as u64 + diag_weight);
                if j + 1 < n {
                    v += &prev[j + 1] * BigInt::from(j as u64 + 1);
                }
                row[j] = v;
            }
        }
        rows.push(row);
    }
    rows
}

impl BellTriangle {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "triangle order must be at least 1");
        BellTriangle {
            order: n,
            rows: triangle_rows(n, 1),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

impl ShiftedBellTriangle {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "triangle order must be at least 1");
        ShiftedBellTriangle {
            order: n,
            rows: triangle_rows(n, 2),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

/// `bell_triangle(n)` — the n×n unitriangular Bell recurrence array.
pub fn bell_triangle(n: usize) -> BellTriangle {
    BellTriangle::new(n)
}

/// `shifted_bell_triangle(n)` — the n×n shifted variant.
pub fn shifted_bell_triangle(n: usize) -> ShiftedBellTriangle {
    ShiftedBellTriangle::new(n)
}
