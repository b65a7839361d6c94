//! Constructors for the special matrix families, together with the
//! elementwise operations (Hadamard powers and the second difference of
//! entrywise logs) used by the positivity checks.

use crate::combinatorics::{
    bell_number, bell_triangle, binomial, factorial, shifted_bell_triangle, stirling_first_unsigned,
    stirling_second,
};
use crate::error::Error;
use crate::matrix::{IndexOffset, Matrix};
use crate::numerics::{beta_recip_hp, gamma_hp, HpReal, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

fn int(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// Pascal matrix `[C(i+j, i)]` for i, j = 0..n — size (n+1)×(n+1), 0-based.
pub fn pascal_matrix(n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n + 1, n + 1, IndexOffset::Zero, |i, j| {
        int(binomial(i + j, i as i64))
    })
}

/// Beta matrix `[1/β(i,j)] = [(i+j-1)!/((i-1)!(j-1)!)]` for i, j = 1..n.
pub fn beta_matrix(n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, IndexOffset::One, |i, j| {
        let (i, j) = (i + 1, j + 1);
        int(factorial(i + j - 1) / (factorial(i - 1) * factorial(j - 1)))
    })
}

/// Beta matrix on an increasing set of positive integer indices; entry
/// (i, j) is `1/β(λ_i, λ_j)`. Equals the corresponding principal submatrix
/// of `beta_matrix(max λ)`, which is how it is built.
pub fn beta_matrix_indexed(lambda: &[usize]) -> Result<Matrix<Rational>, Error> {
    if lambda.is_empty() {
        return Err(Error::domain("empty index set"));
    }
    for w in lambda.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::domain("indices must be strictly increasing"));
        }
    }
    if lambda[0] < 1 {
        return Err(Error::domain("indices must be positive"));
    }
    let full = beta_matrix(*lambda.last().unwrap());
    let pos: Vec<usize> = lambda.iter().map(|&v| v - 1).collect();
    full.submatrix(&pos, &pos)
}

/// Cauchy matrix `[ij/(i+j)] = [1/(1/i + 1/j)]` for i, j = 1..n.
pub fn cauchy_matrix(n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, IndexOffset::One, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        Rational::new(BigInt::from(i * j), BigInt::from(i + j))
    })
}

/// Hankel matrix of factorials `[(i+j)!]` for i, j = 0..n.
pub fn factorial_hankel_matrix(n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n + 1, n + 1, IndexOffset::Zero, |i, j| int(factorial(i + j)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    First,
    Second,
}

/// Unitriangular Stirling matrix of either kind, 1-based, n×n.
pub fn stirling_matrix(kind: StirlingKind, n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, IndexOffset::One, |i, j| {
        let (i, j) = (i + 1, (j + 1) as i64);
        int(match kind {
            StirlingKind::First => stirling_first_unsigned(i, j),
            StirlingKind::Second => stirling_second(i, j),
        })
    })
}

/// Symmetrized Stirling matrix `𝔰·𝔰ᵀ` or `𝒮·𝒮ᵀ`.
pub fn symmetrized_stirling(kind: StirlingKind, n: usize) -> Matrix<Rational> {
    let s = stirling_matrix(kind, n);
    s.mul(&s.transpose()).expect("square product")
}

/// Bell–Hankel matrix `[𝔴(i+j)]` for i, j = 0..n-1 (n×n, 0-based).
pub fn bell_matrix(n: usize) -> Matrix<Rational> {
    let w: Vec<BigInt> = (0..2 * n.max(1)).map(bell_number).collect();
    Matrix::from_fn(n, n, IndexOffset::Zero, |i, j| int(w[i + j].clone()))
}

/// Bell triangle as an exact lower-triangular matrix (0-based).
pub fn bell_triangle_matrix(n: usize) -> Matrix<Rational> {
    let t = bell_triangle(n);
    Matrix::from_fn(n, n, IndexOffset::Zero, |i, j| int(t.entry(i, j).clone()))
}

/// Shifted Bell triangle as an exact lower-triangular matrix (0-based).
pub fn shifted_bell_triangle_matrix(n: usize) -> Matrix<Rational> {
    let t = shifted_bell_triangle(n);
    Matrix::from_fn(n, n, IndexOffset::Zero, |i, j| int(t.entry(i, j).clone()))
}

/// Strictly increasing positive reals indexing the gamma-kernel families.
#[derive(Debug, Clone)]
pub struct RealIndexSet {
    values: Vec<HpReal>,
}

impl RealIndexSet {
    pub fn new(values: Vec<HpReal>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::domain("empty index set"));
        }
        for v in &values {
            if !v.is_positive() || !v.is_finite() {
                return Err(Error::domain("index values must be positive"));
            }
        }
        for w in values.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::domain("index values must be strictly increasing"));
            }
        }
        Ok(RealIndexSet { values })
    }

    pub fn parse(csv: &str, precision: u32) -> Result<Self, Error> {
        let values = csv
            .split(',')
            .map(|s| HpReal::parse_decimal(s.trim(), precision))
            .collect::<Result<Vec<_>, _>>()?;
        RealIndexSet::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[HpReal] {
        &self.values
    }
}

/// `[Γ(λ_i + μ_j)]` at `precision` bits.
pub fn gamma_matrix(
    lambda: &RealIndexSet,
    mu: &RealIndexSet,
    precision: u32,
) -> Result<Matrix<HpReal>, Error> {
    if lambda.len() != mu.len() {
        return Err(Error::Dimension {
            op: "gamma_matrix",
            details: format!("{} lambda values vs {} mu values", lambda.len(), mu.len()),
        });
    }
    let n = lambda.len();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let arg = lambda.values()[i].add(&mu.values()[j]);
            row.push(gamma_hp(&arg, precision)?);
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows, IndexOffset::One)?)
}

/// `[1/β(λ_i, μ_j)]` at `precision` bits.
pub fn beta_recip_matrix(
    lambda: &RealIndexSet,
    mu: &RealIndexSet,
    precision: u32,
) -> Result<Matrix<HpReal>, Error> {
    if lambda.len() != mu.len() {
        return Err(Error::Dimension {
            op: "beta_recip_matrix",
            details: format!("{} lambda values vs {} mu values", lambda.len(), mu.len()),
        });
    }
    let n = lambda.len();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(beta_recip_hp(
                &lambda.values()[i],
                &mu.values()[j],
                precision,
            )?);
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows, IndexOffset::One)?)
}

/// Exact entrywise nonnegative-integer power.
pub fn hadamard_power_exact(a: &Matrix<Rational>, k: u32) -> Matrix<Rational> {
    a.map(|v| {
        if k == 0 {
            Rational::one()
        } else {
            let mut acc = v.clone();
            for _ in 1..k {
                acc *= v;
            }
            acc
        }
    })
}

/// Entrywise real power at `precision` bits. Requires strictly positive
/// entries unless the exponent is a nonnegative integer.
pub fn hadamard_power_real(
    a: &Matrix<Rational>,
    r: &Rational,
    precision: u32,
) -> Result<Matrix<HpReal>, Error> {
    let integral = r.denom().is_one() && !r.numer().is_negative();
    if !integral {
        for v in a.entries() {
            if !v.is_positive() {
                return Err(Error::domain(
                    "Hadamard power with non-integer exponent requires positive entries",
                ));
            }
        }
    }
    let rr = HpReal::from_rational(r, precision);
    let mut rows: Vec<Vec<HpReal>> = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let mut row = Vec::with_capacity(a.cols());
        for j in 0..a.cols() {
            // mirror the strict upper triangle so symmetric inputs stay
            // symmetric bit for bit
            if a.is_square() && j < i && a.at(i, j) == a.at(j, i) {
                let prev: &HpReal = &rows[j][i];
                row.push(prev.clone());
                continue;
            }
            let v = a.at(i, j);
            let entry = if integral {
                let k = r.numer().to_u32().ok_or_else(|| {
                    Error::domain("integer Hadamard exponent too large")
                })?;
                let exact = hadamard_entry_int(v, k);
                HpReal::from_rational(&exact, precision)
            } else {
                HpReal::from_rational(v, precision).pow(&rr)?
            };
            row.push(entry);
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows, a.offset())?)
}

fn hadamard_entry_int(v: &Rational, k: u32) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let mut acc = v.clone();
    for _ in 1..k {
        acc *= v;
    }
    acc
}

/// Either result kind of [`hadamard_power`].
pub enum PoweredMatrix {
    Exact(Matrix<Rational>),
    Real(Matrix<HpReal>),
}

/// Entrywise power `A^{∘r}`: exact when `r` is a nonnegative integer,
/// `precision`-bit real otherwise.
pub fn hadamard_power(
    a: &Matrix<Rational>,
    r: &Rational,
    precision: u32,
) -> Result<PoweredMatrix, Error> {
    if r.denom().is_one() && !r.numer().is_negative() {
        let k = r
            .numer()
            .to_u32()
            .ok_or_else(|| Error::domain("integer Hadamard exponent too large"))?;
        Ok(PoweredMatrix::Exact(hadamard_power_exact(a, k)))
    } else {
        Ok(PoweredMatrix::Real(hadamard_power_real(a, r, precision)?))
    }
}

/// Second difference of entrywise logs:
/// `(Δ log A)_ij = log a_ij + log a_{i+1,j+1} − log a_{i+1,j} − log a_{i,j+1}`,
/// an (n−1)×(n−1) matrix. All entries of `A` must be strictly positive.
pub fn delta_log(a: &Matrix<Rational>, precision: u32) -> Result<Matrix<HpReal>, Error> {
    if a.rows() < 2 || a.cols() < 2 {
        return Err(Error::domain("delta_log needs at least a 2x2 matrix"));
    }
    for v in a.entries() {
        if !v.is_positive() {
            return Err(Error::domain("delta_log requires strictly positive entries"));
        }
    }
    let logs = Matrix::from_fn(a.rows(), a.cols(), a.offset(), |i, j| {
        HpReal::from_rational(a.at(i, j), precision)
            .ln()
            .expect("positive entry")
    });
    let m = a.rows() - 1;
    let k = a.cols() - 1;
    let mut out = Matrix::from_fn(m, k, a.offset(), |_, _| HpReal::zero(precision));
    let symmetric = a.is_symmetric();
    for i in 0..m {
        for j in 0..k {
            if symmetric && j < i {
                *out.at_mut(i, j) = out.at(j, i).clone();
                continue;
            }
            let v = logs
                .at(i, j)
                .add(logs.at(i + 1, j + 1))
                .sub(logs.at(i + 1, j))
                .sub(logs.at(i, j + 1));
            *out.at_mut(i, j) = v;
        }
    }
    Ok(out)
}
