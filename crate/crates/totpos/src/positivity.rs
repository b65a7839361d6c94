//! Decision procedures for positivity properties, exact and high-precision,
//! with witness-carrying reports.
//!
//! Exact checks (`is_pd_exact`, `is_psd_exact`, `is_tp`, `is_tn`,
//! `is_triangular_tp`, …) decide over rationals and can only pass or fail.
//! High-precision checks compare against a tolerance band and may come back
//! `Indeterminate`, in which case rerunning at twice the precision is the
//! intended remedy (the CLI does this automatically once).

use crate::error::Error;
use crate::factor::bareiss_det;
use crate::families::{delta_log, hadamard_power, PoweredMatrix};
use crate::matrix::{IndexOffset, Matrix};
use crate::numerics::{HpReal, Rational, Sign3};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};

/// Outcome of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

/// Scalar carried inside a witness: exact minor value or high-precision margin.
#[derive(Debug, Clone)]
pub enum ReportScalar {
    Exact(Rational),
    Real(HpReal),
}

impl std::fmt::Display for ReportScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReportScalar::Exact(r) => write!(f, "{}", crate::numerics::format_rational_plain(r)),
            ReportScalar::Real(x) => write!(f, "{x}"),
        }
    }
}

/// Failure (or indeterminacy) evidence: the row/column index sets of the
/// offending minor — labeled in the matrix's own offset convention — its
/// value or margin, the elimination/grid stage, and for sampled Hadamard
/// powers the exponent at which the counterexample appeared.
#[derive(Debug, Clone, Default)]
pub struct Witness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Option<ReportScalar>,
    pub stage: Option<usize>,
    pub power: Option<Rational>,
}

/// Verdict plus evidence and the method that produced it.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub method: String,
    pub witness: Option<Witness>,
    pub precision_bits: Option<u32>,
}

impl CheckReport {
    pub fn pass(method: impl Into<String>) -> Self {
        CheckReport {
            verdict: Verdict::Pass,
            method: method.into(),
            witness: None,
            precision_bits: None,
        }
    }

    pub fn fail(method: impl Into<String>, witness: Witness) -> Self {
        CheckReport {
            verdict: Verdict::Fail,
            method: method.into(),
            witness: Some(witness),
            precision_bits: None,
        }
    }

    pub fn indeterminate(method: impl Into<String>, witness: Option<Witness>) -> Self {
        CheckReport {
            verdict: Verdict::Indeterminate,
            method: method.into(),
            witness,
            precision_bits: None,
        }
    }

    pub fn with_precision(mut self, p: u32) -> Self {
        self.precision_bits = Some(p);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Strictly increasing 1-based index set with its dispersion
/// `d(α) = α_p − α_1 − (p−1)`; zero dispersion means consecutive indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    positions: Vec<usize>,
}

impl IndexSet {
    pub fn new(positions: Vec<usize>) -> Result<Self, Error> {
        if positions.is_empty() {
            return Err(Error::domain("empty index set"));
        }
        if positions[0] == 0 {
            return Err(Error::domain("index sets are 1-based"));
        }
        for w in positions.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::domain("index set must be strictly increasing"));
            }
        }
        Ok(IndexSet { positions })
    }

    pub fn contiguous(start: usize, len: usize) -> Self {
        IndexSet {
            positions: (start..start + len).collect(),
        }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn dispersion(&self) -> usize {
        let p = self.positions.len();
        self.positions[p - 1] - self.positions[0] - (p - 1)
    }

    pub fn is_contiguous(&self) -> bool {
        self.dispersion() == 0
    }
}

fn label(ix: &[usize], base: usize) -> Vec<usize> {
    ix.iter().map(|&v| v + base).collect()
}

fn require_symmetric_exact(a: &Matrix<Rational>, op: &str) -> Result<(), Error> {
    if !a.is_square() {
        return Err(Error::Dimension {
            op: "positivity check",
            details: format!("{op} needs a square matrix, got {}x{}", a.rows(), a.cols()),
        });
    }
    if !a.is_symmetric() {
        return Err(Error::Structure(format!("{op} requires a symmetric matrix")));
    }
    Ok(())
}

/// Sylvester test: positive definiteness via exact leading principal minors.
pub fn is_pd_exact(a: &Matrix<Rational>) -> Result<CheckReport, Error> {
    require_symmetric_exact(a, "is_pd_exact")?;
    let base = a.offset().base();
    let method = "pd-leading-minors";
    for k in 1..=a.rows() {
        let minor = bareiss_det(&a.leading(k))?;
        if !minor.is_positive() {
            let ix: Vec<usize> = (0..k).collect();
            return Ok(CheckReport::fail(
                method,
                Witness {
                    rows: label(&ix, base),
                    cols: label(&ix, base),
                    value: Some(ReportScalar::Exact(minor)),
                    stage: Some(k),
                    power: None,
                },
            ));
        }
    }
    Ok(CheckReport::pass(method))
}

/// Positive semidefiniteness via the characteristic polynomial, computed
/// exactly by the Faddeev–LeVerrier recurrence: all coefficients
/// `e_k = Σ (k×k principal minors)` must be nonnegative.
pub fn is_psd_exact(a: &Matrix<Rational>) -> Result<CheckReport, Error> {
    require_symmetric_exact(a, "is_psd_exact")?;
    let n = a.rows();
    let method = "psd-faddeev-leverrier";
    // det(λI − A) = λⁿ + a₁λⁿ⁻¹ + … + aₙ with M₁ = A, a₁ = −tr M₁,
    // M_k = A(M_{k−1} + a_{k−1}I), a_k = −tr(M_k)/k; then e_k = (−1)^k a_k
    // is the sum of the k×k principal minors.
    let mut m = a.clone();
    let mut coeffs = Vec::with_capacity(n);
    for k in 1..=n {
        let tr: Rational = (0..n).map(|i| m.at(i, i).clone()).sum();
        let ak = -(tr / Rational::from_integer(k.into()));
        let ek = if k % 2 == 0 { ak.clone() } else { -ak.clone() };
        coeffs.push(ek);
        if k == n {
            break;
        }
        let mut shifted = m.clone();
        for i in 0..n {
            let v = shifted.at(i, i) + &ak;
            *shifted.at_mut(i, i) = v;
        }
        m = a.mul(&shifted)?;
    }
    for (k, e) in coeffs.iter().enumerate() {
        if e.is_negative() {
            return Ok(CheckReport::fail(
                method,
                Witness {
                    rows: vec![],
                    cols: vec![],
                    value: Some(ReportScalar::Exact(e.clone())),
                    stage: Some(k + 1),
                    power: None,
                },
            ));
        }
    }
    Ok(CheckReport::pass(method))
}

/// Minor enumeration mode for [`is_tp`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TpMode {
    /// Every minor of every order (exponential; fine at desk scale).
    AllMinors,
    /// Only minors on consecutive rows and consecutive columns; their
    /// positivity already implies total positivity (Fekete's criterion).
    SolidMinors,
}

fn tp_scan(
    a: &Matrix<Rational>,
    mode: TpMode,
    strict: bool,
) -> Result<Option<(Vec<usize>, Vec<usize>, Rational)>, Error> {
    let (r, c) = (a.rows(), a.cols());
    let pmax = r.min(c);
    for p in 1..=pmax {
        match mode {
            TpMode::AllMinors => {
                for alpha in (0..r).combinations(p) {
                    for gamma in (0..c).combinations(p) {
                        let minor = bareiss_det(&a.submatrix(&alpha, &gamma)?)?;
                        let bad = if strict {
                            !minor.is_positive()
                        } else {
                            minor.is_negative()
                        };
                        if bad {
                            return Ok(Some((alpha, gamma, minor)));
                        }
                    }
                }
            }
            TpMode::SolidMinors => {
                for r0 in 0..=r - p {
                    for c0 in 0..=c - p {
                        let alpha: Vec<usize> = (r0..r0 + p).collect();
                        let gamma: Vec<usize> = (c0..c0 + p).collect();
                        let minor = bareiss_det(&a.submatrix(&alpha, &gamma)?)?;
                        let bad = if strict {
                            !minor.is_positive()
                        } else {
                            minor.is_negative()
                        };
                        if bad {
                            return Ok(Some((alpha, gamma, minor)));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Total positivity: every enumerated minor must be strictly positive.
/// Enumeration runs in canonical order (increasing order p, lexicographic
/// index sets) and stops at the first failure.
pub fn is_tp(a: &Matrix<Rational>, mode: TpMode) -> Result<CheckReport, Error> {
    let method = match mode {
        TpMode::AllMinors => "tp-all-minors",
        TpMode::SolidMinors => "tp-solid-minors-fekete",
    };
    match tp_scan(a, mode, true)? {
        None => Ok(CheckReport::pass(method)),
        Some((alpha, gamma, minor)) => {
            let base = a.offset().base();
            Ok(CheckReport::fail(
                method,
                Witness {
                    rows: label(&alpha, base),
                    cols: label(&gamma, base),
                    value: Some(ReportScalar::Exact(minor)),
                    stage: None,
                    power: None,
                },
            ))
        }
    }
}

/// Total nonnegativity: every minor must be ≥ 0 (full enumeration).
pub fn is_tn(a: &Matrix<Rational>) -> Result<CheckReport, Error> {
    let method = "tn-all-minors";
    match tp_scan(a, TpMode::AllMinors, false)? {
        None => Ok(CheckReport::pass(method)),
        Some((alpha, gamma, minor)) => {
            let base = a.offset().base();
            Ok(CheckReport::fail(
                method,
                Witness {
                    rows: label(&alpha, base),
                    cols: label(&gamma, base),
                    value: Some(ReportScalar::Exact(minor)),
                    stage: None,
                    power: None,
                },
            ))
        }
    }
}

/// Triangular total positivity of a lower-triangular matrix: for every
/// order p and every contiguous row set α (dispersion 0), the minor on rows
/// α and the initial columns σ⁽ᵖ⁾ = {1..p} must be strictly positive.
pub fn is_triangular_tp(l: &Matrix<Rational>) -> Result<CheckReport, Error> {
    if !l.is_square() {
        return Err(Error::Dimension {
            op: "is_triangular_tp",
            details: format!("{}x{}", l.rows(), l.cols()),
        });
    }
    for i in 0..l.rows() {
        for j in i + 1..l.cols() {
            if !l.at(i, j).is_zero() {
                return Err(Error::Structure(
                    "is_triangular_tp requires a lower-triangular matrix".into(),
                ));
            }
        }
    }
    let n = l.rows();
    let base = l.offset().base();
    let method = "triangular-tp-initial-minors";
    for p in 1..=n {
        let sigma: Vec<usize> = (0..p).collect();
        for s in 0..=n - p {
            let alpha: Vec<usize> = (s..s + p).collect();
            let minor = bareiss_det(&l.submatrix(&alpha, &sigma)?)?;
            if !minor.is_positive() {
                return Ok(CheckReport::fail(
                    method,
                    Witness {
                        rows: label(&alpha, base),
                        cols: label(&sigma, base),
                        value: Some(ReportScalar::Exact(minor)),
                        stage: Some(p),
                        power: None,
                    },
                ));
            }
        }
    }
    Ok(CheckReport::pass(method))
}

/// Shift identity for the Stirling matrix of the second kind: for every
/// order p < n and contiguous α with α_p < n,
/// `𝒮[α', σ⁽ᵖ⁾] = 𝒮[α, σ⁽ᵖ⁾]·T` with `T` the p×p bidiagonal `t_ii = i`,
/// `t_{i,i+1} = 1`; consequently `det 𝒮[α', σ⁽ᵖ⁾] = p!·det 𝒮[α, σ⁽ᵖ⁾]`.
pub fn tshift_identity_check(n: usize) -> Result<CheckReport, Error> {
    use crate::combinatorics::factorial;
    use crate::families::{stirling_matrix, StirlingKind};
    if n < 2 {
        return Err(Error::domain("tshift_identity_check needs n ≥ 2"));
    }
    let s = stirling_matrix(StirlingKind::Second, n);
    let method = "stirling-second-tshift";
    for p in 1..n {
        let t = Matrix::from_fn(p, p, IndexOffset::One, |i, j| {
            if i == j {
                Rational::from_integer(((i + 1) as i64).into())
            } else if j == i + 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let sigma: Vec<usize> = (0..p).collect();
        for start in 0..n - p {
            // α = {start+1, …, start+p} 1-based, α_p = start+p < n
            let alpha: Vec<usize> = (start..start + p).collect();
            let alpha_next: Vec<usize> = (start + 1..start + p + 1).collect();
            let left = s.submatrix(&alpha_next, &sigma)?;
            let right = s.submatrix(&alpha, &sigma)?.mul(&t)?;
            let det_left = bareiss_det(&left)?;
            let det_right = bareiss_det(&s.submatrix(&alpha, &sigma)?)?
                * Rational::from_integer(factorial(p));
            if !left.same_entries(&right) || det_left != det_right {
                return Ok(CheckReport::fail(
                    method,
                    Witness {
                        rows: label(&alpha, 1),
                        cols: label(&sigma, 1),
                        value: Some(ReportScalar::Exact(det_left)),
                        stage: Some(p),
                        power: None,
                    },
                ));
            }
        }
    }
    Ok(CheckReport::pass(method))
}

/// Hankel shortcut for total positivity: a symmetric Hankel matrix that is
/// positive definite together with its first-column-deleted, last-row-deleted
/// submatrix is totally positive. A pass asserts TP; the check itself only
/// computes leading principal minors.
pub fn hankel_tp_via_pd(a: &Matrix<Rational>) -> Result<CheckReport, Error> {
    require_symmetric_exact(a, "hankel_tp_via_pd")?;
    let n = a.rows();
    for i in 1..n {
        for j in 0..n - 1 {
            if a.at(i, j) != a.at(i - 1, j + 1) {
                return Err(Error::Structure(
                    "hankel_tp_via_pd requires a Hankel matrix".into(),
                ));
            }
        }
    }
    let method = "hankel-tp-via-pd";
    let full = is_pd_exact(a)?;
    if !full.passed() {
        return Ok(CheckReport {
            method: method.into(),
            ..full
        });
    }
    if n > 1 {
        let shifted = a.delete_rc(n, 1)?;
        let inner = is_pd_exact(&shifted)?;
        if !inner.passed() {
            return Ok(CheckReport {
                method: method.into(),
                ..inner
            });
        }
    }
    Ok(CheckReport::pass(method))
}

/// Determinant of a high-precision matrix by Gaussian elimination with
/// partial pivoting, carried out with 32 guard bits.
pub fn hp_det(a: &Matrix<HpReal>) -> Result<HpReal, Error> {
    if !a.is_square() {
        return Err(Error::Dimension {
            op: "hp_det",
            details: format!("{}x{}", a.rows(), a.cols()),
        });
    }
    let n = a.rows();
    let p = matrix_precision(a);
    if n == 0 {
        return Ok(HpReal::one(p));
    }
    let work = p + 32;
    let mut m: Vec<Vec<HpReal>> = (0..n)
        .map(|i| (0..n).map(|j| a.at(i, j).round_to(work)).collect())
        .collect();
    let mut det = HpReal::one(work);
    let mut sign = 1i32;
    for k in 0..n {
        let mut piv = k;
        for r in k + 1..n {
            if m[r][k].abs() > m[piv][k].abs() {
                piv = r;
            }
        }
        if m[piv][k].is_zero() {
            return Ok(HpReal::zero(p));
        }
        if piv != k {
            m.swap(piv, k);
            sign = -sign;
        }
        det = det.mul(&m[k][k]);
        for r in k + 1..n {
            if m[r][k].is_zero() {
                continue;
            }
            let f = m[r][k].div(&m[k][k]);
            for c in k..n {
                let v = m[r][c].sub(&f.mul(&m[k][c]));
                m[r][c] = v;
            }
        }
    }
    if sign < 0 {
        det = det.neg();
    }
    Ok(det.round_to(p))
}

fn matrix_precision(a: &Matrix<HpReal>) -> u32 {
    a.entries()
        .map(HpReal::precision)
        .max()
        .unwrap_or(crate::numerics::MIN_PRECISION)
}

/// Default tolerance exponent for a given precision: τ = 2^(−P/2).
pub fn default_tol_exponent(precision: u32) -> u32 {
    precision / 2
}

fn check_symmetry_hp(a: &Matrix<HpReal>, tau: &HpReal) -> Result<(), Error> {
    for i in 0..a.rows() {
        for j in i + 1..a.cols() {
            let diff = a.at(i, j).sub(a.at(j, i)).abs();
            let scale = if a.at(i, j).abs() > HpReal::one(64) {
                a.at(i, j).abs()
            } else {
                HpReal::one(64)
            };
            if diff > tau.mul(&scale) {
                return Err(Error::Structure(
                    "high-precision check requires a (numerically) symmetric matrix".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Positive definiteness of a high-precision symmetric matrix. Each leading
/// principal minor is compared against `±τ·scale_k` where `τ = 2^(−tol_exp)`
/// and `scale_k` is the product of the first k diagonal magnitudes; values
/// inside the band give an `Indeterminate` verdict.
pub fn is_pd_hp(a: &Matrix<HpReal>, tol_exp: u32) -> Result<CheckReport, Error> {
    if !a.is_square() {
        return Err(Error::Dimension {
            op: "is_pd_hp",
            details: format!("{}x{}", a.rows(), a.cols()),
        });
    }
    let p = matrix_precision(a);
    let tau = HpReal::pow2(-(tol_exp as i64), p);
    check_symmetry_hp(a, &tau)?;
    let base = a.offset().base();
    let method = "pd-leading-minors-hp";
    let n = a.rows();
    let mut first_indet: Option<(usize, HpReal)> = None;
    let mut scale = HpReal::one(p);
    for k in 1..=n {
        scale = scale.mul(&a.at(k - 1, k - 1).abs());
        let minor = hp_det(&a.leading(k))?;
        let threshold = tau.mul(&scale);
        match minor.sign_with_tolerance(&threshold) {
            Sign3::Positive => {}
            Sign3::Negative => {
                let ix: Vec<usize> = (0..k).collect();
                return Ok(CheckReport::fail(
                    method,
                    Witness {
                        rows: label(&ix, base),
                        cols: label(&ix, base),
                        value: Some(ReportScalar::Real(minor)),
                        stage: Some(k),
                        power: None,
                    },
                )
                .with_precision(p));
            }
            Sign3::Indeterminate => {
                if first_indet.is_none() {
                    first_indet = Some((k, minor));
                }
            }
        }
    }
    if let Some((k, minor)) = first_indet {
        let ix: Vec<usize> = (0..k).collect();
        return Ok(CheckReport::indeterminate(
            method,
            Some(Witness {
                rows: label(&ix, base),
                cols: label(&ix, base),
                value: Some(ReportScalar::Real(minor)),
                stage: Some(k),
                power: None,
            }),
        )
        .with_precision(p));
    }
    Ok(CheckReport::pass(method).with_precision(p))
}

/// Certified positivity of all solid minors of a high-precision matrix.
/// The scale for a p×p minor is the product over its rows of the largest
/// entry magnitude in that row.
pub fn hp_solid_minors_positive(a: &Matrix<HpReal>, tol_exp: u32) -> Result<CheckReport, Error> {
    let p_bits = matrix_precision(a);
    let tau = HpReal::pow2(-(tol_exp as i64), p_bits);
    let base = a.offset().base();
    let method = "tp-solid-minors-hp";
    let (r, c) = (a.rows(), a.cols());
    let mut first_indet: Option<Witness> = None;
    for p in 1..=r.min(c) {
        for r0 in 0..=r - p {
            for c0 in 0..=c - p {
                let alpha: Vec<usize> = (r0..r0 + p).collect();
                let gamma: Vec<usize> = (c0..c0 + p).collect();
                let sub = a.submatrix(&alpha, &gamma)?;
                let minor = hp_det(&sub)?;
                let mut scale = HpReal::one(p_bits);
                for i in 0..p {
                    let mut row_max = HpReal::zero(p_bits);
                    for j in 0..p {
                        if sub.at(i, j).abs() > row_max {
                            row_max = sub.at(i, j).abs();
                        }
                    }
                    scale = scale.mul(&row_max);
                }
                let threshold = tau.mul(&scale);
                match minor.sign_with_tolerance(&threshold) {
                    Sign3::Positive => {}
                    Sign3::Negative => {
                        return Ok(CheckReport::fail(
                            method,
                            Witness {
                                rows: label(&alpha, base),
                                cols: label(&gamma, base),
                                value: Some(ReportScalar::Real(minor)),
                                stage: Some(p),
                                power: None,
                            },
                        )
                        .with_precision(p_bits));
                    }
                    Sign3::Indeterminate => {
                        if first_indet.is_none() {
                            first_indet = Some(Witness {
                                rows: label(&alpha, base),
                                cols: label(&gamma, base),
                                value: Some(ReportScalar::Real(minor)),
                                stage: Some(p),
                                power: None,
                            });
                        }
                    }
                }
            }
        }
    }
    if let Some(w) = first_indet {
        return Ok(CheckReport::indeterminate(method, Some(w)).with_precision(p_bits));
    }
    Ok(CheckReport::pass(method).with_precision(p_bits))
}

/// Sufficient criterion for infinite divisibility of a symmetric matrix with
/// strictly positive entries: positive definiteness of `Δ log A`. A pass is
/// evidence through the sufficient criterion only — failure of this check
/// does not certify the opposite.
pub fn infdiv_horn(a: &Matrix<Rational>, precision: u32, tol_exp: u32) -> Result<CheckReport, Error> {
    require_symmetric_exact(a, "infdiv_horn")?;
    for v in a.entries() {
        if !v.is_positive() {
            return Err(Error::domain(
                "infdiv_horn requires strictly positive entries",
            ));
        }
    }
    let d = delta_log(a, precision)?;
    let inner = is_pd_hp(&d, tol_exp)?;
    Ok(CheckReport {
        method: "infdiv-horn-sufficient".into(),
        ..inner
    })
}

/// The default exponent grid {k/10 : 1 ≤ k ≤ 20} ∪ {1/4, 1/2}, ascending.
pub fn standard_grid() -> Vec<Rational> {
    let mut grid: Vec<Rational> = (1..=20)
        .map(|k| Rational::new(k.into(), 10.into()))
        .collect();
    grid.push(Rational::new(1.into(), 4.into()));
    grid.sort();
    grid.dedup();
    grid
}

/// Counterexample search for infinite divisibility: for each exponent r in
/// the grid (ascending), check `A^{∘r}` for positive definiteness at high
/// precision. Fails at the first certified negative leading minor, with the
/// exponent recorded in the witness; a pass means no counterexample was
/// found on the grid — evidence, not proof.
pub fn infdiv_sample(
    a: &Matrix<Rational>,
    grid: &[Rational],
    precision: u32,
    tol_exp: u32,
) -> Result<CheckReport, Error> {
    require_symmetric_exact(a, "infdiv_sample")?;
    if grid.is_empty() {
        return Err(Error::domain("empty exponent grid"));
    }
    let mut grid: Vec<Rational> = grid.to_vec();
    grid.sort();
    grid.dedup();
    let has_zero = a.entries().any(|v| v.is_zero());
    for v in a.entries() {
        if v.is_negative() {
            return Err(Error::domain("infdiv_sample requires nonnegative entries"));
        }
    }
    for r in &grid {
        if !r.is_positive() {
            return Err(Error::domain("grid exponents must be positive"));
        }
        if has_zero && !r.denom().is_one() {
            return Err(Error::domain(
                "matrix has zero entries; only integer exponents are allowed",
            ));
        }
    }
    let method = "infdiv-grid-sample";
    for r in &grid {
        let powered = match hadamard_power(a, r, precision)? {
            PoweredMatrix::Real(m) => m,
            PoweredMatrix::Exact(m) => m.map(|v| HpReal::from_rational(v, precision)),
        };
        let report = is_pd_hp(&powered, tol_exp)?;
        if report.verdict == Verdict::Fail {
            let mut witness = report.witness.expect("fail carries a witness");
            witness.power = Some(r.clone());
            return Ok(CheckReport::fail(method, witness).with_precision(precision));
        }
    }
    Ok(CheckReport::pass(method).with_precision(precision))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        bell_matrix, beta_matrix, cauchy_matrix, pascal_matrix, stirling_matrix,
        symmetrized_stirling, StirlingKind,
    };
    use crate::matrix::identity_exact;

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn exact(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter().map(|row| row.iter().map(|&v| r(v)).collect()).collect(),
            IndexOffset::One,
        )
        .unwrap()
    }

    #[test]
    fn index_set_dispersion() {
        let contiguous = IndexSet::new(vec![3, 4, 5]).unwrap();
        assert_eq!(contiguous.dispersion(), 0);
        assert!(contiguous.is_contiguous());
        let gapped = IndexSet::new(vec![1, 3, 6]).unwrap();
        assert_eq!(gapped.dispersion(), 3);
        assert!(!gapped.is_contiguous());
        assert!(IndexSet::new(vec![]).is_err());
        assert!(IndexSet::new(vec![0, 1]).is_err());
        assert!(IndexSet::new(vec![2, 2]).is_err());
    }

    #[test]
    fn pd_examples() {
        assert!(is_pd_exact(&beta_matrix(4)).unwrap().passed());
        assert!(is_pd_exact(&bell_matrix(5)).unwrap().passed());
        assert!(is_pd_exact(&exact(&[&[1, 2], &[3, 4]])).is_err());
    }

    #[test]
    fn pd_shifted_bell_is_symmetric_and_pd() {
        // deleting last row and first column of a Hankel matrix keeps symmetry
        let shifted = bell_matrix(5).delete_rc(5, 1).unwrap();
        assert!(shifted.is_symmetric());
        assert!(is_pd_exact(&shifted).unwrap().passed());
    }

    #[test]
    fn pd_zero_matrix_fails_at_stage_one() {
        let z = Matrix::from_fn(3, 3, IndexOffset::One, |_, _| r(0));
        let report = is_pd_exact(&z).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        assert_eq!(w.stage, Some(1));
        match w.value {
            Some(ReportScalar::Exact(v)) => assert_eq!(v, r(0)),
            _ => panic!("expected exact witness"),
        }
    }

    #[test]
    fn psd_examples() {
        assert!(is_psd_exact(&exact(&[&[1, 1], &[1, 1]])).unwrap().passed());
        let report = is_psd_exact(&exact(&[&[1, 2], &[2, 1]])).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        assert_eq!(w.stage, Some(2));
        match w.value {
            Some(ReportScalar::Exact(v)) => assert_eq!(v, r(-3)),
            _ => panic!(),
        }
        assert!(is_psd_exact(&exact(&[&[1, 2], &[3, 4]])).is_err());
    }

    #[test]
    fn tp_examples() {
        assert!(is_tp(&beta_matrix(4), TpMode::AllMinors).unwrap().passed());
        let report = is_tp(&stirling_matrix(StirlingKind::First, 3), TpMode::AllMinors).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        // first failing minor is the 1x1 zero above the diagonal
        let w = report.witness.unwrap();
        assert_eq!((w.rows.as_slice(), w.cols.as_slice()), (&[1][..], &[2][..]));
        assert!(is_tp(&bell_matrix(5), TpMode::AllMinors).unwrap().passed());
        assert!(is_tp(&bell_matrix(5), TpMode::SolidMinors).unwrap().passed());
    }

    #[test]
    fn tp_modes_agree_on_corpus() {
        let corpus: Vec<Matrix<Rational>> = vec![
            beta_matrix(5),
            pascal_matrix(4),
            bell_matrix(5),
            cauchy_matrix(5),
            stirling_matrix(StirlingKind::First, 5),
            stirling_matrix(StirlingKind::Second, 5),
            symmetrized_stirling(StirlingKind::First, 5),
            symmetrized_stirling(StirlingKind::Second, 5),
        ];
        for (i, m) in corpus.iter().enumerate() {
            let all = is_tp(m, TpMode::AllMinors).unwrap();
            let solid = is_tp(m, TpMode::SolidMinors).unwrap();
            assert_eq!(all.verdict, solid.verdict, "corpus entry {i}");
        }
    }

    #[test]
    fn tn_examples() {
        assert!(is_tn(&stirling_matrix(StirlingKind::First, 5)).unwrap().passed());
        assert!(is_tn(&stirling_matrix(StirlingKind::Second, 5)).unwrap().passed());
        let report = is_tn(&exact(&[&[1, 2], &[3, 1]])).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        match report.witness.unwrap().value {
            Some(ReportScalar::Exact(v)) => assert_eq!(v, r(-5)),
            _ => panic!(),
        }
    }

    #[test]
    fn triangular_tp_examples() {
        assert!(is_triangular_tp(&stirling_matrix(StirlingKind::Second, 5))
            .unwrap()
            .passed());
        let report = is_triangular_tp(&identity_exact(2)).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        assert_eq!((w.rows.as_slice(), w.cols.as_slice()), (&[2][..], &[1][..]));
        assert!(is_triangular_tp(&beta_matrix(3)).is_err()); // not triangular
    }

    #[test]
    fn tshift_small_and_full() {
        for n in 2..=8 {
            assert!(tshift_identity_check(n).unwrap().passed(), "n = {n}");
        }
        assert!(tshift_identity_check(1).is_err());
    }

    #[test]
    fn hankel_tp_examples() {
        assert!(hankel_tp_via_pd(&bell_matrix(5)).unwrap().passed());
        let report = hankel_tp_via_pd(&exact(&[&[1, 1], &[1, 1]])).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        assert!(hankel_tp_via_pd(&beta_matrix(3)).is_err()); // not Hankel
        // agreement with the full enumeration on Bell matrices
        for n in 1..=6 {
            let h = hankel_tp_via_pd(&bell_matrix(n)).unwrap();
            let full = is_tp(&bell_matrix(n), TpMode::AllMinors).unwrap();
            assert!(h.passed() && full.passed(), "n = {n}");
        }
    }

    #[test]
    fn hp_det_matches_exact() {
        let b = beta_matrix(5);
        let hp = b.map(|v| HpReal::from_rational(v, 128));
        let d = hp_det(&hp).unwrap();
        assert!(d.rel_close(&HpReal::from_u64(120, 128), 100), "det = {d}");
        // sign handling under pivoting
        let swapped = exact(&[&[0, 1], &[1, 0]]).map(|v| HpReal::from_rational(v, 128));
        let d = hp_det(&swapped).unwrap();
        assert!(d.rel_close(&HpReal::from_i64(-1, 128), 120));
    }

    #[test]
    fn is_pd_hp_on_delta_log_bell4() {
        let d = delta_log(&bell_matrix(4), 128).unwrap();
        let report = is_pd_hp(&d, 64).unwrap();
        assert!(report.passed(), "verdict {:?}", report.verdict);
        assert_eq!(report.precision_bits, Some(128));
    }

    #[test]
    fn is_pd_hp_zero_matrix_indeterminate() {
        let z = Matrix::from_fn(3, 3, IndexOffset::One, |_, _| HpReal::zero(128));
        let report = is_pd_hp(&z, 64).unwrap();
        assert_eq!(report.verdict, Verdict::Indeterminate);
    }

    #[test]
    fn is_pd_hp_certifies_negative() {
        let m = exact(&[&[1, 2], &[2, 1]]).map(|v| HpReal::from_rational(v, 128));
        let report = is_pd_hp(&m, 64).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        assert_eq!(report.witness.unwrap().stage, Some(2));
    }

    #[test]
    fn gamma_matrix_pd_evidence() {
        use crate::families::{gamma_matrix, RealIndexSet};
        let l = RealIndexSet::parse("0.5,1.5,2.5", 128).unwrap();
        let g = gamma_matrix(&l, &l, 128).unwrap();
        assert!(is_pd_hp(&g, 64).unwrap().passed());
        assert!(hp_solid_minors_positive(&g, 64).unwrap().passed());
    }

    #[test]
    fn infdiv_horn_examples() {
        assert!(infdiv_horn(&bell_matrix(4), 128, 64).unwrap().passed());
        let ones = Matrix::from_fn(3, 3, IndexOffset::One, |_, _| r(1));
        let report = infdiv_horn(&ones, 128, 64).unwrap();
        assert_eq!(report.verdict, Verdict::Indeterminate);
        // rank-one positive matrix: Δ log vanishes → indeterminate as well
        let u = [r(2), r(3), r(7)];
        let rank_one = Matrix::from_fn(3, 3, IndexOffset::One, |i, j| &u[i] * &u[j]);
        let report = infdiv_horn(&rank_one, 128, 64).unwrap();
        assert_eq!(report.verdict, Verdict::Indeterminate);
        // zero entries rejected
        let z = exact(&[&[1, 0], &[0, 1]]);
        assert!(infdiv_horn(&z, 128, 64).is_err());
    }

    #[test]
    fn infdiv_sample_beta_passes() {
        let grid = standard_grid();
        let report = infdiv_sample(&beta_matrix(5), &grid, 128, 64).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn infdiv_sample_bell5_fails_at_quarter() {
        // on a grid whose first failing point is the quarter power
        let grid = vec![
            Rational::new(1.into(), 4.into()),
            Rational::new(1.into(), 2.into()),
            Rational::one(),
        ];
        let report = infdiv_sample(&bell_matrix(5), &grid, 128, 64).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        assert_eq!(w.power, Some(Rational::new(1.into(), 4.into())));
        assert_eq!(w.stage, Some(5));
        match w.value {
            Some(ReportScalar::Real(v)) => {
                assert!(v.is_negative());
                // ≈ −1.62352×10⁻⁹
                let want = HpReal::parse_decimal("-1.62352e-9", 128).unwrap();
                let diff = v.sub(&want).abs().div(&want.abs());
                assert!(diff < HpReal::parse_decimal("1e-3", 64).unwrap(), "det = {v}");
            }
            _ => panic!("expected real witness"),
        }
    }

    #[test]
    fn infdiv_sample_standard_grid_fails_earlier_for_bell5() {
        // on the full standard grid the first certified counterexample sits
        // at r = 1/10, before the quarter power
        let report = infdiv_sample(&bell_matrix(5), &standard_grid(), 128, 64).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        assert_eq!(w.power, Some(Rational::new(1.into(), 10.into())));
    }

    #[test]
    fn infdiv_sample_power_one_passes_for_pd() {
        let report = infdiv_sample(&beta_matrix(4), &[Rational::one()], 128, 64).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn infdiv_sample_zero_entries_need_integer_grid() {
        let z = exact(&[&[1, 0], &[0, 1]]);
        assert!(infdiv_sample(&z, &[Rational::new(1.into(), 2.into())], 128, 64).is_err());
        assert!(infdiv_sample(&z, &[Rational::one(), r(2)], 128, 64)
            .unwrap()
            .passed());
    }
}
