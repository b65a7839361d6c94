//! High-precision binary floating scalar with an explicit precision budget.
//!
//! `HpReal` wraps `astro_float::BigFloat`: every value carries its precision
//! `P` in bits, every operation rounds to the larger of the operand
//! precisions, and sign decisions against a tolerance come back as
//! pass/fail/indeterminate instead of a silent boolean.

use crate::error::Error;
use crate::numerics::rational::Rational;
use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

/// Smallest precision the public constructors hand out.
pub const MIN_PRECISION: u32 = 64;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Three-way outcome of a tolerance-banded sign decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign3 {
    Positive,
    Negative,
    Indeterminate,
}

#[derive(Clone, Debug)]
pub struct HpReal {
    bf: BigFloat,
    prec: u32,
}

impl HpReal {
    pub(crate) fn from_bigfloat(bf: BigFloat, prec: u32) -> Self {
        HpReal { bf, prec }
    }

    pub(crate) fn bigfloat(&self) -> &BigFloat {
        &self.bf
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    fn norm_prec(p: u32) -> u32 {
        p.max(MIN_PRECISION)
    }

    pub fn zero(p: u32) -> Self {
        let p = Self::norm_prec(p);
        HpReal::from_bigfloat(BigFloat::from_u32(0, p as usize), p)
    }

    pub fn one(p: u32) -> Self {
        let p = Self::norm_prec(p);
        HpReal::from_bigfloat(BigFloat::from_u32(1, p as usize), p)
    }

    pub fn from_u64(v: u64, p: u32) -> Self {
        let p = Self::norm_prec(p);
        HpReal::from_bigfloat(BigFloat::from_u64(v, p as usize), p)
    }

    pub fn from_i64(v: i64, p: u32) -> Self {
        let p = Self::norm_prec(p);
        HpReal::from_bigfloat(BigFloat::from_i64(v, p as usize), p)
    }

    pub fn from_bigint(v: &BigInt, p: u32) -> Self {
        let p = Self::norm_prec(p);
        // go through the decimal form; wide enough to keep the integer exact
        let digits = v.to_string();
        let need = (digits.len() as u32) * 4 + 8;
        let bf = with_consts(|cc| {
            BigFloat::parse(&digits, Radix::Dec, need.max(p) as usize, RM, cc)
        });
        let mut bf = bf;
        bf.set_precision(p as usize, RM).expect("precision");
        HpReal::from_bigfloat(bf, p)
    }

    /// Exact rational, rounded to `p` bits.
    pub fn from_rational(r: &Rational, p: u32) -> Self {
        let p = Self::norm_prec(p);
        let num = HpReal::from_bigint(r.numer(), p + 32);
        let den = HpReal::from_bigint(r.denom(), p + 32);
        let q = num.bf.div(&den.bf, p as usize, RM);
        HpReal::from_bigfloat(q, p)
    }

    /// Parse a decimal string (`"1.25"`, `"-3e-2"`, `"4.1e+3"`) at `p` bits.
    pub fn parse_decimal(s: &str, p: u32) -> Result<Self, Error> {
        let p = Self::norm_prec(p);
        let t = s.trim();
        if !valid_decimal(t) {
            return Err(Error::parse(format!("malformed real '{s}'")));
        }
        let bf = with_consts(|cc| BigFloat::parse(t, Radix::Dec, p as usize, RM, cc));
        if bf.is_nan() {
            return Err(Error::parse(format!("malformed real '{s}'")));
        }
        Ok(HpReal::from_bigfloat(bf, p))
    }

    pub fn to_decimal_string(&self) -> String {
        format!("{}", self.bf)
    }

    pub fn pi(p: u32) -> Self {
        let p = Self::norm_prec(p);
        HpReal::from_bigfloat(with_consts(|cc| cc.pi(p as usize, RM)), p)
    }

    /// 2^k, exact at any precision.
    pub fn pow2(k: i64, p: u32) -> Self {
        let p = Self::norm_prec(p);
        let mut bf = BigFloat::from_u32(1, p as usize);
        // value = 0.5 · 2^e, so 2^k has stored exponent k + 1
        bf.set_exponent((k + 1) as i32);
        HpReal::from_bigfloat(bf, p)
    }

    fn join(&self, rhs: &Self) -> u32 {
        self.prec.max(rhs.prec).max(MIN_PRECISION)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        HpReal::from_bigfloat(self.bf.add(&rhs.bf, p as usize, RM), p)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        HpReal::from_bigfloat(self.bf.sub(&rhs.bf, p as usize, RM), p)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        HpReal::from_bigfloat(self.bf.mul(&rhs.bf, p as usize, RM), p)
    }

    pub fn div(&self, rhs: &Self) -> Self {
        let p = self.join(rhs);
        HpReal::from_bigfloat(self.bf.div(&rhs.bf, p as usize, RM), p)
    }

    pub fn neg(&self) -> Self {
        HpReal::from_bigfloat(self.bf.neg(), self.prec)
    }

    pub fn abs(&self) -> Self {
        HpReal::from_bigfloat(self.bf.abs(), self.prec)
    }

    pub fn sqrt(&self) -> Result<Self, Error> {
        if self.is_negative() {
            return Err(Error::domain("sqrt of a negative value"));
        }
        let p = self.prec as usize;
        Ok(HpReal::from_bigfloat(self.bf.sqrt(p, RM), self.prec))
    }

    pub fn ln(&self) -> Result<Self, Error> {
        if !self.is_positive() {
            return Err(Error::domain("log of a non-positive value"));
        }
        let p = self.prec as usize;
        Ok(HpReal::from_bigfloat(
            with_consts(|cc| self.bf.ln(p, RM, cc)),
            self.prec,
        ))
    }

    pub fn exp(&self) -> Self {
        let p = self.prec as usize;
        HpReal::from_bigfloat(with_consts(|cc| self.bf.exp(p, RM, cc)), self.prec)
    }

    /// self^e for strictly positive self, computed as exp(e·ln self) with
    /// 32 guard bits. (The backend's own `pow` fails to terminate when the
    /// exact result is representable, e.g. 4^(1/2); this path always does.)
    pub fn pow(&self, e: &Self) -> Result<Self, Error> {
        if !self.is_positive() {
            return Err(Error::domain("power of a non-positive base"));
        }
        let p = self.join(e);
        if e.is_zero() || self == &HpReal::one(p) {
            return Ok(HpReal::one(p));
        }
        let w = (p + 32) as usize;
        let mut base = self.bf.clone();
        base.set_precision(w, RM).expect("precision");
        let mut ex = e.bf.clone();
        ex.set_precision(w, RM).expect("precision");
        let bf = with_consts(|cc| {
            let l = base.ln(w, RM, cc);
            ex.mul(&l, w, RM).exp(w, RM, cc)
        });
        Ok(HpReal::from_bigfloat(bf, w as u32).round_to(p))
    }

    pub fn round_to(&self, p: u32) -> Self {
        let p = Self::norm_prec(p);
        let mut bf = self.bf.clone();
        bf.set_precision(p as usize, RM).expect("precision");
        HpReal::from_bigfloat(bf, p)
    }

    pub fn is_zero(&self) -> bool {
        self.bf.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.bf.is_negative() && !self.bf.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.bf.is_positive() && !self.bf.is_zero() && !self.bf.is_nan()
    }

    pub fn is_nan(&self) -> bool {
        self.bf.is_nan()
    }

    pub fn is_finite(&self) -> bool {
        !self.bf.is_nan() && !self.bf.is_inf()
    }

    /// Sign of `self` against a nonnegative threshold: `Positive` when
    /// `self > t`, `Negative` when `self < -t`, `Indeterminate` in the band.
    pub fn sign_with_tolerance(&self, t: &Self) -> Sign3 {
        if self.is_nan() {
            return Sign3::Indeterminate;
        }
        if self.bf.partial_cmp(&t.bf) == Some(Ordering::Greater) {
            Sign3::Positive
        } else if self.bf.partial_cmp(&t.bf.neg()) == Some(Ordering::Less) {
            Sign3::Negative
        } else {
            Sign3::Indeterminate
        }
    }

    /// |self − other| ≤ 2^−bits · max(|self|, |other|); used by tests and the
    /// reproduction suite for relative-error assertions.
    pub fn rel_close(&self, other: &Self, bits: u32) -> bool {
        let diff = self.sub(other).abs();
        if diff.is_zero() {
            return true;
        }
        let scale = if self.abs() >= other.abs() { self.abs() } else { other.abs() };
        let tol = HpReal::pow2(-(bits as i64), self.join(other)).mul(&scale);
        diff <= tol
    }
}

fn valid_decimal(s: &str) -> bool {
    // [+-]? digits [. digits]? ([eE] [+-]? digits)?   — at least one digit
    let mut chars = s.as_bytes();
    if chars.is_empty() {
        return false;
    }
    if chars[0] == b'+' || chars[0] == b'-' {
        chars = &chars[1..];
    }
    let mut saw_digit = false;
    let mut i = 0;
    while i < chars.len() && chars[i].is_ascii_digit() {
        saw_digit = true;
        i += 1;
    }
    if i < chars.len() && chars[i] == b'.' {
        i += 1;
        while i < chars.len() && chars[i].is_ascii_digit() {
            saw_digit = true;
            i += 1;
        }
    }
    if !saw_digit {
        return false;
    }
    if i == chars.len() {
        return true;
    }
    if chars[i] != b'e' && chars[i] != b'E' {
        return false;
    }
    i += 1;
    if i < chars.len() && (chars[i] == b'+' || chars[i] == b'-') {
        i += 1;
    }
    let start = i;
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    i == chars.len() && i > start
}

impl PartialEq for HpReal {
    fn eq(&self, other: &Self) -> bool {
        self.bf.partial_cmp(&other.bf) == Some(Ordering::Equal)
    }
}

impl PartialOrd for HpReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.bf.partial_cmp(&other.bf)
    }
}

impl fmt::Display for HpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2_40: &str = "1.414213562373095048801688724209698078570";

    #[test]
    fn sqrt_two() {
        let two = HpReal::from_u64(2, 128);
        let s = two.sqrt().unwrap();
        let want = HpReal::parse_decimal(SQRT2_40, 160).unwrap();
        assert!(s.rel_close(&want, 126), "got {s}");
    }

    #[test]
    fn pi_value() {
        let pi = HpReal::pi(128);
        let want = HpReal::parse_decimal("3.141592653589793238462643383279502884197", 160).unwrap();
        assert!(pi.rel_close(&want, 126));
    }

    #[test]
    fn pow2_is_exact() {
        let t = HpReal::pow2(-64, 64);
        let one = HpReal::one(64);
        let mut acc = one.clone();
        for _ in 0..64 {
            acc = acc.div(&HpReal::from_u64(2, 64));
        }
        assert_eq!(t, acc);
        assert_eq!(HpReal::pow2(3, 64), HpReal::from_u64(8, 64));
    }

    #[test]
    fn precision_join_rule() {
        let a = HpReal::from_u64(1, 128);
        let b = HpReal::from_u64(3, 192);
        assert_eq!(a.div(&b).precision(), 192);
        assert_eq!(a.add(&b).precision(), 192);
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "abc", "1.2.3", "--1", "1e", "1e+", ".", "5 5"] {
            assert!(HpReal::parse_decimal(bad, 128).is_err(), "accepted '{bad}'");
        }
        for good in ["1", "-0.25", "+1.5e3", "2e-3", "0.0", "42."] {
            assert!(HpReal::parse_decimal(good, 128).is_ok(), "rejected '{good}'");
        }
    }

    #[test]
    fn decimal_string_roundtrip() {
        let x = HpReal::from_u64(52, 128)
            .div(&HpReal::from_u64(45, 128))
            .ln()
            .unwrap();
        let s = x.to_decimal_string();
        let back = HpReal::parse_decimal(&s, 128).unwrap();
        assert!(x.rel_close(&back, 124));
    }

    #[test]
    fn sign_with_tolerance_bands() {
        let t = HpReal::pow2(-20, 64);
        let small = HpReal::pow2(-30, 64);
        let big = HpReal::from_u64(1, 64);
        assert_eq!(big.sign_with_tolerance(&t), Sign3::Positive);
        assert_eq!(big.neg().sign_with_tolerance(&t), Sign3::Negative);
        assert_eq!(small.sign_with_tolerance(&t), Sign3::Indeterminate);
        assert_eq!(HpReal::zero(64).sign_with_tolerance(&t), Sign3::Indeterminate);
    }

    #[test]
    fn domain_errors() {
        assert!(HpReal::from_i64(-1, 64).sqrt().is_err());
        assert!(HpReal::zero(64).ln().is_err());
        assert!(HpReal::from_i64(-2, 64).ln().is_err());
        assert!(HpReal::zero(64).pow(&HpReal::one(64)).is_err());
    }

    #[test]
    fn from_rational_matches_division() {
        let r = Rational::new(52.into(), 45.into());
        let x = HpReal::from_rational(&r, 128);
        let y = HpReal::from_u64(52, 128).div(&HpReal::from_u64(45, 128));
        assert!(x.rel_close(&y, 126));
    }
}
