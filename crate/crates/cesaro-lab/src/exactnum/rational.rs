//! Exact rational scalars: parsing, formatting, and a safe `f64` view.
//!
//! `num_rational::BigRational` already stores values canonically (positive
//! denominator, gcd-reduced), which is exactly the invariant the rest of the
//! crate relies on. This module adds the string grammar used by the CLI and
//! report files ("p/q", integers, and exact decimals) plus helpers that stay
//! correct for numbers far outside `f64` range.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub use num_rational::BigRational;

use crate::{Error, Result};

/// Build a rational from machine integers.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Build an integer rational.
pub fn rat_i(num: i64) -> BigRational {
    BigRational::from(BigInt::from(num))
}

/// Parse an exact rational from "p/q", an integer, or a finite decimal.
///
/// Decimal strings convert exactly (`"-0.75"` ↦ −3/4). Float-flavored input
/// (exponents, inf, nan) is rejected so nothing gets silently rounded.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::InvalidArgument("empty rational literal".into()));
    }
    let bad = |why: &str| Error::InvalidArgument(format!("bad rational literal {t:?}: {why}"));
    if let Some((num, den)) = t.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| bad("numerator is not an integer"))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| bad("denominator is not an integer"))?;
        if d.is_zero() {
            return Err(bad("denominator is zero"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("fractional digits required after '.'"));
        }
        let (sign, digits) = match int_part.as_bytes().first() {
            Some(b'-') => (-1, &int_part[1..]),
            Some(b'+') => (1, &int_part[1..]),
            _ => (1, int_part),
        };
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("integer part is not numeric"));
        }
        let joined = format!("{digits}{frac_part}");
        let n = BigInt::from_str(&joined).map_err(|_| bad("not numeric"))?;
        let d = BigInt::from(10u8).pow(frac_part.len() as u32);
        return Ok(BigRational::new(n * sign, d));
    }
    let n = BigInt::from_str(t).map_err(|_| bad("expected p/q, integer, or decimal"))?;
    Ok(BigRational::from(n))
}

/// Canonical display form: "p/q", or just "p" for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_zero() {
        // unreachable for canonical values; keep the formatter total
        return "0/0".into();
    }
    if r.denom() == &BigInt::from(1) {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Convert to `f64` without overflowing on huge numerators/denominators.
///
/// `num`/`den` are scaled by a power of two so the quotient carries ~80
/// significant bits, then the small quotient converts exactly.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    ratio_to_f64(r.numer(), r.denom())
}

/// `f64` view of an arbitrary `num/den` pair (`den` must be nonzero).
pub fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let negative = (num.sign() == Sign::Minus) != (den.sign() == Sign::Minus);
    let num = num.abs();
    let den = den.abs();
    let shift: i64 = 80 + den.bits() as i64 - num.bits() as i64;
    let q = if shift >= 0 {
        (num << shift as u64) / &den
    } else {
        num / (den << (-shift) as u64)
    };
    // q has roughly 80 bits; exact as f64 up to rounding in to_f64.
    let mag = q.to_f64().unwrap_or(f64::MAX) * 2f64.powi(-shift as i32);
    if negative {
        -mag
    } else {
        mag
    }
}

/// An exact rational kept unreduced.
///
/// Partial sums of 10⁵ series terms have denominators with millions of bits;
/// the value is exact but running gcd reduction on it is prohibitive. This
/// type supports the few operations the brackets need (exact comparison
/// against reduced rationals, exact addition of a small reduced rational, and
/// an `f64` view) without ever normalizing.
#[derive(Debug, Clone)]
pub struct RawRational {
    num: BigInt,
    den: BigInt,
}

impl RawRational {
    /// `den` must be positive.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(den.is_positive(), "RawRational denominator must be positive");
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self { num: BigInt::zero(), den: BigInt::from(1) }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self { num: r.numer().clone(), den: r.denom().clone() }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// Exact `self + r` for a (small) reduced rational.
    pub fn add_rational(&self, r: &BigRational) -> Self {
        Self {
            num: &self.num * r.denom() + r.numer() * &self.den,
            den: &self.den * r.denom(),
        }
    }

    /// Exact three-way comparison against a reduced rational.
    pub fn cmp_rational(&self, r: &BigRational) -> std::cmp::Ordering {
        (&self.num * r.denom()).cmp(&(r.numer() * &self.den))
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.num, &self.den)
    }

    /// Reduce to a canonical `BigRational`. Only sensible for small values.
    pub fn reduce(&self) -> BigRational {
        BigRational::new(self.num.clone(), self.den.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), rat_i(-7));
        assert_eq!(parse_rational("0.5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-0.75").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational(" 10/4 ").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("+2.25").unwrap(), rat(9, 4));
    }

    #[test]
    fn parse_rejects_floats_and_garbage() {
        for bad in ["", "1e3", "nan", "inf", "1/0", "1.2.3", "0x10", ".5", "1."] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn format_roundtrip() {
        for (n, d) in [(3, 4), (-3, 4), (7, 1), (0, 5), (22, 7)] {
            let r = rat(n, d);
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert_eq!(format_rational(&rat(6, 3)), "2");
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
    }

    #[test]
    fn f64_conversion_handles_huge_values() {
        let huge = BigInt::from(10u8).pow(5000);
        let r = BigRational::new(huge.clone() * 3, huge * 4);
        assert!((rational_to_f64(&r) - 0.75).abs() < 1e-15);
        assert_eq!(rational_to_f64(&rat_i(0)), 0.0);
        assert!((rational_to_f64(&rat(-1, 3)) + 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn raw_rational_ops() {
        let raw = RawRational::new(BigInt::from(19), BigInt::from(8));
        assert_eq!(raw.cmp_rational(&rat(19, 8)), std::cmp::Ordering::Equal);
        assert_eq!(raw.cmp_rational(&rat(5, 2)), std::cmp::Ordering::Less);
        let bumped = raw.add_rational(&rat(1, 8));
        assert_eq!(bumped.cmp_rational(&rat(5, 2)), std::cmp::Ordering::Equal);
        assert!((raw.to_f64() - 2.375).abs() < 1e-15);
    }
}
