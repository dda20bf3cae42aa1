//! Probability weights: exact rationals or floats.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, ToPrimitive, Zero};

/// Tolerance for normalization and identity checks in float mode.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

/// Scalar a distribution can be built from. Rationals make every identity exact.
pub trait Weight: Clone + Num + PartialOrd + Debug + Display + Send + Sync + 'static {
    const EXACT: bool;

    fn as_f64(&self) -> f64;

    fn from_count(n: usize) -> Self;

    /// Equality: exact for rationals, within [`FLOAT_TOLERANCE`] for floats.
    fn close_to(&self, other: &Self) -> bool;

    fn abs_diff(&self, other: &Self) -> f64 {
        (self.as_f64() - other.as_f64()).abs()
    }
}

impl Weight for f64 {
    const EXACT: bool = false;

    fn as_f64(&self) -> f64 {
        *self
    }

    fn from_count(n: usize) -> Self {
        n as f64
    }

    fn close_to(&self, other: &Self) -> bool {
        (self - other).abs() <= FLOAT_TOLERANCE
    }
}

impl Weight for BigRational {
    const EXACT: bool = true;

    fn as_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_count(n: usize) -> Self {
        <BigRational as FromPrimitive>::from_usize(n).unwrap()
    }

    fn close_to(&self, other: &Self) -> bool {
        self == other
    }
}

/// `a/b` (or a bare integer) as an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).ok()?;
    let den = BigInt::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Shorthand for building exact rationals in tests and examples.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}
