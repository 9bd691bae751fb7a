//! The two division conventions every other module builds on.
//!
//! `div_least_positive` is ordinary Euclidean division with `0 <= r < |b|`.
//! `div_least_absolute` picks the remainder of smallest magnitude, so
//! `|r| <= |b| / 2`; on a tie (`|r| == |b| / 2`, only possible for even `|b|`)
//! the positive remainder wins.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used throughout the crate.
pub type Integer = BigInt;

/// One line of a division chain: `dividend = quotient * divisor + remainder`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivStep {
    pub dividend: Integer,
    pub divisor: Integer,
    pub quotient: Integer,
    pub remainder: Integer,
}

impl DivStep {
    /// Checks `dividend == quotient * divisor + remainder`.
    pub fn reconstructs(&self) -> bool {
        &self.quotient * &self.divisor + &self.remainder == self.dividend
    }
}

pub fn div_least_positive(a: &Integer, b: &Integer) -> Result<DivStep> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let remainder = a.mod_floor(&b.abs());
    let quotient = (a - &remainder) / b;
    Ok(DivStep {
        dividend: a.clone(),
        divisor: b.clone(),
        quotient,
        remainder,
    })
}

pub fn div_least_absolute(a: &Integer, b: &Integer) -> Result<DivStep> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let modulus = b.abs();
    let mut remainder = a.mod_floor(&modulus);
    if (&remainder << 1u8) > modulus {
        remainder -= &modulus;
    }
    let quotient = (a - &remainder) / b;
    Ok(DivStep {
        dividend: a.clone(),
        divisor: b.clone(),
        quotient,
        remainder,
    })
}
