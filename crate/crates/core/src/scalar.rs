//! Scalar traits the library is generic over.
//!
//! Everything in this crate is exact. [`Ring`] is what dense matrices need,
//! [`Scalar`] adds what integer lattice code needs (gcd, ordering, hashing,
//! parsing). `BigInt` is the default instantiation; fixed-width integers work
//! too when the caller knows entries stay small.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Commutative ring with exact arithmetic.
pub trait Ring: Clone + Debug + PartialEq + Num + std::ops::Neg<Output = Self> {}

impl<T> Ring for T where T: Clone + Debug + PartialEq + Num + std::ops::Neg<Output = Self> {}

/// Exact integer type backing lattice coordinates.
pub trait Scalar:
    Ring
    + Integer
    + Signed
    + Eq
    + Ord
    + Hash
    + Display
    + FromStr
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Ring
        + Integer
        + Signed
        + Eq
        + Ord
        + Hash
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Exact rational over an integer scalar.
pub type Frac<T> = Ratio<T>;

pub(crate) fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("integer scalar must hold i64 values")
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_ratio<T: Scalar>(q: &Ratio<T>) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p/q` or `p` into a reduced rational.
pub fn parse_ratio<T: Scalar>(s: &str) -> Option<Ratio<T>> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = p.trim().parse::<T>().ok()?;
            let q = q.trim().parse::<T>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Ratio::new(p, q))
            }
        }
        None => s.parse::<T>().ok().map(Ratio::from_integer),
    }
}
