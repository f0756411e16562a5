//! The exact integer scalar every number-theoretic routine is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer arithmetic.
///
/// Implemented for the machine integers `i64`/`i128` and for
/// [`num_bigint::BigInt`]. The crate-root aliases pick `BigInt`, so nothing
/// overflows silently; the fixed-width instantiations exist for hot
/// exhaustive loops where the operands are known to be small.
pub trait ExactInt:
    Integer
    + Signed
    + Clone
    + Hash
    + Debug
    + Display
    + From<i32>
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn int(v: i64) -> Self {
        Self::from_i64(v).expect("i64 fits in every ExactInt")
    }

    fn parse(s: &str) -> Option<Self> {
        Self::from_str_radix(s.trim(), 10).ok()
    }
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + From<i32>
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
