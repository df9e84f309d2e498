//! Integer coefficient types.
//!
//! Every algebraic type in this crate is generic over the integer ring its
//! coefficients live in. Fixed-width integers are overflow-checked: an
//! overflowing addition or multiplication panics with `coefficient overflow`
//! rather than wrapping. [`num_bigint::BigInt`] never overflows.
//!
//! With the default suites (words of length <= 10, exponents in [-4, 4],
//! kappa <= 5) coefficients stay far below `i64::MAX`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed};

pub trait Coefficient:
    Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + Clone + Hash + Debug + Display + Send + Sync + 'static
{
    /// Exact sum; panics instead of wrapping.
    fn add_exact(&self, other: &Self) -> Self {
        self.checked_add(other).expect("coefficient overflow")
    }

    fn sub_exact(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("coefficient overflow")
    }

    fn mul_exact(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("coefficient overflow")
    }

    fn from_int(value: i64) -> Self;

    /// Parses an unsigned decimal literal.
    fn parse_decimal(digits: &str) -> Option<Self> {
        Self::from_str_radix(digits, 10).ok()
    }
}

impl<T> Coefficient for T
where
    T: Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + Clone
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + num_traits::FromPrimitive
        + 'static,
{
    fn from_int(value: i64) -> Self {
        <T as num_traits::FromPrimitive>::from_i64(value).expect("coefficient overflow")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn fixed_width_overflow_is_a_hard_error() {
        let _ = i64::MAX.add_exact(&1);
    }

    #[test]
    fn bigint_does_not_overflow() {
        let big = BigInt::from(i64::MAX);
        let sq = big.mul_exact(&big);
        assert!(sq > BigInt::from(i64::MAX));
    }

    #[test]
    fn parses_decimal() {
        assert_eq!(i64::parse_decimal("42"), Some(42));
        assert_eq!(i128::parse_decimal("x"), None);
        assert_eq!(BigInt::parse_decimal("123"), Some(BigInt::from(123)));
    }
}
