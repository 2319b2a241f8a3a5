//! Integer scalars for fraction-free elimination.
//!
//! Elimination only needs ring operations plus exact division, so it is
//! written once against [`ExactScalar`]. Machine integers report overflow
//! through `None`, which lets callers try a fast `i128` pass before falling
//! back to arbitrary precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use std::fmt::Debug;

pub trait ExactScalar: Clone + Debug + PartialEq + Signed {
    /// `(a * b - c * e) / div`, where the division is known to be exact.
    /// Returns `None` when an intermediate value does not fit.
    fn cross_div(a: &Self, b: &Self, c: &Self, e: &Self, div: &Self) -> Option<Self>;

    /// Narrowing conversion from an arbitrary-precision integer.
    fn from_bigint(value: &BigInt) -> Option<Self>;

    fn to_bigint(&self) -> BigInt;
}

macro_rules! impl_machine_scalar {
    ($($t:ty => $conv:ident),*) => {
        $(
            impl ExactScalar for $t {
                #[inline]
                fn cross_div(a: &Self, b: &Self, c: &Self, e: &Self, div: &Self) -> Option<Self> {
                    let num = a.checked_mul(*b)?.checked_sub(c.checked_mul(*e)?)?;
                    debug_assert_eq!(num % div, 0);
                    num.checked_div(*div)
                }

                fn from_bigint(value: &BigInt) -> Option<Self> {
                    value.$conv()
                }

                fn to_bigint(&self) -> BigInt {
                    BigInt::from(*self)
                }
            }
        )*
    };
}

impl_machine_scalar!(i64 => to_i64, i128 => to_i128);

impl ExactScalar for BigInt {
    #[inline]
    fn cross_div(a: &Self, b: &Self, c: &Self, e: &Self, div: &Self) -> Option<Self> {
        let num = a * b - c * e;
        debug_assert!(num.is_multiple_of(div));
        Some(num / div)
    }

    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}
