//! Integer scalar abstraction for the exact linear algebra over Z.
//!
//! Matrices and Smith normal form are generic over [`IntScalar`]. Fixed-width
//! types use checked arithmetic and report [`Error::Overflow`] instead of
//! wrapping; `BigInt` never overflows.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub trait IntScalar:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn to_bigint(&self) -> BigInt;
    fn from_bigint(value: &BigInt) -> Option<Self>;

    fn add_checked(&self, other: &Self) -> Result<Self> {
        self.checked_add(other).ok_or(Error::Overflow)
    }
    fn sub_checked(&self, other: &Self) -> Result<Self> {
        self.checked_sub(other).ok_or(Error::Overflow)
    }
    fn mul_checked(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other).ok_or(Error::Overflow)
    }
    fn neg_checked(&self) -> Result<Self> {
        Self::zero().sub_checked(self)
    }
}

macro_rules! fixed_width {
    ($($t:ty),*) => {$(
        impl IntScalar for $t {
            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }
            fn from_bigint(value: &BigInt) -> Option<Self> {
                value.try_into().ok()
            }
        }
    )*};
}

fixed_width!(i32, i64, i128);

impl IntScalar for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
}
