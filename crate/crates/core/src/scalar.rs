//! Coefficient types for group rings and character sums.
//!
//! Everything exact in this crate is generic over [`Coeff`]: any signed
//! integer type with checked arithmetic. Machine integers (`i32`, `i64`,
//! `i128`) and [`num_bigint::BigInt`] all qualify. Float-valued character
//! tables are generic over [`num_traits::Float`] instead.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub trait Coeff:
    Clone
    + Debug
    + Display
    + Ord
    + Hash
    + Send
    + Sync
    + Signed
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + 'static
{
    fn from_usize_checked(n: usize) -> Result<Self> {
        Self::from_usize(n).ok_or(Error::Overflow("usize conversion"))
    }

    fn add_checked(&self, rhs: &Self, what: &'static str) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow(what))
    }

    fn mul_checked(&self, rhs: &Self, what: &'static str) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow(what))
    }

    fn pow_checked(&self, exp: u32, what: &'static str) -> Result<Self> {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul_checked(self, what)?;
        }
        Ok(acc)
    }
}

impl<T> Coeff for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Hash
        + Send
        + Sync
        + Signed
        + Integer
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + 'static
{
}
