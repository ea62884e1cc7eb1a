//! Ring and field abstractions shared by every coefficient type in the crate.
//!
//! All rings here have characteristic two, so subtraction is addition and
//! the only formal derivative that matters is "keep odd exponents".

use std::fmt::Debug;
use std::ops::{Add, Mul};

/// A commutative ring of characteristic two.
///
/// Elements carry their own context (field degree, variable list), so the
/// additive and multiplicative identities are produced from an existing
/// element rather than from a global constant.
pub trait Ring:
    Clone + PartialEq + Debug + Send + Sync + Add<Output = Self> + Mul<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// Multiplicative inverse when `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    /// The unique square root, if `self` is a square.
    fn sqrt(&self) -> Option<Self>;

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.square();
            n >>= 1;
        }
        acc
    }

    /// `0` or `1` in the ring of `self`.
    fn from_bit(&self, bit: bool) -> Self {
        if bit {
            self.one_like()
        } else {
            self.zero_like()
        }
    }
}

/// A ring in which every nonzero element is a unit.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        self.unit_inverse()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }
}
