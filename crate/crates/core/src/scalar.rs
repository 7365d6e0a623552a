//! Scalar abstractions for the exact linear algebra in this crate.
//!
//! The simplex, branch-and-bound and triangular solvers are written against
//! these traits instead of a concrete number type. Every implementor is exact:
//! floating point types are deliberately absent, since a rounding error in a
//! feasibility certificate turns a representation into a non-representation.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact ordered field: what a pivoting LP solver needs.
pub trait ExactField: Clone + Debug + Ord + Signed + Send + Sync {
    fn from_int(v: i64) -> Self;

    /// Largest integer not exceeding `self`.
    fn floor_value(&self) -> Self;

    fn is_integral(&self) -> bool;

    /// The value as an `i64`, when it is an integer in range.
    fn to_exact_i64(&self) -> Option<i64>;

    /// Distance from `self` to the nearest integer, in `[0, 1/2]`.
    fn fractionality(&self) -> Self {
        let frac = self.clone() - self.floor_value();
        let other = Self::one() - frac.clone();
        if frac < other {
            frac
        } else {
            other
        }
    }
}

impl<T> ExactField for Ratio<T>
where
    T: Clone + Debug + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for scalar type"))
    }

    fn floor_value(&self) -> Self {
        self.floor()
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_exact_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}

/// Exact signed integers usable in the unitriangular back-substitution.
pub trait ExactInteger: Clone + Debug + Ord + Signed + Send + Sync {
    fn from_u64(v: u64) -> Self;
}

impl ExactInteger for i64 {
    fn from_u64(v: u64) -> Self {
        i64::try_from(v).expect("multiplicity exceeds i64")
    }
}

impl ExactInteger for i128 {
    fn from_u64(v: u64) -> Self {
        i128::from(v)
    }
}

impl ExactInteger for BigInt {
    fn from_u64(v: u64) -> Self {
        BigInt::from(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn floor_and_fractionality() {
        let x = Rational64::new(-7, 2);
        assert_eq!(x.floor_value(), Rational64::from_int(-4));
        assert_eq!(x.fractionality(), Rational64::new(1, 2));
        let y = BigRational::new(BigInt::from(10), BigInt::from(3));
        assert_eq!(y.fractionality(), BigRational::new(1.into(), 3.into()));
        assert!(!y.is_integral());
        assert_eq!(BigRational::from_int(5).to_exact_i64(), Some(5));
        assert_eq!(y.to_exact_i64(), None);
    }
}
