use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// Commutative ring scalars usable as matrix entries.
///
/// Integers (`i64`, `BigInt`) and exact fractions satisfy this; the bound is
/// what matrix products, traces and block constructions need.
pub trait Scalar:
    Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits the scalar type")
    }
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive + Send + Sync
{
}

/// Fields with exact arithmetic and an exact zero test.
///
/// Echelon forms, kernels and subspace operations are only offered over these.
/// Floating point types deliberately do not implement it.
pub trait ExactField: Scalar {}

impl<I> ExactField for Ratio<I>
where
    I: Integer + Signed + Clone + Debug + Send + Sync,
    Ratio<I>: FromPrimitive,
{
}
