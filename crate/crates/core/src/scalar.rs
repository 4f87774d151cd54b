use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, Num, Signed};

/// Exact, totally ordered scalar underlying all geometric computation.
///
/// The bounds deliberately rule out floating point: `Ord` demands a total
/// order and `Num` demands exact ring semantics, so every side test in the
/// kernel is error-free. The crate instantiates everything with the
/// [`Rat`](crate::Rat) alias (arbitrary-precision rationals); `Ratio<i64>`
/// also qualifies for small experiments.
pub trait Scalar:
    Num + Signed + Ord + Clone + Hash + Debug + Display + FromPrimitive + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer not representable in scalar type")
    }
}

impl<T> Scalar for T where
    T: Num + Signed + Ord + Clone + Hash + Debug + Display + FromPrimitive + 'static
{
}
