//! Scalar abstraction: the whole crate is generic over the floating-point
//! type through `num-traits`, so every computation runs in `f32` or `f64`.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar type for all numerics in this crate.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Shorthand for a constant given as `f64`; panics only for
    /// non-representable values, which the crate never passes.
    fn cst(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }
}

impl<T> Scalar for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + NumAssign
        + Sum
        + Debug
        + Display
        + LowerExp
        + Default
        + Send
        + Sync
        + 'static
{
}

/// Complex number over the crate scalar.
pub type C<T> = Complex<T>;
