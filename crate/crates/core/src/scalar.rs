use std::fmt;
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumCast};

/// Floating-point scalar used throughout the crate.
///
/// The bound collects what the numerical routines actually need: IEEE
/// arithmetic with `sqrt`/`exp`/`ln` ([`Float`]), conversion from literals and
/// loop counters ([`FromPrimitive`]), summability, and the formatting traits
/// used by error messages and table output. It is implemented by `f32` and
/// `f64`.
pub trait Real:
    Float + FromPrimitive + Sum + fmt::Debug + fmt::Display + fmt::LowerExp + 'static
{
    /// Converts any primitive number to `Self`.
    ///
    /// # Panics
    ///
    /// Panics if the value is not representable (e.g. a huge integer cast to
    /// `f32` overflows to infinity only for values beyond 2^128, which the
    /// crate never produces).
    fn of<V: NumCast>(value: V) -> Self {
        NumCast::from(value).expect("value representable in scalar type")
    }
}

impl<T> Real for T where
    T: Float + FromPrimitive + Sum + fmt::Debug + fmt::Display + fmt::LowerExp + 'static
{
}
