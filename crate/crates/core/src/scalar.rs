//! Scalar abstraction for field values.
//!
//! Lattice coordinates are always exact `i64`; only field values and
//! derived quantities (Hamiltonian estimates, residuals, energies) are
//! floating point, parameterized by [`Real`].

use std::fmt::{Debug, Display, LowerExp};
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

/// Floating-point scalar for field values: `f32` or `f64`.
///
/// `f64` is the precision the validation suite is calibrated for; `f32`
/// instantiations compile and run but cannot reach the tight tolerances.
pub trait Real:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lossless-enough conversion from `f64` constants.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant representable")
    }

    /// Conversion from exact integer lattice data.
    fn of_i64(x: i64) -> Self {
        Self::from_i64(x).expect("i64 representable")
    }

    /// Conversion from counts and indices.
    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).expect("usize representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("finite scalar")
    }
}

impl Real for f32 {}
impl Real for f64 {}
