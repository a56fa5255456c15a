//! Scalar abstraction shared by every module.
//!
//! All geometry is written against [`Real`], so the same code paths run on
//! `f32` and `f64`. Topological predicates are evaluated in `f64` with an
//! adaptive exact fallback (conversion from `f32` is lossless).

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, NumCast};

pub trait Real: Float + FloatConst + Debug + Display + Default + Send + Sync + 'static {
    /// Converts an `f64` literal into this scalar type.
    #[inline]
    fn lit(x: f64) -> Self {
        <Self as NumCast>::from(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Relative tolerance used for area comparisons.
    fn area_rel_tol() -> Self {
        Self::lit(1e-9).max(Self::epsilon() * Self::lit(64.0))
    }

    /// Absolute angle tolerance in radians.
    fn angle_tol() -> Self {
        Self::lit(1e-9).max(Self::epsilon() * Self::lit(64.0))
    }

    /// Containment tolerance as a fraction of the polygon diameter.
    fn containment_rel_tol() -> Self {
        Self::lit(1e-10).max(Self::epsilon() * Self::lit(64.0))
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Wraps an angle into `[0, 2π)`.
pub fn wrap_two_pi<T: Real>(theta: T) -> T {
    let tau = T::TAU();
    let mut t = theta % tau;
    if t < T::zero() {
        t = t + tau;
    }
    if t >= tau {
        t = t - tau;
    }
    t
}

/// Wraps an angle into `(-π, π]`.
pub fn wrap_pi<T: Real>(theta: T) -> T {
    let t = wrap_two_pi(theta);
    if t > T::PI() {
        t - T::TAU()
    } else {
        t
    }
}
