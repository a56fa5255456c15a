//! The similarity maps about a pinned corner and the unit-determinant shear
//! that turns one fixed angle into a right angle.

use super::{AnglePair, Point2};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Scale and counterclockwise rotation of the similarity that carries corner
/// `t_{i+1}` to `t_{i+2}` about the pinned corner `t_i` (indices mod 3).
pub fn phi_params<T: Real>(ab: AnglePair<T>, i: usize) -> (T, T) {
    let (a, b) = (ab.alpha(), ab.beta());
    match i % 3 {
        0 => (b.sin() / (a + b).sin(), a),
        1 => ((a + b).sin() / a.sin(), b),
        _ => (a.sin() / b.sin(), T::PI() - a - b),
    }
}

/// Applies `Φ_i` about `v` to `x`.
pub fn phi_transform<T: Real>(v: Point2<T>, ab: AnglePair<T>, i: usize, x: Point2<T>) -> Point2<T> {
    let (s, theta) = phi_params(ab, i);
    v + (x - v).rotate(theta) * s
}

/// Inverse of [`phi_transform`].
pub fn phi_inverse<T: Real>(v: Point2<T>, ab: AnglePair<T>, i: usize, x: Point2<T>) -> Point2<T> {
    let (s, theta) = phi_params(ab, i);
    v + (x - v).rotate(-theta) * (T::one() / s)
}

/// The shear `[[1, cot α], [0, 1]]⁻¹` mapping α-triangles with horizontal
/// base onto right triangles. Determinant 1, so areas are preserved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shear<T> {
    cot: T,
}

impl<T: Real> Shear<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if !(alpha > T::zero() && alpha < T::PI()) {
            return Err(Error::InvalidAngles(format!("shear needs 0 < alpha < pi, got {alpha}")));
        }
        // cot(π/2) is taken as exactly zero.
        let cot = if (alpha - T::FRAC_PI_2()).abs() <= T::epsilon() {
            T::zero()
        } else {
            T::one() / alpha.tan()
        };
        Ok(Self { cot })
    }

    #[inline]
    pub fn apply(&self, p: Point2<T>) -> Point2<T> {
        Point2::new(p.x - self.cot * p.y, p.y)
    }

    #[inline]
    pub fn invert(&self, p: Point2<T>) -> Point2<T> {
        Point2::new(p.x + self.cot * p.y, p.y)
    }
}

pub fn shear_alpha<T: Real>(alpha: T, x: Point2<T>, inverse: bool) -> Result<Point2<T>> {
    let s = Shear::new(alpha)?;
    Ok(if inverse { s.invert(x) } else { s.apply(x) })
}
