use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// The two base angles of an (α,β)-triangle: `alpha` at `p`, `beta` at `q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnglePair<T> {
    alpha: T,
    beta: T,
}

impl<T: Real> AnglePair<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        let ok = alpha.is_finite()
            && beta.is_finite()
            && alpha > T::zero()
            && beta > T::zero()
            && alpha + beta < T::PI();
        if !ok {
            return Err(Error::InvalidAngles(format!(
                "need 0 < alpha, 0 < beta, alpha + beta < pi (alpha = {alpha}, beta = {beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn from_degrees(alpha: T, beta: T) -> Result<Self> {
        Self::new(alpha.to_radians(), beta.to_radians())
    }

    #[inline]
    pub fn alpha(&self) -> T {
        self.alpha
    }

    #[inline]
    pub fn beta(&self) -> T {
        self.beta
    }

    /// Angle at the apex `r`.
    #[inline]
    pub fn apex(&self) -> T {
        T::PI() - self.alpha - self.beta
    }

    /// Apex offset of the model triangle with `p = 0` and `q = (1, 0)`.
    pub fn unit_apex(&self) -> super::Point2<T> {
        let len = self.beta.sin() / (self.alpha + self.beta).sin();
        super::Point2::unit(self.alpha) * len
    }

    /// Area of the model triangle with unit base.
    pub fn unit_area(&self) -> T {
        T::lit(0.5) * self.unit_apex().y
    }
}

/// Validates a single fixed angle `0 < alpha < π`.
pub fn check_alpha<T: Real>(alpha: T) -> Result<()> {
    if alpha.is_finite() && alpha > T::zero() && alpha < T::PI() {
        Ok(())
    } else {
        Err(Error::InvalidAngles(format!("need 0 < alpha < pi, got {alpha}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_pairs() {
        assert!(AnglePair::new(1.0f64, 2.2).is_err());
        assert!(AnglePair::new(0.0f64, 1.0).is_err());
        assert!(AnglePair::new(std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2).is_err());
        assert!(AnglePair::from_degrees(90.0f64, 45.0).is_ok());
    }

    #[test]
    fn unit_apex_right_isosceles() {
        let ab = AnglePair::from_degrees(90.0f64, 45.0).unwrap();
        let r = ab.unit_apex();
        assert!(r.x.abs() < 1e-15 && (r.y - 1.0).abs() < 1e-15);
        assert!((ab.unit_area() - 0.5).abs() < 1e-15);
    }
}
