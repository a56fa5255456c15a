use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{convex_hull, polygon_metrics, Point2, Polygon};
use crate::scalar::Real;

/// Convex sub-polygon on vertices of `P` preserving directional widths.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EpsKernel<T> {
    pub kernel: Polygon<T>,
    pub epsilon: T,
    pub source_vertex_count: usize,
}

pub(crate) fn check_eps<T: Real>(eps: T) -> Result<()> {
    if !(eps > T::zero() && eps < T::one()) {
        return Err(Error::InvalidEpsilon(eps.as_f64()));
    }
    Ok(())
}

/// Builds an ε-kernel with at most `⌊10/√ε⌋` vertices.
///
/// `P` is mapped affinely so its diameter-aligned bounding box becomes the
/// unit square, which makes it fat. Then `k = ⌊10/√ε⌋` points evenly spaced
/// on a circle of radius 2 around the square each select their nearest vertex,
/// and the kernel is the hull of the selection.
pub fn eps_kernel<T: Real>(poly: &Polygon<T>, eps: T) -> Result<EpsKernel<T>> {
    poly.require_convex()?;
    check_eps(eps)?;
    let n = poly.len();
    let k = (T::lit(10.0) / eps.sqrt()).floor().to_usize().unwrap_or(usize::MAX).max(3);
    let source_vertex_count = n;
    if n == 3 {
        return Ok(EpsKernel { kernel: poly.clone(), epsilon: eps, source_vertex_count });
    }
    let m = polygon_metrics(poly)?;
    let (a, b) = m.diameter_chord;
    let ux = (b - a).normalized();
    let uy = ux.perp();
    let along: Vec<T> = poly.vertices().iter().map(|&v| (v - a).dot(ux)).collect();
    let across: Vec<T> = poly.vertices().iter().map(|&v| (v - a).dot(uy)).collect();
    let range = |xs: &[T]| {
        let lo = xs.iter().copied().fold(T::infinity(), T::min);
        let hi = xs.iter().copied().fold(T::neg_infinity(), T::max);
        (lo, hi - lo)
    };
    let (x0, sx) = range(&along);
    let (y0, sy) = range(&across);
    let norm: Vec<Point2<T>> = along.iter().zip(&across).map(|(&x, &y)| Point2::new((x - x0) / sx, (y - y0) / sy)).collect();
    let center = Point2::new(T::lit(0.5), T::lit(0.5));
    let radius = T::lit(2.0);
    let mut chosen = vec![false; n];
    for j in 0..k {
        let s = center + Point2::unit(T::TAU() * T::lit(j as f64) / T::lit(k as f64)) * radius;
        let near = (0..n).min_by(|&i, &l| (norm[i] - s).norm2().partial_cmp(&(norm[l] - s).norm2()).unwrap()).unwrap();
        chosen[near] = true;
    }
    let picked: Vec<Point2<T>> = (0..n).filter(|&i| chosen[i]).map(|i| poly.vertex(i)).collect();
    let hull = convex_hull(&picked);
    let kernel = if hull.len() < 3 { poly.clone() } else { Polygon::from_ccw_unchecked(hull) };
    Ok(EpsKernel { kernel, epsilon: eps, source_vertex_count })
}
