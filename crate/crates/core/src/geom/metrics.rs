use serde::Serialize;

use super::{Point2, Polygon};
use crate::error::Result;
use crate::scalar::Real;

/// Diameter and width of a convex polygon with witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolygonMetrics<T> {
    pub diameter: T,
    pub width: T,
    pub diameter_chord: (Point2<T>, Point2<T>),
    /// Direction of the two parallel supporting lines realizing the width.
    pub width_direction: Point2<T>,
}

/// Rotating calipers over the antipodal vertex/edge pairs of a convex polygon.
pub fn polygon_metrics<T: Real>(poly: &Polygon<T>) -> Result<PolygonMetrics<T>> {
    poly.require_convex()?;
    let n = poly.len();
    let v = |i: usize| poly.vertex(i);
    let mut j = 1usize;
    let mut best_d2 = T::zero();
    let mut chord = (v(0), v(1));
    let mut width = T::infinity();
    let mut wdir = Point2::new(T::one(), T::zero());
    for i in 0..n {
        let (a, b) = (v(i), v(i + 1));
        let e = b - a;
        while e.cross(v(j + 1) - a) > e.cross(v(j) - a) {
            j += 1;
        }
        let h = e.cross(v(j) - a) / e.norm();
        if h < width {
            width = h;
            wdir = e.normalized();
        }
        for (x, y) in [(a, v(j)), (b, v(j))] {
            let d2 = (x - y).norm2();
            if d2 > best_d2 {
                best_d2 = d2;
                chord = (x, y);
            }
        }
    }
    Ok(PolygonMetrics { diameter: best_d2.sqrt(), width, diameter_chord: chord, width_direction: wdir })
}

/// Diameter of a strictly convex counterclockwise ring by rotating calipers.
pub(crate) fn ring_diameter<T: Real>(ring: &[Point2<T>]) -> T {
    let n = ring.len();
    if n < 3 {
        return if n == 2 { ring[0].dist(ring[1]) } else { T::zero() };
    }
    let v = |i: usize| ring[i % n];
    let mut j = 1usize;
    let mut best = T::zero();
    for i in 0..n {
        let (a, b) = (v(i), v(i + 1));
        let e = b - a;
        let mut steps = 0;
        while e.cross(v(j + 1) - a) > e.cross(v(j) - a) && steps < n {
            j += 1;
            steps += 1;
        }
        best = best.max((a - v(j)).norm2()).max((b - v(j)).norm2());
    }
    best.sqrt()
}

/// Extent of `poly` along the unit direction `u` (directional width).
pub fn directional_width<T: Real>(points: &[Point2<T>], u: Point2<T>) -> T {
    let (mut lo, mut hi) = (T::infinity(), T::neg_infinity());
    for p in points {
        let t = p.dot(u);
        lo = lo.min(t);
        hi = hi.max(t);
    }
    hi - lo
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_against_brute(poly: &Polygon<f64>) {
        let m = polygon_metrics(poly).unwrap();
        let vs = poly.vertices();
        let mut d = 0.0f64;
        for a in vs {
            for b in vs {
                d = d.max(a.dist(*b));
            }
        }
        let w = poly
            .edges()
            .map(|(a, b)| {
                let u = (b - a).normalized();
                directional_width(vs, u.perp())
            })
            .fold(f64::INFINITY, f64::min);
        assert!((m.diameter - d).abs() < 1e-12, "{} vs {}", m.diameter, d);
        assert!((m.width - w).abs() < 1e-12, "{} vs {}", m.width, w);
        assert!((m.diameter_chord.0.dist(m.diameter_chord.1) - d).abs() < 1e-12);
        assert!((directional_width(vs, m.width_direction.perp()) - w).abs() < 1e-12);
        assert!(m.width <= m.diameter);
    }

    #[test]
    fn metrics_examples() {
        let sq = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        let m = polygon_metrics(&sq).unwrap();
        assert!((m.diameter - 2f64.sqrt()).abs() < 1e-15);
        assert!((m.width - 1.0).abs() < 1e-15);

        let thin = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 0.01),
            Point2::new(0.0, 0.01),
        ])
        .unwrap();
        let m = polygon_metrics(&thin).unwrap();
        assert!((m.diameter - 4.0001f64.sqrt()).abs() < 1e-14);
        assert!((m.width - 0.01).abs() < 1e-14);

        let hex = Polygon::new((0..6).map(|k| Point2::unit(k as f64 * std::f64::consts::PI / 3.0)).collect()).unwrap();
        let m = polygon_metrics(&hex).unwrap();
        assert!((m.diameter - 2.0).abs() < 1e-14);
        assert!((m.width - 3f64.sqrt()).abs() < 1e-14);
        check_against_brute(&hex);
    }

    #[test]
    fn metrics_match_brute_force() {
        for seed in 0..100 {
            let p = crate::oracle::gen_random_convex::<f64>(3 + (seed as usize % 20), seed);
            check_against_brute(&p);
        }
    }

    #[test]
    fn rejects_nonconvex() {
        let l = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 2.0),
            Point2::new(0.0, 2.0),
        ])
        .unwrap();
        assert!(polygon_metrics(&l).is_err());
    }
}
