use serde::{Deserialize, Serialize};

use super::{AnglePair, Point2, Polygon};
use crate::error::{Error, Result};
use crate::scalar::{wrap_two_pi, Real};

/// Triangle `pqr` with base `pq`; counterclockwise when non-degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Triangle<T> {
    pub p: Point2<T>,
    pub q: Point2<T>,
    pub r: Point2<T>,
}

impl<T: Real> Triangle<T> {
    pub fn new(p: Point2<T>, q: Point2<T>, r: Point2<T>) -> Self {
        Self { p, q, r }
    }

    pub fn signed_area(&self) -> T {
        (self.q - self.p).cross(self.r - self.p) * T::lit(0.5)
    }

    pub fn area(&self) -> T {
        self.signed_area().abs()
    }

    pub fn corners(&self) -> [Point2<T>; 3] {
        [self.p, self.q, self.r]
    }

    /// Interior angle `∠rpq`.
    pub fn angle_p(&self) -> T {
        angle_between(self.q - self.p, self.r - self.p)
    }

    /// Interior angle `∠pqr`.
    pub fn angle_q(&self) -> T {
        angle_between(self.r - self.q, self.p - self.q)
    }

    /// Inclination of the base `pq` in `[0, 2π)`.
    pub fn orientation(&self) -> T {
        wrap_two_pi((self.q - self.p).angle())
    }

    pub fn map(&self, f: impl Fn(Point2<T>) -> Point2<T>) -> Self {
        Self::new(f(self.p), f(self.q), f(self.r))
    }

    pub fn rotated(&self, theta: T) -> Self {
        self.map(|x| x.rotate(theta))
    }

    pub fn longest_side(&self) -> T {
        self.p.dist(self.q).max(self.q.dist(self.r)).max(self.r.dist(self.p))
    }

    pub fn cast<U: Real>(&self) -> Triangle<U> {
        Triangle::new(self.p.cast(), self.q.cast(), self.r.cast())
    }
}

fn angle_between<T: Real>(u: Point2<T>, v: Point2<T>) -> T {
    u.cross(v).abs().atan2(u.dot(v))
}

/// Builds the (α,β)-triangle on base `pq`: the apex lies to the left of `pq`.
pub fn triangle_from_base<T: Real>(p: Point2<T>, q: Point2<T>, ab: AnglePair<T>) -> Result<Triangle<T>> {
    if p == q {
        return Err(Error::DegenerateBase);
    }
    let base = q - p;
    let len = base.norm();
    let side = len * ab.beta().sin() / (ab.alpha() + ab.beta()).sin();
    let r = p + (base * (T::one() / len)).rotate(ab.alpha()) * side;
    Ok(Triangle::new(p, q, r))
}

/// Closed containment of a triangle in a polygon.
///
/// Corners must lie in `poly` (within `tol`). For non-convex polygons no
/// boundary edge may reach deeper than `tol` into the triangle interior.
pub fn triangle_in_polygon<T: Real>(poly: &Polygon<T>, tri: &Triangle<T>, tol: T) -> bool {
    if !tri.corners().iter().all(|&c| poly.contains(c, tol)) {
        return false;
    }
    if poly.is_convex() {
        return true;
    }
    let mut c = tri.corners();
    if tri.signed_area() < T::zero() {
        c.swap(1, 2);
    }
    let sides: [(Point2<T>, Point2<T>); 3] = [(c[0], c[1]), (c[1], c[2]), (c[2], c[0])];
    let lens = sides.map(|(a, b)| a.dist(b));
    if lens.iter().any(|&l| l <= T::zero()) {
        return true;
    }
    for (a, b) in poly.edges() {
        let d = b - a;
        let (mut t0, mut t1) = (T::zero(), T::one());
        let mut empty = false;
        for (k, &(s0, s1)) in sides.iter().enumerate() {
            let e = s1 - s0;
            // Signed distance to the side line is (num + t * den) / len.
            let num = e.cross(a - s0);
            let den = e.cross(d);
            if den.abs() <= T::epsilon() * lens[k] * d.norm() {
                if num < T::zero() {
                    empty = true;
                    break;
                }
                continue;
            }
            let t = -num / den;
            if den > T::zero() {
                t0 = t0.max(t);
            } else {
                t1 = t1.min(t);
            }
            if t0 >= t1 {
                empty = true;
                break;
            }
        }
        if empty {
            continue;
        }
        let m = a + d * ((t0 + t1) * T::lit(0.5));
        let depth = sides
            .iter()
            .zip(lens.iter())
            .map(|(&(s0, s1), &l)| (s1 - s0).cross(m - s0) / l)
            .fold(T::infinity(), T::min);
        if depth > tol {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    fn square() -> Polygon<f64> {
        Polygon::new(vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)]).unwrap()
    }

    fn lshape() -> Polygon<f64> {
        Polygon::new(vec![pt(0.0, 0.0), pt(2.0, 0.0), pt(2.0, 1.0), pt(1.0, 1.0), pt(1.0, 2.0), pt(0.0, 2.0)])
            .unwrap()
    }

    #[test]
    fn from_base_examples() {
        let d = |a: f64, b: f64| AnglePair::from_degrees(a, b).unwrap();
        let t = triangle_from_base(pt(0.0, 0.0), pt(1.0, 0.0), d(90.0, 45.0)).unwrap();
        assert!(t.r.dist(pt(0.0, 1.0)) < 1e-15);
        let t = triangle_from_base(pt(0.0, 0.0), pt(1.0, 0.0), d(60.0, 60.0)).unwrap();
        assert!(t.r.dist(pt(0.5, 3f64.sqrt() / 2.0)) < 1e-15);
        let t = triangle_from_base(pt(0.0, 0.0), pt(1.0, 0.0), d(45.0, 45.0)).unwrap();
        assert!(t.r.dist(pt(0.5, 0.5)) < 1e-15);
        assert!((t.angle_p() - 45f64.to_radians()).abs() < 1e-12);
        assert!((t.angle_q() - 45f64.to_radians()).abs() < 1e-12);
        assert_eq!(triangle_from_base(pt(1.0, 1.0), pt(1.0, 1.0), d(45.0, 45.0)), Err(Error::DegenerateBase));
    }

    #[test]
    fn containment_examples() {
        let sq = square();
        let tol = sq.tolerance();
        assert!(triangle_in_polygon(&sq, &Triangle::new(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)), tol));
        assert!(!triangle_in_polygon(&sq, &Triangle::new(pt(0.0, 0.0), pt(2.0, 0.0), pt(0.0, 1.0)), tol));
    }

    #[test]
    fn containment_in_lshape() {
        let l = lshape();
        let tol = l.tolerance();
        // The hypotenuse x + y = 2 only touches the reflex vertex (1, 1).
        assert!(triangle_in_polygon(&l, &Triangle::new(pt(0.0, 0.0), pt(2.0, 0.0), pt(0.0, 2.0)), tol));
        // Side from (2,0) to (0.5,2) passes through the notch near (1.2, 1.07).
        assert!(!triangle_in_polygon(&l, &Triangle::new(pt(0.0, 0.0), pt(2.0, 0.0), pt(0.5, 2.0)), tol));
        // All corners inside, but the reflex corner pokes into the interior.
        assert!(!triangle_in_polygon(&l, &Triangle::new(pt(0.2, 0.2), pt(1.9, 0.9), pt(0.9, 1.9)), tol));
    }

    /// Independent check: sample the triangle densely and test each point.
    #[test]
    fn containment_matches_sampling() {
        use rand::{Rng, SeedableRng};
        let l = lshape();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let c: Vec<Point2<f64>> = (0..3).map(|_| pt(rng.gen::<f64>() * 2.0, rng.gen::<f64>() * 2.0)).collect();
            let t = Triangle::new(c[0], c[1], c[2]);
            let fast = triangle_in_polygon(&l, &t, 0.0);
            let mut sampled = true;
            let k = 60;
            'outer: for i in 0..=k {
                for j in 0..=(k - i) {
                    let (u, v) = (i as f64 / k as f64, j as f64 / k as f64);
                    let x = t.p + (t.q - t.p) * u + (t.r - t.p) * v;
                    if !l.contains(x, 1e-12) {
                        sampled = false;
                        break 'outer;
                    }
                }
            }
            // Sampling can miss thin violations, never invent them.
            if !sampled {
                assert!(!fast, "{t:?}");
            }
            if fast {
                assert!(sampled, "{t:?}");
            }
        }
    }
}
