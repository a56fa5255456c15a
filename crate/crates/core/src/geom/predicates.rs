//! Robust orientation and the segment/point predicates built on it.

use robust::Coord;

use super::Point2;
use crate::scalar::Real;

#[inline]
fn coord<T: Real>(p: Point2<T>) -> Coord<f64> {
    Coord { x: p.x.as_f64(), y: p.y.as_f64() }
}

/// Sign of twice the signed area of `(a, b, c)`: `+1` counterclockwise, `-1`
/// clockwise, `0` collinear. Exact for every representable input.
pub fn orientation<T: Real>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> i8 {
    let det = robust::orient2d(coord(a), coord(b), coord(c));
    if det > 0.0 {
        1
    } else if det < 0.0 {
        -1
    } else {
        0
    }
}

/// Twice the signed area of `(a, b, c)` in floating point.
#[inline]
pub fn cross3<T: Real>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> T {
    (b - a).cross(c - a)
}

/// `p` lies on the closed segment `ab` (exact).
pub fn on_segment<T: Real>(p: Point2<T>, a: Point2<T>, b: Point2<T>) -> bool {
    orientation(a, b, p) == 0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Closed segments `ab` and `cd` share at least one point (exact).
pub fn segments_intersect<T: Real>(a: Point2<T>, b: Point2<T>, c: Point2<T>, d: Point2<T>) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(c, a, b))
        || (o2 == 0 && on_segment(d, a, b))
        || (o3 == 0 && on_segment(a, c, d))
        || (o4 == 0 && on_segment(b, c, d))
}

/// Point of the closed segment `ab` nearest to `p`.
pub fn segment_closest<T: Real>(p: Point2<T>, a: Point2<T>, b: Point2<T>) -> Point2<T> {
    let ab = b - a;
    let len2 = ab.norm2();
    if len2 <= T::zero() {
        return a;
    }
    let t = ((p - a).dot(ab) / len2).max(T::zero()).min(T::one());
    a + ab * t
}

/// Euclidean distance from `p` to the closed segment `ab`.
pub fn segment_distance<T: Real>(p: Point2<T>, a: Point2<T>, b: Point2<T>) -> T {
    p.dist(segment_closest(p, a, b))
}

/// Point location in a closed simple polygon given as a vertex ring.
/// Returns `Some(true)` inside, `Some(false)` outside, `None` on the boundary.
pub fn locate_in_ring<T: Real>(ring: &[Point2<T>], p: Point2<T>) -> Option<bool> {
    let n = ring.len();
    let mut inside = false;
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        if on_segment(p, a, b) {
            return None;
        }
        // Half-open crossing rule on the upward ray.
        let a_up = a.y > p.y;
        let b_up = b.y > p.y;
        if a_up != b_up {
            let o = orientation(a, b, p);
            if (b_up && o > 0) || (!b_up && o < 0) {
                inside = !inside;
            }
        }
    }
    Some(inside)
}
