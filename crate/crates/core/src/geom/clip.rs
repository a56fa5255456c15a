//! Intersection of convex polygons via angle-sorted half-plane intersection.

use std::collections::VecDeque;

use super::{Point2, Polygon};
use crate::scalar::Real;

/// Closed half-plane to the left of the directed line through `p` along `d`.
#[derive(Debug, Clone, Copy)]
pub struct HalfPlane<T> {
    pub p: Point2<T>,
    pub d: Point2<T>,
    angle: T,
}

impl<T: Real> HalfPlane<T> {
    pub fn new(p: Point2<T>, d: Point2<T>) -> Self {
        Self { p, d, angle: d.angle() }
    }

    #[inline]
    fn side(&self, x: Point2<T>) -> T {
        self.d.cross(x - self.p) / self.d.norm()
    }

    fn meet(&self, o: &Self) -> Option<Point2<T>> {
        let den = o.d.cross(self.d);
        if den.abs() <= T::epsilon() * self.d.norm() * o.d.norm() {
            return None;
        }
        let t = o.d.cross(o.p - self.p) / den;
        Some(self.p + self.d * t)
    }
}

/// Vertices (counterclockwise) of a bounded half-plane intersection, or an
/// empty vector when the intersection has no interior. `eps` is an absolute
/// length tolerance.
pub fn halfplane_intersection<T: Real>(mut planes: Vec<HalfPlane<T>>, eps: T) -> Vec<Point2<T>> {
    planes.sort_by(|a, b| a.angle.partial_cmp(&b.angle).unwrap_or(std::cmp::Ordering::Equal));
    let ang_eps = T::lit(1e-13);
    let mut uniq: Vec<HalfPlane<T>> = Vec::with_capacity(planes.len());
    for h in planes {
        match uniq.last_mut() {
            Some(last) if (h.angle - last.angle).abs() <= ang_eps => {
                if last.side(h.p) > T::zero() {
                    *last = h;
                }
            }
            _ => uniq.push(h),
        }
    }
    // Parallel first/last after wrap-around.
    if uniq.len() > 1 {
        let (f, l) = (uniq[0], uniq[uniq.len() - 1]);
        if (f.angle + T::TAU() - l.angle).abs() <= ang_eps {
            if f.side(l.p) > T::zero() {
                uniq[0] = l;
            }
            uniq.pop();
        }
    }
    let outside = |h: &HalfPlane<T>, x: Point2<T>| h.side(x) < -eps;
    let mut dq: VecDeque<HalfPlane<T>> = VecDeque::new();
    for h in uniq {
        while dq.len() >= 2 {
            match dq[dq.len() - 2].meet(&dq[dq.len() - 1]) {
                Some(x) if outside(&h, x) => {
                    dq.pop_back();
                }
                Some(_) => break,
                None => return Vec::new(),
            }
        }
        while dq.len() >= 2 {
            match dq[0].meet(&dq[1]) {
                Some(x) if outside(&h, x) => {
                    dq.pop_front();
                }
                Some(_) => break,
                None => return Vec::new(),
            }
        }
        if let Some(back) = dq.back() {
            // Antiparallel neighbours: either disjoint or unbounded in between.
            let cr = back.d.cross(h.d);
            if cr <= T::zero() && back.d.dot(h.d) < T::zero() {
                let gap = back.side(h.p);
                if gap < -eps || h.side(back.p) < -eps {
                    return Vec::new();
                }
            }
        }
        dq.push_back(h);
    }
    loop {
        let mut changed = false;
        while dq.len() >= 3 {
            let x = dq[dq.len() - 2].meet(&dq[dq.len() - 1]);
            match x {
                Some(x) if outside(&dq[0], x) => {
                    dq.pop_back();
                    changed = true;
                }
                Some(_) => break,
                None => return Vec::new(),
            }
        }
        while dq.len() >= 3 {
            let x = dq[0].meet(&dq[1]);
            match x {
                Some(x) if outside(&dq[dq.len() - 1], x) => {
                    dq.pop_front();
                    changed = true;
                }
                Some(_) => break,
                None => return Vec::new(),
            }
        }
        if !changed {
            break;
        }
    }
    if dq.len() < 3 {
        return Vec::new();
    }
    let m = dq.len();
    let mut pts = Vec::with_capacity(m);
    for i in 0..m {
        match dq[i].meet(&dq[(i + 1) % m]) {
            Some(x) => pts.push(x),
            None => return Vec::new(),
        }
    }
    clean_ring(pts, eps)
}

/// Drops near-duplicate and collinear vertices of a convex ring.
pub fn clean_ring<T: Real>(mut pts: Vec<Point2<T>>, eps: T) -> Vec<Point2<T>> {
    loop {
        let n = pts.len();
        if n < 3 {
            return Vec::new();
        }
        let mut removed = false;
        for i in 0..n {
            let a = pts[(i + n - 1) % n];
            let b = pts[i];
            let c = pts[(i + 1) % n];
            let ac = c - a;
            let len = ac.norm();
            let dup = a.dist(b) <= eps;
            let flat = len > T::zero() && ((b - a).cross(ac) / len) <= eps;
            if dup || flat {
                pts.remove(i);
                removed = true;
                break;
            }
        }
        if !removed {
            return pts;
        }
    }
}

/// Edge half-planes of a counterclockwise convex polygon.
pub fn polygon_halfplanes<T: Real>(poly: &Polygon<T>) -> impl Iterator<Item = HalfPlane<T>> + '_ {
    poly.edges().map(|(a, b)| HalfPlane::new(a, b - a))
}

/// Intersection of two convex polygons; `None` when it has empty interior.
pub fn convex_intersect<T: Real>(a: &Polygon<T>, b: &Polygon<T>) -> Option<Polygon<T>> {
    let (lo, hi) = a.bbox();
    let (blo, bhi) = b.bbox();
    let scale = (hi - lo).norm().max((bhi - blo).norm());
    let eps = scale * T::lit(1e-12);
    let pad = scale * T::lit(4.0) + T::one();
    let (lo, hi) = (lo - Point2::new(pad, pad), hi + Point2::new(pad, pad));
    let frame = [
        HalfPlane::new(lo, Point2::new(T::one(), T::zero())),
        HalfPlane::new(hi, Point2::new(-T::one(), T::zero())),
        HalfPlane::new(hi, Point2::new(T::zero(), T::one())),
        HalfPlane::new(lo, Point2::new(T::zero(), -T::one())),
    ];
    let planes: Vec<_> = polygon_halfplanes(a).chain(polygon_halfplanes(b)).chain(frame).collect();
    let ring = halfplane_intersection(planes, eps);
    if ring.len() < 3 {
        None
    } else {
        Some(Polygon::from_ccw_unchecked(ring))
    }
}
