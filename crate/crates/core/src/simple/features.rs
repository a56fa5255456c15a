//! First-contact functions of the growing axis-aligned model triangle.
//!
//! For an anchor `r` inside `P`, the scale at which `r + s·T₀` first meets
//! the boundary is the minimum over boundary features of an affine function of
//! `r`, each valid on a convex domain: a polygon vertex inside the cone at `r`
//! (it meets side `qr`), or an edge crossed by the base ray (corner `q`) or by
//! the ray along `pr` (corner `r`).

use crate::contact::{ContactElement, Corner, Side};
use crate::geom::{AnglePair, Point2};
use crate::scalar::Real;

/// `n·x <= c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Half<T> {
    pub n: Point2<T>,
    pub c: T,
}

impl<T: Real> Half<T> {
    pub fn unit(n: Point2<T>, c: T) -> Self {
        let k = n.norm().recip();
        Self { n: n * k, c: c * k }
    }

    pub fn excess(&self, x: Point2<T>) -> T {
        self.n.dot(x) - self.c
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Feature<T> {
    /// `g(r) = a·r + b`.
    pub a: Point2<T>,
    pub b: T,
    pub domain: Vec<Half<T>>,
    pub element: ContactElement,
}

impl<T: Real> Feature<T> {
    pub fn value(&self, r: Point2<T>) -> T {
        self.a.dot(r) + self.b
    }

    pub fn defined_at(&self, r: Point2<T>, tol: T) -> bool {
        self.domain.iter().all(|h| h.excess(r) <= tol)
    }
}

/// Model triangle `(0,0), (1,0), apex` and the functional equal to 1 on `qr`.
pub(crate) fn model<T: Real>(ab: AnglePair<T>) -> ([Point2<T>; 3], Point2<T>) {
    let apex = ab.unit_apex();
    let (c, s) = (ab.alpha().cos(), ab.alpha().sin());
    let len = apex.norm();
    let w = Point2::new(T::one(), (T::one() / len - c) / s);
    ([Point2::origin(), Point2::new(T::one(), T::zero()), apex], w)
}

/// Ray features whose edge strip is narrower than `min_strip` are dropped;
/// the vertex features at the edge ends stand in for them.
pub(crate) fn build_features<T: Real>(ring: &[Point2<T>], ab: AnglePair<T>, min_strip: T) -> Vec<Feature<T>> {
    let (m, w) = model(ab);
    let ua = m[2].normalized();
    let inv_len = T::one() / m[2].norm();
    let n = ring.len();
    let mut out = Vec::with_capacity(3 * n);
    let cone_side = Point2::new(ua.y, -ua.x);
    for (i, &v) in ring.iter().enumerate() {
        out.push(Feature {
            a: -w,
            b: w.dot(v),
            domain: vec![Half { n: Point2::new(T::zero(), T::one()), c: v.y }, Half::unit(cone_side, cone_side.dot(v))],
            element: ContactElement::VertexOnSide { side: Side::Qr, vertex: i },
        });
    }
    let rays = [(Point2::new(T::one(), T::zero()), T::one(), Corner::Q), (ua, inv_len, Corner::R)];
    for i in 0..n {
        let (a, b) = (ring[i], ring[(i + 1) % n]);
        let e = b - a;
        for &(u, factor, corner) in &rays {
            let den = u.cross(e);
            if den.abs() <= (T::epsilon() * T::lit(64.0) * e.norm()).max(min_strip) {
                continue;
            }
            // t(r) = (a×e − r×e)/den, λ(r) = (a×u − r×u)/den.
            let at = Point2::new(-e.y, e.x) * den.recip();
            let bt = a.cross(e) / den;
            let al = Point2::new(-u.y, u.x) * den.recip();
            let bl = a.cross(u) / den;
            out.push(Feature {
                a: at * factor,
                b: bt * factor,
                domain: vec![Half::unit(-at, bt), Half::unit(-al, bl), Half::unit(al, T::one() - bl)],
                element: ContactElement::CornerOnEdge { corner, edge: i },
            });
        }
    }
    out
}

/// Positive feature values defined at `r`, each with its contact.
pub(crate) fn candidate_scales<T: Real>(features: &[Feature<T>], r: Point2<T>, tol: T) -> Vec<(T, ContactElement)> {
    features
        .iter()
        .filter(|f| f.defined_at(r, tol))
        .map(|f| (f.value(r), f.element))
        .filter(|(s, _)| *s > tol)
        .collect()
}
