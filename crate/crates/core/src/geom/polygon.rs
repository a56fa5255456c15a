use serde::Serialize;

use super::predicates::{locate_in_ring, orientation, segment_closest, segment_distance, segments_intersect};
use super::Point2;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// A simple polygon with counterclockwise vertex order and no three
/// consecutive collinear vertices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polygon<T> {
    vertices: Vec<Point2<T>>,
    convex: bool,
}

impl<T: Real> Polygon<T> {
    /// Validates `vertices` (either winding) and normalizes them to
    /// counterclockwise order. Error indices refer to the input order.
    pub fn new(vertices: Vec<Point2<T>>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        if let Some(index) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        for i in 0..n {
            for j in 0..i {
                if vertices[i] == vertices[j] {
                    return Err(Error::RepeatedVertex { index: i, first: j });
                }
            }
        }
        for i in 0..n {
            let prev = (i + n - 1) % n;
            let next = (i + 1) % n;
            if orientation(vertices[prev], vertices[i], vertices[next]) == 0 {
                return Err(Error::Collinear { prev, index: i, next });
            }
        }
        check_simple(&vertices)?;
        let area2 = signed_area2(&vertices);
        if area2 == T::zero() {
            return Err(Error::ZeroArea);
        }
        let mut vertices = vertices;
        if area2 < T::zero() {
            vertices.reverse();
        }
        Ok(Self::from_ccw_unchecked(vertices))
    }

    /// Builds a polygon after removing collinear chains and repeated
    /// consecutive vertices.
    pub fn new_merging_collinear(vertices: Vec<Point2<T>>) -> Result<Self> {
        Self::new(merge_collinear(vertices))
    }

    /// Wraps a vertex ring known to be simple and counterclockwise.
    pub fn from_ccw_unchecked(vertices: Vec<Point2<T>>) -> Self {
        let n = vertices.len();
        let convex = (0..n).all(|i| {
            orientation(vertices[(i + n - 1) % n], vertices[i], vertices[(i + 1) % n]) > 0
        });
        Self { vertices, convex }
    }

    /// Validates and additionally requires convexity.
    pub fn new_convex(vertices: Vec<Point2<T>>) -> Result<Self> {
        let p = Self::new(vertices)?;
        p.require_convex()?;
        Ok(p)
    }

    pub fn require_convex(&self) -> Result<()> {
        match (0..self.len()).find(|&i| self.is_reflex(i)) {
            Some(i) => Err(Error::NotConvex(i)),
            None => Ok(()),
        }
    }

    #[inline]
    pub fn vertices(&self) -> &[Point2<T>] {
        &self.vertices
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn is_convex(&self) -> bool {
        self.convex
    }

    /// Vertex with cyclic indexing.
    #[inline]
    pub fn vertex(&self, i: usize) -> Point2<T> {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    #[inline]
    pub fn edge(&self, i: usize) -> (Point2<T>, Point2<T>) {
        (self.vertex(i), self.vertex(i + 1))
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2<T>, Point2<T>)> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    pub fn is_reflex(&self, i: usize) -> bool {
        let n = self.len();
        orientation(self.vertex(i + n - 1), self.vertex(i), self.vertex(i + 1)) < 0
    }

    pub fn area(&self) -> T {
        signed_area2(&self.vertices) * T::lit(0.5)
    }

    pub fn bbox(&self) -> (Point2<T>, Point2<T>) {
        let mut lo = self.vertices[0];
        let mut hi = lo;
        for p in &self.vertices {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        (lo, hi)
    }

    /// Maximum distance between two vertices (the diameter of the polygon).
    pub fn diameter(&self) -> T {
        if self.convex {
            super::metrics::ring_diameter(&self.vertices)
        } else {
            super::metrics::ring_diameter(&super::convex_hull(&self.vertices))
        }
    }

    /// Absolute containment tolerance: the relative tolerance times the diameter.
    pub fn tolerance(&self) -> T {
        T::containment_rel_tol() * self.diameter()
    }

    pub fn boundary_distance(&self, p: Point2<T>) -> T {
        self.edges()
            .map(|(a, b)| segment_distance(p, a, b))
            .fold(T::infinity(), T::min)
    }

    /// Boundary point nearest to `p`.
    pub fn closest_boundary_point(&self, p: Point2<T>) -> Point2<T> {
        self.edges()
            .map(|(a, b)| segment_closest(p, a, b))
            .min_by(|u, v| u.dist(p).partial_cmp(&v.dist(p)).unwrap())
            .expect("polygon has edges")
    }

    /// Closed containment; points within `tol` of the boundary count as inside.
    pub fn contains(&self, p: Point2<T>, tol: T) -> bool {
        match locate_in_ring(&self.vertices, p) {
            None | Some(true) => true,
            Some(false) => tol > T::zero() && self.boundary_distance(p) <= tol,
        }
    }

    /// Strict interior test (boundary points excluded).
    pub fn contains_strict(&self, p: Point2<T>) -> bool {
        locate_in_ring(&self.vertices, p) == Some(true)
    }

    /// Applies an orientation-preserving map to every vertex.
    pub fn map(&self, f: impl Fn(Point2<T>) -> Point2<T>) -> Self {
        Self { vertices: self.vertices.iter().map(|&p| f(p)).collect(), convex: self.convex }
    }

    pub fn rotated(&self, theta: T) -> Self {
        self.map(|p| p.rotate(theta))
    }

    pub fn scaled(&self, k: T) -> Self {
        self.map(|p| p * k)
    }

    pub fn translated(&self, t: Point2<T>) -> Self {
        self.map(|p| p + t)
    }

    pub fn cast<U: Real>(&self) -> Polygon<U> {
        Polygon { vertices: self.vertices.iter().map(|p| p.cast()).collect(), convex: self.convex }
    }
}

fn signed_area2<T: Real>(v: &[Point2<T>]) -> T {
    let n = v.len();
    (0..n).fold(T::zero(), |acc, i| acc + v[i].cross(v[(i + 1) % n]))
}

fn check_simple<T: Real>(v: &[Point2<T>]) -> Result<()> {
    let n = v.len();
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        for j in (i + 1)..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                continue;
            }
            let (c, d) = (v[j], v[(j + 1) % n]);
            if segments_intersect(a, b, c, d) {
                return Err(Error::SelfIntersecting(i, j));
            }
        }
    }
    Ok(())
}

/// Drops repeated consecutive vertices and interior vertices of collinear chains.
pub fn merge_collinear<T: Real>(mut v: Vec<Point2<T>>) -> Vec<Point2<T>> {
    v.dedup();
    while v.len() > 1 && v.first() == v.last() {
        v.pop();
    }
    loop {
        let n = v.len();
        if n < 3 {
            return v;
        }
        let drop = (0..n).find(|&i| orientation(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) == 0);
        match drop {
            Some(i) => {
                v.remove(i);
            }
            None => return v,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(f64, f64)]) -> Result<Polygon<f64>> {
        Polygon::new(pts.iter().map(|&(x, y)| Point2::new(x, y)).collect())
    }

    #[test]
    fn normalizes_clockwise_input() {
        let p = poly(&[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)]).unwrap();
        assert!(p.area() > 0.0);
        assert!(p.is_convex());
    }

    #[test]
    fn validation_errors() {
        assert_eq!(poly(&[(0.0, 0.0), (1.0, 0.0)]), Err(Error::TooFewVertices(2)));
        assert_eq!(
            poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)]),
            Err(Error::RepeatedVertex { index: 3, first: 1 })
        );
        assert!(matches!(
            poly(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (1.0, 1.0)]),
            Err(Error::Collinear { index: 1, .. })
        ));
        assert!(matches!(
            poly(&[(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)]),
            Err(Error::SelfIntersecting(..))
        ));
        assert!(matches!(poly(&[(0.0, f64::NAN), (1.0, 0.0), (0.0, 1.0)]), Err(Error::NonFinite { index: 0 })));
    }

    #[test]
    fn merge_collinear_chain() {
        let v = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 2.0),
            Point2::new(0.0, 2.0),
            Point2::new(0.0, 0.0),
        ];
        let p = Polygon::new_merging_collinear(v).unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn lshape_is_not_convex() {
        let l = poly(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]).unwrap();
        assert!(!l.is_convex());
        assert!(l.is_reflex(3));
        assert_eq!(l.require_convex(), Err(Error::NotConvex(3)));
        assert!(l.contains(Point2::new(0.5, 1.5), 0.0));
        assert!(!l.contains(Point2::new(1.5, 1.5), 0.0));
        assert!(l.contains(Point2::new(1.0 + 1e-12, 1.5), 1e-9));
    }
}
