use super::features::{build_features, candidate_scales, model};
use crate::contact::{detect_contacts, ContactSet};
use crate::error::{Error, Result};
use crate::geom::{triangle_in_polygon, AnglePair, Point2, Polygon, Triangle};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct ScaleResult<T> {
    pub scale: T,
    pub triangle: Triangle<T>,
    pub contacts: ContactSet,
}

/// Largest `s` with `anchor + s·T₀ ⊆ P` for the unit-base model `T₀` whose
/// base starts at the anchor and points along `+x`.
///
/// The answer is the first boundary contact of the growing triangle, so it is
/// one of the per-feature scales; those are sorted and the largest one that
/// still fits is kept. Anchors on the boundary are accepted when some
/// triangle of positive area fits.
pub fn max_inscribed_scale<T: Real>(poly: &Polygon<T>, anchor: Point2<T>, ab: AnglePair<T>) -> Result<ScaleResult<T>> {
    let tol = poly.tolerance();
    if !poly.contains(anchor, tol) {
        return Err(Error::PointOutside);
    }
    let (shape, _) = model(ab);
    let features = build_features(poly.vertices(), ab, T::zero());
    let mut cands: Vec<T> = candidate_scales(&features, anchor, tol).into_iter().map(|(s, _)| s).collect();
    cands.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let at = |s: T| Triangle::new(anchor, anchor + shape[1] * s, anchor + shape[2] * s);
    let fits = |s: T| triangle_in_polygon(poly, &at(s), tol);
    // Containment is monotone in s for a fixed anchor.
    let (mut lo, mut hi) = (0usize, cands.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if fits(cands[mid]) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if lo == 0 {
        return Err(Error::AnchorNotInterior);
    }
    let mut scale = cands[lo - 1];
    // A contact just past a grazing one can still pass the loose tolerance;
    // pull such overshoots back to the tight tolerance.
    let tight = poly.diameter() * T::lit(1e-12);
    let snug = |s: T| triangle_in_polygon(poly, &at(s), tight);
    let floor = scale * (T::one() - T::lit(1e-7));
    if !snug(scale) && snug(floor) {
        let (mut a, mut b) = (floor, scale);
        for _ in 0..64 {
            let mid = (a + b) * T::lit(0.5);
            if mid <= a || mid >= b {
                break;
            }
            if snug(mid) {
                a = mid;
            } else {
                b = mid;
            }
        }
        scale = a;
    }
    let triangle = at(scale);
    let contacts = detect_contacts(poly, &triangle, tol * T::lit(100.0));
    Ok(ScaleResult { scale, triangle, contacts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::{ContactElement, Corner, Side};

    fn poly(pts: &[(f64, f64)]) -> Polygon<f64> {
        Polygon::new(pts.iter().map(|&(x, y)| Point2::new(x, y)).collect()).unwrap()
    }

    fn lshape() -> Polygon<f64> {
        poly(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)])
    }

    #[test]
    fn square_examples() {
        let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let ab = AnglePair::from_degrees(90.0, 45.0).unwrap();
        let r = max_inscribed_scale(&sq, Point2::new(0.0, 0.0), ab).unwrap();
        assert!((r.scale - 1.0).abs() < 1e-12);
        assert!(r.triangle.r.dist(Point2::new(0.0, 1.0)) < 1e-12);
        let r = max_inscribed_scale(&sq, Point2::new(0.5, 0.5), ab).unwrap();
        assert!((r.scale - 0.5).abs() < 1e-12);
        assert!(r.contacts.contains(&ContactElement::CornerOnEdge { corner: Corner::Q, edge: 1 }));
        assert!(r.contacts.contains(&ContactElement::CornerOnEdge { corner: Corner::R, edge: 2 }));
        assert_eq!(max_inscribed_scale(&sq, Point2::new(2.0, 0.5), ab), Err(Error::PointOutside));
        assert_eq!(max_inscribed_scale(&sq, Point2::new(1.0, 0.5), ab), Err(Error::AnchorNotInterior));
    }

    #[test]
    fn reflex_vertex_contact() {
        let l = lshape();
        let ab = AnglePair::from_degrees(90.0, 45.0).unwrap();
        let r = max_inscribed_scale(&l, Point2::new(0.25, 0.25), ab).unwrap();
        // The hypotenuse x + y = 0.5 + s passes through (1, 1).
        assert!((r.scale - 1.5).abs() < 1e-12, "{}", r.scale);
        assert!(r.contacts.contains(&ContactElement::VertexOnSide { side: Side::Qr, vertex: 3 }));
    }

    /// Bisection on the scale with the containment test as the oracle.
    #[test]
    fn matches_bisection() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        let p = crate::oracle::gen_random_simple::<f64>(14, 3);
        let ab = AnglePair::from_degrees(60.0, 50.0).unwrap();
        let (lo, hi) = p.bbox();
        let (shape, _) = model(ab);
        let mut checked = 0;
        while checked < 200 {
            let a = Point2::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
            if !p.contains_strict(a) {
                continue;
            }
            checked += 1;
            let fast = max_inscribed_scale(&p, a, ab).unwrap().scale;
            let (mut l, mut h) = (0.0, 10.0);
            for _ in 0..80 {
                let m = 0.5 * (l + h);
                let t = Triangle::new(a, a + shape[1] * m, a + shape[2] * m);
                if triangle_in_polygon(&p, &t, 0.0) {
                    l = m;
                } else {
                    h = m;
                }
            }
            assert!((fast - l).abs() < 1e-9, "{a:?}: {fast} vs {l}");
            let t = Triangle::new(a, a + shape[1] * fast * (1.0 + 1e-6), a + shape[2] * fast * (1.0 + 1e-6));
            assert!(!triangle_in_polygon(&p, &t, 0.0));
        }
    }
}
