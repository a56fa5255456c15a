use crate::error::Result;
use crate::geom::{convex_intersect, phi_inverse, phi_params, phi_transform, triangle_in_polygon, AnglePair, Point2, Polygon, Triangle};
use crate::report::{Best, Method, SolveReport, SolveStats, Timer, Variant};
use crate::scalar::Real;

/// Largest (α,β)-triangle in any orientation.
///
/// Some optimum has a corner `t_i` at a vertex `v`. Then `t_{i+2} = Φ_i(t_{i+1})`
/// and both lie in `P` exactly when `t_{i+2} ∈ K = P ∩ Φ_i(P)`, so the best
/// placement at `v` uses the vertex of `K` farthest from `v`.
pub fn largest_ab_convex_rotating<T: Real>(poly: &Polygon<T>, ab: AnglePair<T>) -> Result<SolveReport<T>> {
    poly.require_convex()?;
    let timer = Timer::start();
    let tol = poly.tolerance();
    let mut best = Best::new();
    let mut evaluated = 0u64;
    let n = poly.len();
    for (j, &v) in poly.vertices().iter().enumerate() {
        let (prev, next) = (poly.vertex(j + n - 1), poly.vertex(j + 1));
        let (u, w) = (next - v, prev - v);
        let corner = u.cross(w).atan2(u.dot(w));
        for i in 0..3 {
            let image = Polygon::from_ccw_unchecked(
                poly.vertices().iter().map(|&x| phi_transform(v, ab, i, x)).collect(),
            );
            let mut far = convex_intersect(poly, &image).and_then(|k| {
                evaluated += k.len() as u64;
                k.vertices().iter().copied().max_by(|a, b| a.dist(v).partial_cmp(&b.dist(v)).unwrap())
            });
            // When Φ_i turns by the interior angle at v, K degenerates to a
            // segment along the edge to the previous vertex.
            let (s, turn) = phi_params(ab, i);
            if (turn - corner).abs() <= T::angle_tol() {
                let len = v.dist(prev).min(s * v.dist(next));
                let end = v + (prev - v) * (len / v.dist(prev));
                if far.is_none_or(|f| f.dist(v) < len) {
                    far = Some(end);
                }
            }
            let Some(far) = far else { continue };
            if far.dist(v) <= tol {
                continue;
            }
            let mut t = [Point2::origin(); 3];
            t[i] = v;
            t[(i + 1) % 3] = phi_inverse(v, ab, i, far);
            t[(i + 2) % 3] = far;
            let tri = Triangle::new(t[0], t[1], t[2]);
            if triangle_in_polygon(poly, &tri, tol) {
                best.offer(tri);
            }
        }
    }
    let tri = best.triangle().ok_or(crate::Error::NoTriangle)?;
    let stats = SolveStats { candidates_evaluated: evaluated, wall_time: timer.seconds(), samples_used: None };
    Ok(SolveReport::new(Variant::ConvexAbRotating, Method::Exact, poly, tri, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(f64, f64)]) -> Polygon<f64> {
        Polygon::new(pts.iter().map(|&(x, y)| Point2::new(x, y)).collect()).unwrap()
    }

    fn regular(n: usize, side: f64) -> Polygon<f64> {
        let rad = side / (2.0 * (std::f64::consts::PI / n as f64).sin());
        Polygon::new((0..n).map(|k| Point2::unit(2.0 * std::f64::consts::PI * k as f64 / n as f64) * rad).collect())
            .unwrap()
    }

    #[test]
    fn square_examples() {
        let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let r = largest_ab_convex_rotating(&sq, AnglePair::from_degrees(45.0, 45.0).unwrap()).unwrap();
        assert!((r.area - 0.5).abs() < 1e-12);
        let r = largest_ab_convex_rotating(&sq, AnglePair::from_degrees(60.0, 60.0).unwrap()).unwrap();
        assert!((r.area - (2.0 * 3f64.sqrt() - 3.0)).abs() < 1e-12, "{}", r.area);
    }

    #[test]
    fn hexagon_alternating_vertices() {
        let r = largest_ab_convex_rotating(&regular(6, 1.0), AnglePair::from_degrees(60.0, 60.0).unwrap()).unwrap();
        assert!((r.area - 3.0 * 3f64.sqrt() / 4.0).abs() < 1e-12);
    }

    #[test]
    fn pinned_corner_satisfies_phi() {
        let p = crate::oracle::gen_random_convex::<f64>(9, 3);
        let ab = AnglePair::from_degrees(35.0, 75.0).unwrap();
        let r = largest_ab_convex_rotating(&p, ab).unwrap();
        let t = r.triangle.corners();
        let tol = 1e-9 * p.diameter();
        let pinned = (0..3).find(|&i| p.vertices().iter().any(|v| v.dist(t[i]) < tol)).unwrap();
        let img = phi_transform(t[pinned], ab, pinned, t[(pinned + 1) % 3]);
        assert!(img.dist(t[(pinned + 2) % 3]) < tol);
        assert!((r.alpha - ab.alpha()).abs() < 1e-9 && (r.beta - ab.beta()).abs() < 1e-9);
    }
}
