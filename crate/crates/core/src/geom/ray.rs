use super::{Point2, Polygon};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Distance from `origin` along unit direction `u` to the first point where
/// the ray leaves the closed polygon. Tangential grazes at reflex vertices and
/// runs along boundary edges do not count as leaving. `None` when the ray
/// leaves immediately at `origin`.
pub fn ray_exit<T: Real>(poly: &Polygon<T>, origin: Point2<T>, u: Point2<T>) -> Option<T> {
    let scale = poly.diameter();
    let tiny = scale * T::lit(1e-13);
    let mut ts: Vec<T> = Vec::with_capacity(8);
    for (a, b) in poly.edges() {
        let e = b - a;
        let w = a - origin;
        let den = u.cross(e);
        let elen = e.norm();
        if den.abs() <= T::epsilon() * T::lit(16.0) * elen {
            if (u.cross(w)).abs() <= tiny {
                for p in [a, b] {
                    let t = (p - origin).dot(u);
                    if t > tiny {
                        ts.push(t);
                    }
                }
            }
            continue;
        }
        let t = w.cross(e) / den;
        let s = w.cross(u) / den;
        let stol = tiny / elen;
        if s >= -stol && s <= T::one() + stol && t > tiny {
            ts.push(t);
        }
    }
    ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ts.dedup_by(|a, b| (*a - *b).abs() <= tiny);
    if ts.is_empty() {
        return None;
    }
    let inside = |t: T| poly.contains(origin + u * t, T::zero());
    if !inside(ts[0] * T::lit(0.5)) {
        return None;
    }
    for k in 0..ts.len() {
        let leaves = match ts.get(k + 1) {
            Some(&next) => !inside((ts[k] + next) * T::lit(0.5)),
            None => true,
        };
        if leaves {
            return Some(ts[k]);
        }
    }
    None
}

/// Foot of the ray from `origin` at inclination `theta` on the boundary.
pub fn ray_shoot<T: Real>(poly: &Polygon<T>, origin: Point2<T>, theta: T) -> Result<Point2<T>> {
    if !poly.contains(origin, poly.tolerance()) {
        return Err(Error::PointOutside);
    }
    let u = Point2::unit(theta);
    ray_exit(poly, origin, u).map(|t| origin + u * t).ok_or(Error::PointOutside)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn pt(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    fn lshape() -> Polygon<f64> {
        Polygon::new(vec![pt(0.0, 0.0), pt(2.0, 0.0), pt(2.0, 1.0), pt(1.0, 1.0), pt(1.0, 2.0), pt(0.0, 2.0)])
            .unwrap()
    }

    #[test]
    fn shoot_examples() {
        let sq = Polygon::new(vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)]).unwrap();
        assert!(ray_shoot(&sq, pt(0.5, 0.5), 0.0).unwrap().dist(pt(1.0, 0.5)) < 1e-15);
        assert!(ray_shoot(&sq, pt(0.5, 0.5), FRAC_PI_2).unwrap().dist(pt(0.5, 1.0)) < 1e-15);
        assert!(ray_shoot(&lshape(), pt(0.5, 0.5), FRAC_PI_4).unwrap().dist(pt(1.0, 1.0)) < 1e-12);
        assert_eq!(ray_shoot(&sq, pt(2.0, 0.5), 0.0), Err(Error::PointOutside));
    }

    #[test]
    fn grazing_and_boundary_runs() {
        let l = lshape();
        // Runs along the edge y = 1 from the reflex vertex without leaving.
        assert!(ray_shoot(&l, pt(0.5, 1.0), 0.0).unwrap().dist(pt(2.0, 1.0)) < 1e-12);
        // Passes the reflex vertex tangentially from below-left.
        assert!(ray_shoot(&l, pt(0.0, 0.0), FRAC_PI_4).unwrap().dist(pt(1.0, 1.0)) < 1e-12);
        assert!(ray_shoot(&l, pt(0.5, 0.0), FRAC_PI_4).unwrap().dist(pt(1.5, 1.0)) < 1e-12);
    }

    /// Brute force: march along the ray and bisect the first exit.
    #[test]
    fn shoot_matches_marching() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let l = lshape();
        for _ in 0..300 {
            let o = pt(rng.gen::<f64>() * 2.0, rng.gen::<f64>() * 2.0);
            if !l.contains_strict(o) {
                continue;
            }
            let th = rng.gen::<f64>() * std::f64::consts::TAU;
            let u = Point2::unit(th);
            let step = 1e-3;
            let mut t = 0.0;
            while l.contains(o + u * (t + step), 0.0) {
                t += step;
            }
            let (mut lo, mut hi) = (t, t + step);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if l.contains(o + u * mid, 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let foot = ray_shoot(&l, o, th).unwrap();
            assert!(foot.dist(o + u * lo) < 1e-9, "{o:?} {th}");
            assert!(l.boundary_distance(foot) < 1e-12);
        }
    }
}
