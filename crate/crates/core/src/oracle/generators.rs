//! Deterministic instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::predicates::{orientation, segments_intersect};
use crate::geom::{convex_hull, Point2, Polygon};
use crate::scalar::Real;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn well_shaped(v: &[Point2<f64>], min_edge: f64, min_turn: f64) -> bool {
    let n = v.len();
    (0..n).all(|i| {
        let (a, b, c) = (v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
        let (e1, e2) = (b - a, c - b);
        e2.norm() >= min_edge && (e1.cross(e2) / (e1.norm() * e2.norm())).abs() >= min_turn
    })
}

/// Random convex polygon with exactly `n >= 3` vertices, inscribed in a
/// randomly stretched and rotated unit ellipse.
pub fn gen_random_convex<T: Real>(n: usize, seed: u64) -> Polygon<T> {
    assert!(n >= 3, "need n >= 3");
    let mut rng = rng(seed);
    loop {
        let aspect = rng.gen_range(0.35..1.0);
        let tilt = rng.gen_range(0.0..std::f64::consts::PI);
        // Stratified angles keep every gap above a fifth of the mean; the
        // radial jitter stays below the sag of the smallest gap.
        let gap = std::f64::consts::TAU / n as f64;
        let jitter = 0.1 * aspect * (0.2 * gap).powi(2) / 8.0;
        let offset = rng.gen_range(0.0..std::f64::consts::TAU);
        let angles: Vec<f64> = (0..n).map(|k| offset + gap * (k as f64 + 0.8 * rng.gen::<f64>())).collect();
        let mut pts: Vec<Point2<f64>> = angles
            .iter()
            .map(|&t| {
                let rad = 1.0 - jitter * rng.gen::<f64>();
                Point2::new(t.cos() * rad, aspect * t.sin() * rad).rotate(tilt)
            })
            .collect();
        // Interior padding points never reach the hull.
        for _ in 0..3 {
            pts.push(Point2::unit(rng.gen_range(0.0..std::f64::consts::TAU)) * (0.2 * aspect * rng.gen::<f64>()));
        }
        let hull = convex_hull(&pts);
        if hull.len() != n || !well_shaped(&hull, 1e-4, 1e-7) {
            continue;
        }
        if let Ok(p) = Polygon::new(hull.iter().map(|p| p.cast()).collect()) {
            return p;
        }
    }
}

/// Random simple polygon on `n >= 3` points of the unit square, untangled by
/// repeated removal of crossing edge pairs (2-opt moves).
pub fn gen_random_simple<T: Real>(n: usize, seed: u64) -> Polygon<T> {
    assert!(n >= 3, "need n >= 3");
    let mut rng = rng(seed);
    'attempt: loop {
        let mut v: Vec<Point2<f64>> = (0..n).map(|_| Point2::new(rng.gen(), rng.gen())).collect();
        let mut guard = 0usize;
        loop {
            guard += 1;
            if guard > 50 * n * n {
                continue 'attempt;
            }
            let mut crossing = None;
            'search: for i in 0..n {
                for j in (i + 2)..n {
                    if i == 0 && j == n - 1 {
                        continue;
                    }
                    if segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]) {
                        crossing = Some((i, j));
                        break 'search;
                    }
                }
            }
            match crossing {
                Some((i, j)) => v[i + 1..=j].reverse(),
                None => break,
            }
        }
        if !well_shaped(&v, 5e-3, 1e-3) {
            continue;
        }
        if (0..n).any(|i| orientation(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) == 0) {
            continue;
        }
        if let Ok(p) = Polygon::new(v.iter().map(|p| p.cast()).collect()) {
            return p;
        }
    }
}

/// Lower-bound fixture families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    /// `2n` vertices on a 120° circular arc plus `n` clustered near its center.
    ArcCluster,
    /// Three gently bulging chains of `n` vertices each around a triangle.
    Cubic,
}

pub fn gen_lower_bound_fixture<T: Real>(kind: FixtureKind, n: usize) -> Polygon<T> {
    assert!(n >= 2, "need n >= 2");
    let deg = |d: f64| d.to_radians();
    let pts: Vec<Point2<f64>> = match kind {
        FixtureKind::ArcCluster => {
            let mut v = Vec::with_capacity(3 * n);
            let arc = 2 * n;
            for k in 0..arc {
                let t = deg(-60.0) + deg(120.0) * k as f64 / (arc - 1) as f64;
                v.push(Point2::unit(t));
            }
            // Cluster chain on a tiny circle facing away from the arc; only
            // directions within ±25° of 180° are supported by these points.
            let rad = 1e-2;
            for k in 0..n {
                let t = deg(160.0) + deg(40.0) * k as f64 / (n - 1) as f64;
                v.push(Point2::unit(t) * rad);
            }
            v
        }
        FixtureKind::Cubic => {
            let corners = [Point2::unit(deg(90.0)), Point2::unit(deg(210.0)), Point2::unit(deg(330.0))];
            let mut v = Vec::with_capacity(3 * n);
            for s in 0..3 {
                let (a, b) = (corners[s], corners[(s + 1) % 3]);
                let mid = a.lerp(b, 0.5);
                let bulge = mid.normalized() * 0.08;
                for k in 0..n {
                    let t = (k as f64 + 0.5) / n as f64;
                    let base = a.lerp(b, t);
                    let lift = 4.0 * t * (1.0 - t);
                    v.push(base + bulge * lift);
                }
            }
            v
        }
    };
    Polygon::new(pts.iter().map(|p| p.cast()).collect()).expect("fixture polygons are valid")
}
