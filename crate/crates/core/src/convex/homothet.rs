use crate::error::{Error, Result};
use crate::geom::{AnglePair, Point2, Polygon, Triangle};
use crate::lp::{maximize, Constraint, LpOutcome};
use crate::report::{Method, SolveReport, SolveStats, Timer, Variant};
use crate::scalar::Real;

/// Largest scaled and translated copy of the (α,β) model triangle whose base
/// has inclination `base_inclination`.
///
/// Variables are the anchor `t` and the scale `s`. For an edge with inward
/// normal `n` only the model vertex minimizing `n·v` can leave the polygon,
/// so each edge contributes `n·t + s·min_j n·v_j >= n·a`.
pub fn largest_homothet_convex<T: Real>(
    poly: &Polygon<T>,
    ab: AnglePair<T>,
    base_inclination: T,
) -> Result<SolveReport<T>> {
    poly.require_convex()?;
    let timer = Timer::start();
    let model = [
        Point2::origin(),
        Point2::unit(base_inclination),
        ab.unit_apex().rotate(base_inclination),
    ];
    // Work in a frame centered on the vertex centroid and scaled to unit diameter.
    let n = T::lit(poly.len() as f64);
    let center = poly.vertices().iter().fold(Point2::origin(), |acc, &v| acc + v) * n.recip();
    let d = poly.diameter();
    if !(d > T::zero()) {
        return Err(Error::EmptyInterior);
    }
    let to_local = |p: Point2<T>| (p - center) * d.recip();
    let mut cons = Vec::with_capacity(poly.len() + 1);
    for (a, b) in poly.edges() {
        let (a, b) = (to_local(a), to_local(b));
        let nrm = (b - a).perp().normalized();
        let m = model.iter().map(|v| nrm.dot(*v)).fold(T::infinity(), T::min);
        cons.push(Constraint::new([-nrm.x, -nrm.y, -m], -nrm.dot(a)));
    }
    let min_side = model[1].norm().min(model[2].norm()).min((model[2] - model[1]).norm());
    let bound = T::lit(2.0).max(T::lit(2.0) / min_side);
    let tol = T::lit(1e-13);
    let LpOutcome::Optimal(x) = maximize(&[T::zero(), T::zero(), T::one()], &cons, bound, tol, 0x5eed) else {
        return Err(Error::EmptyInterior);
    };
    let s = x[2];
    if !(s > T::lit(1e-12)) {
        return Err(Error::EmptyInterior);
    }
    // Among optimal placements prefer the smallest anchor x, then y.
    let mut anchor = Point2::new(x[0], x[1]);
    cons.push(Constraint::new([T::zero(), T::zero(), -T::one()], -s * (T::one() - T::lit(1e-13))));
    for obj in [[-T::one(), T::zero(), T::zero()], [T::zero(), -T::one(), T::zero()]] {
        if let LpOutcome::Optimal(y) = maximize(&obj, &cons, bound, tol, 0x5eed) {
            anchor = Point2::new(y[0], y[1]);
            let fixed = if obj[0] != T::zero() { y[0] } else { y[1] };
            let row = if obj[0] != T::zero() { vec![T::one(), T::zero(), T::zero()] } else { vec![T::zero(), T::one(), T::zero()] };
            cons.push(Constraint::new(row, fixed + T::lit(1e-13)));
        }
    }
    // Recover the largest feasible scale at the chosen anchor.
    let s = cons[..poly.len()]
        .iter()
        .map(|c| {
            let slack = c.b - c.a[0] * anchor.x - c.a[1] * anchor.y;
            if c.a[2] > T::zero() {
                slack / c.a[2]
            } else {
                T::infinity()
            }
        })
        .fold(T::infinity(), T::min);
    let p = center + anchor * d;
    let tri = Triangle::new(p, p + model[1] * (s * d), p + model[2] * (s * d));
    let stats = SolveStats { candidates_evaluated: poly.len() as u64, wall_time: timer.seconds(), samples_used: None };
    Ok(SolveReport::new(Variant::ConvexAbAxis, Method::Exact, poly, tri, stats))
}
