use rayon::prelude::*;
use serde::Serialize;

use super::kernel::{check_eps, eps_kernel};
use crate::convex::{alpha_axis_ring, largest_ab_convex_rotating};
use crate::error::{Error, Result};
use crate::geom::{check_alpha, polygon_metrics, AnglePair, Polygon, Shear};
use crate::report::{Best, Method, SolveReport, SolveStats, Timer, Variant};
use crate::scalar::Real;

/// Smallest schedule spacing in radians.
const MIN_STEP: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaConstants<T> {
    pub c1: T,
    pub c2: T,
    pub d: T,
    pub w: T,
}

/// Shape constants for α; every convex `P` holds an α-triangle of area `c1·d·w`.
pub fn alpha_constants<T: Real>(poly: &Polygon<T>, alpha: T) -> Result<AlphaConstants<T>> {
    check_alpha(alpha)?;
    let m = polygon_metrics(poly)?;
    let half_pi = T::FRAC_PI_2();
    let tan_term = if (alpha - half_pi).abs() <= T::angle_tol() { T::infinity() } else { alpha.tan().abs() / T::lit(4.0) };
    let cot_half = T::one() / (alpha * T::lit(0.5)).tan();
    let c1 = T::lit(1.0 / 16.0).min(cot_half / T::lit(4.0)).min(tan_term);
    let (c, pi) = (alpha.cos(), T::PI());
    let c2 = T::lit(2.0) * ((T::one() - c) / alpha).min((T::one() + c) / (pi - alpha));
    Ok(AlphaConstants { c1, c2, d: m.diameter, w: m.width })
}

/// Orientation spacing and whether it hit the `1e-6` floor.
pub fn schedule_step<T: Real>(consts: &AlphaConstants<T>, alpha: T, eps: T) -> (T, bool) {
    let half = T::lit(0.5);
    let raw = (alpha * half).min((T::PI() - alpha) * half).min(consts.c1 * consts.w * eps / (T::lit(2.0) * consts.d));
    let floor = T::lit(MIN_STEP);
    if raw < floor {
        (floor, true)
    } else {
        (raw, false)
    }
}

/// Sampled bisector orientations `θ ∈ [−π, π)`, measured from the width
/// direction, within `w/(c1·c2·d)` of `±α/2` or `±(π − α/2)`.
pub fn orientation_schedule<T: Real>(consts: &AlphaConstants<T>, alpha: T, eps: T) -> Vec<T> {
    let (step, _) = schedule_step(consts, alpha, eps);
    let pi = T::PI();
    let window = consts.w / (consts.c1 * consts.c2 * consts.d);
    let mut out = Vec::new();
    if window >= pi {
        let count = (T::TAU() / step).ceil().to_usize().unwrap_or(0);
        out.extend((0..count).map(|k| -pi + step * T::lit(k as f64)).filter(|&t| t < pi));
        return out;
    }
    let half = alpha * T::lit(0.5);
    let reach = (window / step).floor().to_i64().unwrap_or(0);
    for c in [-(pi - half), -half, half, pi - half] {
        out.push(c - window);
        out.push(c + window);
        for j in -reach..=reach {
            out.push(c + step * T::lit(j as f64));
        }
    }
    let mut out: Vec<T> = out.into_iter().map(|t| t.max(-pi).min(pi)).collect();
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out.dedup_by(|a, b| (*a - *b).abs() <= T::epsilon() * T::lit(16.0));
    if out.len() > 1 && out[out.len() - 1] >= pi && out[0] <= -pi {
        out.pop();
    }
    out
}

/// `(1 − ε)`-approximate largest (α,β)-triangle in any orientation.
pub fn fptas_ab<T: Real>(poly: &Polygon<T>, ab: AnglePair<T>, eps: T) -> Result<SolveReport<T>> {
    poly.require_convex()?;
    check_eps(eps)?;
    let timer = Timer::start();
    let k = eps_kernel(poly, eps / T::lit(32.0))?;
    let inner = largest_ab_convex_rotating(&k.kernel, ab)?;
    let stats = SolveStats {
        candidates_evaluated: inner.stats.candidates_evaluated,
        wall_time: timer.seconds(),
        samples_used: None,
    };
    Ok(SolveReport::new(Variant::ConvexAbRotating, Method::Fptas { eps: eps.as_f64() }, poly, inner.triangle, stats))
}

/// `(1 − ε)`-approximate largest α-triangle in any orientation.
///
/// Runs the axis solver on the kernel rotated so that each scheduled bisector
/// orientation becomes the axis-aligned one.
pub fn fptas_alpha<T: Real>(poly: &Polygon<T>, alpha: T, eps: T) -> Result<SolveReport<T>> {
    poly.require_convex()?;
    check_alpha(alpha)?;
    check_eps(eps)?;
    let timer = Timer::start();
    let k = eps_kernel(poly, eps / T::lit(64.0))?;
    let ring = k.kernel.vertices();
    let consts = alpha_constants(&k.kernel, alpha)?;
    let psi = polygon_metrics(&k.kernel)?.width_direction.angle();
    let half_eps = eps * T::lit(0.5);
    let (_, floored) = schedule_step(&consts, alpha, half_eps);
    let thetas = orientation_schedule(&consts, alpha, half_eps);
    let shear = Shear::new(alpha)?;
    let half = alpha * T::lit(0.5);
    let results: Vec<_> = thetas
        .par_iter()
        .map(|&theta| {
            let phi = half - theta - psi;
            let rotated: Vec<_> = ring.iter().map(|v| v.rotate(phi)).collect();
            alpha_axis_ring(&rotated, shear).map(|(t, c)| (t.rotated(-phi), c))
        })
        .collect();
    let mut best = Best::new();
    let mut evaluated = 0u64;
    for (tri, count) in results.into_iter().flatten() {
        evaluated += count;
        best.offer(tri);
    }
    let tri = best.triangle().ok_or(Error::NoTriangle)?;
    let stats = SolveStats { candidates_evaluated: evaluated, wall_time: timer.seconds(), samples_used: Some(thetas.len()) };
    let report = SolveReport::new(Variant::ConvexAlphaRotating, Method::Fptas { eps: eps.as_f64() }, poly, tri, stats);
    Ok(if floored { report.with_warning("orientation spacing floored at 1e-6 rad") } else { report })
}
