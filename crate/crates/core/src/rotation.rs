//! Orientation and angle sampling over the exact axis-aligned simple solver.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{check_alpha, AnglePair, Polygon, Triangle};
use crate::report::{Best, Method, SolveReport, SolveStats, Timer, Variant};
use crate::scalar::Real;
use crate::simple::{largest_ab_simple_axis, solve_axis};

/// Angle samples per orientation in the two-parameter search.
const INNER_SAMPLES: usize = 16;
/// Orientations screened per dyadic level in the two-parameter search.
const SCREEN: usize = 4;
/// Golden-section steps per level of a screening search.
const SCREEN_ITERS: usize = 10;
/// Coarsest dyadic subgrid that is refined.
const MIN_LEVEL: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub samples: usize,
    pub refine_iters: usize,
    /// Radians.
    pub refine_tol: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { samples: 360, refine_iters: 60, refine_tol: 1e-9 }
    }
}

impl SweepConfig {
    /// Default density for an `n`-gon: `max(360, 8n)` samples.
    pub fn for_size(n: usize) -> Self {
        Self { samples: 360.max(8 * n), ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples < 8 {
            return Err(Error::InvalidConfig(format!("samples must be >= 8, got {}", self.samples)));
        }
        if !(self.refine_tol > 0.0) {
            return Err(Error::InvalidConfig(format!("refine_tol must be positive, got {}", self.refine_tol)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThetaBound<T> {
    /// Angles `θ <= theta_t` at `q` cannot beat `seed_area`.
    pub theta_t: T,
    pub seed_area: T,
}

/// Any (α,θ)-triangle in `P` has area at most `d² sin α sin θ / (2 sin(α+θ))`,
/// increasing in `θ`; below the root of that bound against the axis-aligned
/// (α, (π−α)/2) answer no angle `θ` can win.
pub fn theta_lower_bound<T: Real>(poly: &Polygon<T>, alpha: T) -> Result<ThetaBound<T>> {
    check_alpha(alpha)?;
    let rest = T::PI() - alpha;
    let seed = largest_ab_simple_axis(poly, AnglePair::new(alpha, rest * T::lit(0.5))?)?;
    let seed_area = seed.area;
    if !(seed_area > T::zero()) {
        return Err(Error::NoTriangle);
    }
    let d2 = poly.diameter().powi(2);
    let bound = |t: T| d2 * alpha.sin() * t.sin() / (T::lit(2.0) * (alpha + t).sin());
    let (mut lo, mut hi) = (T::zero(), rest);
    for _ in 0..200 {
        let mid = (lo + hi) * T::lit(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if bound(mid) < seed_area {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(ThetaBound { theta_t: lo, seed_area })
}

fn rotated_axis<T: Real>(poly: &Polygon<T>, ab: AnglePair<T>, phi: T) -> Option<(Triangle<T>, u64)> {
    let turned = poly.rotated(-phi);
    solve_axis(&turned, ab).ok().map(|(t, c, _)| (t.rotated(phi), c))
}

/// Sample grid on `[lo, hi)` (periodic) or `(lo, hi)`; nested under doubling.
fn grid<T: Real>(lo: T, hi: T, k: usize, periodic: bool) -> Vec<T> {
    // (hi - lo)·j / k is bit-identical for (2j, 2k) and (j, k).
    let range = if periodic { 0..k } else { 1..k };
    range.map(|j| lo + (hi - lo) * T::lit(j as f64) / T::lit(k as f64)).collect()
}

/// Golden-section search for a maximum of `f` on `[a, b]`; every probe is
/// offered to `best`.
fn golden<T: Real>(mut a: T, mut b: T, iters: usize, tol: T, f: &mut dyn FnMut(T) -> T) {
    let g = T::lit(0.618_033_988_749_894_9);
    let mut x1 = b - (b - a) * g;
    let mut x2 = a + (b - a) * g;
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..iters {
        if b - a <= tol {
            break;
        }
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - (b - a) * g;
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + (b - a) * g;
            f2 = f(x2);
        }
    }
}

/// Maximizes `eval` over a one-parameter grid, then refines around the best
/// sample of every dyadic subgrid with at least `MIN_LEVEL` points, so that
/// doubling `samples` never loses.
fn sweep<T: Real, F>(lo: T, hi: T, periodic: bool, cfg: &SweepConfig, eval: F) -> (Best<T>, u64)
where
    F: Fn(T) -> Option<(Triangle<T>, u64)> + Sync,
{
    let k = cfg.samples;
    let xs = grid(lo, hi, k, periodic);
    let vals: Vec<Option<(Triangle<T>, u64)>> = xs.par_iter().map(|&x| eval(x)).collect();
    let mut best = Best::strict();
    let mut work = 0u64;
    for (t, c) in vals.iter().flatten() {
        best.offer(*t);
        work += c;
    }
    let area = |i: usize| vals[i].map_or(T::zero(), |(t, _)| t.area());
    let offset = if periodic { 0 } else { 1 };
    let mut level = k;
    let mut stride = 1usize;
    loop {
        // Samples of this level: indices j (grid index) divisible by stride.
        let pick = (0..xs.len())
            .filter(|&i| (i + offset) % stride == 0)
            .max_by(|&i, &j| area(i).partial_cmp(&area(j)).unwrap().then(j.cmp(&i)));
        if let Some(i) = pick {
            let h = (hi - lo) / T::lit(level as f64);
            let (mut a, mut b) = (xs[i] - h, xs[i] + h);
            if !periodic {
                a = a.max(lo + h * T::lit(1e-9));
                b = b.min(hi - h * T::lit(1e-9));
            }
            let mut f = |x: T| match eval(x) {
                Some((t, c)) => {
                    work += c;
                    best.offer(t);
                    t.area()
                }
                None => T::zero(),
            };
            golden(a, b, cfg.refine_iters, T::lit(cfg.refine_tol), &mut f);
        }
        if !level.is_multiple_of(2) || level < 2 * MIN_LEVEL {
            break;
        }
        level /= 2;
        stride *= 2;
    }
    (best, work)
}

/// Largest α-triangle with base along `+x`: the angle at `q` is sampled on
/// `(θ_T, π − α)` over the exact (α,β) solver.
pub fn largest_alpha_simple_axis<T: Real>(poly: &Polygon<T>, alpha: T, cfg: SweepConfig) -> Result<SolveReport<T>> {
    cfg.validate()?;
    let timer = Timer::start();
    let (best, work) = alpha_axis_best(poly, alpha, &cfg)?;
    let tri = best.triangle().ok_or(Error::NoTriangle)?;
    let stats = SolveStats { candidates_evaluated: work, wall_time: timer.seconds(), samples_used: Some(cfg.samples) };
    Ok(SolveReport::new(Variant::SimpleAlphaAxis, Method::Sampled { samples: cfg.samples }, poly, tri, stats))
}

fn alpha_axis_best<T: Real>(poly: &Polygon<T>, alpha: T, cfg: &SweepConfig) -> Result<(Best<T>, u64)> {
    let bound = theta_lower_bound(poly, alpha)?;
    let top = T::PI() - alpha;
    let eval = |beta: T| {
        let ab = AnglePair::new(alpha, beta).ok()?;
        solve_axis(poly, ab).ok().map(|(t, c, _)| (t, c))
    };
    let (mut best, work) = sweep(bound.theta_t, top, false, cfg, eval);
    if let Some((t, _)) = eval(top * T::lit(0.5)) {
        best.offer(t);
    }
    Ok((best, work))
}

/// Largest (α,β)-triangle over sampled base orientations in `[0, 2π)`.
pub fn largest_ab_simple_rotating<T: Real>(poly: &Polygon<T>, ab: AnglePair<T>, cfg: SweepConfig) -> Result<SolveReport<T>> {
    cfg.validate()?;
    let timer = Timer::start();
    let (best, work) = sweep(T::zero(), T::TAU(), true, &cfg, |phi| rotated_axis(poly, ab, phi));
    let tri = best.triangle().ok_or(Error::NoTriangle)?;
    let stats = SolveStats { candidates_evaluated: work, wall_time: timer.seconds(), samples_used: Some(cfg.samples) };
    Ok(SolveReport::new(Variant::SimpleAbRotating, Method::Sampled { samples: cfg.samples }, poly, tri, stats))
}

/// Largest α-triangle over base orientation and the angle at `q`.
///
/// A grid of `samples` orientations times a fixed set of angles in
/// `(θ_T, π − α)` is refined by a nested golden-section search (outer on the
/// orientation, inner on the angle) on every dyadic orientation subgrid,
/// starting from the best of a few quickly screened grid points. The
/// axis-aligned answer at the same density is included, so the result never
/// falls below it.
pub fn largest_alpha_simple_rotating<T: Real>(poly: &Polygon<T>, alpha: T, cfg: SweepConfig) -> Result<SolveReport<T>> {
    cfg.validate()?;
    let timer = Timer::start();
    let (mut best, mut work) = alpha_axis_best(poly, alpha, &cfg)?;
    let lo = theta_lower_bound(poly, alpha)?.theta_t;
    let hi = T::PI() - alpha;
    let k = cfg.samples;
    let phis = grid(T::zero(), T::TAU(), k, true);
    let betas = grid(lo, hi, INNER_SAMPLES + 1, false);
    let eval = |phi: T, beta: T| -> Option<(Triangle<T>, u64)> { rotated_axis(poly, AnglePair::new(alpha, beta).ok()?, phi) };
    let cells: Vec<(usize, usize)> = (0..phis.len()).flat_map(|i| (0..betas.len()).map(move |j| (i, j))).collect();
    let vals: Vec<Option<(Triangle<T>, u64)>> = cells.par_iter().map(|&(i, j)| eval(phis[i], betas[j])).collect();
    for (t, c) in vals.iter().flatten() {
        best.offer(*t);
        work += c;
    }
    let area = |c: usize| vals[c].map_or(T::zero(), |(t, _)| t.area());
    let hb = (hi - lo) / T::lit((INNER_SAMPLES + 1) as f64);
    let tol = T::lit(cfg.refine_tol);
    // Nested search: the outer objective is the best area over the angle at
    // q, which follows ridges in any direction. The best angle drifts with
    // the orientation, so the inner bracket widens with the outer one.
    let mut nested = |phi: T, beta: T, hp: T, iters: usize| -> T {
        let reach = hb + hp;
        let (a, b) = ((beta - reach).max(lo + hb * T::lit(1e-9)), (beta + reach).min(hi - hb * T::lit(1e-9)));
        let mut overall = T::zero();
        golden(phi - hp, phi + hp, iters, tol, &mut |x| {
            let mut top = T::zero();
            golden(a, b, iters, tol, &mut |y| {
                let Some((t, w)) = eval(x, y) else { return T::zero() };
                work += w;
                best.offer(t);
                top = top.max(t.area());
                t.area()
            });
            overall = overall.max(top);
            top
        });
        overall
    };
    let (mut level, mut stride) = (k, 1usize);
    loop {
        let hp = T::TAU() / T::lit(level as f64);
        // Coarse angle samples can rank basins wrongly; screen the best few
        // well-separated orientations before the full refinement.
        let mut order: Vec<usize> = (0..cells.len()).filter(|&c| cells[c].0.is_multiple_of(stride)).collect();
        order.sort_by(|&a, &b| area(b).partial_cmp(&area(a)).unwrap().then(a.cmp(&b)));
        let mut picks: Vec<usize> = Vec::with_capacity(SCREEN);
        for c in order {
            if picks.len() == SCREEN || !(area(c) > T::zero()) {
                break;
            }
            let apart = picks.iter().all(|&p| {
                let d = cells[p].0.abs_diff(cells[c].0);
                d.min(k - d) > 2 * stride
            });
            if apart {
                picks.push(c);
            }
        }
        let mut lead: Option<(T, usize)> = None;
        for &c in &picks {
            let score = if picks.len() == 1 { T::zero() } else { nested(phis[cells[c].0], betas[cells[c].1], hp, SCREEN_ITERS) };
            if lead.is_none_or(|(v, _)| score > v) {
                lead = Some((score, c));
            }
        }
        if let Some((_, c)) = lead {
            nested(phis[cells[c].0], betas[cells[c].1], hp, cfg.refine_iters);
        }
        if level % 2 != 0 || level < 2 * MIN_LEVEL {
            break;
        }
        level /= 2;
        stride *= 2;
    }
    let tri = best.triangle().ok_or(Error::NoTriangle)?;
    let used = phis.len() * betas.len();
    let stats = SolveStats { candidates_evaluated: work, wall_time: timer.seconds(), samples_used: Some(used) };
    Ok(SolveReport::new(Variant::SimpleAlphaRotating, Method::Sampled { samples: used }, poly, tri, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point2;

    fn poly(pts: &[(f64, f64)]) -> Polygon<f64> {
        Polygon::new(pts.iter().map(|&(x, y)| Point2::new(x, y)).collect()).unwrap()
    }

    fn square() -> Polygon<f64> {
        poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
    }

    #[test]
    fn theta_bound_square() {
        let b = theta_lower_bound(&square(), std::f64::consts::FRAC_PI_2).unwrap();
        assert!((b.seed_area - 0.5).abs() < 1e-12);
        assert!((b.theta_t - 0.5f64.atan()).abs() < 1e-9, "{}", b.theta_t);
    }

    #[test]
    fn square_and_right_triangle() {
        let cfg = SweepConfig { samples: 64, ..SweepConfig::default() };
        let half = std::f64::consts::FRAC_PI_2;
        let r = largest_alpha_simple_axis(&square(), half, cfg).unwrap();
        assert!((r.area - 0.5).abs() < 1e-9, "{}", r.area);
        let t = poly(&[(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]);
        let r = largest_alpha_simple_axis(&t, half, cfg).unwrap();
        assert!((r.area - 6.0).abs() < 1e-8, "{}", r.area);
        let ab = AnglePair::from_degrees(45.0, 45.0).unwrap();
        let r = largest_ab_simple_rotating(&square(), ab, cfg).unwrap();
        assert!((r.area - 0.5).abs() < 1e-9);
        let r = largest_alpha_simple_rotating(&square(), half, SweepConfig { samples: 16, ..cfg }).unwrap();
        assert!((r.area - 0.5).abs() < 1e-9);
        assert!(SweepConfig { samples: 4, ..cfg }.validate().is_err());
    }
}
