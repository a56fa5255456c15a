use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{check_alpha, triangle_in_polygon, Point2, Polygon, Triangle};
use crate::report::{Best, Method, SolveReport, SolveStats, Timer, Variant};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub seed: u64,
    /// Grid points per dimension for the initial scan (at least 8).
    pub grid: usize,
    pub multistarts: usize,
    pub ascent_iters: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { seed: 0, grid: 12, multistarts: 16, ascent_iters: 3000 }
    }
}

/// Search state: anchor, base inclination, angle at `q`.
#[derive(Debug, Clone, Copy)]
struct State<T> {
    x: T,
    y: T,
    theta: T,
    beta: T,
}

struct Problem<'a, T> {
    poly: &'a Polygon<T>,
    alpha: T,
    beta: Option<T>,
    theta: Option<T>,
    d: T,
}

impl<T: Real> Problem<'_, T> {
    fn clamp(&self, mut s: State<T>) -> State<T> {
        if let Some(b) = self.beta {
            s.beta = b;
        }
        if let Some(t) = self.theta {
            s.theta = t;
        }
        let eps = T::lit(1e-9);
        s.beta = s.beta.max(eps).min(T::PI() - self.alpha - eps);
        s
    }

    fn triangle(&self, s: &State<T>, scale: T) -> Triangle<T> {
        let p = Point2::new(s.x, s.y);
        let len = s.beta.sin() / (self.alpha + s.beta).sin();
        let q = p + Point2::unit(s.theta) * scale;
        let r = p + Point2::unit(s.theta + self.alpha) * (scale * len);
        Triangle::new(p, q, r)
    }

    /// Largest scale at the state by bisection on containment (triangles at
    /// one anchor are nested).
    fn evaluate(&self, s: &State<T>) -> Option<Triangle<T>> {
        if !self.poly.contains(Point2::new(s.x, s.y), T::zero()) {
            return None;
        }
        if self.poly.is_convex() {
            // Corner containment suffices; each corner's limit is a ray exit.
            let p = Point2::new(s.x, s.y);
            let len = s.beta.sin() / (self.alpha + s.beta).sin();
            let k = convex_exit(self.poly, p, Point2::unit(s.theta))
                .min(convex_exit(self.poly, p, Point2::unit(s.theta + self.alpha)) / len);
            return (k > T::zero()).then(|| self.triangle(s, k));
        }
        let fits = |k: T| triangle_in_polygon(self.poly, &self.triangle(s, k), T::zero());
        let (mut lo, mut hi) = (T::zero(), self.d * T::lit(1.000001));
        if fits(hi) {
            lo = hi;
        }
        for _ in 0..55 {
            let mid = (lo + hi) * T::lit(0.5);
            if fits(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo > T::zero()).then(|| self.triangle(s, lo))
    }
}

fn convex_exit<T: Real>(poly: &Polygon<T>, p: Point2<T>, u: Point2<T>) -> T {
    let mut t = T::infinity();
    for (a, b) in poly.edges() {
        let out = -(b - a).perp();
        let den = out.dot(u);
        if den > T::zero() {
            t = t.min((out.dot(a - p) / den).max(T::zero()));
        }
    }
    t
}

/// Lower-bound search for the largest inscribed triangle with `∠rpq = alpha`;
/// `beta` and `orientation` are free when absent.
pub fn oracle_solve<T: Real>(
    poly: &Polygon<T>,
    alpha: T,
    beta: Option<T>,
    orientation: Option<T>,
    cfg: OracleConfig,
) -> Result<SolveReport<T>> {
    check_alpha(alpha)?;
    if let Some(b) = beta {
        crate::geom::AnglePair::new(alpha, b)?;
    }
    if cfg.grid < 8 {
        return Err(Error::InvalidConfig("oracle grid must be at least 8".into()));
    }
    let timer = Timer::start();
    let problem = Problem { poly, alpha, beta, theta: orientation, d: poly.diameter() };
    let (lo, hi) = poly.bbox();
    let g = cfg.grid;
    let frac = |i: usize, m: usize| T::lit((i as f64 + 0.5) / m as f64);
    let thetas: Vec<T> = match orientation {
        Some(t) => vec![t],
        None => (0..2 * g).map(|i| T::TAU() * frac(i, 2 * g)).collect(),
    };
    let betas: Vec<T> = match beta {
        Some(b) => vec![b],
        None => (0..g / 2).map(|i| (T::PI() - alpha) * frac(i, g / 2)).collect(),
    };
    let mut seeds: Vec<(T, State<T>)> = Vec::new();
    let mut evals = 0u64;
    for i in 0..g {
        for j in 0..g {
            let x = lo.x + (hi.x - lo.x) * frac(i, g);
            let y = lo.y + (hi.y - lo.y) * frac(j, g);
            if !poly.contains(Point2::new(x, y), T::zero()) {
                continue;
            }
            for &theta in &thetas {
                for &beta in &betas {
                    let s = State { x, y, theta, beta };
                    evals += 1;
                    if let Some(t) = problem.evaluate(&s) {
                        seeds.push((t.area(), s));
                    }
                }
            }
        }
    }
    // Polygon vertices are natural anchors.
    for v in poly.vertices() {
        for &theta in &thetas {
            for &beta in &betas {
                let s = State { x: v.x, y: v.y, theta, beta };
                evals += 1;
                if let Some(t) = problem.evaluate(&s) {
                    seeds.push((t.area(), s));
                }
            }
        }
    }
    seeds.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    seeds.truncate(cfg.multistarts.max(1));
    let results: Vec<(Best<T>, u64)> = seeds
        .par_iter()
        .enumerate()
        .map(|(k, (_, s))| ascend(&problem, *s, cfg, cfg.seed.wrapping_mul(0x9e37_79b9).wrapping_add(k as u64)))
        .collect();
    let mut best = Best::new();
    for (b, e) in results {
        evals += e;
        best = best.merge(b);
    }
    let tri = best.triangle().ok_or(Error::NoTriangle)?;
    let variant = match (poly.is_convex(), beta.is_some(), orientation.is_some()) {
        (true, true, true) => Variant::ConvexAbAxis,
        (true, true, false) => Variant::ConvexAbRotating,
        (true, false, true) => Variant::ConvexAlphaAxis,
        (true, false, false) => Variant::ConvexAlphaRotating,
        (false, true, true) => Variant::SimpleAbAxis,
        (false, true, false) => Variant::SimpleAbRotating,
        (false, false, true) => Variant::SimpleAlphaAxis,
        (false, false, false) => Variant::SimpleAlphaRotating,
    };
    let stats = SolveStats { candidates_evaluated: evals, wall_time: timer.seconds(), samples_used: None };
    Ok(SolveReport::new(variant, Method::Search, poly, tri, stats))
}

/// Pattern search over coordinate and random directions, trying recent
/// successful directions first and extrapolating along a success, followed by
/// Nelder-Mead restarts around the incumbent. Lengths are in units of the
/// diameter, with step sizes decaying from `0.1` to `1e-9`.
fn ascend<T: Real>(problem: &Problem<'_, T>, start: State<T>, cfg: OracleConfig, seed: u64) -> (Best<T>, u64) {
    let free_theta = problem.theta.is_none();
    let free_beta = problem.beta.is_none();
    let dims = 2 + free_theta as usize + free_beta as usize;
    let to_state = |v: &[T]| {
        let mut s = start;
        s.x = v[0] * problem.d;
        s.y = v[1] * problem.d;
        let mut k = 2;
        if free_theta {
            s.theta = v[k];
            k += 1;
        }
        if free_beta {
            s.beta = v[k];
        }
        problem.clamp(s)
    };
    let mut best = Best::new();
    let mut evals = 0u64;
    let mut f = |v: &[T], best: &mut Best<T>| -> T {
        evals += 1;
        match problem.evaluate(&to_state(v)) {
            Some(t) => {
                let a = t.area();
                best.offer(t);
                a
            }
            None => T::neg_infinity(),
        }
    };
    let mut x: Vec<T> = vec![start.x / problem.d, start.y / problem.d];
    if free_theta {
        x.push(start.theta);
    }
    if free_beta {
        x.push(start.beta);
    }
    let mut fx = f(&x, &mut best);
    if fx == T::neg_infinity() {
        return (best, 1);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut memory: Vec<Vec<T>> = Vec::new();
    let mut step = T::lit(0.1);
    let floor = T::lit(1e-9);
    let budget = cfg.ascent_iters;
    let mut iters = 0;
    let axpy = |x: &[T], v: &[T], h: T| -> Vec<T> { x.iter().zip(v).map(|(&a, &b)| a + b * h).collect() };
    while step > floor && iters < budget {
        iters += 1;
        let mut dirs: Vec<Vec<T>> = memory.iter().rev().cloned().collect();
        for k in 0..dims {
            for sgn in [T::one(), -T::one()] {
                let mut v = vec![T::zero(); dims];
                v[k] = sgn;
                dirs.push(v);
            }
        }
        for _ in 0..8 * dims {
            let v: Vec<T> = (0..dims).map(|_| T::lit(rng.gen_range(-1.0..1.0))).collect();
            let n = v.iter().fold(T::zero(), |a, &c| a + c * c).sqrt().max(T::lit(1e-12));
            dirs.push(v.into_iter().map(|c| c / n).collect());
        }
        let mut improved = false;
        for v in dirs {
            let cand = axpy(&x, &v, step);
            let fc = f(&cand, &mut best);
            if fc <= fx {
                continue;
            }
            let origin = x.clone();
            x = cand;
            fx = fc;
            let mut h = step * T::lit(2.0);
            loop {
                let cand = axpy(&origin, &v, h);
                let fc = f(&cand, &mut best);
                if fc > fx {
                    x = cand;
                    fx = fc;
                    h = h * T::lit(2.0);
                } else {
                    break;
                }
            }
            memory.retain(|m| m != &v);
            memory.push(v);
            if memory.len() > 4 {
                memory.remove(0);
            }
            improved = true;
            break;
        }
        if !improved {
            step = step * T::lit(0.5);
        }
    }
    // Nelder-Mead restarts with shrinking initial simplex.
    let mut size = T::lit(1e-3);
    for _ in 0..6 {
        let (nx, nf) = nelder_mead(&mut |v: &[T]| f(v, &mut best), &x, size, 60 * dims * dims);
        if nf > fx {
            x = nx;
            fx = nf;
        }
        size = size * T::lit(0.1);
    }
    best.candidates = 0;
    (best, evals)
}

/// Maximizes `f` from `x0` with an axis-aligned initial simplex of edge `size`.
fn nelder_mead<T: Real>(f: &mut dyn FnMut(&[T]) -> T, x0: &[T], size: T, max_evals: usize) -> (Vec<T>, T) {
    let n = x0.len();
    let mut pts: Vec<(Vec<T>, T)> = Vec::with_capacity(n + 1);
    pts.push((x0.to_vec(), f(x0)));
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] = v[i] + size;
        let fv = f(&v);
        pts.push((v, fv));
    }
    let half = T::lit(0.5);
    let two = T::lit(2.0);
    let mut used = n + 1;
    while used < max_evals {
        // Descending by value: best first.
        pts.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap_or(std::cmp::Ordering::Equal));
        let centroid: Vec<T> = (0..n)
            .map(|k| pts[..n].iter().fold(T::zero(), |a, p| a + p.0[k]) / T::lit(n as f64))
            .collect();
        let worst = pts[n].clone();
        let along = |t: T| -> Vec<T> { (0..n).map(|k| centroid[k] + (centroid[k] - worst.0[k]) * t).collect() };
        let refl = along(T::one());
        let fr = f(&refl);
        used += 1;
        if fr > pts[0].1 {
            let exp = along(two);
            let fe = f(&exp);
            used += 1;
            pts[n] = if fe > fr { (exp, fe) } else { (refl, fr) };
        } else if fr > pts[n - 1].1 {
            pts[n] = (refl, fr);
        } else {
            let con = along(if fr > worst.1 { half } else { -half });
            let fc = f(&con);
            used += 1;
            if fc > worst.1.max(fr) {
                pts[n] = (con, fc);
            } else {
                let b = pts[0].0.clone();
                for p in pts.iter_mut().skip(1) {
                    p.0 = (0..n).map(|k| b[k] + (p.0[k] - b[k]) * half).collect();
                    p.1 = f(&p.0);
                    used += 1;
                }
            }
        }
        let spread = pts.iter().map(|p| p.0.iter().zip(&pts[0].0).fold(T::zero(), |a, (&u, &v)| a.max((u - v).abs()))).fold(T::zero(), T::max);
        if spread < T::lit(1e-12) {
            break;
        }
    }
    pts.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap_or(std::cmp::Ordering::Equal));
    pts.swap_remove(0)
}
