use crate::error::{Error, Result};
use crate::geom::{check_alpha, triangle_in_polygon, Point2, Polygon, Triangle};
use crate::report::{Best, Method, SolveReport, SolveStats, Timer, Variant};
use crate::scalar::Real;

/// Largest α-triangle in any orientation.
///
/// An optimum has `q` and `r` on the boundary. If `p` is interior then `q` and
/// `r` are vertices and `p` is the apex of the isosceles triangle over `qr`.
/// Otherwise, with `p` on edge `e_p` and the
/// base direction `φ` free, the area is `c·h_q·h_r / (cos(φ-a)·cos(φ+α-b))`
/// where `h_q`, `h_r` do not depend on `φ`; the denominator has no interior
/// minimum on the feasible range, so `q` or `r` sits at a polygon vertex. Each
/// such case is a one-parameter problem along `e_p` whose stationary points are
/// roots of a cubic, and the case with both at vertices is a quadratic.
pub fn largest_alpha_convex_rotating<T: Real>(poly: &Polygon<T>, alpha: T) -> Result<SolveReport<T>> {
    poly.require_convex()?;
    check_alpha(alpha)?;
    let timer = Timer::start();
    let ctx = Ctx::new(poly, alpha);
    let n = poly.len();
    let mut best = Best::new();
    for i in 0..n {
        for j in 0..n {
            ctx.isoceles_apex(poly.vertex(i), poly.vertex(j), &mut best);
        }
    }
    for ep in 0..n {
        for k in 0..n {
            let w = poly.vertex(k);
            for e in 0..n {
                ctx.vertex_q(ep, w, e, &mut best);
                ctx.vertex_r(ep, w, e, &mut best);
                ctx.both_vertices(ep, w, poly.vertex(e), &mut best);
            }
        }
    }
    let tri = best.triangle().ok_or(Error::NoTriangle)?;
    if !triangle_in_polygon(poly, &tri, poly.tolerance()) {
        return Err(Error::NoTriangle);
    }
    let stats = SolveStats { candidates_evaluated: best.candidates, wall_time: timer.seconds(), samples_used: None };
    Ok(SolveReport::new(Variant::ConvexAlphaRotating, Method::Exact, poly, tri, stats))
}

/// Largest α-triangle with `p`, `q`, `r` on edges `ep`, `eq`, `er`.
pub fn best_on_edge_triple<T: Real>(poly: &Polygon<T>, alpha: T, ep: usize, eq: usize, er: usize) -> Option<Triangle<T>> {
    let ctx = Ctx::new(poly, alpha);
    let mut best = Best::new();
    let (q0, q1) = poly.edge(eq);
    let (r0, r1) = poly.edge(er);
    for qv in [q0, q1] {
        ctx.vertex_q(ep, qv, er, &mut best);
        for rv in [r0, r1] {
            ctx.both_vertices(ep, qv, rv, &mut best);
        }
    }
    for rv in [r0, r1] {
        ctx.vertex_r(ep, rv, eq, &mut best);
    }
    best.triangle()
}

struct Ctx<'a, T> {
    poly: &'a Polygon<T>,
    alpha: T,
    cos: T,
    sin: T,
    slack: T,
}

impl<'a, T: Real> Ctx<'a, T> {
    fn new(poly: &'a Polygon<T>, alpha: T) -> Self {
        Self { poly, alpha, cos: alpha.cos(), sin: alpha.sin(), slack: T::lit(1e-12) }
    }

    /// Outward unit normal and offset of edge `e`: `m·x <= c` inside.
    fn line(&self, e: usize) -> (Point2<T>, T) {
        let (a, b) = self.poly.edge(e);
        let m = -(b - a).perp().normalized();
        (m, m.dot(a))
    }

    fn rot(&self, v: Point2<T>, sign: T) -> Point2<T> {
        let s = self.sin * sign;
        Point2::new(v.x * self.cos - v.y * s, v.x * s + v.y * self.cos)
    }

    fn on_edge(&self, x: Point2<T>, e: usize) -> bool {
        let (a, b) = self.poly.edge(e);
        let d = b - a;
        let mu = (x - a).dot(d) / d.norm2();
        mu >= -self.slack && mu <= T::one() + self.slack
    }

    /// `q` at vertex `w`, `r` on edge `er` (`sign = 1`); or `r` at `w`, `q` on
    /// `er` (`sign = -1`). The third corner leaves `p` at angle `±α` from `w - p`.
    fn one_vertex(&self, ep: usize, w: Point2<T>, er: usize, sign: T, best: &mut Best<T>) {
        if ep == er {
            return;
        }
        let (a, b) = self.poly.edge(ep);
        let e = b - a;
        let (m, c) = self.line(er);
        let g = self.rot(m, -sign);
        let w0 = w - a;
        // area ∝ |w0 - sE|² · (h0 - s·h1) / (d0 - s·d1)
        let nq = [w0.norm2(), -T::lit(2.0) * w0.dot(e), e.norm2()];
        let (h0, h1) = (c - m.dot(a), m.dot(e));
        let (d0, d1) = (g.dot(w0), g.dot(e));
        // P(s) = N(s)·(h0 - h1 s)
        let pc = [nq[0] * h0, nq[1] * h0 - nq[0] * h1, nq[2] * h0 - nq[1] * h1, -nq[2] * h1];
        let dp = [pc[1], T::lit(2.0) * pc[2], T::lit(3.0) * pc[3]];
        // P'(s)·(d0 - d1 s) + P(s)·d1 = 0
        let eq = [
            dp[0] * d0 + pc[0] * d1,
            dp[1] * d0 - dp[0] * d1 + pc[1] * d1,
            dp[2] * d0 - dp[1] * d1 + pc[2] * d1,
            -dp[2] * d1 + pc[3] * d1,
        ];
        let mut cands = roots_in_unit(&eq);
        cands.push(T::zero());
        cands.push(T::one());
        for s in cands {
            let p = a + e * s;
            let wp = w - p;
            let den = g.dot(wp);
            let h = c - m.dot(p);
            if !(den > T::zero()) || !(h > T::zero()) || wp.norm2() == T::zero() {
                continue;
            }
            let other = p + self.rot(wp, sign) * (h / den);
            if !self.on_edge(other, er) {
                continue;
            }
            let tri = if sign > T::zero() { Triangle::new(p, w, other) } else { Triangle::new(p, other, w) };
            best.offer(tri);
        }
    }

    fn vertex_q(&self, ep: usize, q: Point2<T>, er: usize, best: &mut Best<T>) {
        self.one_vertex(ep, q, er, T::one(), best);
    }

    fn vertex_r(&self, ep: usize, r: Point2<T>, eq: usize, best: &mut Best<T>) {
        self.one_vertex(ep, r, eq, -T::one(), best);
    }

    /// `q` and `r` at vertices with `p` free: the isosceles apex.
    fn isoceles_apex(&self, q: Point2<T>, r: Point2<T>, best: &mut Best<T>) {
        if q == r {
            return;
        }
        let half = (self.alpha * T::lit(0.5)).tan();
        let d = r - q;
        let p = (q + r) * T::lit(0.5) + d.perp() * (T::lit(0.5) / half);
        if self.poly.contains(p, T::zero()) {
            best.offer(Triangle::new(p, q, r));
        }
    }

    /// `q` and `r` both at vertices: `∠rpq = α` is quadratic in the position on `ep`.
    fn both_vertices(&self, ep: usize, q: Point2<T>, r: Point2<T>, best: &mut Best<T>) {
        if q == r {
            return;
        }
        let (a, b) = self.poly.edge(ep);
        let e = b - a;
        let (a0, b0) = (q - a, r - a);
        // cross(q-p, r-p)·cos α - dot(q-p, r-p)·sin α = 0
        let k0 = a0.cross(b0);
        let k1 = -(a0.cross(e) + e.cross(b0));
        let j0 = a0.dot(b0);
        let j1 = -(a0.dot(e) + b0.dot(e));
        let j2 = e.norm2();
        let eq = [k0 * self.cos - j0 * self.sin, k1 * self.cos - j1 * self.sin, -j2 * self.sin];
        for s in roots_in_unit(&eq) {
            let p = a + e * s;
            let (u, v) = (q - p, r - p);
            if !(u.cross(v) > T::zero()) {
                continue;
            }
            let ang = u.cross(v).atan2(u.dot(v));
            if (ang - self.alpha).abs() > T::lit(1e-9) {
                continue;
            }
            best.offer(Triangle::new(p, q, r));
        }
    }
}

fn eval<T: Real>(c: &[T], x: T) -> T {
    c.iter().rev().fold(T::zero(), |acc, &k| acc * x + k)
}

/// Real roots in `[0, 1]` of the polynomial with coefficients `c` (constant first).
pub(crate) fn roots_in_unit<T: Real>(c: &[T]) -> Vec<T> {
    let mut deg = c.len();
    let scale = c.iter().fold(T::zero(), |m, &k| m.max(k.abs()));
    if scale == T::zero() {
        return Vec::new();
    }
    while deg > 0 && c[deg - 1].abs() <= scale * T::lit(1e-14) {
        deg -= 1;
    }
    let c = &c[..deg];
    match deg {
        0 | 1 => Vec::new(),
        2 => {
            let x = -c[0] / c[1];
            if x >= T::zero() && x <= T::one() {
                vec![x]
            } else {
                Vec::new()
            }
        }
        _ => {
            let dc: Vec<T> = (1..deg).map(|k| c[k] * T::lit(k as f64)).collect();
            let mut knots = vec![T::zero()];
            knots.extend(roots_in_unit(&dc));
            knots.push(T::one());
            let mut out = Vec::new();
            let tiny = scale * T::lit(1e-13);
            for w in knots.windows(2) {
                let (mut lo, mut hi) = (w[0], w[1]);
                let (flo, fhi) = (eval(c, lo), eval(c, hi));
                if flo.abs() <= tiny {
                    out.push(lo);
                    continue;
                }
                if flo.signum() == fhi.signum() || fhi.abs() <= tiny {
                    continue;
                }
                for _ in 0..100 {
                    let mid = (lo + hi) * T::lit(0.5);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    if eval(c, mid).signum() == flo.signum() {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                out.push((lo + hi) * T::lit(0.5));
            }
            if eval(c, T::one()).abs() <= tiny {
                out.push(T::one());
            }
            out
        }
    }
}
