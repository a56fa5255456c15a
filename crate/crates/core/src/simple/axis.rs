use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::features::{build_features, model, Feature, Half};
use crate::error::{Error, Result};
use crate::geom::predicates::segment_distance;
use crate::geom::{triangle_in_polygon, AnglePair, Point2, Polygon, Triangle};
use crate::lp::{maximize, Constraint, LpOutcome};
use crate::report::{Best, Method, SolveReport, SolveStats, Timer, Variant};
use crate::scalar::Real;

/// Regions explored before the search gives up on exactness.
const REGION_LIMIT: usize = 500_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Cover,
    Disjoint,
    Partial,
}

fn classify<T: Real>(domain: &[Half<T>], ring: &[Point2<T>], tol: T) -> Class {
    let mut cover = true;
    for h in domain {
        let (mut lo, mut hi) = (T::infinity(), T::neg_infinity());
        for &v in ring {
            let e = h.excess(v);
            lo = lo.min(e);
            hi = hi.max(e);
        }
        if lo >= -tol {
            return Class::Disjoint;
        }
        if hi > tol {
            cover = false;
        }
    }
    if cover {
        Class::Cover
    } else {
        Class::Partial
    }
}

fn crosses<T: Real>(h: &Half<T>, ring: &[Point2<T>], tol: T) -> bool {
    let (mut lo, mut hi) = (T::infinity(), T::neg_infinity());
    for &v in ring {
        let e = h.excess(v);
        lo = lo.min(e);
        hi = hi.max(e);
    }
    lo < -tol && hi > tol
}

/// Whether segment `ab` meets the interior of the convex ring, shrunk by `tol`.
fn segment_enters<T: Real>(a: Point2<T>, b: Point2<T>, ring: &[Point2<T>], tol: T) -> bool {
    let d = b - a;
    let (mut t0, mut t1) = (T::zero(), T::one());
    let n = ring.len();
    for i in 0..n {
        let (p, q) = (ring[i], ring[(i + 1) % n]);
        let e = q - p;
        let len = e.norm();
        // Signed distance inside: (e × (a + t d − p)) / len >= tol.
        let num = e.cross(a - p) / len - tol;
        let den = e.cross(d) / len;
        if den.abs() <= T::epsilon() {
            if num < T::zero() {
                return false;
            }
            continue;
        }
        let t = -num / den;
        if den > T::zero() {
            t0 = t0.max(t);
        } else {
            t1 = t1.min(t);
        }
        if t0 >= t1 {
            return false;
        }
    }
    true
}

/// Splits a convex ring by `h` into the parts with `excess <= 0` and `>= 0`.
pub(crate) fn split<T: Real>(ring: &[Point2<T>], h: &Half<T>) -> (Vec<Point2<T>>, Vec<Point2<T>>) {
    let n = ring.len();
    let (mut lo, mut hi) = (Vec::new(), Vec::new());
    for i in 0..n {
        let (a, b) = (ring[i], ring[(i + 1) % n]);
        let (ea, eb) = (h.excess(a), h.excess(b));
        if ea <= T::zero() {
            lo.push(a);
        }
        if ea >= T::zero() {
            hi.push(a);
        }
        if (ea < T::zero() && eb > T::zero()) || (ea > T::zero() && eb < T::zero()) {
            let x = a + (b - a) * (ea / (ea - eb));
            lo.push(x);
            hi.push(x);
        }
    }
    (lo, hi)
}

pub(crate) fn ring_area<T: Real>(ring: &[Point2<T>]) -> T {
    let n = ring.len();
    (0..n).fold(T::zero(), |acc, i| acc + ring[i].cross(ring[(i + 1) % n])) * T::lit(0.5)
}

struct Region<T> {
    ring: Vec<Point2<T>>,
    cover: Vec<u32>,
    partial: Vec<u32>,
    /// Polygon edges entering the region; empty once membership is settled.
    edges: Vec<u32>,
    ub: T,
    at: Point2<T>,
}

struct Queued<T> {
    ub: f64,
    order: u64,
    region: Region<T>,
}

impl<T> PartialEq for Queued<T> {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl<T> Eq for Queued<T> {}
impl<T> PartialOrd for Queued<T> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl<T> Ord for Queued<T> {
    fn cmp(&self, o: &Self) -> Ordering {
        self.ub.total_cmp(&o.ub).then(o.order.cmp(&self.order))
    }
}

/// Branch and bound over anchor regions in the unit-diameter frame.
pub(crate) struct AxisSearch<'a, T> {
    poly: &'a Polygon<T>,
    features: Vec<Feature<T>>,
    ab: AnglePair<T>,
    shape: [Point2<T>; 3],
    tol: T,
    bound: T,
    pub regions: u64,
    pub exhausted: bool,
}

impl<'a, T: Real> AxisSearch<'a, T> {
    /// `poly` must already be in the working frame.
    pub fn new(poly: &'a Polygon<T>, ab: AnglePair<T>) -> Self {
        let features = build_features(poly.vertices(), ab, T::lit(1e-10));
        let (shape, _) = model(ab);
        let min_side = shape[1].norm().min(shape[2].norm()).min((shape[2] - shape[1]).norm());
        Self {
            poly,
            features,
            ab,
            shape,
            tol: T::lit(1e-12),
            bound: T::lit(4.0).max(T::lit(4.0) / min_side),
            regions: 0,
            exhausted: false,
        }
    }

    fn triangle(&self, at: Point2<T>, s: T) -> Triangle<T> {
        Triangle::new(at + self.shape[0] * s, at + self.shape[1] * s, at + self.shape[2] * s)
    }

    fn lp(&self, ring: &[Point2<T>], cover: &[u32], objective: [T; 3], extra: &[Constraint<T>]) -> Option<Vec<T>> {
        let mut cons: Vec<Constraint<T>> = Vec::with_capacity(cover.len() + ring.len() + 1 + extra.len());
        for &i in cover {
            let f = &self.features[i as usize];
            cons.push(Constraint::new([-f.a.x, -f.a.y, T::one()], f.b));
        }
        let n = ring.len();
        for i in 0..n {
            let (p, q) = (ring[i], ring[(i + 1) % n]);
            let nl = (q - p).perp();
            cons.push(Constraint::new([-nl.x, -nl.y, T::zero()], -nl.dot(p)));
        }
        cons.push(Constraint::new([T::zero(), T::zero(), -T::one()], T::zero()));
        cons.extend_from_slice(extra);
        match maximize(&objective, &cons, self.bound, T::lit(1e-13), 0x5eed ^ cons.len() as u64) {
            LpOutcome::Optimal(x) => Some(x),
            LpOutcome::Infeasible => None,
        }
    }

    /// Builds a region from its ring and the parent's feature and edge lists.
    fn make(&self, ring: Vec<Point2<T>>, cover: &[u32], partial: &[u32], edges: &[u32]) -> Option<Region<T>> {
        if ring.len() < 3 || ring_area(&ring) <= T::lit(1e-24) {
            return None;
        }
        let tol = self.tol;
        let mut cover = cover.to_vec();
        let mut still = Vec::with_capacity(partial.len());
        for &i in partial {
            match classify(&self.features[i as usize].domain, &ring, tol) {
                Class::Cover => cover.push(i),
                Class::Disjoint => {}
                Class::Partial => still.push(i),
            }
        }
        let verts = self.poly.vertices();
        let n = verts.len();
        let settled = edges.is_empty();
        let edges: Vec<u32> = edges
            .iter()
            .copied()
            .filter(|&e| segment_enters(verts[e as usize], verts[(e as usize + 1) % n], &ring, tol))
            .collect();
        if edges.is_empty() && !settled {
            let c = ring.iter().fold(Point2::origin(), |acc, &v| acc + v) * T::lit(ring.len() as f64).recip();
            if !self.poly.contains(c, T::zero()) {
                return None;
            }
        }
        let x = self.lp(&ring, &cover, [T::zero(), T::zero(), T::one()], &[])?;
        Some(Region { ring, cover, partial: still, edges, ub: x[2], at: Point2::new(x[0], x[1]) })
    }

    fn violated(&self, r: &Region<T>) -> Option<Half<T>> {
        let (at, s) = (r.at, r.ub);
        let tol = self.tol;
        let mut worst: Option<(T, Half<T>)> = None;
        for &i in &r.partial {
            let f = &self.features[i as usize];
            if !f.defined_at(at, tol) {
                continue;
            }
            let v = f.value(at);
            if v < s - tol && worst.as_ref().is_none_or(|(w, _)| v < *w) {
                if let Some(h) = f.domain.iter().find(|h| crosses(h, &r.ring, tol)) {
                    worst = Some((v, *h));
                }
            }
        }
        worst.map(|(_, h)| h)
    }

    fn edge_split(&self, r: &Region<T>) -> Option<Half<T>> {
        let verts = self.poly.vertices();
        let n = verts.len();
        let e = r.edges.iter().copied().min_by(|&i, &j| {
            let di = segment_distance(r.at, verts[i as usize], verts[(i as usize + 1) % n]);
            let dj = segment_distance(r.at, verts[j as usize], verts[(j as usize + 1) % n]);
            di.partial_cmp(&dj).unwrap()
        })?;
        let (a, b) = (verts[e as usize], verts[(e as usize + 1) % n]);
        let nrm = (b - a).perp();
        let h = Half { n: nrm, c: nrm.dot(a) };
        crosses(&h, &r.ring, self.tol).then_some(h)
    }

    /// Lexicographically smallest optimal anchor inside a resolved region.
    fn leftmost(&self, r: &Region<T>) -> (Point2<T>, T) {
        let s = r.ub;
        let keep = Constraint::new([T::zero(), T::zero(), -T::one()], -s * (T::one() - T::lit(1e-13)));
        let Some(x) = self.lp(&r.ring, &r.cover, [-T::one(), T::zero(), T::zero()], std::slice::from_ref(&keep)) else {
            return (r.at, s);
        };
        let pin = Constraint::new([T::one(), T::zero(), T::zero()], x[0] + T::lit(1e-13));
        let y = self.lp(&r.ring, &r.cover, [T::zero(), -T::one(), T::zero()], &[keep, pin]).unwrap_or(x);
        let at = Point2::new(y[0], y[1]);
        let scale = r
            .cover
            .iter()
            .map(|&i| self.features[i as usize].value(at))
            .fold(T::infinity(), T::min)
            .min(s);
        (at, scale)
    }

    fn feasible(&self, r: &Region<T>, at: Point2<T>, s: T) -> bool {
        r.partial.iter().all(|&i| {
            let f = &self.features[i as usize];
            !f.defined_at(at, self.tol) || f.value(at) >= s - self.tol
        }) && triangle_in_polygon(self.poly, &self.triangle(at, s), T::lit(1e-9))
    }

    /// Offers the exact largest triangle at `at`, which is tight at the
    /// polygon tolerance rather than the looser acceptance test.
    fn settle(&self, best: &mut Best<T>, at: Point2<T>) {
        // LP anchors may sit a hair outside; the nearest boundary point is
        // the anchor they stand for.
        let at = if self.poly.contains(at, T::zero()) { at } else { self.poly.closest_boundary_point(at) };
        if let Ok(s) = super::max_inscribed_scale(self.poly, at, self.ab) {
            best.offer(s.triangle);
        }
    }

    /// Largest inscribed homothet; `None` when nothing of positive area fits.
    pub fn run(&mut self) -> Option<Triangle<T>> {
        let (lo, hi) = self.poly.bbox();
        let pad = T::lit(1e-9);
        let ring = vec![
            Point2::new(lo.x - pad, lo.y - pad),
            Point2::new(hi.x + pad, lo.y - pad),
            Point2::new(hi.x + pad, hi.y + pad),
            Point2::new(lo.x - pad, hi.y + pad),
        ];
        let all: Vec<u32> = (0..self.features.len() as u32).collect();
        let edges: Vec<u32> = (0..self.poly.len() as u32).collect();
        let mut heap = BinaryHeap::new();
        let mut order = 0u64;
        if let Some(r) = self.make(ring, &[], &all, &edges) {
            heap.push(Queued { ub: r.ub.as_f64(), order, region: r });
        }
        let mut best = Best::new();
        let slack = T::lit(crate::report::AREA_TIE);
        while let Some(Queued { region: r, .. }) = heap.pop() {
            if best.triangle().is_some() && r.ub < self.best_scale(&best) * (T::one() - slack) {
                break;
            }
            self.regions += 1;
            if self.regions as usize > REGION_LIMIT {
                self.exhausted = true;
                break;
            }
            let outside = !r.edges.is_empty() && !self.poly.contains(r.at, self.tol);
            let cut = if outside { self.edge_split(&r) } else { self.violated(&r) };
            let cut = match cut {
                Some(h) => Some(h),
                None => {
                    let (at, s) = self.leftmost(&r);
                    if s > self.tol && self.feasible(&r, at, s) {
                        self.settle(&mut best, at);
                        None
                    } else if self.feasible(&r, r.at, r.ub) {
                        self.settle(&mut best, r.at);
                        None
                    } else if let Some(h) = self.edge_split(&r) {
                        Some(h)
                    } else {
                        // Only sub-tolerance features disagree.
                        self.settle(&mut best, r.at);
                        None
                    }
                }
            };
            let Some(h) = cut else { continue };
            let (a, b) = split(&r.ring, &h);
            for part in [a, b] {
                if let Some(child) = self.make(part, &r.cover, &r.partial, &r.edges) {
                    order += 1;
                    heap.push(Queued { ub: child.ub.as_f64(), order, region: child });
                }
            }
        }
        best.triangle()
    }

    /// Refines the anchor arrangement until every region lies inside `P` and
    /// every feature either covers it or misses it. Returns each region with
    /// its covering features.
    pub fn leaves(&mut self) -> Vec<(Vec<Point2<T>>, Vec<u32>)> {
        let (lo, hi) = self.poly.bbox();
        let pad = T::lit(1e-9);
        let ring = vec![
            Point2::new(lo.x - pad, lo.y - pad),
            Point2::new(hi.x + pad, lo.y - pad),
            Point2::new(hi.x + pad, hi.y + pad),
            Point2::new(lo.x - pad, hi.y + pad),
        ];
        let all: Vec<u32> = (0..self.features.len() as u32).collect();
        let edges: Vec<u32> = (0..self.poly.len() as u32).collect();
        let mut stack: Vec<Region<T>> = self.make(ring, &[], &all, &edges).into_iter().collect();
        let mut out = Vec::new();
        while let Some(r) = stack.pop() {
            self.regions += 1;
            let cut = r
                .partial
                .iter()
                .find_map(|&i| self.features[i as usize].domain.iter().find(|h| crosses(h, &r.ring, self.tol)).copied())
                .or_else(|| self.edge_split(&r))
                .or_else(|| if r.edges.is_empty() { None } else { self.bisect(&r) });
            match cut {
                Some(h) => {
                    let (a, b) = split(&r.ring, &h);
                    for part in [a, b] {
                        stack.extend(self.make(part, &r.cover, &r.partial, &r.edges));
                    }
                }
                None => out.push((r.ring, r.cover)),
            }
        }
        out
    }

    pub fn feature(&self, i: u32) -> &Feature<T> {
        &self.features[i as usize]
    }

    fn best_scale(&self, best: &Best<T>) -> T {
        best.triangle().map_or(T::zero(), |t| t.p.dist(t.q))
    }

    /// Halves a region across its longest extent.
    fn bisect(&self, r: &Region<T>) -> Option<Half<T>> {
        let n = r.ring.len();
        let mut far = (T::zero(), Point2::origin(), Point2::origin());
        for i in 0..n {
            for j in i + 1..n {
                let d = r.ring[i].dist(r.ring[j]);
                if d > far.0 {
                    far = (d, r.ring[i], r.ring[j]);
                }
            }
        }
        if far.0 <= T::lit(1e-9) {
            return None;
        }
        let dir = far.2 - far.1;
        let mid = (far.1 + far.2) * T::lit(0.5);
        Some(Half { n: dir, c: dir.dot(mid) })
    }
}

/// Largest axis-aligned (α,β)-triangle in a simple polygon: base along `+x`,
/// apex above.
pub fn largest_ab_simple_axis<T: Real>(poly: &Polygon<T>, ab: AnglePair<T>) -> Result<SolveReport<T>> {
    largest_ab_simple_axis_with(poly, ab, false)
}

/// With `fallback`, builds the full subdivision and re-evaluates `T(w)` at
/// every vertex instead of running the branch and bound.
pub fn largest_ab_simple_axis_with<T: Real>(poly: &Polygon<T>, ab: AnglePair<T>, fallback: bool) -> Result<SolveReport<T>> {
    let timer = Timer::start();
    if fallback {
        let sub = super::build_subdivision(poly, ab)?;
        let mut best = Best::new();
        for v in &sub.vertices {
            if let Ok(s) = super::max_inscribed_scale(poly, v.anchor, ab) {
                best.offer(s.triangle);
            }
        }
        let tri = best.triangle().ok_or(Error::NoTriangle)?;
        let stats = SolveStats { candidates_evaluated: best.candidates, wall_time: timer.seconds(), samples_used: None };
        return Ok(SolveReport::new(Variant::SimpleAbAxis, Method::Exact, poly, tri, stats));
    }
    let (tri, regions, exhausted) = solve_axis(poly, ab)?;
    let stats = SolveStats { candidates_evaluated: regions, wall_time: timer.seconds(), samples_used: None };
    let report = SolveReport::new(Variant::SimpleAbAxis, Method::Exact, poly, tri, stats);
    Ok(if exhausted { report.with_warning("region limit reached; area is a lower bound") } else { report })
}

pub(crate) fn solve_axis<T: Real>(poly: &Polygon<T>, ab: AnglePair<T>) -> Result<(Triangle<T>, u64, bool)> {
    let n = T::lit(poly.len() as f64);
    let center = poly.vertices().iter().fold(Point2::origin(), |acc, &v| acc + v) * n.recip();
    let d = poly.diameter();
    if !(d > T::zero()) {
        return Err(Error::EmptyInterior);
    }
    let local = poly.map(|v| (v - center) * d.recip());
    let mut search = AxisSearch::new(&local, ab);
    let tri = search.run().ok_or(Error::NoTriangle)?;
    let back = tri.map(|v| center + v * d);
    Ok((back, search.regions, search.exhausted))
}
