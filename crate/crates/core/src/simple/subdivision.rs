use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::axis::{ring_area, split, AxisSearch};
use super::features::Half;
use super::scale::max_inscribed_scale;
use crate::contact::{ContactElement, ContactSet};
use crate::error::{Error, Result};
use crate::geom::predicates::segment_distance;
use crate::geom::{AnglePair, Point2, Polygon};
use crate::scalar::Real;
use crate::svg::Svg;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubdivisionVertex<T> {
    pub anchor: Point2<T>,
    /// Scale of `T(anchor)`.
    pub scale: T,
    pub contacts: ContactSet,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubdivisionEdge<T> {
    pub endpoints: (Point2<T>, Point2<T>),
    pub contacts: ContactSet,
}

/// Anchors of `P` grouped by the contact set of their largest axis-aligned
/// triangle. Vertices are the anchors whose contacts pin the triangle.
#[derive(Debug, Clone, Serialize)]
pub struct Subdivision<T> {
    pub vertices: Vec<SubdivisionVertex<T>>,
    pub edges: Vec<SubdivisionEdge<T>>,
    pub polygon: Polygon<T>,
    pub angles: AnglePair<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum EventKind {
    PolygonVertex,
    RayBoundary,
    RayRay,
    Bend,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepEvent<T> {
    pub position: Point2<T>,
    pub kind: EventKind,
    pub contacts: Vec<ContactElement>,
}

/// Builds the subdivision by refining the anchor arrangement until each region
/// has a fixed set of candidate contacts, then splitting every region into the
/// cells where one contact comes first.
pub fn build_subdivision<T: Real>(poly: &Polygon<T>, ab: AnglePair<T>) -> Result<Subdivision<T>> {
    let n = T::lit(poly.len() as f64);
    let center = poly.vertices().iter().fold(Point2::origin(), |acc, &v| acc + v) * n.recip();
    let d = poly.diameter();
    if !(d > T::zero()) {
        return Err(Error::EmptyInterior);
    }
    let local = poly.map(|v| (v - center) * d.recip());
    let mut search = AxisSearch::new(&local, ab);
    let tol = T::lit(1e-11);
    let mut points: Vec<Point2<T>> = Vec::new();
    let mut pieces: BTreeMap<Vec<ContactElement>, Vec<(Point2<T>, Point2<T>)>> = BTreeMap::new();
    for (ring, cover) in search.leaves() {
        for (cell, _) in first_contact_cells(&search, &ring, &cover) {
            let m = cell.len();
            for i in 0..m {
                let (a, b) = (cell[i], cell[(i + 1) % m]);
                points.push(a);
                let mid = (a + b) * T::lit(0.5);
                let active = active_at(&search, &cover, mid, tol);
                if active.len() >= 2 && a.dist(b) > tol {
                    pieces.entry(active).or_default().push((a, b));
                }
            }
        }
    }
    let to_world = |p: Point2<T>| center + p * d;
    let ctol = poly.tolerance() * T::lit(100.0);
    let mut vertices = Vec::new();
    for w in dedup(points, T::lit(1e-9)) {
        let anchor = to_world(w);
        let Ok(s) = max_inscribed_scale(poly, anchor, ab) else { continue };
        let contacts = crate::contact::detect_contacts(poly, &s.triangle, ctol);
        if contacts.len() >= 3 && contacts.type_tag == 3 {
            vertices.push(SubdivisionVertex { anchor, scale: s.scale, contacts });
        }
    }
    let mut edges = Vec::new();
    for (key, segs) in pieces {
        for (a, b) in merge_collinear(segs, tol) {
            let contacts = ContactSet::new(key.clone(), &local, &super::features::model(ab).0);
            edges.push(SubdivisionEdge { endpoints: (to_world(a), to_world(b)), contacts });
        }
    }
    Ok(Subdivision { vertices, edges, polygon: poly.clone(), angles: ab })
}

fn active_at<T: Real>(search: &AxisSearch<'_, T>, cover: &[u32], x: Point2<T>, tol: T) -> Vec<ContactElement> {
    let vals: Vec<T> = cover.iter().map(|&i| search.feature(i).value(x)).collect();
    let low = vals.iter().copied().fold(T::infinity(), T::min);
    let mut out: Vec<ContactElement> =
        cover.iter().zip(&vals).filter(|(_, &v)| v <= low + tol).map(|(&i, _)| search.feature(i).element).collect();
    out.sort();
    out.dedup();
    out
}

/// Cells of `ring` on which one covering feature is the smallest.
fn first_contact_cells<T: Real>(search: &AxisSearch<'_, T>, ring: &[Point2<T>], cover: &[u32]) -> Vec<(Vec<Point2<T>>, u32)> {
    let range = |i: u32| {
        let f = search.feature(i);
        ring.iter().fold((T::infinity(), T::neg_infinity()), |(lo, hi), &v| (lo.min(f.value(v)), hi.max(f.value(v))))
    };
    let ranges: Vec<(T, T)> = cover.iter().map(|&i| range(i)).collect();
    let ceiling = ranges.iter().map(|r| r.1).fold(T::infinity(), T::min);
    let live: Vec<u32> = cover.iter().zip(&ranges).filter(|(_, r)| r.0 <= ceiling).map(|(&i, _)| i).collect();
    let mut out = Vec::new();
    for &fi in &live {
        let f = search.feature(fi);
        let mut cell = ring.to_vec();
        for &hi in &live {
            if hi == fi {
                continue;
            }
            let h = search.feature(hi);
            // g_f <= g_h
            let cut = Half { n: f.a - h.a, c: h.b - f.b };
            cell = split(&cell, &cut).0;
            if cell.len() < 3 {
                break;
            }
        }
        if cell.len() >= 3 && ring_area(&cell) > T::lit(1e-22) {
            out.push((cell, fi));
        }
    }
    out
}

fn dedup<T: Real>(pts: Vec<Point2<T>>, tol: T) -> Vec<Point2<T>> {
    let key = |p: Point2<T>| ((p.x / tol).floor().to_i64().unwrap_or(0), (p.y / tol).floor().to_i64().unwrap_or(0));
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    let mut out: Vec<Point2<T>> = Vec::new();
    'next: for p in pts {
        let (kx, ky) = key(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = grid.get(&(kx + dx, ky + dy)) {
                    if ids.iter().any(|&i| out[i].dist(p) <= tol) {
                        continue 'next;
                    }
                }
            }
        }
        grid.entry((kx, ky)).or_default().push(out.len());
        out.push(p);
    }
    out
}

/// Unions collinear pieces sharing one line into maximal segments.
fn merge_collinear<T: Real>(segs: Vec<(Point2<T>, Point2<T>)>, tol: T) -> Vec<(Point2<T>, Point2<T>)> {
    let mut out = Vec::new();
    let mut rest = segs;
    while let Some(&(a0, b0)) = rest.first() {
        let dir = (b0 - a0).normalized();
        let (line, other): (Vec<_>, Vec<_>) = rest
            .into_iter()
            .partition(|&(a, b)| dir.cross(a - a0).abs() <= tol && dir.cross(b - a0).abs() <= tol);
        rest = other;
        let mut spans: Vec<(T, T)> = line
            .iter()
            .map(|&(a, b)| {
                let (ta, tb) = ((a - a0).dot(dir), (b - a0).dot(dir));
                (ta.min(tb), ta.max(tb))
            })
            .collect();
        spans.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        let mut cur = spans[0];
        for &s in &spans[1..] {
            if s.0 <= cur.1 + tol {
                cur.1 = cur.1.max(s.1);
            } else {
                out.push((a0 + dir * cur.0, a0 + dir * cur.1));
                cur = s;
            }
        }
        out.push((a0 + dir * cur.0, a0 + dir * cur.1));
    }
    out
}

impl<T: Real> Subdivision<T> {
    /// Vertex events in sweep order: a line of inclination `π − β` moving
    /// against its left normal; ties by position along the line, then kind.
    pub fn events(&self) -> Vec<SweepEvent<T>> {
        let along = Point2::unit(T::PI() - self.angles.beta());
        let normal = along.perp();
        let tol = self.polygon.tolerance() * T::lit(100.0);
        let mut out: Vec<SweepEvent<T>> = self
            .vertices
            .iter()
            .map(|v| {
                let w = v.anchor;
                let kind = if self.polygon.vertices().iter().any(|&u| u.dist(w) <= tol) {
                    EventKind::PolygonVertex
                } else if self.polygon.boundary_distance(w) <= tol {
                    EventKind::RayBoundary
                } else {
                    let degree = self
                        .edges
                        .iter()
                        .filter(|e| e.endpoints.0.dist(w) <= tol || e.endpoints.1.dist(w) <= tol || segment_distance(w, e.endpoints.0, e.endpoints.1) <= tol)
                        .count();
                    if degree >= 3 {
                        EventKind::RayRay
                    } else {
                        EventKind::Bend
                    }
                };
                SweepEvent { position: w, kind, contacts: v.contacts.elements.clone() }
            })
            .collect();
        out.sort_by(|a, b| {
            let ka = (-normal.dot(a.position), along.dot(a.position));
            let kb = (-normal.dot(b.position), along.dot(b.position));
            ka.partial_cmp(&kb).unwrap().then(a.kind.cmp(&b.kind))
        });
        out
    }

    /// Largest `T(w)` over the vertices, recomputed from scratch.
    pub fn best_vertex(&self) -> Option<&SubdivisionVertex<T>> {
        self.vertices.iter().max_by(|a, b| a.scale.partial_cmp(&b.scale).unwrap())
    }

    /// Debug drawing: polygon, edges and vertices.
    pub fn to_svg(&self) -> String {
        let (lo, hi) = self.polygon.bbox();
        let mut svg = Svg::new(lo, hi);
        svg.polygon(self.polygon.vertices(), "#f4f4f4", "#222");
        for e in &self.edges {
            svg.segment(e.endpoints.0, e.endpoints.1, "#3465a4");
        }
        for v in &self.vertices {
            svg.dot(v.anchor, "#cc0000");
        }
        svg.finish()
    }
}
