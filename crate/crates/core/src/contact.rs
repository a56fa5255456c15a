//! Contacts binding an inscribed triangle to the polygon boundary.

use serde::{Deserialize, Serialize};

use crate::geom::predicates::segment_distance;
use crate::geom::{Point2, Polygon, Triangle};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Corner {
    P,
    Q,
    R,
}

impl Corner {
    pub const ALL: [Corner; 3] = [Corner::P, Corner::Q, Corner::R];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Pq,
    Qr,
    Rp,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Pq, Side::Qr, Side::Rp];

    /// Corner indices of the side's endpoints, in counterclockwise order.
    pub fn ends(self) -> (usize, usize) {
        match self {
            Side::Pq => (0, 1),
            Side::Qr => (1, 2),
            Side::Rp => (2, 0),
        }
    }
}

/// One contact: a triangle corner on a polygon edge (edge `i` runs from
/// vertex `i` to vertex `i + 1`), or a polygon vertex on the interior of a
/// triangle side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ContactElement {
    CornerOnEdge { corner: Corner, edge: usize },
    VertexOnSide { side: Side, vertex: usize },
}

impl ContactElement {
    /// The contact as a linear equation `c·(a.x, a.y, s) = rhs` in the anchor
    /// `a` (corner `p`) and scale `s` of the family `a + s·model`, where
    /// `model` holds the corner offsets of the unit-base shape.
    pub fn equation<T: Real>(&self, poly: &Polygon<T>, model: &[Point2<T>; 3]) -> ([T; 3], T) {
        match *self {
            ContactElement::CornerOnEdge { corner, edge } => {
                let (a, b) = poly.edge(edge);
                let n = (b - a).perp().normalized();
                let c = model[corner.index()];
                ([n.x, n.y, n.dot(c)], n.dot(a))
            }
            ContactElement::VertexOnSide { side, vertex } => {
                let (i, j) = side.ends();
                let dir = (model[j] - model[i]).normalized();
                let w = poly.vertex(vertex);
                ([dir.y, -dir.x, -dir.cross(model[i])], -dir.cross(w))
            }
        }
    }
}

/// A contact certificate with its subdivision type tag.
///
/// Tags: 1 when every contact involves a single polygon edge, 2 when every
/// contact is a vertex on side `qr`, 3 when the contacts pin the anchor to a
/// point, 4 otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactSet {
    pub elements: Vec<ContactElement>,
    pub type_tag: u8,
}

impl ContactSet {
    pub fn new<T: Real>(mut elements: Vec<ContactElement>, poly: &Polygon<T>, model: &[Point2<T>; 3]) -> Self {
        elements.sort();
        elements.dedup();
        let type_tag = classify(&elements, poly, model);
        Self { elements, type_tag }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &ContactElement) -> bool {
        self.elements.binary_search(e).is_ok()
    }
}

/// Corner offsets of `tri` relative to `p`, divided by the base length.
pub fn unit_model<T: Real>(tri: &Triangle<T>) -> [Point2<T>; 3] {
    let s = tri.p.dist(tri.q);
    [Point2::origin(), (tri.q - tri.p) * s.recip(), (tri.r - tri.p) * s.recip()]
}

/// Rank of the contact equations, with rows normalized before elimination.
pub fn contact_rank<T: Real>(elements: &[ContactElement], poly: &Polygon<T>, model: &[Point2<T>; 3]) -> usize {
    let scale = poly.diameter().max(T::min_positive_value());
    let mut rows: Vec<[T; 3]> = elements
        .iter()
        .map(|e| {
            let (mut c, _) = e.equation(poly, model);
            // The scale column is measured in units of the diameter.
            c[2] = c[2] / scale;
            let n = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
            [c[0] / n, c[1] / n, c[2] / n]
        })
        .collect();
    let tol = T::lit(1e-9);
    let mut rank = 0;
    for col in 0..3 {
        let Some(piv) = (rank..rows.len()).max_by(|&a, &b| rows[a][col].abs().partial_cmp(&rows[b][col].abs()).unwrap())
        else {
            break;
        };
        if rows[piv][col].abs() <= tol {
            continue;
        }
        rows.swap(rank, piv);
        for r in 0..rows.len() {
            if r != rank {
                let f = rows[r][col] / rows[rank][col];
                for k in 0..3 {
                    rows[r][k] = rows[r][k] - f * rows[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

fn classify<T: Real>(elements: &[ContactElement], poly: &Polygon<T>, model: &[Point2<T>; 3]) -> u8 {
    match contact_rank(elements, poly, model) {
        3 => 3,
        1 => {
            let all_qr = elements
                .iter()
                .all(|e| matches!(e, ContactElement::VertexOnSide { side: Side::Qr, .. }));
            if all_qr {
                2
            } else {
                1
            }
        }
        _ => 4,
    }
}

/// All geometric contacts of `tri` with the boundary of `poly` within `tol`.
pub fn detect_contacts<T: Real>(poly: &Polygon<T>, tri: &Triangle<T>, tol: T) -> ContactSet {
    let corners = tri.corners();
    let mut out = Vec::new();
    for (ci, &c) in corners.iter().enumerate() {
        for (e, (a, b)) in poly.edges().enumerate() {
            if segment_distance(c, a, b) <= tol {
                out.push(ContactElement::CornerOnEdge { corner: Corner::ALL[ci], edge: e });
            }
        }
    }
    for side in Side::ALL {
        let (i, j) = side.ends();
        let (a, b) = (corners[i], corners[j]);
        for (k, &w) in poly.vertices().iter().enumerate() {
            if w.dist(a) > tol && w.dist(b) > tol && segment_distance(w, a, b) <= tol {
                out.push(ContactElement::VertexOnSide { side, vertex: k });
            }
        }
    }
    ContactSet::new(out, poly, &unit_model(tri))
}
