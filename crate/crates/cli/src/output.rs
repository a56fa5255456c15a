use serde::{Deserialize, Serialize};

use tri_inscribe::contact::ContactElement;
use tri_inscribe::geom::Point2;
use tri_inscribe::svg::Svg;
use tri_inscribe::{Method, Polygon, SolveReport, Triangle};

use crate::solve::{SolveRequest, VariantName};

/// Bumped on any incompatible change to [`JsonReport`].
pub const SCHEMA_VERSION: u32 = 1;

/// The JSON document written by `solve`. Angles are radians.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub variant: VariantName,
    /// `exact`, `fptas`, `sampled` or `search`.
    pub method: String,
    /// Angle at `p` of the reported triangle.
    pub alpha: f64,
    /// Angle at `q` of the reported triangle.
    pub beta: f64,
    pub eps: Option<f64>,
    pub area: f64,
    pub triangle: [[f64; 2]; 3],
    pub orientation: f64,
    pub contacts: Vec<ContactElement>,
    pub contact_type: Option<u8>,
    pub samples_used: Option<usize>,
    pub candidates_evaluated: u64,
    pub wall_time_ms: f64,
    pub warnings: Vec<String>,
}

impl JsonReport {
    pub fn new(req: &SolveRequest, r: &SolveReport<f64>) -> Self {
        let method = match r.method {
            Method::Exact => "exact",
            Method::Fptas { .. } => "fptas",
            Method::Sampled { .. } => "sampled",
            Method::Search => "search",
        };
        let t = &r.triangle;
        Self {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            variant: req.variant,
            method: method.to_string(),
            alpha: r.alpha,
            beta: r.beta,
            eps: req.eps,
            area: r.area,
            triangle: [[t.p.x, t.p.y], [t.q.x, t.q.y], [t.r.x, t.r.y]],
            orientation: r.orientation,
            contacts: r.contacts.as_ref().map(|c| c.elements.clone()).unwrap_or_default(),
            contact_type: r.contacts.as_ref().map(|c| c.type_tag),
            samples_used: r.stats.samples_used,
            candidates_evaluated: r.stats.candidates_evaluated,
            wall_time_ms: r.stats.wall_time * 1e3,
            warnings: r.warnings.clone(),
        }
    }

    pub fn triangle(&self) -> Triangle {
        let [p, q, r] = self.triangle.map(|[x, y]| Point2::new(x, y));
        Triangle::new(p, q, r)
    }
}

/// Polygon outline, filled triangle, and one dot per contact point.
pub fn render_svg(poly: &Polygon, report: &JsonReport) -> String {
    let (lo, hi) = poly.bbox();
    let tri = report.triangle();
    let mut svg = Svg::new(lo, hi);
    svg.polygon(poly.vertices(), "none", "black");
    svg.polygon(&tri.corners(), "#4a90d9", "#1f4e79");
    let corners = tri.corners();
    let mut marked: Vec<Point2<f64>> = Vec::new();
    for c in &report.contacts {
        let at = match *c {
            ContactElement::CornerOnEdge { corner, .. } => corners[corner.index()],
            ContactElement::VertexOnSide { vertex, .. } => poly.vertex(vertex),
        };
        if !marked.contains(&at) {
            marked.push(at);
            svg.dot(at, "#d0021b");
        }
    }
    svg.finish()
}
