//! Minimal deterministic SVG output.

use std::fmt::Write;

use crate::geom::Point2;
use crate::scalar::Real;

/// Canvas whose viewBox is the given bounding box plus a 5% margin; `y` points up.
pub struct Svg {
    lo: (f64, f64),
    hi: (f64, f64),
    body: String,
}

impl Svg {
    pub fn new<T: Real>(lo: Point2<T>, hi: Point2<T>) -> Self {
        let (w, h) = ((hi.x - lo.x).as_f64(), (hi.y - lo.y).as_f64());
        let m = 0.05 * w.max(h).max(f64::MIN_POSITIVE);
        Self { lo: (lo.x.as_f64() - m, lo.y.as_f64() - m), hi: (hi.x.as_f64() + m, hi.y.as_f64() + m), body: String::new() }
    }

    fn map<T: Real>(&self, p: Point2<T>) -> (f64, f64) {
        (p.x.as_f64() - self.lo.0, self.hi.1 - p.y.as_f64())
    }

    fn stroke(&self) -> f64 {
        0.004 * (self.hi.0 - self.lo.0).max(self.hi.1 - self.lo.1)
    }

    /// Closed outline as a single `<path>`.
    pub fn polygon<T: Real>(&mut self, pts: &[Point2<T>], fill: &str, stroke: &str) -> &mut Self {
        let mut d = String::new();
        for (i, &p) in pts.iter().enumerate() {
            let (x, y) = self.map(p);
            write!(d, "{}{x:.6},{y:.6} ", if i == 0 { "M" } else { "L" }).unwrap();
        }
        d.push('Z');
        let sw = self.stroke();
        writeln!(self.body, r#"  <path d="{d}" fill="{fill}" stroke="{stroke}" stroke-width="{sw:.6}"/>"#).unwrap();
        self
    }

    pub fn segment<T: Real>(&mut self, a: Point2<T>, b: Point2<T>, stroke: &str) -> &mut Self {
        let ((x1, y1), (x2, y2)) = (self.map(a), self.map(b));
        let sw = self.stroke() * 0.6;
        writeln!(
            self.body,
            r#"  <line x1="{x1:.6}" y1="{y1:.6}" x2="{x2:.6}" y2="{y2:.6}" stroke="{stroke}" stroke-width="{sw:.6}"/>"#
        )
        .unwrap();
        self
    }

    pub fn dot<T: Real>(&mut self, p: Point2<T>, fill: &str) -> &mut Self {
        let (x, y) = self.map(p);
        let r = self.stroke() * 1.5;
        writeln!(self.body, r#"  <circle cx="{x:.6}" cy="{y:.6}" r="{r:.6}" fill="{fill}"/>"#).unwrap();
        self
    }

    pub fn finish(&self) -> String {
        let (w, h) = (self.hi.0 - self.lo.0, self.hi.1 - self.lo.1);
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w:.6} {h:.6}\">\n{}</svg>\n",
            self.body
        )
    }
}
