//! Solver output shared by every variant.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::contact::{detect_contacts, ContactSet};
use crate::geom::{Polygon, Triangle};
use crate::scalar::{wrap_two_pi, Real};

/// The eight problem variants: container class × angle constraint × orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    ConvexAbAxis,
    ConvexAbRotating,
    ConvexAlphaAxis,
    ConvexAlphaRotating,
    SimpleAbAxis,
    SimpleAbRotating,
    SimpleAlphaAxis,
    SimpleAlphaRotating,
}

/// How the answer was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Method {
    Exact,
    /// Guaranteed `area >= (1 - eps) * opt`.
    Fptas { eps: f64 },
    /// Orientation sampling with local refinement; a lower bound.
    Sampled { samples: usize },
    /// Multistart search; a lower bound.
    Search,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SolveStats {
    pub candidates_evaluated: u64,
    /// Seconds.
    pub wall_time: f64,
    pub samples_used: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport<T> {
    pub variant: Variant,
    pub method: Method,
    pub triangle: Triangle<T>,
    pub area: T,
    /// Inclination of the base in `[0, 2π)`.
    pub orientation: T,
    /// Angle at `p`.
    pub alpha: T,
    /// Angle at `q`.
    pub beta: T,
    pub contacts: Option<ContactSet>,
    pub stats: SolveStats,
    pub warnings: Vec<String>,
}

impl<T: Real> SolveReport<T> {
    pub fn new(variant: Variant, method: Method, poly: &Polygon<T>, triangle: Triangle<T>, stats: SolveStats) -> Self {
        let tol = poly.tolerance() * T::lit(100.0);
        Self {
            variant,
            method,
            area: triangle.area(),
            orientation: triangle.orientation(),
            alpha: triangle.angle_p(),
            beta: triangle.angle_q(),
            contacts: Some(detect_contacts(poly, &triangle, tol)),
            triangle,
            stats,
            warnings: Vec::new(),
        }
    }

    pub fn with_warning(mut self, w: impl Into<String>) -> Self {
        self.warnings.push(w.into());
        self
    }

    pub fn is_exact(&self) -> bool {
        self.method == Method::Exact
    }
}

/// Relative slack under which two areas count as equal.
pub const AREA_TIE: f64 = 1e-9;

/// Tie-break key: smaller wins among equal areas.
pub fn tie_key<T: Real>(t: &Triangle<T>) -> (T, T, T) {
    (wrap_two_pi(t.orientation()), t.p.x, t.p.y)
}

fn key_less<T: Real>(a: (T, T, T), b: (T, T, T)) -> bool {
    a.partial_cmp(&b) == Some(std::cmp::Ordering::Less)
}

/// Running maximum with the deterministic tie-break.
#[derive(Debug, Clone)]
pub struct Best<T> {
    tri: Option<Triangle<T>>,
    area: T,
    max_seen: T,
    tie: T,
    pub candidates: u64,
}

impl<T: Real> Default for Best<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Real> Best<T> {
    pub fn new() -> Self {
        Self { tri: None, area: T::zero(), max_seen: T::zero(), tie: T::lit(AREA_TIE), candidates: 0 }
    }

    /// Ties only on exactly equal areas, so the incumbent is always a
    /// largest candidate.
    pub fn strict() -> Self {
        Self { tie: T::zero(), ..Self::new() }
    }

    /// Offers a candidate; returns whether it became the incumbent.
    pub fn offer(&mut self, tri: Triangle<T>) -> bool {
        self.candidates += 1;
        self.offer_uncounted(tri)
    }

    fn offer_uncounted(&mut self, tri: Triangle<T>) -> bool {
        let area = tri.area();
        if !(area > T::zero()) || !area.is_finite() {
            return false;
        }
        let tie = self.tie;
        let take = match &self.tri {
            None => true,
            Some(cur) => {
                area > self.area * (T::one() + tie)
                    || (area >= self.max_seen * (T::one() - tie) && key_less(tie_key(&tri), tie_key(cur)))
            }
        };
        self.max_seen = self.max_seen.max(area);
        if take {
            self.tri = Some(tri);
            self.area = area;
        }
        take
    }

    pub fn merge(mut self, other: Best<T>) -> Self {
        self.candidates += other.candidates;
        if let Some(t) = other.tri {
            self.offer_uncounted(t);
        }
        self
    }

    pub fn area(&self) -> T {
        self.area
    }

    pub fn triangle(&self) -> Option<Triangle<T>> {
        self.tri
    }
}

/// Wall-clock timer for [`SolveStats::wall_time`].
pub(crate) struct Timer(Instant);

impl Timer {
    pub fn start() -> Self {
        Timer(Instant::now())
    }

    pub fn seconds(&self) -> f64 {
        self.0.elapsed().as_secs_f64()
    }
}
