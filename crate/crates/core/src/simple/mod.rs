//! Axis-aligned (α,β)-triangles in simple polygons.

mod axis;
mod features;
mod scale;
mod subdivision;

pub use axis::{largest_ab_simple_axis, largest_ab_simple_axis_with};
pub(crate) use axis::solve_axis;
pub use scale::{max_inscribed_scale, ScaleResult};
pub use subdivision::{build_subdivision, EventKind, Subdivision, SubdivisionEdge, SubdivisionVertex, SweepEvent};
