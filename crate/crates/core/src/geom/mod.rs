//! Geometric primitives, transforms and containment predicates.

mod angles;
pub mod clip;
mod hull;
mod metrics;
mod point;
mod polygon;
pub mod predicates;
mod ray;
mod transform;
mod triangle;

pub use angles::{check_alpha, AnglePair};
pub use clip::convex_intersect;
pub use hull::convex_hull;
pub use metrics::{directional_width, polygon_metrics, PolygonMetrics};
pub use point::Point2;
pub use polygon::{merge_collinear, Polygon};
pub use predicates::orientation;
pub use ray::{ray_exit, ray_shoot};
pub use transform::{phi_inverse, phi_params, phi_transform, shear_alpha, Shear};
pub use triangle::{triangle_from_base, triangle_in_polygon, Triangle};
