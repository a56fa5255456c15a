//! Exact solvers for convex containers.

mod ab_rotating;
mod alpha_axis;
mod alpha_rotating;
mod homothet;

pub use ab_rotating::largest_ab_convex_rotating;
pub use alpha_axis::largest_alpha_convex_axis;
pub(crate) use alpha_axis::alpha_axis_ring;
pub use alpha_rotating::{best_on_edge_triple, largest_alpha_convex_rotating};
pub use homothet::largest_homothet_convex;
