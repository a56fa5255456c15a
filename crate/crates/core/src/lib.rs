#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approx;
pub mod contact;
pub mod convex;
pub mod error;
pub mod geom;
pub mod lp;
pub mod oracle;
pub mod report;
pub mod rotation;
pub mod scalar;
pub mod simple;
pub mod svg;

pub use error::{Error, Result};
pub use report::{Method, SolveReport, SolveStats, Variant};
pub use scalar::Real;

pub type Point = geom::Point2<f64>;
pub type Polygon = geom::Polygon<f64>;
pub type Triangle = geom::Triangle<f64>;
pub type AnglePair = geom::AnglePair<f64>;
