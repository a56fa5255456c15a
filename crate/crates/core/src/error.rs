use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("vertex {index} repeats vertex {first}")]
    RepeatedVertex { index: usize, first: usize },
    #[error("vertices {prev}, {index}, {next} are collinear")]
    Collinear { prev: usize, index: usize, next: usize },
    #[error("polygon has zero area")]
    ZeroArea,
    #[error("edges {0} and {1} intersect")]
    SelfIntersecting(usize, usize),
    #[error("polygon is not convex (reflex vertex {0})")]
    NotConvex(usize),
    #[error("invalid angles: {0}")]
    InvalidAngles(String),
    #[error("epsilon must lie in (0, 1), got {0}")]
    InvalidEpsilon(f64),
    #[error("base endpoints coincide")]
    DegenerateBase,
    #[error("point lies outside the polygon")]
    PointOutside,
    #[error("anchor must lie strictly inside the polygon")]
    AnchorNotInterior,
    #[error("polygon has empty interior")]
    EmptyInterior,
    #[error("no inscribed triangle of positive area was found")]
    NoTriangle,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
