//! Bounded convex domains and their boundary geometry.
//!
//! A domain is an intersection of convex primitives (half-planes, disks,
//! power caps). The module computes boundary distances, diameters and
//! exterior-sphere radii, and classifies boundary flatness: a boundary point
//! is `(a, η)`-type when, after moving it to the origin with the supporting
//! line horizontal, the whole domain sits above `x_n = η |x'|^a`. Flat
//! boundary pieces get `a = ∞`.

mod classify;
mod domain;
pub mod presets;
mod primitive;

pub use classify::{
    boundary_frame, classify_boundary_point, classify_domain, enclosing_ball_check,
    exterior_sphere_radius, geometry_summary, BallCheckReport, BoundaryClassification,
    GeometrySummary, ETA_MIN,
};
pub use domain::DomainSpec;
pub use primitive::ConvexPrimitive;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("domain has no primitives")]
    EmptyPrimitives,
    #[error("dimension must be at least 2, got {0}")]
    BadDimension(usize),
    #[error("interior point is not strictly inside the primitive intersection")]
    BadInteriorPoint,
    #[error("domain is unbounded along direction ({0}, {1})")]
    Unbounded(f64, f64),
    #[error("invalid primitive: {0}")]
    BadPrimitive(String),
    #[error("for n >= 3 every primitive must be symmetric about the vertical axis")]
    NotAxisymmetric,
    #[error("exterior point")]
    ExteriorPoint,
    #[error("point is not on the boundary (distance {0:.3e})")]
    NotOnBoundary(f64),
    #[error("boundary sampling produced no usable heights near the anchor")]
    NoLocalSamples,
    #[error("sample count must be at least {min}, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("classification failed at boundary sample {index}: {source}")]
    AtSample {
        index: usize,
        #[source]
        source: Box<GeometryError>,
    },
}
