//! Numerical laboratory for the Dirichlet problem of minimal graphs over
//! convex domains in hyperbolic space:
//!
//! ```text
//! Δu − u_i u_j u_ij / (1 + |∇u|²) + n/u = 0   in Ω,
//! u = 0 on ∂Ω,   u > 0 in Ω,
//! ```
//!
//! for bounded convex `Ω ⊂ R^n`. The singular `n/u` term forces `u` to leave
//! the boundary like a power of the boundary distance; how fast depends only
//! on the flatness of `∂Ω`.
//!
//! The crate provides four subsystems:
//!
//! - [`geometry`]: convex domains as intersections of primitives, boundary
//!   distances, diameters, exterior-sphere radii and `(a, η)` flatness
//!   classification of boundary points and whole domains.
//! - [`solver`]: a damped-Newton finite-difference solver on cut-cell grids
//!   with continuation in a boundary lift `τ → 0`, plus an exact radial
//!   solver for balls in any dimension.
//! - [`barriers`]: closed-form super-solutions (the `(a, b, ε)` family, the
//!   flat barrier, and the small-scale local family) with their analytic
//!   derivatives and grid certification of `F[W] ≤ 0`.
//! - [`regularity`]: boundary profiles of computed solutions, log-log Hölder
//!   exponent fits, explicit constant checks and barrier comparisons.

pub mod barriers;
pub mod geometry;
pub mod regularity;
pub mod sampling;
pub mod solver;

mod vec2;

pub use vec2::Vec2;
