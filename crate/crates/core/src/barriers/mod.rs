//! Explicit super-solutions ("barriers") for the minimal-graph operator
//!
//! ```text
//! F[u] = Δu − u_i u_j u_ij / (1 + |∇u|²) + n/u.
//! ```
//!
//! A barrier is a function `W` with `F[W] ≤ 0` in the domain and `W ≥ 0` on
//! its boundary; the comparison principle then forces the solution under it,
//! which is where every boundary Hölder estimate in this crate comes from.
//!
//! Three constructions are implemented in closed form:
//!
//! - the power family `W = ((x_n/ε)^{2/a} − |x'|²)^{1/b}` in its two
//!   parameter regimes (`a > 2, b = 2` with a chosen `ε`, certifying the
//!   global `C^{1/a}` estimate; and `a ∈ (1,2), b ∈ (2,3), ε = 1` on a
//!   rescaled region, certifying the local axis estimate),
//! - the flat barrier `U = (n+1)² x_n^{1/(n+1)} − x_n^{2−1/(n+1)}` for
//!   arbitrary convex domains of unit diameter.
//!
//! All derivatives are analytic; `F[W]` is assembled both from the eight-term
//! sum decomposition and directly from the operator, and the two routes are
//! cross-checked in the tests.

mod certify;
mod family;
mod flat;
mod local;

pub use certify::{certify_supersolution, CertificationReport};
pub use family::{
    choose_epsilon, eval_f_direct, eval_f_of_w, eval_j_decomposition, eval_w,
    eval_w_derivatives, JDecomposition, WDerivatives,
};
pub use flat::{eval_flat_barrier, flat_barrier_bound, FlatBarrier};
pub use local::{choose_scale, eval_phi, LocalScaling};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BarrierError {
    #[error("wrong barrier family: {0}")]
    WrongFamily(String),
    #[error("invalid barrier parameters: {0}")]
    BadParams(String),
    #[error("point lies outside the barrier support")]
    OutsideSupport,
    #[error("evaluation point must satisfy x_n > 0")]
    NonpositiveHeight,
    #[error("no admissible scale above {0:.3e}")]
    NoAdmissibleScale(f64),
    #[error("domain has no power-cap anchor for certification")]
    NoAnchor,
    #[error("domain exponent {domain_a} does not match barrier exponent {barrier_a}")]
    ExponentMismatch { domain_a: f64, barrier_a: f64 },
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeometryError),
}

/// Which parameter regime of the power barrier is in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BarrierFamily {
    /// `a > 2`, `b = 2`, `ε` from [`choose_epsilon`]: global barrier on an
    /// `(a, η)`-type domain.
    PowerGlobal,
    /// `a ∈ (1, 2)`, `b ∈ (2, 3)`, `ε = 1`: barrier on the rescaled region
    /// `{ |x'|^a ≤ x_n ≤ A }` around a single boundary point.
    PowerLocal,
}

/// Parameters `(a, b, ε, n)` of the power barrier.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BarrierParams {
    pub family: BarrierFamily,
    pub a: f64,
    pub b: f64,
    pub epsilon: f64,
    pub n: usize,
}

impl BarrierParams {
    /// Global-regime parameters (`b = 2`).
    pub fn power_global(a: f64, epsilon: f64, n: usize) -> Result<Self, BarrierError> {
        if !(a > 2.0) {
            return Err(BarrierError::WrongFamily(format!(
                "global power barrier needs a > 2, got a = {a}"
            )));
        }
        if !(epsilon > 0.0) {
            return Err(BarrierError::BadParams(format!("epsilon must be positive, got {epsilon}")));
        }
        if n < 2 {
            return Err(BarrierError::BadParams(format!("dimension must be >= 2, got {n}")));
        }
        Ok(BarrierParams { family: BarrierFamily::PowerGlobal, a, b: 2.0, epsilon, n })
    }

    /// Local-regime parameters (`ε = 1`).
    pub fn power_local(a: f64, b: f64, n: usize) -> Result<Self, BarrierError> {
        if !(a > 1.0 && a < 2.0) {
            return Err(BarrierError::WrongFamily(format!(
                "local power barrier needs a in (1,2), got a = {a}"
            )));
        }
        if !(b > 2.0 && b < 3.0) {
            return Err(BarrierError::BadParams(format!("b must lie in (2,3), got {b}")));
        }
        if n < 2 {
            return Err(BarrierError::BadParams(format!("dimension must be >= 2, got {n}")));
        }
        Ok(BarrierParams { family: BarrierFamily::PowerLocal, a, b, epsilon: 1.0, n })
    }
}
