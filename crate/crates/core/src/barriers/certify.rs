//! Grid certification that a power barrier is a super-solution on a domain:
//! `F[W] ≤ 0` at quasi-random interior points and `W ≥ 0` on boundary
//! samples, with support failures counted instead of silently skipped.

use serde::Serialize;

use super::{eval_f_of_w, eval_w, BarrierError, BarrierFamily, BarrierParams};
use crate::geometry::{ConvexPrimitive, DomainSpec};
use crate::sampling::QuasiRandom2;
use crate::vec2::RigidMotion;
use crate::Vec2;

/// Verdict of a certification sweep.
#[derive(Clone, Debug, Serialize)]
pub struct CertificationReport {
    pub family: BarrierFamily,
    pub params: BarrierParams,
    pub samples: usize,
    pub boundary_samples: usize,
    pub seed: u64,
    pub max_f: f64,
    pub min_boundary_w: f64,
    /// Sample points where the barrier support failed to cover the domain.
    pub unsupported_samples: usize,
    pub pass: bool,
}

const F_TOL: f64 = 1e-12;
const BOUNDARY_TOL: f64 = -1e-12;

/// Frame of the barrier: local coordinates anchored at the power-cap apex
/// with the cap axis vertical.
fn anchor_frame(domain: &DomainSpec, params: &BarrierParams) -> Result<RigidMotion, BarrierError> {
    let cap = domain
        .primitives()
        .iter()
        .find_map(|p| match *p {
            ConvexPrimitive::PowerCap { apex, axis, exponent, .. } => {
                Some((apex, axis, exponent))
            }
            _ => None,
        })
        .ok_or(BarrierError::NoAnchor)?;
    let (apex, axis, exponent) = cap;
    if (exponent - params.a).abs() > 1e-9 {
        return Err(BarrierError::ExponentMismatch { domain_a: exponent, barrier_a: params.a });
    }
    // Rotation sending the cap axis to +e_y, then apex to the origin.
    let rot = RigidMotion { cos: axis.y, sin: axis.x, shift: Vec2::ZERO };
    let shift = -rot.apply_vector(apex);
    Ok(RigidMotion { cos: rot.cos, sin: rot.sin, shift })
}

/// Evaluate `F[W]` at `samples` quasi-random interior points and `W` at
/// boundary samples; the report passes iff `max F ≤ 1e−12`, the boundary
/// minimum of `W` is ≥ −1e−12, and the support covered every sample.
pub fn certify_supersolution(
    params: &BarrierParams,
    domain: &DomainSpec,
    samples: usize,
    seed: u64,
) -> Result<CertificationReport, BarrierError> {
    let frame = anchor_frame(domain, params)?;
    let (lo, hi) = domain.bounding_box();
    let span = hi - lo;

    let mut seq = QuasiRandom2::seeded(seed);
    let mut max_f = f64::NEG_INFINITY;
    let mut unsupported = 0usize;
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    let budget = samples.saturating_mul(64).max(1024);
    while accepted < samples && attempts < budget {
        attempts += 1;
        let (qx, qy) = seq.next_point();
        let p = Vec2::new(lo.x + qx * span.x, lo.y + qy * span.y);
        if !domain.contains(p) {
            continue;
        }
        accepted += 1;
        let local = frame.apply(p);
        let (r, x_n) = (local.x.abs(), local.y);
        match eval_f_of_w(params, r, x_n) {
            Ok(f) => max_f = max_f.max(f),
            Err(BarrierError::OutsideSupport) | Err(BarrierError::NonpositiveHeight) => {
                unsupported += 1;
            }
            Err(e) => return Err(e),
        }
    }

    let boundary_samples = (samples / 32).clamp(256, 8192);
    let mut min_w = f64::INFINITY;
    for k in 0..boundary_samples {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / boundary_samples as f64;
        let p = domain.ray_boundary_point(Vec2::from_angle(theta));
        let local = frame.apply(p);
        let (r, x_n) = (local.x.abs(), local.y);
        match eval_w(params, r, x_n) {
            Ok(w) => min_w = min_w.min(w),
            Err(BarrierError::OutsideSupport) => {
                // Radicand below zero on the boundary: record how far.
                let radicand = (x_n / params.epsilon).powf(2.0 / params.a) - r * r;
                min_w = min_w.min(-(-radicand).powf(1.0 / params.b));
                unsupported += 1;
            }
            Err(BarrierError::NonpositiveHeight) => {
                // The apex itself: W = 0 there by continuity.
                min_w = min_w.min(0.0);
            }
            Err(e) => return Err(e),
        }
    }

    let pass = accepted == samples
        && max_f <= F_TOL
        && min_w >= BOUNDARY_TOL
        && unsupported == 0;
    Ok(CertificationReport {
        family: params.family,
        params: *params,
        samples: accepted,
        boundary_samples,
        seed,
        max_f,
        min_boundary_w: min_w,
        unsupported_samples: unsupported,
        pass,
    })
}
