use serde::Serialize;

use super::{DomainSpec, GeometryError};
use crate::vec2::RigidMotion;
use crate::Vec2;

/// Floor separating "flat" (`a = ∞`) from a genuinely positive `η`.
pub const ETA_MIN: f64 = 1e-8;

/// A candidate exponent is accepted only if the `η` estimate on the
/// inner half of the sampling window has not decayed below this fraction
/// of the outer-half estimate. A too-small candidate `a` on a boundary of
/// true contact order `a* > a` decays like `|x'|^{a*−a}` toward the point,
/// so its inner estimate collapses; the correct candidate stabilizes.
const WINDOW_RATIO_GUARD: f64 = 0.5;

/// Log-spaced horizontal offsets per side of the anchor.
const SAMPLES_PER_SIDE: usize = 40;

/// Span of the sampling window in decades: `|x'| ∈ [μ·10⁻³, μ]`.
const WINDOW_DECADES: f64 = 3.0;

/// Classification of one boundary point: after the rigid motion `frame`
/// the point sits at the origin, the domain in the upper half-plane, and
/// all sampled boundary heights satisfy `x_n ≥ (η − tol)|x'|^a`.
#[derive(Clone, Debug)]
pub struct BoundaryClassification {
    pub point: Vec2,
    /// Flatness exponent; `f64::INFINITY` encodes flat contact.
    pub a: f64,
    /// Coefficient estimate; `None` when `a = ∞`.
    pub eta: Option<f64>,
    /// World-to-local normalizing motion.
    pub frame: RigidMotion,
}

/// Whole-domain geometric invariants.
#[derive(Clone, Debug, Serialize)]
pub struct GeometrySummary {
    pub diameter: f64,
    pub exterior_sphere_radius: Option<f64>,
    /// Boundary-curvature lower bound, available for all-disk presets.
    pub lambda: Option<f64>,
    pub samples: usize,
}

/// Outcome of checking `Ω ⊆ B_R(z + R·inward)` on boundary samples.
#[derive(Clone, Debug, Serialize)]
pub struct BallCheckReport {
    pub center: Vec2,
    pub radius: f64,
    /// `max over samples of (|sample − center| − R)`; nonpositive means the
    /// sampled boundary fits inside the ball.
    pub max_violation: f64,
    pub samples: usize,
}

/// Rigid motion taking `x0` to the origin and the inward normal to `+e_y`.
pub fn boundary_frame(domain: &DomainSpec, x0: Vec2) -> RigidMotion {
    let inward = -domain.outward_normal(x0);
    // Rotation with columns chosen so inward ↦ (0, 1).
    let rot = RigidMotion { cos: inward.y, sin: inward.x, shift: Vec2::ZERO };
    let shift = -rot.apply_vector(x0);
    RigidMotion { cos: rot.cos, sin: rot.sin, shift }
}

/// Local boundary heights `t(s)` over the supporting line at the anchor.
struct LocalHeights {
    /// Signed offsets `s` paired with boundary heights `t ≥ 0`.
    samples: Vec<(f64, f64)>,
    /// Geometric split between inner and outer half-windows.
    s_split: f64,
}

fn local_heights(
    domain: &DomainSpec,
    frame: &RigidMotion,
    diameter: f64,
) -> Result<LocalHeights, GeometryError> {
    let inv = frame.inverse();
    let feature = domain
        .primitives()
        .iter()
        .map(|p| p.feature_size())
        .fold(f64::INFINITY, f64::min);
    let mu = (0.1 * diameter).min(0.5 * feature);
    let s_lo = mu * 10f64.powf(-WINDOW_DECADES);
    let s_split = (s_lo * mu).sqrt();

    let mut samples = Vec::with_capacity(2 * SAMPLES_PER_SIDE);
    for side in [-1.0, 1.0] {
        for k in 0..SAMPLES_PER_SIDE {
            let frac = k as f64 / (SAMPLES_PER_SIDE - 1) as f64;
            let s = side * s_lo * (mu / s_lo).powf(frac);
            if let Some(t) = boundary_height(domain, &inv, s, diameter) {
                samples.push((s, t.max(0.0)));
            }
        }
    }
    let inner = samples.iter().filter(|(s, _)| s.abs() <= s_split).count();
    if inner < 8 || samples.len() - inner < 8 {
        return Err(GeometryError::NoLocalSamples);
    }
    Ok(LocalHeights { samples, s_split })
}

/// Smallest `t ≥ 0` with `(s, t)` inside the domain, in frame coordinates.
/// Log scan for a bracket, then bisection on membership.
fn boundary_height(domain: &DomainSpec, inv: &RigidMotion, s: f64, diameter: f64) -> Option<f64> {
    let world = |t: f64| inv.apply(Vec2::new(s, t));
    if domain.contains(world(0.0)) {
        return Some(0.0);
    }
    let t_min = 1e-13 * diameter;
    let t_max = 1.05 * diameter;
    let scans = 96;
    let mut lo = 0.0f64;
    let mut hi = None;
    for k in 0..=scans {
        let t = t_min * (t_max / t_min).powf(k as f64 / scans as f64);
        if domain.contains(world(t)) {
            hi = Some(t);
            break;
        }
        lo = t;
    }
    let mut hi = hi?;
    for _ in 0..110 {
        let mid = 0.5 * (lo + hi);
        if domain.contains(world(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 1e-18 * diameter {
            break;
        }
    }
    Some(hi)
}

/// Windowed `η` estimates for one candidate exponent: minimum of `t/|s|^a`
/// over the inner and outer half-windows.
fn eta_windows(heights: &LocalHeights, a: f64) -> (f64, f64) {
    let mut inner = f64::INFINITY;
    let mut outer = f64::INFINITY;
    for &(s, t) in &heights.samples {
        let ratio = t / s.abs().powf(a);
        if s.abs() <= heights.s_split {
            inner = inner.min(ratio);
        } else {
            outer = outer.min(ratio);
        }
    }
    (inner, outer)
}

/// Classify one boundary point: smallest candidate `a` whose `η` estimate
/// stays above [`ETA_MIN`] without decaying toward the anchor; `a = ∞` if
/// every finite candidate fails (flat contact).
pub fn classify_boundary_point(
    domain: &DomainSpec,
    x0: Vec2,
    a_candidates: &[f64],
) -> Result<BoundaryClassification, GeometryError> {
    let diameter = domain.diameter(256)?;
    let dist = domain
        .primitives()
        .iter()
        .map(|p| p.boundary_distance(x0))
        .fold(f64::INFINITY, f64::min);
    if dist.abs() > 1e-7 * diameter {
        return Err(GeometryError::NotOnBoundary(dist));
    }
    let frame = boundary_frame(domain, x0);
    let heights = local_heights(domain, &frame, diameter)?;

    let mut cands: Vec<f64> = a_candidates.iter().copied().filter(|a| a.is_finite()).collect();
    cands.sort_by(f64::total_cmp);
    for &a in &cands {
        let (inner, outer) = eta_windows(&heights, a);
        if inner >= ETA_MIN && inner >= WINDOW_RATIO_GUARD * outer {
            return Ok(BoundaryClassification {
                point: x0,
                a,
                eta: Some(inner.min(outer)),
                frame,
            });
        }
    }
    Ok(BoundaryClassification { point: x0, a: f64::INFINITY, eta: None, frame })
}

/// Classify the whole domain from `m` boundary samples: the worst (largest)
/// per-point exponent, with the smallest admissible `η` at that exponent.
/// `(∞, None)` as soon as any sample shows flat contact.
pub fn classify_domain(
    domain: &DomainSpec,
    m: usize,
    a_candidates: &[f64],
) -> Result<(f64, Option<f64>), GeometryError> {
    if m < 16 {
        return Err(GeometryError::TooFewSamples { min: 16, got: m });
    }
    let diameter = domain.diameter(256.max(m))?;
    let anchors = domain.boundary_samples(m);

    let mut locals = Vec::with_capacity(m);
    let mut a_max = 1.0f64;
    for (index, &x0) in anchors.iter().enumerate() {
        let at = |source: GeometryError| GeometryError::AtSample {
            index,
            source: Box::new(source),
        };
        let frame = boundary_frame(domain, x0);
        let heights = local_heights(domain, &frame, diameter).map_err(at)?;

        let mut point_a = f64::INFINITY;
        let mut cands: Vec<f64> =
            a_candidates.iter().copied().filter(|a| a.is_finite()).collect();
        cands.sort_by(f64::total_cmp);
        for &a in &cands {
            let (inner, outer) = eta_windows(&heights, a);
            if inner >= ETA_MIN && inner >= WINDOW_RATIO_GUARD * outer {
                point_a = a;
                break;
            }
        }
        if point_a.is_infinite() {
            return Ok((f64::INFINITY, None));
        }
        a_max = a_max.max(point_a);
        locals.push(heights);
    }

    // Every point admits a positive η at the domain exponent a_max; the
    // domain coefficient is the worst one.
    let mut eta = f64::INFINITY;
    for heights in &locals {
        let (inner, outer) = eta_windows(heights, a_max);
        eta = eta.min(inner.min(outer));
    }
    Ok((a_max, Some(eta)))
}

/// Smallest `R` (bisection to relative tolerance 1e-6) such that every
/// boundary sample `x` with inward normal `w` yields a ball `B_R(x + Rw)`
/// containing all samples. `None` when no `R ≤ 10·d_Ω` works — under the
/// enclosing-ball definition this is the honest answer for domains with
/// flat boundary pieces, where tangent balls exclude the rest of the face.
pub fn exterior_sphere_radius(
    domain: &DomainSpec,
    m: usize,
) -> Result<Option<f64>, GeometryError> {
    if m < 16 {
        return Err(GeometryError::TooFewSamples { min: 16, got: m });
    }
    let diameter = domain.diameter(256.max(m))?;
    let samples = domain.boundary_samples(m);
    let inward: Vec<Vec2> = samples.iter().map(|&x| -domain.outward_normal(x)).collect();
    let slack = 1e-6 * diameter;

    let fits = |r: f64| -> bool {
        samples.iter().zip(&inward).all(|(&x, &w)| {
            let center = x + w * r;
            samples.iter().all(|&y| y.dist(center) <= r + slack)
        })
    };

    let mut hi = 10.0 * diameter;
    if !fits(hi) {
        return Ok(None);
    }
    let mut lo = 1e-9 * diameter;
    if fits(lo) {
        return Ok(Some(lo));
    }
    while hi - lo > 1e-6 * hi {
        let mid = 0.5 * (lo + hi);
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(hi))
}

/// Check `Ω ⊆ B_R(z + R·inward)` on `m` boundary samples and report the
/// largest signed violation.
pub fn enclosing_ball_check(
    domain: &DomainSpec,
    z: Vec2,
    r: f64,
    m: usize,
) -> Result<BallCheckReport, GeometryError> {
    if m < 16 {
        return Err(GeometryError::TooFewSamples { min: 16, got: m });
    }
    let center = z - domain.outward_normal(z) * r;
    let samples = domain.boundary_samples(m);
    let max_violation = samples
        .iter()
        .map(|&y| y.dist(center) - r)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(BallCheckReport { center, radius: r, max_violation, samples: m })
}

/// Diameter, exterior-sphere radius and (for all-disk presets) the
/// curvature lower bound.
pub fn geometry_summary(domain: &DomainSpec, m: usize) -> Result<GeometrySummary, GeometryError> {
    let diameter = domain.diameter(m.max(256))?;
    let r_ext = exterior_sphere_radius(domain, m)?;
    let lambda = domain
        .primitives()
        .iter()
        .map(|p| match p {
            super::ConvexPrimitive::Disk { radius, .. } => Some(1.0 / radius),
            _ => None,
        })
        .try_fold(f64::INFINITY, |acc, k| k.map(|k| acc.min(k)));
    Ok(GeometrySummary { diameter, exterior_sphere_radius: r_ext, lambda, samples: m })
}
