use serde::{Deserialize, Serialize};

use super::GeometryError;
use crate::Vec2;

/// Convex building block of a domain. Every domain is an intersection of
/// these; each admits an exact (or cheaply projected) boundary distance.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConvexPrimitive {
    /// Closed half-plane `{ x : normal · x ≤ offset }`, `normal` a unit vector.
    HalfPlane { normal: Vec2, offset: f64 },
    /// Closed disk of the given radius.
    Disk { center: Vec2, radius: f64 },
    /// Truncated power region: in the frame with origin `apex` and vertical
    /// `axis`, the set `{ (s, t) : t ≥ coefficient · |s|^exponent, t ≤ height }`.
    /// Realizes an exact `(a, η)`-type boundary point at its apex.
    PowerCap {
        apex: Vec2,
        axis: Vec2,
        exponent: f64,
        coefficient: f64,
        height: f64,
    },
}

impl ConvexPrimitive {
    pub fn validate(&self) -> Result<(), GeometryError> {
        let bad = |msg: &str| Err(GeometryError::BadPrimitive(msg.to_string()));
        match *self {
            ConvexPrimitive::HalfPlane { normal, .. } => {
                if (normal.norm() - 1.0).abs() > 1e-9 {
                    return bad("half-plane normal must be a unit vector");
                }
            }
            ConvexPrimitive::Disk { radius, .. } => {
                if !(radius > 0.0) {
                    return bad("disk radius must be positive");
                }
            }
            ConvexPrimitive::PowerCap { axis, exponent, coefficient, height, .. } => {
                if (axis.norm() - 1.0).abs() > 1e-9 {
                    return bad("power-cap axis must be a unit vector");
                }
                if !(exponent >= 1.0) {
                    return bad("power-cap exponent must be >= 1");
                }
                if !(coefficient > 0.0) {
                    return bad("power-cap coefficient must be positive");
                }
                if !(height > 0.0) {
                    return bad("power-cap height must be positive");
                }
            }
        }
        Ok(())
    }

    /// Closed membership test, exact arithmetic on the defining inequalities.
    pub fn contains(&self, p: Vec2) -> bool {
        match *self {
            ConvexPrimitive::HalfPlane { normal, offset } => normal.dot(p) <= offset,
            ConvexPrimitive::Disk { center, radius } => p.dist(center) <= radius,
            ConvexPrimitive::PowerCap { exponent, coefficient, height, .. } => {
                let (s, t) = self.cap_local(p);
                t <= height && t >= coefficient * s.abs().powf(exponent)
            }
        }
    }

    /// Distance from a point of the primitive to the primitive's boundary.
    /// Exact for half-planes and disks; 1-D projection for the power curve.
    pub fn boundary_distance(&self, p: Vec2) -> f64 {
        match *self {
            ConvexPrimitive::HalfPlane { normal, offset } => offset - normal.dot(p),
            ConvexPrimitive::Disk { center, radius } => radius - p.dist(center),
            ConvexPrimitive::PowerCap { exponent, coefficient, height, .. } => {
                let (s, t) = self.cap_local(p);
                let lid = height - t;
                let curve = power_curve_distance(exponent, coefficient, s.abs(), t);
                lid.min(curve)
            }
        }
    }

    /// Outward unit normal at a boundary point of the primitive. At the
    /// power-cap lid corner and at an `a = 1` apex the adjacent normals are
    /// averaged (any supporting direction is admissible there).
    pub fn outward_normal(&self, p: Vec2, tol: f64) -> Vec2 {
        match *self {
            ConvexPrimitive::HalfPlane { normal, .. } => normal,
            ConvexPrimitive::Disk { center, .. } => {
                (p - center).normalized().unwrap_or(Vec2::new(0.0, 1.0))
            }
            ConvexPrimitive::PowerCap { axis, exponent, coefficient, height, .. } => {
                let s_dir = axis.perp();
                let (s, t) = self.cap_local(p);
                let lid_active = height - t <= tol;
                let curve_active =
                    power_curve_distance(exponent, coefficient, s.abs(), t) <= tol;
                let mut n = Vec2::ZERO;
                if lid_active {
                    n = n + axis;
                }
                if curve_active || !lid_active {
                    // Gradient of  coefficient·|s|^a − t  (outward for the cap).
                    let gs = if s == 0.0 {
                        0.0
                    } else {
                        coefficient * exponent * s.abs().powf(exponent - 1.0) * s.signum()
                    };
                    let g = (s_dir * gs - axis).normalized().unwrap_or(-axis);
                    n = n + g;
                }
                n.normalized().unwrap_or(axis)
            }
        }
    }

    /// Characteristic length below which the primitive's boundary looks like
    /// a single smooth piece; used to cap classification windows.
    pub fn feature_size(&self) -> f64 {
        match *self {
            ConvexPrimitive::HalfPlane { .. } => f64::INFINITY,
            ConvexPrimitive::Disk { radius, .. } => radius,
            ConvexPrimitive::PowerCap { height, .. } => height,
        }
    }

    /// Image of the primitive under uniform scaling about the origin.
    pub fn scaled(&self, factor: f64) -> ConvexPrimitive {
        match *self {
            ConvexPrimitive::HalfPlane { normal, offset } => {
                ConvexPrimitive::HalfPlane { normal, offset: offset * factor }
            }
            ConvexPrimitive::Disk { center, radius } => {
                ConvexPrimitive::Disk { center: center * factor, radius: radius * factor }
            }
            ConvexPrimitive::PowerCap { apex, axis, exponent, coefficient, height } => {
                ConvexPrimitive::PowerCap {
                    apex: apex * factor,
                    axis,
                    exponent,
                    // t = η|s|^a  maps to  t' = η λ^{1−a} |s'|^a  under x' = λx.
                    coefficient: coefficient * factor.powf(1.0 - exponent),
                    height: height * factor,
                }
            }
        }
    }

    /// Image under a rigid motion.
    pub fn transformed(&self, m: &crate::vec2::RigidMotion) -> ConvexPrimitive {
        match *self {
            ConvexPrimitive::HalfPlane { normal, offset } => {
                let n = m.apply_vector(normal);
                // normal·x ≤ offset  becomes  n·y ≤ offset + n·shift.
                ConvexPrimitive::HalfPlane { normal: n, offset: offset + n.dot(m.shift) }
            }
            ConvexPrimitive::Disk { center, radius } => {
                ConvexPrimitive::Disk { center: m.apply(center), radius }
            }
            ConvexPrimitive::PowerCap { apex, axis, exponent, coefficient, height } => {
                ConvexPrimitive::PowerCap {
                    apex: m.apply(apex),
                    axis: m.apply_vector(axis),
                    exponent,
                    coefficient,
                    height,
                }
            }
        }
    }

    /// Whether the primitive is symmetric under reflection across the
    /// vertical axis `{x = 0}`; required of meridian sections when `n ≥ 3`.
    pub fn is_axisymmetric(&self) -> bool {
        match *self {
            ConvexPrimitive::HalfPlane { normal, .. } => normal.x.abs() < 1e-12,
            ConvexPrimitive::Disk { center, .. } => center.x.abs() < 1e-12,
            ConvexPrimitive::PowerCap { apex, axis, .. } => {
                apex.x.abs() < 1e-12 && axis.x.abs() < 1e-12
            }
        }
    }

    fn cap_local(&self, p: Vec2) -> (f64, f64) {
        match *self {
            ConvexPrimitive::PowerCap { apex, axis, .. } => {
                let d = p - apex;
                (axis.perp().dot(d), axis.dot(d))
            }
            _ => unreachable!("cap_local on non-cap primitive"),
        }
    }
}

/// Distance from `(s0, t0)` with `t0 ≥ η s0^a`, `s0 ≥ 0`, to the curve
/// `t = η s^a`. Dense scan plus golden-section refinement; the symmetric
/// branch `s < 0` can never be closer for `s0 ≥ 0`.
fn power_curve_distance(a: f64, eta: f64, s0: f64, t0: f64) -> f64 {
    let f = |s: f64| {
        let ds = s - s0;
        let dt = eta * s.powf(a) - t0;
        ds * ds + dt * dt
    };
    let s_hi = s0.max((t0.max(0.0) / eta).powf(1.0 / a)) * 1.0001 + 1e-300;

    let scans = 128usize;
    let mut best_k = 0usize;
    let mut best = f64::INFINITY;
    for k in 0..=scans {
        let v = f(s_hi * k as f64 / scans as f64);
        if v < best {
            best = v;
            best_k = k;
        }
    }
    let mut lo = s_hi * best_k.saturating_sub(1) as f64 / scans as f64;
    let mut hi = s_hi * (best_k + 1).min(scans) as f64 / scans as f64;

    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..90 {
        if hi - lo < 1e-14 * (1.0 + s_hi) {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    f(0.5 * (lo + hi)).min(best).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_plane_contains_and_distance() {
        let hp = ConvexPrimitive::HalfPlane { normal: Vec2::new(1.0, 0.0), offset: 1.0 };
        assert!(hp.contains(Vec2::new(0.3, 5.0)));
        assert!(!hp.contains(Vec2::new(1.3, 0.0)));
        assert!((hp.boundary_distance(Vec2::new(0.3, -2.0)) - 0.7).abs() < 1e-15);
    }

    #[test]
    fn disk_distance_is_radial() {
        let d = ConvexPrimitive::Disk { center: Vec2::ZERO, radius: 1.0 };
        assert!((d.boundary_distance(Vec2::new(0.5, 0.0)) - 0.5).abs() < 1e-15);
        assert!((d.boundary_distance(Vec2::ZERO) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn power_cap_membership_matches_inequality() {
        // t >= |s|^2 with apex at origin, axis +y: (0.5, 0.1) violates 0.1 >= 0.25.
        let cap = ConvexPrimitive::PowerCap {
            apex: Vec2::ZERO,
            axis: Vec2::new(0.0, 1.0),
            exponent: 2.0,
            coefficient: 1.0,
            height: 1.0,
        };
        assert!(!cap.contains(Vec2::new(0.5, 0.1)));
        assert!(cap.contains(Vec2::new(0.5, 0.25)));
        assert!(cap.contains(Vec2::new(0.0, 1.0)));
        assert!(!cap.contains(Vec2::new(0.0, 1.0 + 1e-12)));
    }

    #[test]
    fn power_curve_distance_matches_parabola_projection() {
        // Point on the axis above a parabola t = s²: stationarity gives
        // 2s(2s² − 1) = 0, so s* = 1/√2 and dist² = 1/2 + 1/4.
        let expect = 0.75_f64.sqrt();
        let got = power_curve_distance(2.0, 1.0, 0.0, 1.0);
        assert!((got - expect).abs() < 1e-9, "got {got}, expect {expect}");
    }

    #[test]
    fn power_curve_distance_apex_point() {
        // Steep cap, point close above the apex: distance ~ t0.
        let got = power_curve_distance(3.0, 1.0, 0.0, 1e-3);
        assert!((got - 1e-3).abs() < 1e-7);
    }
}
