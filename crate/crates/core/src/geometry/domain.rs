use serde::{Deserialize, Serialize};

use super::{ConvexPrimitive, GeometryError};
use crate::vec2::RigidMotion;
use crate::Vec2;

/// Bounded convex domain given as an intersection of primitives.
///
/// `n` is the ambient dimension of the PDE. The stored geometry is always
/// planar; for `n = 2` it is the domain itself, for `n ≥ 3` it is the
/// meridian section of an axisymmetric body and every primitive must be
/// symmetric about the vertical axis.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "DomainConfig", into = "DomainConfig")]
pub struct DomainSpec {
    n: usize,
    primitives: Vec<ConvexPrimitive>,
    interior_point: Vec2,
}

/// On-disk form of a domain (`JSON`): fields `n`, `primitives`,
/// `interior_point`, with each primitive tagged by `kind`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DomainConfig {
    pub n: usize,
    pub primitives: Vec<ConvexPrimitive>,
    pub interior_point: Vec2,
}

impl TryFrom<DomainConfig> for DomainSpec {
    type Error = GeometryError;
    fn try_from(c: DomainConfig) -> Result<Self, Self::Error> {
        DomainSpec::new(c.n, c.primitives, c.interior_point)
    }
}

impl From<DomainSpec> for DomainConfig {
    fn from(d: DomainSpec) -> DomainConfig {
        DomainConfig { n: d.n, primitives: d.primitives, interior_point: d.interior_point }
    }
}

/// Directions used for boundedness checks and bounding boxes. A multiple of
/// 4 keeps the direction set invariant under quarter turns, so grids built
/// from the sampled bounding box transform exactly under such motions.
const BBOX_RAYS: usize = 4096;

impl DomainSpec {
    pub fn new(
        n: usize,
        primitives: Vec<ConvexPrimitive>,
        interior_point: Vec2,
    ) -> Result<Self, GeometryError> {
        if n < 2 {
            return Err(GeometryError::BadDimension(n));
        }
        if primitives.is_empty() {
            return Err(GeometryError::EmptyPrimitives);
        }
        for p in &primitives {
            p.validate()?;
        }
        if n >= 3 && !primitives.iter().all(|p| p.is_axisymmetric()) {
            return Err(GeometryError::NotAxisymmetric);
        }
        let dom = DomainSpec { n, primitives, interior_point };
        if !dom.contains(interior_point) || dom.interior_radius() <= 0.0 {
            return Err(GeometryError::BadInteriorPoint);
        }
        // Boundedness: every ray from the interior point must leave the domain.
        let scale = dom.interior_radius().max(1.0);
        for k in 0..64 {
            let dir = Vec2::from_angle(2.0 * std::f64::consts::PI * k as f64 / 64.0);
            if dom.contains(interior_point + dir * (1e7 * scale)) {
                return Err(GeometryError::Unbounded(dir.x, dir.y));
            }
        }
        Ok(dom)
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn primitives(&self) -> &[ConvexPrimitive] {
        &self.primitives
    }

    pub fn interior_point(&self) -> Vec2 {
        self.interior_point
    }

    /// Distance from the designated interior point to the boundary.
    pub fn interior_radius(&self) -> f64 {
        self.primitives
            .iter()
            .map(|p| p.boundary_distance(self.interior_point))
            .fold(f64::INFINITY, f64::min)
    }

    /// Closed membership: inside every primitive.
    pub fn contains(&self, x: Vec2) -> bool {
        self.primitives.iter().all(|p| p.contains(x))
    }

    /// `d_x = dist(x, ∂Ω)`, the minimum over primitives of the distance to
    /// that primitive's boundary. Errors on exterior points.
    pub fn boundary_distance(&self, x: Vec2) -> Result<f64, GeometryError> {
        if !self.contains(x) {
            return Err(GeometryError::ExteriorPoint);
        }
        Ok(self
            .primitives
            .iter()
            .map(|p| p.boundary_distance(x))
            .fold(f64::INFINITY, f64::min))
    }

    /// Boundary crossing of the ray `interior_point + t·dir`, by bisection on
    /// membership. `dir` need not be unit length.
    pub fn ray_boundary_point(&self, dir: Vec2) -> Vec2 {
        let dir = dir.normalized().expect("ray direction must be nonzero");
        let mut lo = 0.0f64;
        let mut hi = self.interior_radius().max(1e-12);
        while self.contains(self.interior_point + dir * hi) {
            lo = hi;
            hi *= 2.0;
            if hi > 1e9 {
                break; // construction guarantees boundedness
            }
        }
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if self.contains(self.interior_point + dir * mid) {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= f64::EPSILON * hi {
                break;
            }
        }
        self.interior_point + dir * lo
    }

    /// `m` boundary points from equally spaced ray directions.
    pub fn boundary_samples(&self, m: usize) -> Vec<Vec2> {
        (0..m)
            .map(|k| {
                self.ray_boundary_point(Vec2::from_angle(
                    2.0 * std::f64::consts::PI * k as f64 / m as f64,
                ))
            })
            .collect()
    }

    /// Outward supporting normal at a boundary point. Where several
    /// primitives are active (a corner) the active normals are averaged,
    /// which is a supporting direction for a convex intersection.
    pub fn outward_normal(&self, x: Vec2) -> Vec2 {
        let tol = 1e-9 * self.scale();
        let mut active: Vec<Vec2> = Vec::new();
        for p in &self.primitives {
            if p.boundary_distance(x).abs() <= tol {
                active.push(p.outward_normal(x, tol));
            }
        }
        if active.is_empty() {
            // Not exactly on the boundary; fall back to the closest primitive.
            let p = self
                .primitives
                .iter()
                .min_by(|a, b| {
                    a.boundary_distance(x).abs().total_cmp(&b.boundary_distance(x).abs())
                })
                .expect("nonempty primitives");
            return p.outward_normal(x, tol);
        }
        let sum = active.iter().fold(Vec2::ZERO, |acc, &v| acc + v);
        sum.normalized().unwrap_or(active[0])
    }

    /// Max pairwise distance over `m` boundary samples; approaches the true
    /// diameter from below as `m` grows.
    pub fn diameter(&self, m: usize) -> Result<f64, GeometryError> {
        if m < 16 {
            return Err(GeometryError::TooFewSamples { min: 16, got: m });
        }
        let pts = self.boundary_samples(m);
        let mut best = 0.0f64;
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                best = best.max(pts[i].dist(pts[j]));
            }
        }
        Ok(best)
    }

    /// Axis-aligned bounding box from dense ray sampling, padded outward.
    pub fn bounding_box(&self) -> (Vec2, Vec2) {
        let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for k in 0..BBOX_RAYS {
            let p = self.ray_boundary_point(Vec2::from_angle(
                2.0 * std::f64::consts::PI * k as f64 / BBOX_RAYS as f64,
            ));
            lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        (lo, hi)
    }

    /// A representative length for relative tolerances (bounding-box extent).
    pub fn scale(&self) -> f64 {
        let (lo, hi) = self.bounding_box();
        (hi.x - lo.x).max(hi.y - lo.y)
    }

    /// Image of the domain under uniform scaling about the origin.
    pub fn scaled(&self, factor: f64) -> Result<DomainSpec, GeometryError> {
        DomainSpec::new(
            self.n,
            self.primitives.iter().map(|p| p.scaled(factor)).collect(),
            self.interior_point * factor,
        )
    }

    /// Image of the domain under a rigid motion (n = 2 only; rotations break
    /// the axisymmetry that n ≥ 3 sections rely on).
    pub fn transformed(&self, motion: &RigidMotion) -> Result<DomainSpec, GeometryError> {
        DomainSpec::new(
            self.n,
            self.primitives.iter().map(|p| p.transformed(motion)).collect(),
            motion.apply(self.interior_point),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::presets::{unit_disk, unit_square};

    #[test]
    fn contains_basics() {
        let disk = unit_disk();
        assert!(disk.contains(Vec2::ZERO));
        assert!(!disk.contains(Vec2::new(2.0, 0.0)));
    }

    #[test]
    fn square_boundary_distance_is_min_over_walls() {
        let sq = unit_square();
        let d = sq.boundary_distance(Vec2::new(0.3, 0.4)).unwrap();
        assert!((d - 0.3).abs() < 1e-14);
    }

    #[test]
    fn disk_boundary_distance() {
        let disk = unit_disk();
        assert!((disk.boundary_distance(Vec2::ZERO).unwrap() - 1.0).abs() < 1e-14);
        assert!((disk.boundary_distance(Vec2::new(0.5, 0.0)).unwrap() - 0.5).abs() < 1e-14);
        assert!(disk.boundary_distance(Vec2::new(2.0, 0.0)).is_err());
    }

    #[test]
    fn diameter_of_disk_and_square() {
        let disk = unit_disk();
        assert!((disk.diameter(2048).unwrap() - 2.0).abs() < 1e-3);
        let sq = unit_square();
        assert!((sq.diameter(2048).unwrap() - 2f64.sqrt()).abs() < 1e-3);
    }

    #[test]
    fn unbounded_intersection_rejected() {
        let err = DomainSpec::new(
            2,
            vec![ConvexPrimitive::HalfPlane { normal: Vec2::new(1.0, 0.0), offset: 1.0 }],
            Vec2::ZERO,
        );
        assert!(matches!(err, Err(GeometryError::Unbounded(..))));
    }

    #[test]
    fn empty_interior_rejected() {
        // Two disjoint half-planes: x <= 0 and x >= 1.
        let err = DomainSpec::new(
            2,
            vec![
                ConvexPrimitive::HalfPlane { normal: Vec2::new(1.0, 0.0), offset: 0.0 },
                ConvexPrimitive::HalfPlane { normal: Vec2::new(-1.0, 0.0), offset: -1.0 },
            ],
            Vec2::new(0.5, 0.0),
        );
        assert!(err.is_err());
    }

    #[test]
    fn domain_config_round_trip() {
        let sq = unit_square();
        let json = serde_json::to_string(&sq).unwrap();
        let back: DomainSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.dimension(), 2);
        assert_eq!(back.primitives().len(), 4);
        assert!(back.contains(Vec2::new(0.5, 0.5)));
    }
}
