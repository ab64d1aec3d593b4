//! Ready-made benchmark domains used throughout the test and acceptance
//! suites and exposed for quick CLI experiments.

use super::{ConvexPrimitive, DomainSpec};
use crate::Vec2;

/// Disk of radius `r` centered at the origin.
pub fn disk(r: f64) -> DomainSpec {
    DomainSpec::new(2, vec![ConvexPrimitive::Disk { center: Vec2::ZERO, radius: r }], Vec2::ZERO)
        .expect("disk preset is valid")
}

pub fn unit_disk() -> DomainSpec {
    disk(1.0)
}

/// Axis-aligned unit square `[0,1]²` as four half-planes.
pub fn unit_square() -> DomainSpec {
    DomainSpec::new(
        2,
        vec![
            ConvexPrimitive::HalfPlane { normal: Vec2::new(1.0, 0.0), offset: 1.0 },
            ConvexPrimitive::HalfPlane { normal: Vec2::new(-1.0, 0.0), offset: 0.0 },
            ConvexPrimitive::HalfPlane { normal: Vec2::new(0.0, 1.0), offset: 1.0 },
            ConvexPrimitive::HalfPlane { normal: Vec2::new(0.0, -1.0), offset: 0.0 },
        ],
        Vec2::new(0.5, 0.5),
    )
    .expect("square preset is valid")
}

/// Truncated power region `{ η |x'|^a ≤ x_n ≤ height }` with apex at the
/// origin and vertical axis, in ambient dimension `n`.
pub fn power_cap(n: usize, a: f64, eta: f64, height: f64) -> DomainSpec {
    DomainSpec::new(
        n,
        vec![ConvexPrimitive::PowerCap {
            apex: Vec2::ZERO,
            axis: Vec2::new(0.0, 1.0),
            exponent: a,
            coefficient: eta,
            height,
        }],
        Vec2::new(0.0, 0.75 * height),
    )
    .expect("power-cap preset is valid")
}

/// Lens: intersection of two unit disks whose centers are distance 1 apart.
pub fn lens() -> DomainSpec {
    DomainSpec::new(
        2,
        vec![
            ConvexPrimitive::Disk { center: Vec2::new(-0.5, 0.0), radius: 1.0 },
            ConvexPrimitive::Disk { center: Vec2::new(0.5, 0.0), radius: 1.0 },
        ],
        Vec2::ZERO,
    )
    .expect("lens preset is valid")
}

/// Smooth oval with semiaxes `(rx, ry)`, `rx ≥ ry`, realized as a finite
/// intersection of disks of radius `rx²/ry` (the largest curvature radius of
/// the ellipse) tangent to the true ellipse from outside. Every boundary
/// curvature radius of the ellipse is at most `rx²/ry`, so the intersection
/// hugs the ellipse to within a sliver of the tangent-ball gaps.
pub fn oval(rx: f64, ry: f64, pieces: usize) -> DomainSpec {
    assert!(rx >= ry && ry > 0.0, "semiaxes must satisfy rx >= ry > 0");
    let big_r = rx * rx / ry;
    let mut primitives = Vec::with_capacity(pieces);
    for k in 0..pieces {
        let t = 2.0 * std::f64::consts::PI * k as f64 / pieces as f64;
        let p = Vec2::new(rx * t.cos(), ry * t.sin());
        // Inward unit normal of the ellipse at parameter t.
        let grad = Vec2::new(p.x / (rx * rx), p.y / (ry * ry));
        let nin = -grad.normalized().expect("nonzero gradient on the ellipse");
        primitives.push(ConvexPrimitive::Disk { center: p + nin * big_r, radius: big_r });
    }
    DomainSpec::new(2, primitives, Vec2::ZERO).expect("oval preset is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oval_contains_ellipse_points_and_little_more() {
        let dom = oval(2.0, 1.0, 256);
        // Strictly inside the ellipse.
        assert!(dom.contains(Vec2::new(1.9, 0.0)));
        assert!(dom.contains(Vec2::new(0.0, 0.95)));
        // Well outside.
        assert!(!dom.contains(Vec2::new(2.05, 0.0)));
        assert!(!dom.contains(Vec2::new(0.0, 1.05)));
    }

    #[test]
    fn power_cap_interior_point_is_inside() {
        let dom = power_cap(2, 3.0, 1.0, 0.5);
        assert!(dom.contains(Vec2::new(0.0, 0.375)));
        assert!(!dom.contains(Vec2::new(0.7, 0.1)));
    }
}
