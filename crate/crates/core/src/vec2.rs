use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Point / vector in the plane. For ambient dimension `n ≥ 3` the same type
/// carries meridian-plane coordinates `(x', x_n)` of axisymmetric domains.
///
/// Serializes as a plain `[x, y]` array.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 2]", from = "[f64; 2]")]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl From<Vec2> for [f64; 2] {
    fn from(v: Vec2) -> [f64; 2] {
        [v.x, v.y]
    }
}

impl From<[f64; 2]> for Vec2 {
    fn from(a: [f64; 2]) -> Vec2 {
        Vec2::new(a[0], a[1])
    }
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dist(self, other: Vec2) -> f64 {
        (self - other).norm()
    }

    /// Unit vector in the same direction; `None` for vectors shorter than
    /// `1e-14` where the direction is meaningless.
    pub fn normalized(self) -> Option<Vec2> {
        let n = self.norm();
        if n < 1e-14 {
            None
        } else {
            Some(self / n)
        }
    }

    /// Counterclockwise rotation by 90 degrees.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn from_angle(theta: f64) -> Vec2 {
        Vec2::new(theta.cos(), theta.sin())
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    fn div(self, s: f64) -> Vec2 {
        Vec2::new(self.x / s, self.y / s)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Rigid motion `x ↦ R x + t` with `R` a rotation.
#[derive(Clone, Copy, Debug)]
pub struct RigidMotion {
    pub cos: f64,
    pub sin: f64,
    pub shift: Vec2,
}

impl RigidMotion {
    pub fn identity() -> Self {
        RigidMotion { cos: 1.0, sin: 0.0, shift: Vec2::ZERO }
    }

    pub fn rotation(theta: f64) -> Self {
        RigidMotion { cos: theta.cos(), sin: theta.sin(), shift: Vec2::ZERO }
    }

    pub fn translation(shift: Vec2) -> Self {
        RigidMotion { cos: 1.0, sin: 0.0, shift }
    }

    pub fn apply(&self, p: Vec2) -> Vec2 {
        Vec2::new(
            self.cos * p.x - self.sin * p.y + self.shift.x,
            self.sin * p.x + self.cos * p.y + self.shift.y,
        )
    }

    pub fn apply_vector(&self, v: Vec2) -> Vec2 {
        Vec2::new(self.cos * v.x - self.sin * v.y, self.sin * v.x + self.cos * v.y)
    }

    pub fn inverse(&self) -> RigidMotion {
        // R⁻¹ x − R⁻¹ t
        let inv = RigidMotion { cos: self.cos, sin: -self.sin, shift: Vec2::ZERO };
        let shift = -inv.apply_vector(self.shift);
        RigidMotion { cos: self.cos, sin: -self.sin, shift }
    }
}
