//! Small 2D geometry kernel: vectors, 3x3 matrices, cubic Bézier segments.

use serde::{Deserialize, Serialize};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// A 2D point or vector.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// 2D cross product (z-component of the 3D cross).
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Vec2 {
    fn add_assign(&mut self, o: Vec2) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl SubAssign for Vec2 {
    fn sub_assign(&mut self, o: Vec2) {
        self.x -= o.x;
        self.y -= o.y;
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

/// Row-major 3x3 matrix acting on homogeneous column vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3(pub [f64; 9]);

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]);

    pub const ZERO: Mat3 = Mat3([0.0; 9]);

    pub fn translation(t: Vec2) -> Mat3 {
        Mat3([1.0, 0.0, t.x, 0.0, 1.0, t.y, 0.0, 0.0, 1.0])
    }

    pub fn rotation(theta: f64) -> Mat3 {
        let (s, c) = theta.sin_cos();
        Mat3([c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0])
    }

    pub fn scale(sx: f64, sy: f64) -> Mat3 {
        Mat3([sx, 0.0, 0.0, 0.0, sy, 0.0, 0.0, 0.0, 1.0])
    }

    pub fn shear_x(k: f64) -> Mat3 {
        Mat3([1.0, k, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0])
    }

    /// Perspective factor with bottom row [p1, p2, 1].
    pub fn perspective(p1: f64, p2: f64) -> Mat3 {
        Mat3([1.0, 0.0, 0.0, 0.0, 1.0, 0.0, p1, p2, 1.0])
    }

    pub fn at(&self, r: usize, c: usize) -> f64 {
        self.0[r * 3 + c]
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        let mut out = [0.0; 9];
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = 0.0;
                for k in 0..3 {
                    acc += self.at(r, k) * o.at(k, c);
                }
                out[r * 3 + c] = acc;
            }
        }
        Mat3(out)
    }

    /// Apply to an affine 2D point, returning the raw homogeneous triple.
    pub fn apply_homogeneous(&self, p: Vec2) -> [f64; 3] {
        [
            self.at(0, 0) * p.x + self.at(0, 1) * p.y + self.at(0, 2),
            self.at(1, 0) * p.x + self.at(1, 1) * p.y + self.at(1, 2),
            self.at(2, 0) * p.x + self.at(2, 1) * p.y + self.at(2, 2),
        ]
    }

    /// Apply as an affine transform (ignores the bottom row).
    pub fn apply_affine(&self, p: Vec2) -> Vec2 {
        Vec2::new(
            self.at(0, 0) * p.x + self.at(0, 1) * p.y + self.at(0, 2),
            self.at(1, 0) * p.x + self.at(1, 1) * p.y + self.at(1, 2),
        )
    }
}

/// One cubic Bézier segment by its four control points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicBez {
    pub p0: Vec2,
    pub p1: Vec2,
    pub p2: Vec2,
    pub p3: Vec2,
}

impl CubicBez {
    pub fn new(p0: Vec2, p1: Vec2, p2: Vec2, p3: Vec2) -> Self {
        CubicBez { p0, p1, p2, p3 }
    }

    /// Promote a straight line to a cubic with handles at 1/3 and 2/3 of
    /// the chord.
    pub fn from_line(a: Vec2, b: Vec2) -> Self {
        let d = b - a;
        CubicBez::new(a, a + d * (1.0 / 3.0), a + d * (2.0 / 3.0), b)
    }

    /// Exact degree elevation of a quadratic Bézier.
    pub fn from_quadratic(a: Vec2, q: Vec2, b: Vec2) -> Self {
        CubicBez::new(
            a,
            a + (q - a) * (2.0 / 3.0),
            b + (q - b) * (2.0 / 3.0),
            b,
        )
    }

    pub fn eval(&self, t: f64) -> Vec2 {
        let [w0, w1, w2, w3] = bernstein3(t);
        self.p0 * w0 + self.p1 * w1 + self.p2 * w2 + self.p3 * w3
    }

    /// Maximum deviation of the two handles from the chord line. Used as
    /// the flatness measure for adaptive subdivision; a degenerate chord
    /// falls back to point distance.
    pub fn flatness(&self) -> f64 {
        let chord = self.p3 - self.p0;
        let len = chord.norm();
        if len < 1e-12 {
            let d1 = (self.p1 - self.p0).norm();
            let d2 = (self.p2 - self.p0).norm();
            return d1.max(d2);
        }
        let d1 = (self.p1 - self.p0).cross(chord).abs() / len;
        let d2 = (self.p2 - self.p0).cross(chord).abs() / len;
        d1.max(d2)
    }
}

/// Bernstein basis of degree 3 at parameter `t`.
pub fn bernstein3(t: f64) -> [f64; 4] {
    let s = 1.0 - t;
    [s * s * s, 3.0 * s * s * t, 3.0 * s * t * t, t * t * t]
}

/// Signed area of a polygon by the shoelace formula.
pub fn shoelace_area(poly: &[Vec2]) -> f64 {
    if poly.len() < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        acc += a.cross(b);
    }
    acc * 0.5
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mat3_identity_roundtrip() {
        let p = Vec2::new(3.0, -2.5);
        assert_eq!(Mat3::IDENTITY.apply_affine(p), p);
        let m = Mat3::rotation(std::f64::consts::FRAC_PI_2);
        let q = m.apply_affine(Vec2::new(1.0, 0.0));
        assert!((q.x - 0.0).abs() < 1e-12 && (q.y - 1.0).abs() < 1e-12);
    }

    #[test]
    fn line_promotion_thirds() {
        let c = CubicBez::from_line(Vec2::new(0.0, 0.0), Vec2::new(3.0, 6.0));
        assert_eq!(c.p1, Vec2::new(1.0, 2.0));
        assert_eq!(c.p2, Vec2::new(2.0, 4.0));
    }

    #[test]
    fn quadratic_elevation_matches_eval() {
        let a = Vec2::new(0.0, 0.0);
        let q = Vec2::new(1.0, 2.0);
        let b = Vec2::new(2.0, 0.0);
        let c = CubicBez::from_quadratic(a, q, b);
        for i in 0..=10 {
            let t = i as f64 / 10.0;
            let s = 1.0 - t;
            let quad = a * (s * s) + q * (2.0 * s * t) + b * (t * t);
            assert!((c.eval(t) - quad).norm() < 1e-12);
        }
    }

    #[test]
    fn shoelace_unit_square() {
        let sq = [
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
        ];
        assert!((shoelace_area(&sq) - 1.0).abs() < 1e-12);
    }
}
