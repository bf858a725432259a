//! Mapping between world coordinates (any equal radius, any extremal
//! direction) and the canonical frame where circles have unit radius and the
//! extremal direction points up.

use crate::geometry::Point2;
use crate::Error;

/// The radius + direction pair defining the world-to-canonical map: the unique
/// rotation (no reflection) taking the normalized direction to `(0, 1)`,
/// followed by uniform scaling by `1 / radius`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionalFrame {
    radius: f64,
    direction: Point2,
}

impl DirectionalFrame {
    pub fn new(radius: f64, direction: Point2) -> Result<Self, Error> {
        if !radius.is_finite() || radius <= 0.0 || !direction.is_finite() {
            return Err(Error::InvalidFrame);
        }
        let norm = (direction.x * direction.x + direction.y * direction.y).sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidFrame);
        }
        Ok(DirectionalFrame {
            radius,
            direction: Point2::new(direction.x / norm, direction.y / norm),
        })
    }

    /// The canonical setting: radius 1, direction `(0, 1)`.
    pub fn identity() -> Self {
        DirectionalFrame {
            radius: 1.0,
            direction: Point2::new(0.0, 1.0),
        }
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// The normalized extremal direction in world coordinates.
    pub fn direction(&self) -> Point2 {
        self.direction
    }

    /// Rotates so the frame direction maps to `(0, 1)`, then scales by
    /// `1 / radius`.
    pub fn to_canonical(&self, p: Point2) -> Point2 {
        let (ux, uy) = (self.direction.x, self.direction.y);
        let rx = uy * p.x - ux * p.y;
        let ry = ux * p.x + uy * p.y;
        Point2::new(rx / self.radius, ry / self.radius)
    }

    /// Inverse of [`Self::to_canonical`]: scales by `radius`, then rotates
    /// `(0, 1)` back to the frame direction.
    pub fn to_world(&self, p: Point2) -> Point2 {
        let (ux, uy) = (self.direction.x, self.direction.y);
        let sx = p.x * self.radius;
        let sy = p.y * self.radius;
        Point2::new(uy * sx + ux * sy, -ux * sx + uy * sy)
    }

    /// Maps a whole point set into the canonical frame, rejecting non-finite
    /// coordinates.
    pub fn all_to_canonical(&self, points: &[Point2]) -> Result<Vec<Point2>, Error> {
        points
            .iter()
            .map(|p| {
                p.check_finite()?;
                Ok(self.to_canonical(*p))
            })
            .collect()
    }
}
