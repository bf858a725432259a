//! Pairwise unit-circle math in the canonical frame: center distances, the
//! upper intersection point of two overlapping circles, and the horizontal
//! position where boundary ownership transitions from one circle to the next.

use crate::Error;

/// A 2D position. Coordinates are required to be finite at module boundaries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn check_finite(&self) -> Result<(), Error> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFiniteInput)
        }
    }
}

/// A unit-radius circle identified by its center. The radius is implicitly 1;
/// arbitrary radii and directions are handled by [`crate::frame::DirectionalFrame`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitCircle {
    pub center: Point2,
}

impl UnitCircle {
    pub fn new(x: f64, y: f64) -> Self {
        UnitCircle {
            center: Point2::new(x, y),
        }
    }
}

/// How the boundary ownership between a left circle and a right circle resolves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Transition {
    /// The circles do not overlap horizontally (tangential contact included);
    /// the right circle starts a new segment.
    Gap,
    /// Ownership passes to the right circle at horizontal position `x`.
    At { x: f64, kind: TransitionKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitionKind {
    /// The upper arcs cross; the transition is at their intersection.
    UpperIntersection,
    /// One arc dominates the other over the whole overlap; the transition sits
    /// at the edge of the dominated circle's horizontal reach.
    Overshadow,
}

/// Below this center distance the intersection construction is skipped and the
/// overshadow rule decides; dividing by a tiny distance would lose all precision.
pub const MIN_CENTER_DISTANCE: f64 = 1e-12;

/// Euclidean distance between two circle centers.
pub fn center_distance(cj: &UnitCircle, ci: &UnitCircle) -> f64 {
    let dx = ci.center.x - cj.center.x;
    let dy = ci.center.y - cj.center.y;
    (dx * dx + dy * dy).sqrt()
}

/// The higher of the two intersection points of two unit circles, or `None`
/// when the centers are closer than [`MIN_CENTER_DISTANCE`] or at distance >= 2.
///
/// Callers must order the pair so that `cj.center.x < ci.center.x`.
pub fn upper_intersection(cj: &UnitCircle, ci: &UnitCircle) -> Option<Point2> {
    let d = center_distance(cj, ci);
    if d <= MIN_CENTER_DISTANCE || d >= 2.0 {
        return None;
    }
    let mid_x = 0.5 * (cj.center.x + ci.center.x);
    let mid_y = 0.5 * (cj.center.y + ci.center.y);
    // Unit normal to the center line, pointing upright (positive y component
    // since the pair is ordered by x).
    let nx = -(ci.center.y - cj.center.y) / d;
    let ny = (ci.center.x - cj.center.x) / d;
    // Half-chord length; the max(0) guards d marginally above 2 slipping past
    // the branch due to rounding.
    let h = (1.0 - (d / 2.0) * (d / 2.0)).max(0.0).sqrt();
    Some(Point2::new(mid_x + h * nx, mid_y + h * ny))
}

/// The horizontal position where the upper boundary passes from `cj` to `ci`.
///
/// Requires `cj.center.x < ci.center.x`. Horizontal separation of 2 or more
/// (tangential contact included) is a [`Transition::Gap`]. Otherwise the upper
/// intersection is used when it lies strictly above both centers; if not, the
/// dominated circle's reach boundary (`x_i - 1` or `x_j + 1`) is the transition.
pub fn transition_position(cj: &UnitCircle, ci: &UnitCircle) -> Transition {
    let (xj, yj) = (cj.center.x, cj.center.y);
    let (xi, yi) = (ci.center.x, ci.center.y);
    debug_assert!(xj < xi, "pair must be ordered by center x");

    if xj + 2.0 <= xi {
        return Transition::Gap;
    }

    if let Some(p) = upper_intersection(cj, ci) {
        if yj.max(yi) < p.y {
            return Transition::At {
                x: p.x,
                kind: TransitionKind::UpperIntersection,
            };
        }
    }

    let x = if yj < yi { xi - 1.0 } else { xj + 1.0 };
    Transition::At {
        x,
        kind: TransitionKind::Overshadow,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64, y: f64) -> UnitCircle {
        UnitCircle::new(x, y)
    }

    #[test]
    fn center_distance_examples() {
        assert_eq!(center_distance(&c(0.0, 0.0), &c(1.0, 0.0)), 1.0);
        assert_eq!(center_distance(&c(0.0, 0.0), &c(0.0, 0.0)), 0.0);
        let d = center_distance(&c(0.0, 0.0), &c(0.5, 1.0));
        // cross-check against squared-distance arithmetic
        assert!((d - 1.25f64.sqrt()).abs() < 1e-15);
        assert!((d - 1.118033988749895).abs() < 1e-12);
    }

    #[test]
    fn upper_intersection_symmetric_pair() {
        let p = upper_intersection(&c(0.0, 0.0), &c(1.0, 0.0)).unwrap();
        assert!((p.x - 0.5).abs() < 1e-15);
        assert!((p.y - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn upper_intersection_offset_pair() {
        // d^2 = 1.25, h = sqrt(0.6875)
        let p = upper_intersection(&c(0.0, 0.0), &c(0.5, 1.0)).unwrap();
        assert!((p.x - -0.4916198487095663).abs() < 1e-12);
        assert!((p.y - 0.8708099243547831).abs() < 1e-12);
        for center in [Point2::new(0.0, 0.0), Point2::new(0.5, 1.0)] {
            let r2 = (p.x - center.x).powi(2) + (p.y - center.y).powi(2);
            assert!((r2.sqrt() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn upper_intersection_absent_when_far_or_coincident() {
        assert!(upper_intersection(&c(0.0, 0.0), &c(2.5, 0.0)).is_none());
        assert!(upper_intersection(&c(0.0, 0.0), &c(2.0, 0.0)).is_none());
        let a = UnitCircle::new(0.0, 0.0);
        let b = UnitCircle::new(1e-13, 0.0);
        assert!(upper_intersection(&a, &b).is_none());
    }

    #[test]
    fn transition_symmetric_pair_is_midpoint() {
        assert_eq!(
            transition_position(&c(0.0, 0.0), &c(1.0, 0.0)),
            Transition::At {
                x: 0.5,
                kind: TransitionKind::UpperIntersection
            }
        );
    }

    #[test]
    fn transition_overshadow_when_intersection_below_center() {
        // y_u ~ 0.8708 < max(y) = 1, so the higher circle's reach edge decides.
        assert_eq!(
            transition_position(&c(0.0, 0.0), &c(0.5, 1.0)),
            Transition::At {
                x: -0.5,
                kind: TransitionKind::Overshadow
            }
        );
    }

    #[test]
    fn transition_gap_at_and_beyond_tangential_contact() {
        assert_eq!(transition_position(&c(0.0, 0.0), &c(2.0, 0.0)), Transition::Gap);
        assert_eq!(transition_position(&c(0.0, 0.0), &c(3.0, 0.0)), Transition::Gap);
    }

    #[test]
    fn transition_overshadow_lower_right_circle() {
        // y_j >= y_i: transition at x_j + 1.
        match transition_position(&c(0.0, 1.0), &c(0.5, 0.0)) {
            Transition::At { x, kind } => {
                assert_eq!(kind, TransitionKind::Overshadow);
                assert_eq!(x, 1.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn transition_stays_inside_overlap_window() {
        let cj = c(0.3, -0.2);
        let ci = c(1.7, 0.9);
        if let Transition::At { x, .. } = transition_position(&cj, &ci) {
            assert!(x >= ci.center.x - 1.0 && x <= cj.center.x + 1.0);
        } else {
            panic!("expected a transition");
        }
    }
}
