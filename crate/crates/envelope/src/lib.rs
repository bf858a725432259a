//! Upper envelope of a union of equal-radius circles.
//!
//! Given circle centers, the crate builds the directional extremal boundary of
//! the union in O(n log n): circles are sorted by their position across the
//! chosen direction, and the boundary is assembled left to right while circles
//! that no longer reach it are evicted. The result is an ordered list of
//! horizontally disjoint [`envelope::Segment`]s, queryable in O(log n) per
//! point through a two-level binary search.
//!
//! All core math runs in the canonical frame (unit radius, upward direction);
//! [`frame::DirectionalFrame`] maps arbitrary equal-radius, arbitrary-direction
//! instances in and out of it. [`oracle`] holds deliberately slow brute-force
//! references used for cross-checking.

pub mod csv;
pub mod document;
pub mod envelope;
pub mod frame;
pub mod geometry;
pub mod oracle;
pub mod query;
pub mod svg;

pub use envelope::{build_envelope, build_envelope_with_stats, BuildStats, Envelope, Segment};
pub use frame::DirectionalFrame;
pub use geometry::{Point2, Transition, TransitionKind, UnitCircle};
pub use query::{evaluate, find_segment, sample, Hit};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("input contains a non-finite coordinate")]
    NonFiniteInput,
    #[error("query position is not finite")]
    NonFiniteQuery,
    #[error("invalid sampling range: 'from' must not exceed 'to' and 'step' must be positive")]
    InvalidRange,
    #[error("invalid frame: radius must be positive and direction nonzero")]
    InvalidFrame,
    #[error("multiple boundary handoffs detected between two circles")]
    MultipleSwitches,
}
