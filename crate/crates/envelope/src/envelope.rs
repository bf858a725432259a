//! Incremental construction of the upper envelope: sort circles by x, keep
//! only the highest circle per x coordinate, then sweep left to right while
//! evicting circles that no longer reach the boundary.

use crate::geometry::{transition_position, Point2, Transition, UnitCircle};
use crate::Error;

/// A horizontally continuous portion of the boundary: the contributing circles
/// in left-to-right order and the transition positions between consecutive ones.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    /// Indices into the envelope's circle table, strictly increasing in center x.
    pub circles: Vec<usize>,
    /// Strictly increasing; always one shorter than `circles`.
    pub transitions: Vec<f64>,
}

impl Segment {
    /// Horizontal domain `[x_left - 1, x_right + 1]`. Circles are x-ordered
    /// within a segment, so the extremes are the first and last entries.
    pub fn domain(&self, circles: &[UnitCircle]) -> (f64, f64) {
        let first = circles[self.circles[0]].center.x;
        let last = circles[*self.circles.last().unwrap()].center.x;
        (first - 1.0, last + 1.0)
    }
}

/// The queryable result: ordered, horizontally disjoint segments over a
/// deduplicated, x-sorted circle table.
#[derive(Debug, Clone, PartialEq)]
pub struct Envelope {
    pub circles: Vec<UnitCircle>,
    pub segments: Vec<Segment>,
}

/// Counters over a full build; each circle is inserted at most once and
/// removed at most once.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub insertions: usize,
    pub removals: usize,
}

/// Sorts centers by ascending x (ties broken by descending y) and keeps only
/// the highest circle among those sharing an identical x coordinate.
pub fn prepare_circles(raw: &[Point2]) -> Result<Vec<UnitCircle>, Error> {
    for p in raw {
        p.check_finite()?;
    }
    let mut pts: Vec<Point2> = raw.to_vec();
    // The comparator is total up to exact duplicates, so the unstable sort is
    // still deterministic.
    pts.sort_unstable_by(|a, b| a.x.total_cmp(&b.x).then_with(|| b.y.total_cmp(&a.y)));
    // After the sort each x-run starts with its highest y; keep the first.
    pts.dedup_by(|next, kept| next.x == kept.x);
    Ok(pts.into_iter().map(|p| UnitCircle { center: p }).collect())
}

/// Like [`prepare_circles`], but returns the indices of the surviving input
/// points in their sorted order, so callers can carry companion data (such as
/// the untransformed world centers) through the preparation.
pub fn prepare_circles_indexed(raw: &[Point2]) -> Result<Vec<usize>, Error> {
    for p in raw {
        p.check_finite()?;
    }
    let mut idx: Vec<usize> = (0..raw.len()).collect();
    idx.sort_by(|&a, &b| {
        raw[a]
            .x
            .total_cmp(&raw[b].x)
            .then_with(|| raw[b].y.total_cmp(&raw[a].y))
    });
    // After the sort each x-run starts with its highest y; keep the first.
    idx.dedup_by(|next, kept| raw[*next].x == raw[*kept].x);
    Ok(idx)
}

/// Builds the envelope of raw centers; preparation (sort + dedup) included.
pub fn build_envelope(raw: &[Point2]) -> Result<Envelope, Error> {
    Ok(build_envelope_with_stats(raw)?.0)
}

/// Same as [`build_envelope`] but also reports insertion/removal counters.
pub fn build_envelope_with_stats(raw: &[Point2]) -> Result<(Envelope, BuildStats), Error> {
    Ok(build_prepared(prepare_circles(raw)?))
}

/// Builds the envelope from an already prepared (x-sorted, x-unique) table.
pub fn build_prepared(circles: Vec<UnitCircle>) -> (Envelope, BuildStats) {
    let mut segments: Vec<Segment> = Vec::new();
    let mut stats = BuildStats::default();

    for (idx, ci) in circles.iter().enumerate() {
        let seg = match segments.last_mut() {
            Some(seg) => seg,
            None => {
                segments.push(Segment {
                    circles: vec![idx],
                    transitions: Vec::new(),
                });
                stats.insertions += 1;
                continue;
            }
        };

        let last = circles[*seg.circles.last().unwrap()];
        let mut x_u = match transition_position(&last, ci) {
            Transition::Gap => {
                segments.push(Segment {
                    circles: vec![idx],
                    transitions: Vec::new(),
                });
                stats.insertions += 1;
                continue;
            }
            Transition::At { x, .. } => x,
        };

        // Evict circles whose boundary contribution the new circle overtakes.
        while seg
            .transitions
            .last()
            .is_some_and(|&last_t| last_t >= x_u)
        {
            seg.circles.pop();
            seg.transitions.pop();
            stats.removals += 1;
            let tail = circles[*seg.circles.last().unwrap()];
            x_u = match transition_position(&tail, ci) {
                Transition::At { x, .. } => x,
                // The evicted predecessor already proved horizontal overlap, so
                // a gap here is floating-point roundoff; fall back to the
                // midpoint of the centers.
                Transition::Gap => 0.5 * (tail.center.x + ci.center.x),
            };
        }

        seg.circles.push(idx);
        seg.transitions.push(x_u);
        stats.insertions += 1;
    }

    (Envelope { circles, segments }, stats)
}

/// Flattens the envelope into `(circle_index, x_start, x_end)` arcs. Within a
/// segment the arcs tile the domain with shared endpoints at the transitions.
pub fn arcs(envelope: &Envelope) -> Vec<(usize, f64, f64)> {
    let mut out = Vec::new();
    for seg in &envelope.segments {
        let (lo, hi) = seg.domain(&envelope.circles);
        for (k, &ci) in seg.circles.iter().enumerate() {
            let start = if k == 0 { lo } else { seg.transitions[k - 1] };
            let end = if k == seg.circles.len() - 1 {
                hi
            } else {
                seg.transitions[k]
            };
            out.push((ci, start, end));
        }
    }
    out
}
