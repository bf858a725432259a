//! Two-level binary search over a built envelope: locate the segment whose
//! domain contains the query, locate the governing circle via the transition
//! positions, then evaluate the circle's upper arc.

use crate::envelope::Envelope;
use crate::Error;

/// A defined boundary value: the height and the circle attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hit {
    pub y: f64,
    pub circle: usize,
}

/// Comparison counters for one query, split by search level.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryCost {
    pub segment_cmps: usize,
    pub transition_cmps: usize,
}

/// Index of the unique segment whose closed domain contains `x`, if any.
pub fn find_segment(envelope: &Envelope, x: f64) -> Option<usize> {
    find_segment_counted(envelope, x).0
}

/// [`find_segment`] plus the number of domain comparisons performed.
pub fn find_segment_counted(envelope: &Envelope, x: f64) -> (Option<usize>, usize) {
    let segs = &envelope.segments;
    let mut cmps = 0usize;
    let (mut lo, mut hi) = (0usize, segs.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let (_, dom_hi) = segs[mid].domain(&envelope.circles);
        cmps += 1;
        if dom_hi < x {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if lo < segs.len() {
        cmps += 1;
        let (dom_lo, _) = segs[lo].domain(&envelope.circles);
        if dom_lo <= x {
            return (Some(lo), cmps);
        }
    }
    (None, cmps)
}

/// Boundary value at `x`, or `None` where the boundary does not exist.
pub fn evaluate(envelope: &Envelope, x: f64) -> Result<Option<Hit>, Error> {
    Ok(evaluate_counted(envelope, x)?.0)
}

/// [`evaluate`] plus per-level comparison counts.
pub fn evaluate_counted(envelope: &Envelope, x: f64) -> Result<(Option<Hit>, QueryCost), Error> {
    if !x.is_finite() {
        return Err(Error::NonFiniteQuery);
    }
    let mut cost = QueryCost::default();
    let (seg_idx, segment_cmps) = find_segment_counted(envelope, x);
    cost.segment_cmps = segment_cmps;
    let Some(seg_idx) = seg_idx else {
        return Ok((None, cost));
    };
    let seg = &envelope.segments[seg_idx];

    // A transition position owns its right-hand circle: sub-intervals are
    // half-open [t_k, t_{k+1}).
    let ts = &seg.transitions;
    let (mut lo, mut hi) = (0usize, ts.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        cost.transition_cmps += 1;
        if ts[mid] <= x {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let circle = seg.circles[lo];
    let center = envelope.circles[circle].center;
    let dx = x - center.x;
    // Clamping keeps |x - x_i| >= 1 (roundoff near domain edges) from
    // producing NaN; the value degrades to the center height there.
    let y = center.y + (1.0 - dx * dx).max(0.0).sqrt();
    Ok((Some(Hit { y, circle }), cost))
}

/// Evaluates on the grid `from, from+step, …`, capped at `to`; `to` itself is
/// always included.
pub fn sample(
    envelope: &Envelope,
    from: f64,
    to: f64,
    step: f64,
) -> Result<Vec<(f64, Option<Hit>)>, Error> {
    if !(from.is_finite() && to.is_finite() && step.is_finite()) || from > to || step <= 0.0 {
        return Err(Error::InvalidRange);
    }
    let mut out = Vec::new();
    let mut k = 0u64;
    loop {
        let x = from + k as f64 * step;
        if x >= to {
            break;
        }
        out.push((x, evaluate(envelope, x)?));
        k += 1;
    }
    out.push((to, evaluate(envelope, to)?));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::build_envelope;
    use crate::geometry::Point2;

    fn env(raw: &[(f64, f64)]) -> Envelope {
        let pts: Vec<Point2> = raw.iter().map(|&(x, y)| Point2::new(x, y)).collect();
        build_envelope(&pts).unwrap()
    }

    #[test]
    fn segment_domains() {
        let e = env(&[(0.0, 0.0), (1.0, 0.0)]);
        assert_eq!(e.segments[0].domain(&e.circles), (-1.0, 2.0));
        let e = env(&[(5.0, 0.0)]);
        assert_eq!(e.segments[0].domain(&e.circles), (4.0, 6.0));
        let e = env(&[(0.0, 0.0), (0.5, 0.1), (1.9, 0.0)]);
        assert_eq!(e.segments[0].domain(&e.circles), (-1.0, 2.9));
    }

    #[test]
    fn find_segment_examples() {
        let e = env(&[(0.0, 0.0), (3.0, 0.0)]);
        assert_eq!(find_segment(&e, 0.0), Some(0));
        assert_eq!(find_segment(&e, 1.5), None);
        assert_eq!(find_segment(&e, 4.0), Some(1));
        assert_eq!(find_segment(&e, -5.0), None);
    }

    #[test]
    fn evaluate_examples() {
        let e = env(&[(0.0, 0.0)]);
        let hit = evaluate(&e, 0.0).unwrap().unwrap();
        assert_eq!(hit.y, 1.0);
        assert_eq!(hit.circle, 0);
        assert!(evaluate(&e, 5.0).unwrap().is_none());

        let e = env(&[(0.0, 0.0), (1.0, 0.0)]);
        let hit = evaluate(&e, 0.5).unwrap().unwrap();
        assert!((hit.y - 0.8660254037844386).abs() < 1e-15);
        let hit = evaluate(&e, 1.9).unwrap().unwrap();
        assert!((hit.y - 0.4358898943540673).abs() < 1e-12);
        assert_eq!(hit.circle, 1);
    }

    #[test]
    fn evaluate_rejects_non_finite() {
        let e = env(&[(0.0, 0.0)]);
        assert_eq!(evaluate(&e, f64::NAN), Err(Error::NonFiniteQuery));
        assert_eq!(evaluate(&e, f64::INFINITY), Err(Error::NonFiniteQuery));
    }

    #[test]
    fn evaluate_at_transition_picks_right_circle() {
        let e = env(&[(0.0, 0.0), (1.0, 0.0)]);
        let hit = evaluate(&e, 0.5).unwrap().unwrap();
        assert_eq!(hit.circle, 1);
    }

    #[test]
    fn evaluate_closed_at_domain_endpoints() {
        let e = env(&[(0.0, 0.0)]);
        assert_eq!(evaluate(&e, -1.0).unwrap().unwrap().y, 0.0);
        assert_eq!(evaluate(&e, 1.0).unwrap().unwrap().y, 0.0);
    }

    #[test]
    fn evaluate_on_empty_envelope() {
        let e = env(&[]);
        assert!(evaluate(&e, 0.0).unwrap().is_none());
    }

    #[test]
    fn sample_examples() {
        let e = env(&[(0.0, 0.0)]);
        let rows = sample(&e, -1.0, 1.0, 1.0).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].0, -1.0);
        assert_eq!(rows[0].1.unwrap().y, 0.0);
        assert_eq!(rows[1].1.unwrap().y, 1.0);
        assert_eq!(rows[2].1.unwrap().y, 0.0);

        let rows = sample(&e, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].0, 0.0);

        let e = env(&[(0.0, 0.0), (3.0, 0.0)]);
        let rows = sample(&e, 1.25, 1.75, 0.25).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|(_, h)| h.is_none()));
    }

    #[test]
    fn sample_rejects_invalid_range() {
        let e = env(&[(0.0, 0.0)]);
        assert_eq!(sample(&e, 1.0, 0.0, 1.0), Err(Error::InvalidRange));
        assert_eq!(sample(&e, 0.0, 1.0, 0.0), Err(Error::InvalidRange));
        assert_eq!(sample(&e, 0.0, 1.0, -0.5), Err(Error::InvalidRange));
    }
}
