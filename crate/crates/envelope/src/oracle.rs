//! Brute-force reference implementations. Deliberately O(n) linear scans and
//! resolution sweeps with no shared code path with the envelope structure; used
//! by tests and by the CLI's `--oracle` cross-check, never by the fast path.

use crate::geometry::UnitCircle;
use crate::Error;

/// Height of the union boundary at `x` by a linear scan over every circle, or
/// `None` when no circle covers `x`.
pub fn brute_force_evaluate(circles: &[UnitCircle], x: f64) -> Option<f64> {
    let mut best: Option<f64> = None;
    for c in circles {
        let dx = x - c.center.x;
        if dx.abs() <= 1.0 {
            let y = c.center.y + (1.0 - dx * dx).sqrt();
            if best.is_none_or(|b| y > b) {
                best = Some(y);
            }
        }
    }
    best
}

/// Two arc values are considered tied below this; the argmax carries over from
/// the previous scan point so a tie is not counted as a switch.
const TIE_EPS: f64 = 1e-12;

/// Locates the boundary handoff between two circles by scanning their common
/// horizontal domain `[x_i - 1, x_j + 1]` at the given resolution.
///
/// Requires `cj.center.x < ci.center.x`. Returns `None` when the circles do
/// not overlap horizontally. More than one argmax switch means the handoff is
/// not unique, which signals a bug in the caller's geometry.
pub fn scan_transition(
    cj: &UnitCircle,
    ci: &UnitCircle,
    resolution: f64,
) -> Result<Option<f64>, Error> {
    let (xj, yj) = (cj.center.x, cj.center.y);
    let (xi, yi) = (ci.center.x, ci.center.y);
    debug_assert!(xj < xi, "pair must be ordered by center x");
    if xj + 2.0 <= xi {
        return Ok(None);
    }
    let lo = xi - 1.0;
    let hi = xj + 1.0;

    let arc = |xc: f64, yc: f64, x: f64| yc + (1.0 - (x - xc) * (x - xc)).max(0.0).sqrt();

    let mut switch: Option<f64> = None;
    let mut switches = 0usize;
    let mut prev_right = false; // argmax at the previous point was ci
    let mut k = 0u64;
    loop {
        let x = (lo + k as f64 * resolution).min(hi);
        let vj = arc(xj, yj, x);
        let vi = arc(xi, yi, x);
        let right = if (vj - vi).abs() <= TIE_EPS {
            if k == 0 {
                false
            } else {
                prev_right
            }
        } else {
            vi > vj
        };
        if k == 0 {
            prev_right = right;
        } else if right != prev_right {
            switches += 1;
            switch = Some(x - 0.5 * resolution);
            prev_right = right;
        }
        if x >= hi {
            break;
        }
        k += 1;
    }

    if switches > 1 {
        return Err(Error::MultipleSwitches);
    }
    // No switch observed: ownership is constant over the common domain, so
    // the handoff sits at one of its endpoints.
    Ok(Some(match switch {
        Some(x) => x,
        None if prev_right => lo,
        None => hi,
    }))
}
