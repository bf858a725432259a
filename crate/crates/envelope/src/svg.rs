//! SVG rendering of an instance: input circles as blue outlines, the envelope
//! as red paths, drawn in the canonical frame with a y-up viewport transform.

use std::fmt::Write;

use crate::envelope::{Envelope, Segment};
use crate::geometry::UnitCircle;
use crate::query::evaluate;

/// Canonical x step between red-path vertices; fine enough that the polyline
/// stays within a fraction of a pixel of the true arcs at typical plot sizes.
const PATH_STEP: f64 = 2.5e-3;

const MARGIN_PX: f64 = 10.0;

struct Viewport {
    scale: f64,
    x0: f64,
    y0: f64,
    height: f64,
    off_x: f64,
    off_y: f64,
}

impl Viewport {
    fn fit(circles: &[UnitCircle], width: f64, height: f64) -> Viewport {
        let (mut x_min, mut x_max, mut y_min, mut y_max) = (-1.0f64, 1.0f64, -1.0f64, 1.0f64);
        for (i, c) in circles.iter().enumerate() {
            let (cx, cy) = (c.center.x, c.center.y);
            if i == 0 {
                (x_min, x_max, y_min, y_max) = (cx - 1.0, cx + 1.0, cy - 1.0, cy + 1.0);
            } else {
                x_min = x_min.min(cx - 1.0);
                x_max = x_max.max(cx + 1.0);
                y_min = y_min.min(cy - 1.0);
                y_max = y_max.max(cy + 1.0);
            }
        }
        let dx = x_max - x_min;
        let dy = y_max - y_min;
        let scale = ((width - 2.0 * MARGIN_PX) / dx).min((height - 2.0 * MARGIN_PX) / dy);
        // Center the drawing inside the viewport.
        let off_x = (width - scale * dx) / 2.0;
        let off_y = (height - scale * dy) / 2.0;
        Viewport {
            scale,
            x0: x_min,
            y0: y_min,
            height,
            off_x,
            off_y,
        }
    }

    fn px(&self, x: f64) -> f64 {
        self.off_x + (x - self.x0) * self.scale
    }

    fn py(&self, y: f64) -> f64 {
        self.height - self.off_y - (y - self.y0) * self.scale
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.4}")
}

fn segment_path(seg: &Segment, envelope: &Envelope, vp: &Viewport) -> String {
    let (lo, hi) = seg.domain(&envelope.circles);
    let mut d = String::new();
    let mut k = 0u64;
    loop {
        let x = (lo + k as f64 * PATH_STEP).min(hi);
        // Every point of a segment's closed domain is defined.
        let hit = evaluate(envelope, x).expect("finite x").expect("inside domain");
        let cmd = if k == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{}{} {} ", cmd, fmt(vp.px(x)), fmt(vp.py(hit.y)));
        if x >= hi {
            break;
        }
        k += 1;
    }
    d.trim_end().to_string()
}

/// Renders the full plot. `input_circles` are all circles of the instance in
/// canonical coordinates (including any that do not reach the boundary);
/// `envelope` supplies the red boundary paths.
pub fn render_plot(
    input_circles: &[UnitCircle],
    envelope: &Envelope,
    width: u32,
    height: u32,
) -> String {
    let (w, h) = (width as f64, height as f64);
    let vp = Viewport::fit(input_circles, w, h);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );

    // Axes (world x = 0 and y = 0), when they cross the visible region.
    let (x_lo, x_hi) = (vp.x0, vp.x0 + (w - 2.0 * vp.off_x) / vp.scale);
    let (y_lo, y_hi) = (vp.y0, vp.y0 + (h - 2.0 * vp.off_y) / vp.scale);
    if x_lo <= 0.0 && 0.0 <= x_hi {
        let _ = writeln!(
            svg,
            "  <line x1=\"{x}\" y1=\"0\" x2=\"{x}\" y2=\"{h}\" stroke=\"#999\" stroke-width=\"1\"/>",
            x = fmt(vp.px(0.0)),
        );
    }
    if y_lo <= 0.0 && 0.0 <= y_hi {
        let _ = writeln!(
            svg,
            "  <line x1=\"0\" y1=\"{y}\" x2=\"{w}\" y2=\"{y}\" stroke=\"#999\" stroke-width=\"1\"/>",
            y = fmt(vp.py(0.0)),
        );
    }

    for c in input_circles {
        let _ = writeln!(
            svg,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"blue\" stroke-width=\"1\"/>",
            fmt(vp.px(c.center.x)),
            fmt(vp.py(c.center.y)),
            fmt(vp.scale),
        );
    }

    for seg in &envelope.segments {
        let _ = writeln!(
            svg,
            "  <path d=\"{}\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>",
            segment_path(seg, envelope, &vp),
        );
    }

    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::build_envelope;
    use crate::geometry::Point2;

    #[test]
    fn single_circle_plot() {
        let pts = vec![Point2::new(0.0, 0.0)];
        let env = build_envelope(&pts).unwrap();
        let circles: Vec<UnitCircle> = pts.iter().map(|&p| UnitCircle { center: p }).collect();
        let svg = render_plot(&circles, &env, 400, 300);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("stroke=\"blue\"").count(), 1);
        assert_eq!(svg.matches("stroke=\"red\"").count(), 1);
    }

    #[test]
    fn empty_plot_has_axes_only() {
        let env = build_envelope(&[]).unwrap();
        let svg = render_plot(&[], &env, 400, 300);
        assert!(svg.contains("stroke=\"#999\""));
        assert!(!svg.contains("stroke=\"blue\""));
        assert!(!svg.contains("stroke=\"red\""));
    }

    #[test]
    fn deterministic_output() {
        let pts = vec![Point2::new(0.0, 0.0), Point2::new(1.2, 0.4)];
        let env = build_envelope(&pts).unwrap();
        let circles: Vec<UnitCircle> = pts.iter().map(|&p| UnitCircle { center: p }).collect();
        let a = render_plot(&circles, &env, 640, 480);
        let b = render_plot(&circles, &env, 640, 480);
        assert_eq!(a, b);
    }
}
