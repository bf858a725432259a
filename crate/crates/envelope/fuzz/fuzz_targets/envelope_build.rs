#![no_main]

use libfuzzer_sys::fuzz_target;

use circle_envelope::geometry::Point2;

fuzz_target!(|data: &[u8]| {
    // Interpret the input as raw f64 coordinate pairs.
    let mut points = Vec::new();
    for chunk in data.chunks_exact(16) {
        let x = f64::from_le_bytes(chunk[0..8].try_into().unwrap());
        let y = f64::from_le_bytes(chunk[8..16].try_into().unwrap());
        points.push(Point2::new(x, y));
    }

    match circle_envelope::build_envelope(&points) {
        Err(_) => {
            // Only non-finite coordinates are rejected.
            assert!(points.iter().any(|p| !p.is_finite()));
        }
        Ok(envelope) => {
            for seg in &envelope.segments {
                assert_eq!(seg.transitions.len() + 1, seg.circles.len());
                assert!(seg.transitions.windows(2).all(|w| w[0] < w[1]));
            }
            for p in &points {
                let _ = circle_envelope::evaluate(&envelope, p.x);
            }
        }
    }
});
