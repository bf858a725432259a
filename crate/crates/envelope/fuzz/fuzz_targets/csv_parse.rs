#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(points) = circle_envelope::csv::parse_centers(text) {
        // Accepted rows must be finite; the builder must not panic on them.
        assert!(points.iter().all(|p| p.is_finite()));
        let _ = circle_envelope::build_envelope(&points);
    }
});
