#![no_main]

use libfuzzer_sys::fuzz_target;

use circle_envelope::document::EnvelopeDocument;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = EnvelopeDocument::from_json(text) {
        // A validated document must reconstruct and answer queries without
        // panicking, whatever its (possibly inconsistent) geometry says.
        let (_, envelope) = doc.reconstruct().expect("validated document");
        for x in [-1.0, 0.0, 0.5, 100.0] {
            let _ = circle_envelope::evaluate(&envelope, x);
        }
        // Round trip preserves the document.
        let json = doc.to_json();
        assert_eq!(EnvelopeDocument::from_json(&json).as_ref(), Ok(&doc));
    }
});
