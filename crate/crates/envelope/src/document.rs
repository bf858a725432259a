//! Versioned on-disk representation of a built envelope: the frame, the
//! world-frame circle table, and the per-segment structure in canonical
//! coordinates. Serialized as JSON with round-trip-exact number formatting.

use serde::{Deserialize, Serialize};

use crate::envelope::{Envelope, Segment};
use crate::frame::DirectionalFrame;
use crate::geometry::{Point2, UnitCircle};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameParams {
    pub radius: f64,
    pub direction: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegmentRecord {
    /// Row indices into the document's circle table.
    pub circles: Vec<usize>,
    /// Transition positions in the canonical frame.
    pub transitions: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeDocument {
    pub version: u32,
    pub frame: FrameParams,
    /// World-frame centers of the prepared (sorted, deduplicated) circle table.
    pub circles: Vec<[f64; 2]>,
    pub segments: Vec<SegmentRecord>,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum DocumentError {
    #[error("document is not valid JSON: {0}")]
    Syntax(String),
    #[error("unsupported document version {0}")]
    Version(u32),
    #[error("invalid document: {0}")]
    Invalid(String),
}

impl EnvelopeDocument {
    /// Assembles a document from a built envelope and the world-frame centers
    /// backing its circle table (same order, same length).
    pub fn new(frame: &DirectionalFrame, world_centers: &[Point2], envelope: &Envelope) -> Self {
        assert_eq!(world_centers.len(), envelope.circles.len());
        let d = frame.direction();
        EnvelopeDocument {
            version: FORMAT_VERSION,
            frame: FrameParams {
                radius: frame.radius(),
                direction: [d.x, d.y],
            },
            circles: world_centers.iter().map(|p| [p.x, p.y]).collect(),
            segments: envelope
                .segments
                .iter()
                .map(|s| SegmentRecord {
                    circles: s.circles.clone(),
                    transitions: s.transitions.clone(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serialization");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let doc: EnvelopeDocument =
            serde_json::from_str(text).map_err(|e| DocumentError::Syntax(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<(), DocumentError> {
        if self.version != FORMAT_VERSION {
            return Err(DocumentError::Version(self.version));
        }
        if !self.frame.radius.is_finite() || self.frame.radius <= 0.0 {
            return Err(DocumentError::Invalid("frame radius must be positive".into()));
        }
        let [dx, dy] = self.frame.direction;
        if !dx.is_finite() || !dy.is_finite() || (dx == 0.0 && dy == 0.0) {
            return Err(DocumentError::Invalid(
                "frame direction must be finite and nonzero".into(),
            ));
        }
        for (i, c) in self.circles.iter().enumerate() {
            if !c[0].is_finite() || !c[1].is_finite() {
                return Err(DocumentError::Invalid(format!(
                    "circle {i} has a non-finite coordinate"
                )));
            }
        }
        for (i, seg) in self.segments.iter().enumerate() {
            if seg.circles.is_empty() {
                return Err(DocumentError::Invalid(format!("segment {i} is empty")));
            }
            if seg.transitions.len() + 1 != seg.circles.len() {
                return Err(DocumentError::Invalid(format!(
                    "segment {i}: expected {} transitions, found {}",
                    seg.circles.len() - 1,
                    seg.transitions.len()
                )));
            }
            for &c in &seg.circles {
                if c >= self.circles.len() {
                    return Err(DocumentError::Invalid(format!(
                        "segment {i} references circle {c} outside the table"
                    )));
                }
            }
            for &t in &seg.transitions {
                if !t.is_finite() {
                    return Err(DocumentError::Invalid(format!(
                        "segment {i} has a non-finite transition"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Rebuilds the queryable envelope (canonical frame) and the frame.
    pub fn reconstruct(&self) -> Result<(DirectionalFrame, Envelope), DocumentError> {
        let frame = DirectionalFrame::new(
            self.frame.radius,
            Point2::new(self.frame.direction[0], self.frame.direction[1]),
        )
        .map_err(|e| DocumentError::Invalid(e.to_string()))?;
        let circles: Vec<UnitCircle> = self
            .circles
            .iter()
            .map(|&[x, y]| UnitCircle {
                center: frame.to_canonical(Point2::new(x, y)),
            })
            .collect();
        let segments = self
            .segments
            .iter()
            .map(|s| Segment {
                circles: s.circles.clone(),
                transitions: s.transitions.clone(),
            })
            .collect();
        Ok((frame, Envelope { circles, segments }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::build_envelope;

    fn doc() -> EnvelopeDocument {
        let pts = vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)];
        let env = build_envelope(&pts).unwrap();
        EnvelopeDocument::new(&DirectionalFrame::identity(), &pts, &env)
    }

    #[test]
    fn json_round_trip_is_lossless() {
        let d = doc();
        let text = d.to_json();
        let parsed = EnvelopeDocument::from_json(&text).unwrap();
        assert_eq!(parsed, d);
        assert_eq!(parsed.to_json(), text);
    }

    #[test]
    fn rejects_bad_version() {
        let mut d = doc();
        d.version = 99;
        let err = EnvelopeDocument::from_json(&d.to_json()).unwrap_err();
        assert_eq!(err, DocumentError::Version(99));
    }

    #[test]
    fn rejects_dangling_index() {
        let mut d = doc();
        d.segments[0].circles.push(7);
        d.segments[0].transitions.push(9.0);
        assert!(matches!(
            EnvelopeDocument::from_json(&d.to_json()),
            Err(DocumentError::Invalid(_))
        ));
    }

    #[test]
    fn rejects_transition_count_mismatch() {
        let mut d = doc();
        d.segments[0].transitions.clear();
        assert!(matches!(
            EnvelopeDocument::from_json(&d.to_json()),
            Err(DocumentError::Invalid(_))
        ));
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(
            EnvelopeDocument::from_json("not json"),
            Err(DocumentError::Syntax(_))
        ));
    }

    #[test]
    fn reconstruct_matches_build() {
        let pts = vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)];
        let env = build_envelope(&pts).unwrap();
        let d = EnvelopeDocument::new(&DirectionalFrame::identity(), &pts, &env);
        let (_, rebuilt) = d.reconstruct().unwrap();
        assert_eq!(rebuilt, env);
    }
}
