//! Circle-center ingestion. One `x,y` pair per line, `#` starts a comment,
//! blank lines are skipped, and a non-numeric first row is treated as a header.

use crate::geometry::Point2;

/// A malformed row; `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct CsvError {
    pub line: usize,
    pub message: String,
}

fn parse_row(row: &str) -> Result<Point2, String> {
    let mut fields = row.split(',');
    let (Some(fx), Some(fy), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err("expected exactly two comma-separated fields".into());
    };
    let x: f64 = fx
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse '{}' as a number", fx.trim()))?;
    let y: f64 = fy
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse '{}' as a number", fy.trim()))?;
    if !x.is_finite() || !y.is_finite() {
        return Err("coordinates must be finite".into());
    }
    Ok(Point2::new(x, y))
}

/// Parses circle centers from CSV text.
pub fn parse_centers(text: &str) -> Result<Vec<Point2>, CsvError> {
    let mut out = Vec::new();
    let mut saw_data_row = false;
    for (lineno, raw_line) in text.lines().enumerate() {
        let line = match raw_line.split_once('#') {
            Some((before, _)) => before,
            None => raw_line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match parse_row(line) {
            Ok(p) => {
                out.push(p);
                saw_data_row = true;
            }
            // The first non-parsing row is an optional header.
            Err(_) if !saw_data_row => {
                saw_data_row = true;
            }
            Err(message) => {
                return Err(CsvError {
                    line: lineno + 1,
                    message,
                });
            }
        }
    }
    Ok(out)
}
