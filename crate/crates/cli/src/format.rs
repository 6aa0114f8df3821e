//! Deterministic number formatting for CSV output.

/// Render with exactly 12 significant digits in scientific notation;
/// locale-independent and byte-stable across platforms.
pub fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}
