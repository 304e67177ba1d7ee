//! Small floating-point comparison helpers with explicit tolerances.

/// Relative closeness: `a == b`, or `|a − b| ≤ tol · max(|a|, |b|)`.
///
/// Exact equality is checked first so that `rel_close(0.0, 0.0, t)` holds.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}

/// `a ≤ b` up to a relative slack of `tol`.
pub fn le_rel(a: f64, b: f64, tol: f64) -> bool {
    a <= b || rel_close(a, b, tol)
}

/// `a < b` with a relative separation of at least `tol`; values closer than
/// `tol` are considered indistinguishable and fail the strict test.
pub fn lt_rel(a: f64, b: f64, tol: f64) -> bool {
    a < b && !rel_close(a, b, tol)
}

/// Largest absolute componentwise difference of two equally long slices.
pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
