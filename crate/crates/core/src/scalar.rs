//! Scalars and the graded relative tolerance used by every predicate.

use num_complex::Complex64;

/// All coefficients live in ℂ with double-precision components.
pub type Scalar = Complex64;

/// Shorthand for a real scalar.
pub fn re(x: f64) -> Scalar {
    Scalar::new(x, 0.0)
}

/// The single relative tolerance knob, threaded explicitly everywhere.
///
/// A quantity derived from inputs of magnitude `scale` at algebraic degree
/// `degree` counts as zero iff its magnitude is at most
/// `rel * max(scale, 1)^degree`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    rel: f64,
}

impl Tolerance {
    pub fn new(rel: f64) -> Self {
        assert!(rel > 0.0 && rel.is_finite(), "tolerance must be positive");
        Tolerance { rel }
    }

    pub fn rel(&self) -> f64 {
        self.rel
    }

    pub fn threshold(&self, scale: f64, degree: u32) -> f64 {
        self.rel * scale.max(1.0).powi(degree as i32)
    }

    pub fn is_zero(&self, value: Scalar, scale: f64, degree: u32) -> bool {
        value.norm() <= self.threshold(scale, degree)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { rel: 1e-9 }
    }
}

/// Largest magnitude in a slice of scalars.
pub fn max_norm(values: &[Scalar]) -> f64 {
    values.iter().map(|v| v.norm()).fold(0.0, f64::max)
}

/// True iff the two coefficient vectors are proportional: every 2x2 minor
/// of the stacked 2xN matrix vanishes at degree 2.
pub fn proportional(a: &[Scalar], b: &[Scalar], tol: &Tolerance) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let scale = max_norm(a).max(max_norm(b));
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if !tol.is_zero(a[i] * b[j] - a[j] * b[i], scale, 2) {
                return false;
            }
        }
    }
    true
}
