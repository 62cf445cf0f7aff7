//! Residual reports shared by every verification path.

use alloc::string::String;

use crate::wave::Point;

/// Maximum absolute and scale-relative residual of one equation over a set of
/// sample points.
///
/// The relative residual divides by `1 + scale`, where `scale` is the largest
/// individual contribution at the point. That guard keeps exponentially large
/// tau functions from passing on magnitude alone and tiny ones from failing on
/// noise.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    /// Name of the equation that was checked.
    pub equation: String,
    /// Largest `|residual|` over the sampled points.
    pub max_abs: f64,
    /// Largest `|residual| / (1 + scale)` over the sampled points.
    pub max_rel: f64,
    /// Threshold the relative residual was compared against.
    pub tolerance: f64,
    /// `max_rel < tolerance`.
    pub pass: bool,
    /// Point where the relative residual peaked.
    pub worst_point: Point,
    /// Points excluded because the transform is singular there (`w ≈ 0`).
    pub singular_skipped: usize,
}

impl ResidualReport {
    /// Running accumulator for building a report point by point.
    pub fn accumulator(equation: impl Into<String>, tolerance: f64) -> ResidualAccumulator {
        ResidualAccumulator {
            equation: equation.into(),
            tolerance,
            max_abs: 0.0,
            max_rel: 0.0,
            worst_point: Point::ORIGIN,
            singular_skipped: 0,
            samples: 0,
        }
    }
}

/// Builder that folds per-point residuals into a [`ResidualReport`].
#[derive(Debug, Clone)]
pub struct ResidualAccumulator {
    equation: String,
    tolerance: f64,
    max_abs: f64,
    max_rel: f64,
    worst_point: Point,
    singular_skipped: usize,
    samples: usize,
}

impl ResidualAccumulator {
    /// Record one point: `abs` is `|residual|`, `scale` the largest individual
    /// contribution entering the equation there.
    pub fn record(&mut self, point: Point, abs: f64, scale: f64) {
        self.record_rel(point, abs, abs / (1.0 + scale));
    }

    /// Record one point with the relative residual already computed (used
    /// when the evaluation runs in a rescaled gauge).
    pub fn record_rel(&mut self, point: Point, abs: f64, rel: f64) {
        self.max_abs = self.max_abs.max(abs);
        if rel >= self.max_rel || self.samples == 0 {
            self.max_rel = rel;
            self.worst_point = point;
        }
        self.samples += 1;
    }

    /// Record a point that had to be skipped (singular transform).
    pub fn record_singular(&mut self) {
        self.singular_skipped += 1;
    }

    pub fn finish(self) -> ResidualReport {
        ResidualReport {
            equation: self.equation,
            max_abs: self.max_abs,
            max_rel: self.max_rel,
            tolerance: self.tolerance,
            pass: self.max_rel < self.tolerance,
            worst_point: self.worst_point,
            singular_skipped: self.singular_skipped,
        }
    }
}
