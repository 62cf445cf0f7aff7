//! Complex wave expressions with exact mixed partial derivatives.
//!
//! A [`TauFunction`] is a constant plus a flat sum of [`WaveTerm`]s, each a
//! complex coefficient times `exp`, `cos`, `sin`, `cosh` or `sinh` of a
//! [`LinearPhase`] in `(x, y, t)`. The family is closed under
//! differentiation — one derivative maps every term to exactly one term — so
//! mixed partials of any order are exact: no truncation, no step size.
//!
//! Terms are never merged or simplified; a derivative that annihilates a term
//! simply leaves a zero coefficient behind.

use alloc::vec::Vec;

// Float-method fallback (`abs`, `ln`, `exp`, ...) for no_std builds.
#[allow(unused_imports)]
use num_traits::Float;

use crate::Complex;

/// Maximum total derivative order accepted by [`TauFunction::partial`].
pub const MAX_PARTIAL_ORDER: u32 = 8;

/// A point in space-time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub t: f64,
}

impl Point {
    pub const ORIGIN: Point = Point {
        x: 0.0,
        y: 0.0,
        t: 0.0,
    };

    pub fn new(x: f64, y: f64, t: f64) -> Self {
        Point { x, y, t }
    }
}

impl From<[f64; 3]> for Point {
    fn from(p: [f64; 3]) -> Self {
        Point {
            x: p[0],
            y: p[1],
            t: p[2],
        }
    }
}

impl From<Point> for [f64; 3] {
    fn from(p: Point) -> Self {
        [p.x, p.y, p.t]
    }
}

/// One of the three independent variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    T,
}

/// A linear phase `alpha·x + beta·y + gamma·t + delta` with complex
/// coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearPhase {
    pub alpha: Complex,
    pub beta: Complex,
    pub gamma: Complex,
    pub delta: Complex,
}

impl LinearPhase {
    pub fn new(alpha: Complex, beta: Complex, gamma: Complex) -> Self {
        LinearPhase {
            alpha,
            beta,
            gamma,
            delta: Complex::ZERO,
        }
    }

    pub fn with_offset(alpha: Complex, beta: Complex, gamma: Complex, delta: Complex) -> Self {
        LinearPhase {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    /// Phase from real coefficients.
    pub fn real(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self::new(
            Complex::new(alpha, 0.0),
            Complex::new(beta, 0.0),
            Complex::new(gamma, 0.0),
        )
    }

    pub fn at(&self, p: Point) -> Complex {
        self.alpha * p.x + self.beta * p.y + self.gamma * p.t + self.delta
    }

    /// Coefficient of the given axis.
    pub fn coefficient(&self, axis: Axis) -> Complex {
        match axis {
            Axis::X => self.alpha,
            Axis::Y => self.beta,
            Axis::T => self.gamma,
        }
    }

    /// The phase scaled by `-1` (used for `e^{-ξ}` style terms).
    pub fn negated(&self) -> Self {
        LinearPhase {
            alpha: -self.alpha,
            beta: -self.beta,
            gamma: -self.gamma,
            delta: -self.delta,
        }
    }
}

/// The elementary wave shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveKind {
    Exp,
    Cos,
    Sin,
    Cosh,
    Sinh,
}

impl WaveKind {
    fn eval(self, z: Complex) -> Complex {
        match self {
            WaveKind::Exp => z.exp(),
            WaveKind::Cos => z.cos(),
            WaveKind::Sin => z.sin(),
            WaveKind::Cosh => z.cosh(),
            WaveKind::Sinh => z.sinh(),
        }
    }

    /// Image kind and sign factor under one derivative: `exp' = exp`,
    /// `cos' = -sin`, `sin' = cos`, `cosh' = sinh`, `sinh' = cosh`.
    fn diff(self) -> (WaveKind, f64) {
        match self {
            WaveKind::Exp => (WaveKind::Exp, 1.0),
            WaveKind::Cos => (WaveKind::Sin, -1.0),
            WaveKind::Sin => (WaveKind::Cos, 1.0),
            WaveKind::Cosh => (WaveKind::Sinh, 1.0),
            WaveKind::Sinh => (WaveKind::Cosh, 1.0),
        }
    }
}

/// `coefficient · kind(phase(x, y, t))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveTerm {
    pub coefficient: Complex,
    pub kind: WaveKind,
    pub phase: LinearPhase,
}

impl WaveTerm {
    pub fn new(coefficient: Complex, kind: WaveKind, phase: LinearPhase) -> Self {
        WaveTerm {
            coefficient,
            kind,
            phase,
        }
    }

    /// `coefficient · e^{phase}`.
    pub fn exp(coefficient: Complex, phase: LinearPhase) -> Self {
        Self::new(coefficient, WaveKind::Exp, phase)
    }

    pub fn eval(&self, p: Point) -> Complex {
        self.coefficient * self.kind.eval(self.phase.at(p))
    }

    /// Natural log of the magnitude envelope of this term at `p`: writing the
    /// term through its exponential decomposition, the largest real exponent
    /// plus `ln|coefficient|`. `-inf` for a zero coefficient.
    fn log_envelope(&self, p: Point) -> f64 {
        let mag = self.coefficient.norm();
        if mag == 0.0 {
            return f64::NEG_INFINITY;
        }
        let z = self.phase.at(p);
        let body = match self.kind {
            WaveKind::Exp => z.re,
            WaveKind::Cos | WaveKind::Sin => z.im.abs(),
            WaveKind::Cosh | WaveKind::Sinh => z.re.abs(),
        };
        mag.ln() + body
    }

    /// Term value times `e^{-shift}`, computed through the exponential
    /// decomposition so no intermediate overflows as long as `shift` is at
    /// least the term's log envelope.
    fn eval_scaled(&self, p: Point, shift: f64) -> Complex {
        let z = self.phase.at(p);
        let c = self.coefficient;
        match self.kind {
            WaveKind::Exp => c * (z - shift).exp(),
            WaveKind::Cos => {
                let iz = Complex::new(-z.im, z.re);
                0.5 * c * ((iz - shift).exp() + (-iz - shift).exp())
            }
            WaveKind::Sin => {
                let iz = Complex::new(-z.im, z.re);
                // 1/(2i) = -i/2
                Complex::new(0.0, -0.5) * c * ((iz - shift).exp() - (-iz - shift).exp())
            }
            WaveKind::Cosh => 0.5 * c * ((z - shift).exp() + (-z - shift).exp()),
            WaveKind::Sinh => 0.5 * c * ((z - shift).exp() - (-z - shift).exp()),
        }
    }

    /// Exact derivative along one axis; the chain rule multiplies the
    /// coefficient by the phase coefficient of that axis.
    fn diff(&self, axis: Axis) -> WaveTerm {
        let (kind, sign) = self.kind.diff();
        WaveTerm {
            coefficient: self.coefficient * self.phase.coefficient(axis) * sign,
            kind,
            phase: self.phase,
        }
    }
}

/// Requested derivative order exceeds [`MAX_PARTIAL_ORDER`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderTooHigh {
    pub order: (u32, u32, u32),
    pub max_total: u32,
}

impl core::fmt::Display for OrderTooHigh {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let (i, j, k) = self.order;
        write!(
            f,
            "derivative order ({i},{j},{k}) has total {} which exceeds the guard {}",
            i + j + k,
            self.max_total
        )
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OrderTooHigh {}

/// A constant plus a flat sum of wave terms.
///
/// Values and all mixed partials are finite at every finite point whenever the
/// phase coefficients are finite. All operations are pure; the type is a plain
/// immutable value.
#[derive(Debug, Clone, PartialEq)]
pub struct TauFunction {
    pub constant: Complex,
    pub terms: Vec<WaveTerm>,
}

impl TauFunction {
    pub fn new(constant: Complex, terms: Vec<WaveTerm>) -> Self {
        TauFunction { constant, terms }
    }

    /// The constant function `1`.
    pub fn one() -> Self {
        TauFunction {
            constant: Complex::ONE,
            terms: Vec::new(),
        }
    }

    pub fn eval(&self, p: Point) -> Complex {
        let mut acc = self.constant;
        for term in &self.terms {
            acc += term.eval(p);
        }
        acc
    }

    /// Largest single contribution `max(|constant|, |term_i(p)|)` at a point.
    /// Residual checks use it as the scale that separates genuine cancellation
    /// from rounding noise.
    pub fn term_scale(&self, p: Point) -> f64 {
        let mut scale = self.constant.norm();
        for term in &self.terms {
            scale = scale.max(term.eval(p).norm());
        }
        scale
    }

    /// Exact derivative along one axis. The constant dies; every term maps to
    /// exactly one term, so the term count never grows.
    pub fn diff_axis(&self, axis: Axis) -> TauFunction {
        TauFunction {
            constant: Complex::ZERO,
            terms: self.terms.iter().map(|t| t.diff(axis)).collect(),
        }
    }

    /// Exact mixed partial `∂^{i+j+k} / ∂x^i ∂y^j ∂t^k`.
    ///
    /// Orders with total above [`MAX_PARTIAL_ORDER`] are rejected; the
    /// verification paths need totals up to 5 and the guard leaves headroom.
    pub fn partial(&self, order: (u32, u32, u32)) -> Result<TauFunction, OrderTooHigh> {
        let (i, j, k) = order;
        if i + j + k > MAX_PARTIAL_ORDER {
            return Err(OrderTooHigh {
                order,
                max_total: MAX_PARTIAL_ORDER,
            });
        }
        let mut out = self.clone();
        for _ in 0..i {
            out = out.diff_axis(Axis::X);
        }
        for _ in 0..j {
            out = out.diff_axis(Axis::Y);
        }
        for _ in 0..k {
            out = out.diff_axis(Axis::T);
        }
        Ok(out)
    }

    /// Term-by-term sum (no merging).
    pub fn plus(&self, other: &TauFunction) -> TauFunction {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        terms.extend_from_slice(&self.terms);
        terms.extend_from_slice(&other.terms);
        TauFunction {
            constant: self.constant + other.constant,
            terms,
        }
    }

    /// Log of the largest term envelope at `p`, or `0` when everything is
    /// zero. Evaluating with [`TauFunction::eval_scaled`] at this shift keeps
    /// every contribution at magnitude ≤ 1, so products of values never
    /// overflow even when phases reach several hundred.
    pub fn log_scale(&self, p: Point) -> f64 {
        let mut env = if self.constant.norm() == 0.0 {
            f64::NEG_INFINITY
        } else {
            self.constant.norm().ln()
        };
        for term in &self.terms {
            env = env.max(term.log_envelope(p));
        }
        if env == f64::NEG_INFINITY {
            0.0
        } else {
            env
        }
    }

    /// `w(p) · e^{-shift}`, overflow-safe for `shift ≥ log_scale(p)`.
    pub fn eval_scaled(&self, p: Point, shift: f64) -> Complex {
        let mut acc = self.constant * f64::exp(-shift);
        for term in &self.terms {
            acc += term.eval_scaled(p, shift);
        }
        acc
    }

    /// Largest single scaled contribution `|term(p)|·e^{-shift}` at a point.
    pub fn term_scale_scaled(&self, p: Point, shift: f64) -> f64 {
        let mut scale = self.constant.norm() * f64::exp(-shift);
        for term in &self.terms {
            scale = scale.max(term.eval_scaled(p, shift).norm());
        }
        scale
    }

    /// Rigid translation: adds `alpha·dx + beta·dy + gamma·dt` to every phase
    /// offset, so `w_shifted(p) = w(p + shift)`.
    pub fn translated(&self, dx: f64, dy: f64, dt: f64) -> TauFunction {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut phase = t.phase;
                phase.delta += phase.alpha * dx + phase.beta * dy + phase.gamma * dt;
                WaveTerm { phase, ..*t }
            })
            .collect();
        TauFunction {
            constant: self.constant,
            terms,
        }
    }
}

/// Table of exact mixed partials `∂^{(i,j,k)} w`, built once and evaluated at
/// many points. Each slot holds a full [`TauFunction`]; empty slots were
/// outside the requested order set.
#[derive(Debug, Clone)]
pub struct PartialGrid {
    caps: (u32, u32, u32),
    slots: Vec<Option<TauFunction>>,
}

impl PartialGrid {
    /// Every partial in the component box `i ≤ caps.0, j ≤ caps.1, k ≤ caps.2`.
    pub fn component_box(w: &TauFunction, caps: (u32, u32, u32)) -> Self {
        Self::build(w, caps, u32::MAX)
    }

    /// Every partial with total order `i + j + k ≤ cap`.
    pub fn total_order(w: &TauFunction, cap: u32) -> Self {
        Self::build(w, (cap, cap, cap), cap)
    }

    fn build(w: &TauFunction, caps: (u32, u32, u32), total_cap: u32) -> Self {
        let (ci, cj, ck) = caps;
        let len = ((ci + 1) * (cj + 1) * (ck + 1)) as usize;
        let mut grid = PartialGrid {
            caps,
            slots: alloc::vec![None; len],
        };
        for i in 0..=ci {
            for j in 0..=cj {
                for k in 0..=ck {
                    if i + j + k > total_cap {
                        continue;
                    }
                    let tau = if i == 0 && j == 0 && k == 0 {
                        w.clone()
                    } else if i > 0 {
                        grid.get(i - 1, j, k).diff_axis(Axis::X)
                    } else if j > 0 {
                        grid.get(i, j - 1, k).diff_axis(Axis::Y)
                    } else {
                        grid.get(i, j, k - 1).diff_axis(Axis::T)
                    };
                    let idx = grid.index(i, j, k);
                    grid.slots[idx] = Some(tau);
                }
            }
        }
        grid
    }

    fn index(&self, i: u32, j: u32, k: u32) -> usize {
        let (_, cj, ck) = self.caps;
        ((i * (cj + 1) + j) * (ck + 1) + k) as usize
    }

    /// The base function (order `(0,0,0)`).
    pub fn base(&self) -> &TauFunction {
        self.get(0, 0, 0)
    }

    pub fn get(&self, i: u32, j: u32, k: u32) -> &TauFunction {
        self.slots[self.index(i, j, k)]
            .as_ref()
            .expect("partial derivative not materialized")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn constant_plus_unit_exponential() {
        // 1 + e^{0·x} = 2 everywhere
        let w = TauFunction::new(
            c(1.0),
            alloc::vec![WaveTerm::exp(c(1.0), LinearPhase::real(0.0, 0.0, 0.0))],
        );
        assert_eq!(w.eval(Point::new(1.7, -0.3, 4.0)), c(2.0));

        // 1 + e^{x} at the origin = 2
        let w = TauFunction::new(
            c(1.0),
            alloc::vec![WaveTerm::exp(c(1.0), LinearPhase::real(1.0, 0.0, 0.0))],
        );
        assert_eq!(w.eval(Point::ORIGIN), c(2.0));
    }

    #[test]
    fn exp_plus_cos_at_origin() {
        // e^{-x} + cos(x) at 0 = 2
        let xi = LinearPhase::real(1.0, 0.0, 0.0);
        let w = TauFunction::new(
            Complex::ZERO,
            alloc::vec![
                WaveTerm::exp(c(1.0), xi.negated()),
                WaveTerm::new(c(1.0), WaveKind::Cos, xi),
            ],
        );
        assert_eq!(w.eval(Point::ORIGIN), c(2.0));
    }

    #[test]
    fn exp_chain_rule() {
        // d/dx e^{2x} = 2 e^{2x}; at x=0 gives 2
        let w = TauFunction::new(
            Complex::ZERO,
            alloc::vec![WaveTerm::exp(c(1.0), LinearPhase::real(2.0, 0.0, 0.0))],
        );
        let wx = w.partial((1, 0, 0)).unwrap();
        assert_eq!(wx.eval(Point::ORIGIN), c(2.0));
    }

    #[test]
    fn mixed_partial_of_cos() {
        // ∂x∂y cos(x+y) at origin = -cos(0) = -1
        let w = TauFunction::new(
            Complex::ZERO,
            alloc::vec![WaveTerm::new(
                c(1.0),
                WaveKind::Cos,
                LinearPhase::real(1.0, 1.0, 0.0)
            )],
        );
        let wxy = w.partial((1, 1, 0)).unwrap();
        assert!((wxy.eval(Point::ORIGIN) - c(-1.0)).norm() < 1e-15);
    }

    #[test]
    fn fourth_derivative_of_cosh() {
        // ∂x^4 cosh(αx) at x=0 = α^4
        let alpha = 1.3_f64;
        let w = TauFunction::new(
            Complex::ZERO,
            alloc::vec![WaveTerm::new(
                c(1.0),
                WaveKind::Cosh,
                LinearPhase::real(alpha, 0.0, 0.0)
            )],
        );
        let w4 = w.partial((4, 0, 0)).unwrap();
        let exact = alpha.powi(4); // 2.8561
        assert!((w4.eval(Point::ORIGIN) - c(exact)).norm() < 1e-12 * exact);
    }

    #[test]
    fn order_guard_rejects_total_above_eight() {
        let w = TauFunction::one();
        let err = w.partial((5, 3, 1)).unwrap_err();
        assert_eq!(err.order, (5, 3, 1));
    }

    #[test]
    fn mixed_partials_commute() {
        let w = TauFunction::new(
            c(0.5),
            alloc::vec![
                WaveTerm::new(c(1.2), WaveKind::Sinh, LinearPhase::real(0.7, -0.4, 0.2)),
                WaveTerm::new(
                    Complex::new(0.3, -0.8),
                    WaveKind::Cos,
                    LinearPhase::real(-1.1, 0.9, 0.5)
                ),
            ],
        );
        let xy = w.partial((1, 0, 0)).unwrap().partial((0, 1, 0)).unwrap();
        let direct = w.partial((1, 1, 0)).unwrap();
        let p = Point::new(0.3, -0.7, 1.1);
        assert!((xy.eval(p) - direct.eval(p)).norm() < 1e-14);
    }

    #[test]
    fn scaled_evaluation_matches_direct_at_moderate_phases() {
        let w = TauFunction::new(
            c(1.0),
            alloc::vec![
                WaveTerm::exp(Complex::new(0.7, 0.1), LinearPhase::real(1.2, -0.5, 0.3)),
                WaveTerm::new(c(0.4), WaveKind::Cosh, LinearPhase::real(0.9, 0.2, -0.1)),
                WaveTerm::new(
                    Complex::new(-0.3, 0.6),
                    WaveKind::Sin,
                    LinearPhase::real(0.5, 1.1, 0.2)
                ),
            ],
        );
        let p = Point::new(1.3, -2.0, 0.7);
        let s = w.log_scale(p);
        let direct = w.eval(p);
        let scaled = w.eval_scaled(p, s);
        assert!((scaled * f64::exp(s) - direct).norm() < 1e-12 * direct.norm().max(1.0));
        // shift 0 reproduces the direct value
        assert!((w.eval_scaled(p, 0.0) - direct).norm() < 1e-12 * direct.norm().max(1.0));
    }

    #[test]
    fn scaled_evaluation_survives_huge_phases() {
        // e^{200x} at x=5: e^1000 overflows f64, the scaled value does not.
        let w = TauFunction::new(
            c(1.0),
            alloc::vec![WaveTerm::exp(c(1.0), LinearPhase::real(200.0, 0.0, 0.0))],
        );
        let p = Point::new(5.0, 0.0, 0.0);
        let s = w.log_scale(p);
        assert!((s - 1000.0).abs() < 1e-9);
        let v = w.eval_scaled(p, s);
        assert!(v.is_finite());
        assert!((v.re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn partial_grid_matches_repeated_differentiation() {
        let w = TauFunction::new(
            c(0.2),
            alloc::vec![
                WaveTerm::exp(c(1.0), LinearPhase::real(0.8, 0.4, -0.6)),
                WaveTerm::new(c(0.7), WaveKind::Cos, LinearPhase::real(-0.3, 1.0, 0.5)),
            ],
        );
        let grid = PartialGrid::total_order(&w, 4);
        let p = Point::new(0.4, -0.9, 0.3);
        let direct = w.partial((2, 1, 1)).unwrap();
        assert!((grid.get(2, 1, 1).eval(p) - direct.eval(p)).norm() < 1e-13);
    }

    #[test]
    fn translation_matches_shifted_evaluation() {
        let w = TauFunction::new(
            c(1.0),
            alloc::vec![
                WaveTerm::exp(c(0.8), LinearPhase::real(0.6, -0.2, 0.4)),
                WaveTerm::new(c(-0.5), WaveKind::Cos, LinearPhase::real(1.0, 0.3, -0.7)),
            ],
        );
        let shifted = w.translated(0.4, -1.3, 0.9);
        let p = Point::new(0.2, 0.5, -0.1);
        let q = Point::new(p.x + 0.4, p.y - 1.3, p.t + 0.9);
        assert!((shifted.eval(p) - w.eval(q)).norm() < 1e-13);
    }
}
