//! Hirota D-operator bilinears and residual checks.
//!
//! The D-operator acts on a pair of functions as
//!
//! ```text
//! D_x^m D_y^n D_t^p f·g = (∂_x−∂_{x'})^m (∂_y−∂_{y'})^n (∂_t−∂_{t'})^p
//!                         f(x,y,t) g(x',y',t') |_{x'=x, y'=y, t'=t}
//! ```
//!
//! expanded here as the binomial sum over exact partial derivatives. The
//! logarithmic transform splits the GNNV system into a pair of bilinear
//! equations `Σ coef·D^idx w·w = 0`; [`BilinearForm::pair`] builds the pair
//! for each background family and [`bilinear_residual`] measures how well a
//! candidate tau function satisfies one.
//!
//! Residuals are evaluated in a per-point normalized gauge (every value
//! carries a common factor `e^{-shift}`): the relative residual compares the
//! cancellation against the magnitude of the products being cancelled, which
//! is exactly the quantity that distinguishes a true solution (rounding-level
//! cancellation) from a near miss.

use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::fields::{self, PdeReport};
use crate::report::ResidualReport;
use crate::sample;
use crate::soliton::{Background, EquationCoefficients, SolitonFamily};
use crate::wave::{PartialGrid, Point, TauFunction};
use crate::Complex;

/// Total-order guard for D-operator indices.
pub const MAX_D_ORDER: u32 = 6;

/// Default relative tolerance for bilinear residuals: exact derivatives leave
/// only rounding error, and multi-soliton cancellations lose at most a few
/// digits at moderate phases.
pub const DEFAULT_BILINEAR_TOLERANCE: f64 = 1e-9;

/// Derivative orders `(m, n, p)` of one D-operator monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DMultiIndex {
    pub m: u32,
    pub n: u32,
    pub p: u32,
}

/// D-index exceeding [`MAX_D_ORDER`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DOrderTooHigh {
    pub index: (u32, u32, u32),
}

impl core::fmt::Display for DOrderTooHigh {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let (m, n, p) = self.index;
        write!(
            f,
            "D-operator order ({m},{n},{p}) exceeds total {MAX_D_ORDER}"
        )
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DOrderTooHigh {}

impl DMultiIndex {
    pub fn new(m: u32, n: u32, p: u32) -> Result<Self, DOrderTooHigh> {
        if m + n + p > MAX_D_ORDER {
            return Err(DOrderTooHigh { index: (m, n, p) });
        }
        Ok(DMultiIndex { m, n, p })
    }

    const fn raw(m: u32, n: u32, p: u32) -> Self {
        DMultiIndex { m, n, p }
    }

    pub fn total(&self) -> u32 {
        self.m + self.n + self.p
    }
}

fn binom(n: u32, k: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// `D_x^m D_y^n D_t^p f·g` evaluated at one point.
///
/// When `f` and `g` are the same function and the total order is odd, the
/// expansion cancels term by term by antisymmetry; the exact zero is
/// returned directly rather than recovered through rounded summation.
pub fn d_apply(f: &TauFunction, g: &TauFunction, idx: DMultiIndex, point: Point) -> Complex {
    if idx.total() % 2 == 1 && f == g {
        return Complex::new(0.0, 0.0);
    }
    let fg = PartialGrid::component_box(f, (idx.m, idx.n, idx.p));
    let gg = PartialGrid::component_box(g, (idx.m, idx.n, idx.p));
    let (value, _) = d_apply_scaled(&fg, &gg, idx, point, 0.0);
    value
}

/// Scaled D-monomial: value times `e^{-2·shift}` plus the conditioning scale
/// (sum of scaled product magnitudes).
fn d_apply_scaled(
    fg: &PartialGrid,
    gg: &PartialGrid,
    idx: DMultiIndex,
    point: Point,
    shift: f64,
) -> (Complex, f64) {
    let mut value = Complex::new(0.0, 0.0);
    let mut scale = 0.0;
    for i in 0..=idx.m {
        for j in 0..=idx.n {
            for k in 0..=idx.p {
                let weight = binom(idx.m, i) * binom(idx.n, j) * binom(idx.p, k);
                let sign = if (i + j + k) % 2 == 1 { -1.0 } else { 1.0 };
                let fv = fg
                    .get(idx.m - i, idx.n - j, idx.p - k)
                    .eval_scaled(point, shift);
                let gv = gg.get(i, j, k).eval_scaled(point, shift);
                value += weight * sign * fv * gv;
                scale += weight * fv.norm() * gv.norm();
            }
        }
    }
    (value, scale)
}

/// A linear combination of D-operator monomials applied to `w·w`.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm {
    pub name: String,
    pub terms: Vec<(Complex, DMultiIndex)>,
}

/// Family B splits the time derivative off with a `1/b` coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroBCoefficient;

impl core::fmt::Display for ZeroBCoefficient {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "b must be nonzero for the family B bilinear pair")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ZeroBCoefficient {}

impl BilinearForm {
    pub fn new(name: impl Into<String>, terms: Vec<(Complex, DMultiIndex)>) -> Self {
        debug_assert!(!terms.is_empty());
        BilinearForm {
            name: name.into(),
            terms,
        }
    }

    /// The two bilinear equations of the given family.
    ///
    /// Family A (`c000 = 0`):
    /// `(D_yD_t + a·D_x³D_y − 3a·a000·D_x² + (c − 3a·b000)·D_xD_y + d·D_y²) w·w = 0`
    /// and `(3a000·D_y² + 3c000·D_xD_y − D_xD_y³) w·w = 0`.
    ///
    /// Family B (`a000 = 0`) moves the time derivative into the second
    /// equation: the first drops `D_yD_t`, the second gains `−(1/b)·D_xD_t`
    /// (the sign is forced by requiring the pair to recombine into the parent
    /// equation: a single exponential leaves a `2PΩK` excess otherwise).
    pub fn pair(
        family: SolitonFamily,
        eqc: &EquationCoefficients,
        bg: &Background,
    ) -> Result<(BilinearForm, BilinearForm), ZeroBCoefficient> {
        let re = |x: f64| Complex::new(x, 0.0);
        let a = eqc.a;
        let c = eqc.c;
        let d = eqc.d;
        let mut main_terms = alloc::vec![
            (re(a), DMultiIndex::raw(3, 1, 0)),
            (-3.0 * a * bg.a000, DMultiIndex::raw(2, 0, 0)),
            (re(c) - 3.0 * a * bg.b000, DMultiIndex::raw(1, 1, 0)),
            (re(d), DMultiIndex::raw(0, 2, 0)),
        ];
        let mut constraint_terms = alloc::vec![
            (3.0 * bg.a000, DMultiIndex::raw(0, 2, 0)),
            (3.0 * bg.c000, DMultiIndex::raw(1, 1, 0)),
            (re(-1.0), DMultiIndex::raw(1, 3, 0)),
        ];
        let (main_name, constraint_name) = match family {
            SolitonFamily::A => {
                main_terms.insert(0, (re(1.0), DMultiIndex::raw(0, 1, 1)));
                ("family-a-main", "family-a-constraint")
            }
            SolitonFamily::B => {
                if eqc.b == 0.0 {
                    return Err(ZeroBCoefficient);
                }
                constraint_terms.push((re(-1.0 / eqc.b), DMultiIndex::raw(1, 0, 1)));
                ("family-b-main", "family-b-constraint")
            }
        };
        Ok((
            BilinearForm::new(main_name, main_terms),
            BilinearForm::new(constraint_name, constraint_terms),
        ))
    }

    fn component_caps(&self) -> (u32, u32, u32) {
        let mut caps = (0, 0, 0);
        for (_, idx) in &self.terms {
            caps.0 = caps.0.max(idx.m);
            caps.1 = caps.1.max(idx.n);
            caps.2 = caps.2.max(idx.p);
        }
        caps
    }
}

/// Evaluator for `Σ coef·D^idx w·w` with the derivative table built once.
#[derive(Debug, Clone)]
pub struct SelfBilinear {
    form: BilinearForm,
    grid: PartialGrid,
}

impl SelfBilinear {
    pub fn new(form: BilinearForm, w: &TauFunction) -> Self {
        let caps = form.component_caps();
        SelfBilinear {
            grid: PartialGrid::component_box(w, caps),
            form,
        }
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    /// `(scaled value, conditioning scale, shift)` at one point. The true
    /// value is `scaled value · e^{2·shift}`.
    pub fn value_at(&self, point: Point) -> (Complex, f64, f64) {
        let shift = self.grid.base().log_scale(point);
        let mut value = Complex::new(0.0, 0.0);
        let mut scale = 0.0f64;
        for (coef, idx) in &self.form.terms {
            let (dv, ds) = d_apply_scaled(&self.grid, &self.grid, *idx, point, shift);
            value += coef * dv;
            scale = scale.max(coef.norm() * ds);
        }
        (value, scale, shift)
    }

    pub fn residual(&self, points: &[Point], tolerance: f64) -> ResidualReport {
        let mut acc = ResidualReport::accumulator(self.form.name.clone(), tolerance);
        for &point in points {
            let (value, scale, shift) = self.value_at(point);
            let abs_scaled = value.norm();
            let rel = abs_scaled / (1.0 + scale);
            let abs_true = if abs_scaled == 0.0 {
                0.0
            } else {
                f64::exp(abs_scaled.ln() + 2.0 * shift)
            };
            acc.record_rel(point, abs_true, rel);
        }
        acc.finish()
    }
}

/// Residual of one bilinear form on `w·w` at the default tolerance.
pub fn bilinear_residual(form: &BilinearForm, w: &TauFunction, points: &[Point]) -> ResidualReport {
    bilinear_residual_with_tolerance(form, w, points, DEFAULT_BILINEAR_TOLERANCE)
}

pub fn bilinear_residual_with_tolerance(
    form: &BilinearForm,
    w: &TauFunction,
    points: &[Point],
    tolerance: f64,
) -> ResidualReport {
    SelfBilinear::new(form.clone(), w).residual(points, tolerance)
}

/// Outcome of the decomposition implication check: if `w` satisfies both
/// bilinear equations at the sampled points, the assembled fields satisfy the
/// full evolution equation there.
#[derive(Debug, Clone)]
pub struct ImplicationReport {
    pub premise: [ResidualReport; 2],
    pub conclusion: PdeReport,
}

impl ImplicationReport {
    pub fn premise_holds(&self) -> bool {
        self.premise.iter().all(|r| r.pass)
    }

    pub fn holds(&self) -> bool {
        !self.premise_holds() || self.conclusion.evolution.pass
    }
}

/// Checks the chain from the bilinear pair to the evolution equation for one
/// family's splitting.
pub fn decomposition_implication(
    w: &TauFunction,
    family: SolitonFamily,
    eqc: &EquationCoefficients,
    bg: &Background,
    points: &[Point],
) -> Result<ImplicationReport, ZeroBCoefficient> {
    let (main, constraint) = BilinearForm::pair(family, eqc, bg)?;
    let premise = [
        bilinear_residual(&main, w, points),
        bilinear_residual(&constraint, w, points),
    ];
    let triple = fields::assemble(w.clone(), *bg);
    let conclusion = fields::pde_residual(&triple, eqc, points);
    Ok(ImplicationReport {
        premise,
        conclusion,
    })
}

/// Default verification point set shared by the residual checks.
pub fn default_points(seed: u64) -> Vec<Point> {
    sample::default_points(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wave::{LinearPhase, WaveKind, WaveTerm};

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    fn one_plus_exp(alpha: f64, beta: f64, gamma: f64) -> TauFunction {
        TauFunction::new(
            c(1.0),
            alloc::vec![WaveTerm::exp(c(1.0), LinearPhase::real(alpha, beta, gamma))],
        )
    }

    #[test]
    fn odd_order_on_identical_pair_vanishes() {
        let w = TauFunction::new(
            c(0.7),
            alloc::vec![
                WaveTerm::exp(c(1.0), LinearPhase::real(0.9, -0.4, 0.2)),
                WaveTerm::new(c(0.5), WaveKind::Cos, LinearPhase::real(0.3, 1.1, -0.6)),
            ],
        );
        let p = Point::new(0.8, -0.2, 1.4);
        for idx in [
            DMultiIndex::raw(1, 0, 0),
            DMultiIndex::raw(1, 1, 1),
            DMultiIndex::raw(3, 0, 0),
        ] {
            let v = d_apply(&w, &w, idx, p);
            assert_eq!(v, Complex::new(0.0, 0.0), "odd order {idx:?} gave {v}");
        }
        // A structurally equal clone cancels exactly too.
        let w2 = w.clone();
        assert_eq!(
            d_apply(&w, &w2, DMultiIndex::raw(3, 0, 0), p),
            Complex::new(0.0, 0.0)
        );
    }

    #[test]
    fn second_derivative_hand_oracle() {
        // w = 1 + e^x: D_x^2 w·w = 2(w_xx w − w_x²) = 2e^x; at x=0 → 2
        let w = one_plus_exp(1.0, 0.0, 0.0);
        let v = d_apply(&w, &w, DMultiIndex::raw(2, 0, 0), Point::ORIGIN);
        assert!((v - c(2.0)).norm() < 1e-14);
        let p = Point::new(1.3, 0.0, 0.0);
        let expect = 2.0 * p.x.exp();
        assert!((d_apply(&w, &w, DMultiIndex::raw(2, 0, 0), p) - c(expect)).norm() < 1e-12);
    }

    #[test]
    fn single_exponential_gauge_property() {
        // A lone exponential annihilates every D-monomial of order ≥ 1.
        let w = TauFunction::new(
            Complex::new(0.0, 0.0),
            alloc::vec![WaveTerm::exp(c(1.0), LinearPhase::real(1.0, 2.0, -0.7))],
        );
        let p = Point::new(0.4, 0.1, -0.3);
        for m in 0..=4u32 {
            for n in 0..=(4 - m) {
                for q in 0..=(4 - m - n) {
                    if m + n + q == 0 {
                        continue;
                    }
                    let v = d_apply(&w, &w, DMultiIndex::raw(m, n, q), p);
                    assert!(v.norm() < 1e-12, "D^({m},{n},{q}) gave {v}");
                }
            }
        }
    }

    #[test]
    fn antisymmetry_under_argument_swap() {
        let f = one_plus_exp(0.8, -0.3, 0.5);
        let g = TauFunction::new(
            c(0.2),
            alloc::vec![WaveTerm::new(
                c(1.3),
                WaveKind::Sinh,
                LinearPhase::real(0.4, 0.9, -0.2)
            )],
        );
        let p = Point::new(0.6, 0.7, -1.1);
        for (m, n, q) in [(1, 0, 0), (2, 0, 0), (1, 1, 0), (2, 1, 0), (1, 1, 1)] {
            let idx = DMultiIndex::raw(m, n, q);
            let fg = d_apply(&f, &g, idx, p);
            let gf = d_apply(&g, &f, idx, p);
            let sign = if (m + n + q) % 2 == 1 { -1.0 } else { 1.0 };
            assert!((fg - sign * gf).norm() < 1e-12 * (1.0 + fg.norm()));
        }
    }

    #[test]
    fn leibniz_reduction_first_order() {
        // D_x f·g = f_x g − f g_x
        let f = one_plus_exp(1.1, 0.2, -0.4);
        let g = one_plus_exp(-0.5, 0.8, 0.3);
        let p = Point::new(0.9, -0.6, 0.2);
        let direct = d_apply(&f, &g, DMultiIndex::raw(1, 0, 0), p);
        let fx = f.partial((1, 0, 0)).unwrap().eval(p);
        let gx = g.partial((1, 0, 0)).unwrap().eval(p);
        let expect = fx * g.eval(p) - f.eval(p) * gx;
        assert!((direct - expect).norm() < 1e-13);
    }

    #[test]
    fn constant_tau_gives_exact_zero_residual() {
        let w = TauFunction::one();
        let eqc = EquationCoefficients::new(1.0, 1.0, 0.5, 0.25);
        let bg = Background::real(0.3, 0.2, 0.0);
        let (main, constraint) = BilinearForm::pair(SolitonFamily::A, &eqc, &bg).unwrap();
        let pts = sample::sample_box(3, 10, -5.0, 5.0);
        for form in [main, constraint] {
            let r = bilinear_residual(&form, &w, &pts);
            assert_eq!(r.max_abs, 0.0);
            assert_eq!(r.max_rel, 0.0);
            assert!(r.pass);
        }
    }

    #[test]
    fn kernel_shorthands_match_their_d_monomials() {
        // 2·(w_xy w − w_x w_y) = D_xD_y w·w, and the higher kernels likewise.
        let w = TauFunction::new(
            c(1.0),
            alloc::vec![
                WaveTerm::exp(c(0.6), LinearPhase::real(0.7, 0.5, -0.3)),
                WaveTerm::exp(c(1.2), LinearPhase::real(-0.4, 1.0, 0.8)),
            ],
        );
        let grid = PartialGrid::component_box(&w, (4, 4, 1));
        let p = Point::new(0.5, -0.8, 0.4);
        let v = |i, j, k| grid.get(i, j, k).eval(p);

        let k11 = v(2, 0, 0) * v(0, 0, 0) - v(1, 0, 0) * v(1, 0, 0);
        assert!((2.0 * k11 - d_apply(&w, &w, DMultiIndex::raw(2, 0, 0), p)).norm() < 1e-12);

        let k12 = v(1, 1, 0) * v(0, 0, 0) - v(1, 0, 0) * v(0, 1, 0);
        assert!((2.0 * k12 - d_apply(&w, &w, DMultiIndex::raw(1, 1, 0), p)).norm() < 1e-12);

        let k22 = v(0, 2, 0) * v(0, 0, 0) - v(0, 1, 0) * v(0, 1, 0);
        assert!((2.0 * k22 - d_apply(&w, &w, DMultiIndex::raw(0, 2, 0), p)).norm() < 1e-12);

        let k23 = v(0, 1, 1) * v(0, 0, 0) - v(0, 1, 0) * v(0, 0, 1);
        assert!((2.0 * k23 - d_apply(&w, &w, DMultiIndex::raw(0, 1, 1), p)).norm() < 1e-12);

        let k1112 = v(3, 1, 0) * v(0, 0, 0) + 3.0 * v(2, 0, 0) * v(1, 1, 0)
            - v(3, 0, 0) * v(0, 1, 0)
            - 3.0 * v(1, 0, 0) * v(2, 1, 0);
        assert!((2.0 * k1112 - d_apply(&w, &w, DMultiIndex::raw(3, 1, 0), p)).norm() < 1e-11);

        let k1222 =
            v(1, 3, 0) * v(0, 0, 0) - 3.0 * v(1, 2, 0) * v(0, 1, 0) - v(1, 0, 0) * v(0, 3, 0)
                + 3.0 * v(1, 1, 0) * v(0, 2, 0);
        assert!((2.0 * k1222 - d_apply(&w, &w, DMultiIndex::raw(1, 3, 0), p)).norm() < 1e-11);
    }

    #[test]
    fn d_index_guard() {
        assert!(DMultiIndex::new(3, 3, 0).is_ok());
        assert!(DMultiIndex::new(4, 2, 1).is_err());
    }

    #[test]
    fn family_b_pair_requires_nonzero_b() {
        let eqc = EquationCoefficients::new(1.0, 0.0, 0.2, 0.5);
        let bg = Background::real(0.0, 0.1, 0.2);
        assert!(BilinearForm::pair(SolitonFamily::B, &eqc, &bg).is_err());
        assert!(BilinearForm::pair(SolitonFamily::A, &eqc, &bg).is_ok());
    }
}
