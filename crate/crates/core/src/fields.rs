//! Physical fields from a tau function, and residuals of the full system.
//!
//! The logarithmic transform
//!
//! ```text
//! u = −2(ln w)_xy + a000,  v = −2(ln w)_xx + b000,  ω = −2(ln w)_yy + c000
//! ```
//!
//! needs mixed partials of `ln w` up to total order 5 (the evolution equation
//! contains `u_xxx = −2(ln w)_xxxxy`). Those are computed by an exact
//! recurrence instead of nested numerical differentiation: differentiating
//! `w·(ln w)_e = w_e` with the Leibniz rule expresses every log-partial
//! through exact tau partials and lower-order log-partials, so the only error
//! is rounding. Points where `w` vanishes are genuinely singular for the
//! transform; they are reported, never silently crossed.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::report::ResidualReport;
use crate::soliton::{Background, EquationCoefficients};
use crate::wave::{OrderTooHigh, PartialGrid, Point, TauFunction};
use crate::Complex;

/// Highest total order of `ln w` partials served by this module.
pub const MAX_LOG_ORDER: u32 = 5;

/// `|w|` below this multiple of the term scale counts as a singular point.
pub const SINGULAR_THRESHOLD: f64 = 1e-12;

/// Default relative tolerance on the evolution-equation residual.
pub const DEFAULT_PDE_TOLERANCE: f64 = 1e-8;

/// Default relative tolerance on the `u_x = v_y` / `u_y = ω_x` identities.
pub const DEFAULT_IDENTITY_TOLERANCE: f64 = 1e-10;

/// The transform is singular where the tau function vanishes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularPoint {
    pub point: Point,
    /// `|w|` relative to the largest term magnitude at the point.
    pub magnitude: f64,
}

impl core::fmt::Display for SingularPoint {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "tau function vanishes at ({}, {}, {}): |w|/scale = {:.3e}",
            self.point.x, self.point.y, self.point.t, self.magnitude
        )
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SingularPoint {}

/// Failure of [`log_partial`].
#[derive(Debug, Clone, PartialEq)]
pub enum LogPartialError {
    OrderTooHigh(OrderTooHigh),
    Singular(SingularPoint),
}

impl core::fmt::Display for LogPartialError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LogPartialError::OrderTooHigh(e) => write!(f, "{e}"),
            LogPartialError::Singular(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LogPartialError {}

/// Which axis the recurrence peels first; two different orders give two
/// independently rounded computations of the same mixed partial, which is
/// what makes the `u_x = v_y` style identity checks non-vacuous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Peel {
    XFirst,
    YFirst,
}

/// Values of `(ln w)_{(i,j,k)}` at one point, for all `1 ≤ i+j+k ≤ cap`.
#[derive(Debug, Clone)]
pub(crate) struct LogTable {
    cap: u32,
    vals: Vec<Complex>,
}

impl LogTable {
    fn index(&self, i: u32, j: u32, k: u32) -> usize {
        ((i * (self.cap + 1) + j) * (self.cap + 1) + k) as usize
    }

    pub(crate) fn get(&self, i: u32, j: u32, k: u32) -> Complex {
        self.vals[self.index(i, j, k)]
    }
}

fn binom(n: u32, k: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Builds the log-derivative table at `point` from a partial grid of `w`
/// (which must cover total order `cap`).
pub(crate) fn log_table(
    grid: &PartialGrid,
    point: Point,
    cap: u32,
    peel: Peel,
) -> Result<LogTable, SingularPoint> {
    let w = grid.base();
    let shift = w.log_scale(point);
    let w0 = w.eval_scaled(point, shift);
    let scale = w.term_scale_scaled(point, shift);
    if w0.norm() <= SINGULAR_THRESHOLD * scale.max(1.0) {
        return Err(SingularPoint {
            point,
            magnitude: w0.norm() / scale.max(1.0),
        });
    }

    // Scaled tau partial values; the common e^{-shift} cancels in the
    // recurrence because every term is degree one in w.
    let side = (cap + 1) as usize;
    let mut wv = alloc::vec![Complex::new(0.0, 0.0); side * side * side];
    let at = |i: u32, j: u32, k: u32| ((i as usize * side) + j as usize) * side + k as usize;
    for i in 0..=cap {
        for j in 0..=(cap - i) {
            for k in 0..=(cap - i - j) {
                wv[at(i, j, k)] = grid.get(i, j, k).eval_scaled(point, shift);
            }
        }
    }

    let mut table = LogTable {
        cap,
        vals: alloc::vec![Complex::new(0.0, 0.0); side * side * side],
    };
    for order in 1..=cap {
        for i in 0..=order {
            for j in 0..=(order - i) {
                let k = order - i - j;
                // Peel one derivative off: alpha = beta + e.
                let (bi, bj, bk, ei, ej, ek) = match peel {
                    Peel::XFirst => {
                        if i > 0 {
                            (i - 1, j, k, 1, 0, 0)
                        } else if j > 0 {
                            (i, j - 1, k, 0, 1, 0)
                        } else {
                            (i, j, k - 1, 0, 0, 1)
                        }
                    }
                    Peel::YFirst => {
                        if j > 0 {
                            (i, j - 1, k, 0, 1, 0)
                        } else if i > 0 {
                            (i - 1, j, k, 1, 0, 0)
                        } else {
                            (i, j, k - 1, 0, 0, 1)
                        }
                    }
                };
                // w·L_e = w_e differentiated by ∂^beta:
                //   Σ_{γ≤β} C(β,γ)·w_{β−γ}·L_{γ+e} = w_{β+e}
                // and the γ=β term isolates L_{β+e}.
                let mut acc = wv[at(i, j, k)];
                for gi in 0..=bi {
                    for gj in 0..=bj {
                        for gk in 0..=bk {
                            if gi == bi && gj == bj && gk == bk {
                                continue;
                            }
                            let weight = binom(bi, gi) * binom(bj, gj) * binom(bk, gk);
                            acc -= weight
                                * wv[at(bi - gi, bj - gj, bk - gk)]
                                * table.get(gi + ei, gj + ej, gk + ek);
                        }
                    }
                }
                let idx = table.index(i, j, k);
                table.vals[idx] = acc / w0;
            }
        }
    }
    Ok(table)
}

/// Exact mixed partial of `ln w` at a point.
pub fn log_partial(
    w: &TauFunction,
    order: (u32, u32, u32),
    point: Point,
) -> Result<Complex, LogPartialError> {
    let (i, j, k) = order;
    let total = i + j + k;
    if total > MAX_LOG_ORDER {
        return Err(LogPartialError::OrderTooHigh(OrderTooHigh {
            order,
            max_total: MAX_LOG_ORDER,
        }));
    }
    if total == 0 {
        // (ln w) itself: defined up to branch; use the principal value.
        let shift = w.log_scale(point);
        let w0 = w.eval_scaled(point, shift);
        let scale = w.term_scale_scaled(point, shift);
        if w0.norm() <= SINGULAR_THRESHOLD * scale.max(1.0) {
            return Err(LogPartialError::Singular(SingularPoint {
                point,
                magnitude: w0.norm() / scale.max(1.0),
            }));
        }
        return Ok(w0.ln() + shift);
    }
    let grid = PartialGrid::total_order(w, total);
    let table = log_table(&grid, point, total, Peel::XFirst).map_err(LogPartialError::Singular)?;
    Ok(table.get(i, j, k))
}

/// Field values at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldValues {
    pub u: Complex,
    pub v: Complex,
    pub omega: Complex,
}

/// The triple `(u, v, ω)` generated by a tau function and a background.
///
/// Holds the exact derivative table of `w`, so evaluation at a point costs
/// one log-derivative recurrence. Immutable and thread-safe.
#[derive(Debug, Clone)]
pub struct FieldTriple {
    w: TauFunction,
    bg: Background,
    grid: PartialGrid,
}

/// Builds the field triple for a tau function over a background.
pub fn assemble(w: TauFunction, bg: Background) -> FieldTriple {
    let grid = PartialGrid::total_order(&w, MAX_LOG_ORDER);
    FieldTriple { w, bg, grid }
}

impl FieldTriple {
    pub fn tau(&self) -> &TauFunction {
        &self.w
    }

    pub fn background(&self) -> &Background {
        &self.bg
    }

    /// `(u, v, ω)` at one point, or the singular-point error where `w ≈ 0`.
    pub fn values(&self, point: Point) -> Result<FieldValues, SingularPoint> {
        let table = log_table(&self.grid, point, 2, Peel::XFirst)?;
        Ok(FieldValues {
            u: -2.0 * table.get(1, 1, 0) + self.bg.a000,
            v: -2.0 * table.get(2, 0, 0) + self.bg.b000,
            omega: -2.0 * table.get(0, 2, 0) + self.bg.c000,
        })
    }

    pub fn u(&self, point: Point) -> Result<Complex, SingularPoint> {
        Ok(self.values(point)?.u)
    }

    pub fn v(&self, point: Point) -> Result<Complex, SingularPoint> {
        Ok(self.values(point)?.v)
    }

    pub fn omega(&self, point: Point) -> Result<Complex, SingularPoint> {
        Ok(self.values(point)?.omega)
    }
}

/// Residual reports for the full system: the evolution equation plus the two
/// gradient-compatibility identities.
#[derive(Debug, Clone)]
pub struct PdeReport {
    pub evolution: ResidualReport,
    pub compat_x: ResidualReport,
    pub compat_y: ResidualReport,
}

impl PdeReport {
    pub fn all_pass(&self) -> bool {
        self.evolution.pass && self.compat_x.pass && self.compat_y.pass
    }

    pub fn reports(&self) -> [&ResidualReport; 3] {
        [&self.evolution, &self.compat_x, &self.compat_y]
    }
}

/// Residuals of the full system at the default tolerances.
pub fn pde_residual(ft: &FieldTriple, eqc: &EquationCoefficients, points: &[Point]) -> PdeReport {
    pde_residual_with_tolerances(
        ft,
        eqc,
        points,
        DEFAULT_PDE_TOLERANCE,
        DEFAULT_IDENTITY_TOLERANCE,
    )
}

/// Residuals of the full system.
///
/// The evolution residual evaluates every derivative through the exact
/// log-derivative chain (`u_xxx = −2(ln w)_xxxxy` and so on) and scales by the
/// largest of the seven additive contributions. The compatibility identities
/// compare the shared mixed partial computed through two different peel
/// orders, so they measure genuine rounding independence rather than
/// comparing a value against itself.
pub fn pde_residual_with_tolerances(
    ft: &FieldTriple,
    eqc: &EquationCoefficients,
    points: &[Point],
    evolution_tolerance: f64,
    identity_tolerance: f64,
) -> PdeReport {
    let mut evo = ResidualReport::accumulator("evolution", evolution_tolerance);
    let mut cx = ResidualReport::accumulator("u_x=v_y", identity_tolerance);
    let mut cy = ResidualReport::accumulator("u_y=w_x", identity_tolerance);
    let bg = ft.bg;
    let EquationCoefficients { a, b, c, d } = *eqc;
    for &point in points {
        let tx = match log_table(&ft.grid, point, MAX_LOG_ORDER, Peel::XFirst) {
            Ok(t) => t,
            Err(_) => {
                evo.record_singular();
                cx.record_singular();
                cy.record_singular();
                continue;
            }
        };
        let ty = log_table(&ft.grid, point, 3, Peel::YFirst)
            .expect("same singular set as the x-peeled table");

        let u = -2.0 * tx.get(1, 1, 0) + bg.a000;
        let u_t = -2.0 * tx.get(1, 1, 1);
        let u_x = -2.0 * tx.get(2, 1, 0);
        let u_y = -2.0 * tx.get(1, 2, 0);
        let u_xxx = -2.0 * tx.get(4, 1, 0);
        let u_yyy = -2.0 * tx.get(1, 4, 0);
        let v = -2.0 * tx.get(2, 0, 0) + bg.b000;
        let v_x = -2.0 * tx.get(3, 0, 0);
        let omega = -2.0 * tx.get(0, 2, 0) + bg.c000;
        let omega_y = -2.0 * tx.get(0, 3, 0);

        let terms = [
            u_t,
            a * u_xxx,
            b * u_yyy,
            c * u_x,
            d * u_y,
            -3.0 * a * (u_x * v + u * v_x),
            -3.0 * b * (u_y * omega + u * omega_y),
        ];
        let residual: Complex = terms.iter().sum();
        let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
        evo.record(point, residual.norm(), scale);

        // Independently rounded copies of the shared mixed partials.
        let v_y_alt = -2.0 * ty.get(2, 1, 0);
        let omega_x_alt = -2.0 * ty.get(1, 2, 0);
        cx.record(
            point,
            (u_x - v_y_alt).norm(),
            u_x.norm().max(v_y_alt.norm()),
        );
        cy.record(
            point,
            (u_y - omega_x_alt).norm(),
            u_y.norm().max(omega_x_alt.norm()),
        );
    }
    PdeReport {
        evolution: evo.finish(),
        compat_x: cx.finish(),
        compat_y: cy.finish(),
    }
}

/// Largest imaginary parts of the three fields over a point set; a solution
/// counts as real when all three stay below `1e-10`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealnessReport {
    pub max_im_u: f64,
    pub max_im_v: f64,
    pub max_im_omega: f64,
    pub singular_skipped: usize,
}

/// Threshold under which a solution is labeled real.
pub const REALNESS_TOLERANCE: f64 = 1e-10;

impl RealnessReport {
    pub fn is_real(&self) -> bool {
        self.max_im_u < REALNESS_TOLERANCE
            && self.max_im_v < REALNESS_TOLERANCE
            && self.max_im_omega < REALNESS_TOLERANCE
    }
}

pub fn realness_report(ft: &FieldTriple, points: &[Point]) -> RealnessReport {
    let mut report = RealnessReport {
        max_im_u: 0.0,
        max_im_v: 0.0,
        max_im_omega: 0.0,
        singular_skipped: 0,
    };
    for &point in points {
        match ft.values(point) {
            Ok(f) => {
                report.max_im_u = report.max_im_u.max(f.u.im.abs());
                report.max_im_v = report.max_im_v.max(f.v.im.abs());
                report.max_im_omega = report.max_im_omega.max(f.omega.im.abs());
            }
            Err(_) => report.singular_skipped += 1,
        }
    }
    report
}
