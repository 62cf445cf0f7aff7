//! Exact solutions of the (2+1)-dimensional generalized Nizhnik-Novikov-Veselov
//! (GNNV) system and the machinery to verify them.
//!
//! The GNNV system couples three fields `u`, `v`, `ω` through
//!
//! ```text
//! u_t + a·u_xxx + b·u_yyy + c·u_x + d·u_y − 3a·(uv)_x − 3b·(uω)_y = 0
//! u_x = v_y
//! u_y = ω_x
//! ```
//!
//! with constants `a, b, c, d`. Solutions are generated from a tau function
//! `w(x, y, t)` via the logarithmic transform
//! `u = −2(ln w)_xy + a000`, `v = −2(ln w)_xx + b000`, `ω = −2(ln w)_yy + c000`,
//! where the background `(a000, b000, c000)` is the constant seed solution.
//!
//! The crate is organized around that pipeline:
//!
//! - [`wave`] — complex wave expressions (sums of exp/cos/sin/cosh/sinh of
//!   linear phases) with exact mixed partial derivatives of any order,
//! - [`hirota`] — Hirota D-operator bilinears and residual checks of the two
//!   bilinear splittings the transform produces,
//! - [`balance`] — the homogeneous-balance bookkeeping that fixes the
//!   transform orders and leading coefficients,
//! - [`soliton`] — N-soliton tau functions for the two background families
//!   (family A: `c000 = 0`; family B: `a000 = 0`),
//! - [`threewave`] — the three-wave ansatz
//!   `w = e^{−ξ1} + d1·cos ξ2 + d2·cosh ξ3 + d3·e^{ξ1}` and its 43 solved
//!   parameter branches,
//! - [`fields`] — assembly of `u, v, ω` from a tau function and residuals of
//!   the full system,
//! - [`report`] — residual report types shared by every checker,
//! - [`sample`] — deterministic low-discrepancy sample points.
//!
//! Everything is a pure value type: no interior mutability, no global state,
//! safe to share across threads. The crate is `no_std`-compatible (with
//! `alloc`) when built without the default `std` feature.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod balance;
pub mod fields;
pub mod hirota;
pub mod report;
pub mod sample;
pub mod soliton;
pub mod threewave;
pub mod wave;

/// Complex scalar used throughout: `f64` real and imaginary parts.
pub type Complex = num_complex::Complex<f64>;

pub use fields::FieldTriple;
pub use hirota::{BilinearForm, DMultiIndex};
pub use report::ResidualReport;
pub use soliton::{Background, EquationCoefficients, SolitonFamily, SolitonSpec};
pub use threewave::ThreeWaveSpec;
pub use wave::{LinearPhase, Point, TauFunction, WaveKind, WaveTerm};
