//! N-soliton tau functions for the two background families.
//!
//! A single exponential `w = 1 + e^{Px + Ωy + Kt}` solves the bilinear pair
//! only when `(Ω, K)` satisfy the family's dispersion relation. Family A
//! (background with `c000 = 0`) and family B (background with `a000 = 0`,
//! `d ≠ 0`) carry different relations and different pairwise interaction
//! coefficients `a_ij`. Multi-soliton tau functions follow the standard
//! Hirota subset sum
//!
//! ```text
//! w = Σ_{μ ∈ {0,1}^N} (Π_{i<j} a_ij^{μ_i μ_j}) e^{Σ μ_i η_i}
//! ```
//!
//! which reproduces the closed 1-, 2- and 3-soliton forms and extends them to
//! any order; residual verification is the acceptance criterion for N ≥ 4.

use alloc::vec::Vec;

use crate::wave::{LinearPhase, TauFunction, WaveTerm};
use crate::Complex;

/// The constant coefficients `a, b, c, d` of the GNNV system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquationCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl EquationCoefficients {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        EquationCoefficients { a, b, c, d }
    }

    /// The NNV specialization `c = d = 0`.
    pub fn nnv(a: f64, b: f64) -> Self {
        EquationCoefficients {
            a,
            b,
            c: 0.0,
            d: 0.0,
        }
    }
}

/// The constant seed solution `u = a000`, `v = b000`, `ω = c000`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Background {
    pub a000: Complex,
    pub b000: Complex,
    pub c000: Complex,
}

impl Background {
    pub fn new(a000: Complex, b000: Complex, c000: Complex) -> Self {
        Background { a000, b000, c000 }
    }

    pub fn real(a000: f64, b000: f64, c000: f64) -> Self {
        Background {
            a000: Complex::new(a000, 0.0),
            b000: Complex::new(b000, 0.0),
            c000: Complex::new(c000, 0.0),
        }
    }

    pub fn zero() -> Self {
        Background::real(0.0, 0.0, 0.0)
    }
}

/// Which bilinear splitting (and background constraint) a soliton lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolitonFamily {
    /// Requires `c000 = 0`.
    A,
    /// Requires `a000 = 0` and `d ≠ 0`.
    B,
}

/// What went wrong constructing a soliton.
#[derive(Debug, Clone, PartialEq)]
pub enum SolitonError {
    /// A wavenumber `P_i` is exactly zero.
    ZeroWavenumber { index: usize },
    /// Family B dispersion divides by `d`.
    ZeroDCoefficient,
    /// The background violates the family constraint instead of being
    /// silently overridden.
    BackgroundConflict {
        family: SolitonFamily,
        constant: &'static str,
    },
    /// A phase-shift denominator factor vanished.
    SingularPhaseShift {
        i: usize,
        j: usize,
        factor: &'static str,
    },
    /// Term-count guard: `2^N` exponentials.
    TooManySolitons { n: usize, max: usize },
    /// At least one wavenumber is required.
    Empty,
}

impl core::fmt::Display for SolitonError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SolitonError::ZeroWavenumber { index } => {
                write!(f, "wavenumber P_{} must be nonzero", index + 1)
            }
            SolitonError::ZeroDCoefficient => {
                write!(f, "d must be nonzero for family B")
            }
            SolitonError::BackgroundConflict { family, constant } => {
                let which = match family {
                    SolitonFamily::A => "A",
                    SolitonFamily::B => "B",
                };
                write!(f, "family {which} requires background {constant} = 0")
            }
            SolitonError::SingularPhaseShift { i, j, factor } => {
                write!(
                    f,
                    "phase shift a_{}{} is singular: {factor} vanishes",
                    i + 1,
                    j + 1
                )
            }
            SolitonError::TooManySolitons { n, max } => {
                write!(f, "{n} solitons exceed the guard of {max} (2^N terms)")
            }
            SolitonError::Empty => write!(f, "at least one wavenumber is required"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SolitonError {}

/// Maximum soliton count (the tau has `2^N` terms).
pub const MAX_SOLITONS: usize = 12;

fn is_zero(z: Complex) -> bool {
    z.re == 0.0 && z.im == 0.0
}

/// Dispersion relation `(Ω, K)` for a single wavenumber `P`.
///
/// Family A: `Ω = 3·a000/P`, `K = (3P²·a·b000 − c·P² − 3d·a000)/P`.
/// Family B: `Ω = −P(aP² − 3a·b000 + c)/d` and
/// `K = b·P·(aP² − 3a·b000 + c)·(a²P⁶ + (2ac − 6a²b000)P⁴ + (3a·b000 − c)²P² − 3c000·d²)/d³`.
pub fn dispersion(
    family: SolitonFamily,
    eqc: &EquationCoefficients,
    bg: &Background,
    p: Complex,
) -> Result<(Complex, Complex), SolitonError> {
    if is_zero(p) {
        return Err(SolitonError::ZeroWavenumber { index: 0 });
    }
    let EquationCoefficients { a, b, c, d } = *eqc;
    match family {
        SolitonFamily::A => {
            let omega = 3.0 * bg.a000 / p;
            let k = (3.0 * a * bg.b000 * p * p - c * p * p - 3.0 * d * bg.a000) / p;
            Ok((omega, k))
        }
        SolitonFamily::B => {
            if d == 0.0 {
                return Err(SolitonError::ZeroDCoefficient);
            }
            let front = a * p * p - 3.0 * a * bg.b000 + c;
            let omega = -p * front / d;
            let poly = a * a * p.powu(6)
                + (2.0 * a * c - 6.0 * a * a * bg.b000) * p.powu(4)
                + (3.0 * a * bg.b000 - c) * (3.0 * a * bg.b000 - c) * p * p
                - 3.0 * bg.c000 * d * d;
            let k = b * p * front * poly / (d * d * d);
            Ok((omega, k))
        }
    }
}

/// Pairwise interaction coefficient `a_ij` of two wavenumbers.
///
/// Family A: `(P_i² − P_iP_j + P_j²)(P_i − P_j)² / ((P_i² + P_iP_j + P_j²)(P_i + P_j)²)`.
/// Family B: `(P_i − P_j)²·(a(P_i² + P_iP_j + P_j² − 3b000) + c)
///            / ((P_i + P_j)²·(a(P_i² − P_iP_j + P_j² − 3b000) + c))`.
pub fn phase_shift(
    family: SolitonFamily,
    eqc: &EquationCoefficients,
    bg: &Background,
    i: usize,
    j: usize,
    p_i: Complex,
    p_j: Complex,
) -> Result<Complex, SolitonError> {
    let sum = p_i + p_j;
    if is_zero(sum) {
        return Err(SolitonError::SingularPhaseShift {
            i,
            j,
            factor: "P_i + P_j",
        });
    }
    let a = eqc.a;
    let c = eqc.c;
    match family {
        SolitonFamily::A => {
            let quad = p_i * p_i + p_i * p_j + p_j * p_j;
            if is_zero(quad) {
                return Err(SolitonError::SingularPhaseShift {
                    i,
                    j,
                    factor: "P_i^2 + P_i*P_j + P_j^2",
                });
            }
            let num = (p_i * p_i - p_i * p_j + p_j * p_j) * (p_i - p_j).powu(2);
            Ok(num / (quad * sum * sum))
        }
        SolitonFamily::B => {
            let quad = a * (p_i * p_i - p_i * p_j + p_j * p_j - 3.0 * bg.b000) + c;
            if is_zero(quad) {
                return Err(SolitonError::SingularPhaseShift {
                    i,
                    j,
                    factor: "a*(P_i^2 - P_i*P_j + P_j^2 - 3*b000) + c",
                });
            }
            let num =
                (p_i - p_j).powu(2) * (a * (p_i * p_i + p_i * p_j + p_j * p_j - 3.0 * bg.b000) + c);
            Ok(num / (sum * sum * quad))
        }
    }
}

/// A fully determined N-soliton: wavenumbers plus everything derived from
/// them. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct SolitonSpec {
    family: SolitonFamily,
    eqc: EquationCoefficients,
    bg: Background,
    wavenumbers: Vec<Complex>,
    omegas: Vec<Complex>,
    ks: Vec<Complex>,
    /// Upper-triangular `a_ij`, row-major over pairs `i < j`.
    shifts: Vec<Complex>,
}

impl SolitonSpec {
    pub fn new(
        family: SolitonFamily,
        eqc: EquationCoefficients,
        bg: Background,
        wavenumbers: Vec<Complex>,
    ) -> Result<Self, SolitonError> {
        let n = wavenumbers.len();
        if n == 0 {
            return Err(SolitonError::Empty);
        }
        if n > MAX_SOLITONS {
            return Err(SolitonError::TooManySolitons {
                n,
                max: MAX_SOLITONS,
            });
        }
        match family {
            SolitonFamily::A => {
                if !is_zero(bg.c000) {
                    return Err(SolitonError::BackgroundConflict {
                        family,
                        constant: "c000",
                    });
                }
            }
            SolitonFamily::B => {
                if !is_zero(bg.a000) {
                    return Err(SolitonError::BackgroundConflict {
                        family,
                        constant: "a000",
                    });
                }
                if eqc.d == 0.0 {
                    return Err(SolitonError::ZeroDCoefficient);
                }
            }
        }
        for (index, p) in wavenumbers.iter().enumerate() {
            if is_zero(*p) {
                return Err(SolitonError::ZeroWavenumber { index });
            }
        }
        let mut omegas = Vec::with_capacity(n);
        let mut ks = Vec::with_capacity(n);
        for &p in &wavenumbers {
            let (omega, k) = dispersion(family, &eqc, &bg, p)?;
            omegas.push(omega);
            ks.push(k);
        }
        let mut shifts = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                shifts.push(phase_shift(
                    family,
                    &eqc,
                    &bg,
                    i,
                    j,
                    wavenumbers[i],
                    wavenumbers[j],
                )?);
            }
        }
        Ok(SolitonSpec {
            family,
            eqc,
            bg,
            wavenumbers,
            omegas,
            ks,
            shifts,
        })
    }

    pub fn family(&self) -> SolitonFamily {
        self.family
    }

    pub fn coefficients(&self) -> &EquationCoefficients {
        &self.eqc
    }

    pub fn background(&self) -> &Background {
        &self.bg
    }

    pub fn len(&self) -> usize {
        self.wavenumbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.wavenumbers.is_empty()
    }

    pub fn wavenumbers(&self) -> &[Complex] {
        &self.wavenumbers
    }

    pub fn omega(&self, i: usize) -> Complex {
        self.omegas[i]
    }

    pub fn k(&self, i: usize) -> Complex {
        self.ks[i]
    }

    /// `a_ij` for `i < j`.
    pub fn shift(&self, i: usize, j: usize) -> Complex {
        debug_assert!(i < j && j < self.len());
        let n = self.len();
        // Offset of row i in the packed upper triangle.
        let row = i * n - i * (i + 1) / 2;
        self.shifts[row + (j - i - 1)]
    }

    /// Phase `η_i = P_i x + Ω_i y + K_i t`.
    pub fn phase(&self, i: usize) -> LinearPhase {
        LinearPhase::new(self.wavenumbers[i], self.omegas[i], self.ks[i])
    }

    /// The tau function: constant 1 plus one exponential per nonempty subset,
    /// each weighted by the product of the pairwise shifts inside the subset.
    pub fn tau(&self) -> TauFunction {
        let n = self.len();
        let mut terms = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u32..(1u32 << n) {
            let mut coefficient = Complex::new(1.0, 0.0);
            let mut alpha = Complex::new(0.0, 0.0);
            let mut beta = Complex::new(0.0, 0.0);
            let mut gamma = Complex::new(0.0, 0.0);
            for i in 0..n {
                if mask & (1 << i) == 0 {
                    continue;
                }
                alpha += self.wavenumbers[i];
                beta += self.omegas[i];
                gamma += self.ks[i];
                for j in (i + 1)..n {
                    if mask & (1 << j) != 0 {
                        coefficient *= self.shift(i, j);
                    }
                }
            }
            terms.push(WaveTerm::exp(
                coefficient,
                LinearPhase::new(alpha, beta, gamma),
            ));
        }
        TauFunction::new(Complex::new(1.0, 0.0), terms)
    }

    /// Replaces the coefficient of the full subset (all N solitons) by
    /// `factor` times its value. Detecting that the result stops solving the
    /// bilinear pair is the existence criterion for higher solitons.
    pub fn tau_with_scaled_top_coefficient(&self, factor: f64) -> TauFunction {
        let mut tau = self.tau();
        let top = tau.terms.len() - 1;
        tau.terms[top].coefficient *= factor;
        tau
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn family_a_dispersion_hand_values() {
        // P=1, a000=1, b000=0, a=1, c=0, d=0 → Ω=3, K=0
        let eqc = EquationCoefficients::new(1.0, 1.0, 0.0, 0.0);
        let bg = Background::real(1.0, 0.0, 0.0);
        let (omega, k) = dispersion(SolitonFamily::A, &eqc, &bg, c(1.0)).unwrap();
        assert_eq!(omega, c(3.0));
        assert_eq!(k, c(0.0));
    }

    #[test]
    fn family_a_omega_proportional_to_a000() {
        let eqc = EquationCoefficients::new(0.7, 1.0, 0.3, 0.5);
        let bg = Background::real(0.0, 0.4, 0.0);
        let (omega, k) = dispersion(SolitonFamily::A, &eqc, &bg, c(2.0)).unwrap();
        assert_eq!(omega, c(0.0));
        // K = (3·4·a·b000 − 4c)/2
        let expect = (3.0 * 4.0 * 0.7 * 0.4 - 0.3 * 4.0) / 2.0;
        assert!((k - c(expect)).norm() < 1e-14);
    }

    #[test]
    fn family_b_dispersion_hand_values() {
        // P=1, a=1, b=1, c=0, d=1, b000=0, c000=0 → Ω=−1, K=1
        let eqc = EquationCoefficients::new(1.0, 1.0, 0.0, 1.0);
        let bg = Background::zero();
        let (omega, k) = dispersion(SolitonFamily::B, &eqc, &bg, c(1.0)).unwrap();
        assert!((omega - c(-1.0)).norm() < 1e-14);
        assert!((k - c(1.0)).norm() < 1e-14);
    }

    #[test]
    fn family_a_phase_shift_hand_value() {
        // P_i=2, P_j=1 → (4−2+1)·1 / ((4+2+1)·9) = 1/21
        let eqc = EquationCoefficients::new(1.0, 1.0, 0.0, 0.0);
        let bg = Background::zero();
        let s = phase_shift(SolitonFamily::A, &eqc, &bg, 0, 1, c(2.0), c(1.0)).unwrap();
        assert!((s - c(1.0 / 21.0)).norm() < 1e-15);
    }

    #[test]
    fn family_a_equal_wavenumbers_shift_vanishes() {
        let eqc = EquationCoefficients::new(1.0, 1.0, 0.2, 0.1);
        let bg = Background::zero();
        let s = phase_shift(SolitonFamily::A, &eqc, &bg, 0, 1, c(1.4), c(1.4)).unwrap();
        assert_eq!(s, c(0.0));
    }

    #[test]
    fn family_b_degenerates_when_a_is_zero() {
        // a=0, c=1 → a_ij = (P_i−P_j)²/(P_i+P_j)²
        let eqc = EquationCoefficients::new(0.0, 1.0, 1.0, 1.0);
        let bg = Background::zero();
        let (pi, pj) = (c(1.7), c(0.6));
        let s = phase_shift(SolitonFamily::B, &eqc, &bg, 0, 1, pi, pj).unwrap();
        let expect = (pi - pj).powu(2) / (pi + pj).powu(2);
        assert!((s - expect).norm() < 1e-15);
    }

    #[test]
    fn opposite_wavenumbers_are_singular() {
        let eqc = EquationCoefficients::new(1.0, 1.0, 0.0, 0.0);
        let bg = Background::zero();
        let err = phase_shift(SolitonFamily::A, &eqc, &bg, 0, 1, c(1.0), c(-1.0)).unwrap_err();
        assert!(matches!(
            err,
            SolitonError::SingularPhaseShift {
                factor: "P_i + P_j",
                ..
            }
        ));
    }

    #[test]
    fn background_conflicts_are_rejected() {
        let eqc = EquationCoefficients::new(1.0, 1.0, 0.0, 1.0);
        let err = SolitonSpec::new(
            SolitonFamily::A,
            eqc,
            Background::real(0.0, 0.0, 0.5),
            alloc::vec![c(1.0)],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            SolitonError::BackgroundConflict {
                constant: "c000",
                ..
            }
        ));

        let err = SolitonSpec::new(
            SolitonFamily::B,
            EquationCoefficients::new(1.0, 1.0, 0.0, 0.0),
            Background::zero(),
            alloc::vec![c(1.0)],
        )
        .unwrap_err();
        assert!(matches!(err, SolitonError::ZeroDCoefficient));
    }

    #[test]
    fn soliton_count_guard() {
        let eqc = EquationCoefficients::new(1.0, 1.0, 0.0, 0.0);
        let ps = (0..13).map(|i| c(0.3 + 0.1 * i as f64)).collect();
        let err = SolitonSpec::new(SolitonFamily::A, eqc, Background::zero(), ps).unwrap_err();
        assert!(matches!(
            err,
            SolitonError::TooManySolitons { n: 13, max: 12 }
        ));
    }

    #[test]
    fn tau_term_counts() {
        let eqc = EquationCoefficients::new(1.0, 1.0, 0.0, 0.0);
        let bg = Background::real(0.6, 0.2, 0.0);
        for n in 1..=3 {
            let ps = (0..n).map(|i| c(0.8 + 0.5 * i as f64)).collect();
            let spec = SolitonSpec::new(SolitonFamily::A, eqc, bg, ps).unwrap();
            let tau = spec.tau();
            assert_eq!(tau.constant, c(1.0));
            assert_eq!(tau.terms.len(), (1 << n) - 1);
        }
    }

    #[test]
    fn three_soliton_top_coefficient_is_shift_product() {
        let eqc = EquationCoefficients::new(0.9, 1.1, 0.2, 0.4);
        let bg = Background::real(0.5, -0.3, 0.0);
        let spec = SolitonSpec::new(
            SolitonFamily::A,
            eqc,
            bg,
            alloc::vec![c(0.7), c(1.2), c(2.1)],
        )
        .unwrap();
        let tau = spec.tau();
        let expect = spec.shift(0, 1) * spec.shift(0, 2) * spec.shift(1, 2);
        // Mask 0b111 is the last term.
        let top = tau.terms.last().unwrap();
        assert!((top.coefficient - expect).norm() < 1e-15);
        // Pair terms carry the matching single shift.
        let pair_01 = tau.terms[2]; // mask 0b011
        assert!((pair_01.coefficient - spec.shift(0, 1)).norm() < 1e-15);
    }
}
