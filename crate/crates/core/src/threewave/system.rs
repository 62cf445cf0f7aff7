//! The polynomial constraint system behind the three-wave ansatz.
//!
//! Substituting the ansatz into the bilinear pair and collecting the
//! coefficients of the independent wave products (`e^{±ξ1}·cosh ξ3`,
//! `e^{±ξ1}·sinh ξ3`, `e^{±ξ1}·cos ξ2`, `e^{±ξ1}·sin ξ2`,
//! `sin ξ2·sinh ξ3`, `cos ξ2·cosh ξ3` and the constant) yields a system of
//! polynomial equations in the phase parameters, amplitudes and background.
//! This module evaluates each printed equation numerically as a second,
//! independent oracle next to the bilinear residual: a spec that satisfies
//! one must satisfy the other.
//!
//! Each equation keeps its printed amplitude multiplier (`d1·d2`, `d2·d3`,
//! ...): a branch with a vanishing amplitude satisfies the multiplied
//! equations trivially, which is exactly what makes those branches solvable
//! with more freedom.

use alloc::vec::Vec;

use crate::report::ResidualReport;
use crate::wave::Point;
use crate::Complex;

type C = Complex;

/// Everything the constraint system reads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParameters {
    pub a: C,
    pub c: C,
    pub d: C,
    pub a000: C,
    pub b000: C,
    pub c000: C,
    pub alpha: [C; 3],
    pub beta: [C; 3],
    pub gamma: [C; 3],
    /// `d1, d2, d3`.
    pub amp: [C; 3],
}

/// One evaluated equation: printed name, absolute and scale-relative residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquationResidual {
    pub name: &'static str,
    pub abs: f64,
    pub rel: f64,
}

struct Eq {
    name: &'static str,
    /// Monomials without the common amplitude multiplier.
    body: fn(&SystemParameters) -> Vec<C>,
    /// Indices into `amp` forming the common multiplier (empty for the
    /// constant-term equations, which carry amplitudes per monomial).
    mult: &'static [usize],
}

fn sq(z: C) -> C {
    z * z
}

fn cb(z: C) -> C {
    z * z * z
}

// The main system: coefficients collected from the first bilinear equation.

fn main_01(p: &SystemParameters) -> Vec<C> {
    let (a, c, d, a000, b000) = (p.a, p.c, p.d, p.a000, p.b000);
    let [a1, _, a3] = p.alpha;
    let [b1, _, b3] = p.beta;
    let [g1, _, g3] = p.gamma;
    alloc::vec![
        a * cb(a1) * b3,
        3.0 * a * sq(a1) * a3 * b1,
        3.0 * a * a1 * sq(a3) * b3,
        a * cb(a3) * b1,
        -6.0 * a * a000 * a1 * a3,
        2.0 * d * b1 * b3,
        b3 * g1,
        -3.0 * a * b000 * a1 * b3,
        -3.0 * a * b000 * a3 * b1,
        c * a1 * b3,
        c * a3 * b1,
        b1 * g3,
    ]
}

fn main_02(p: &SystemParameters) -> Vec<C> {
    let (a, c, d, a000, b000) = (p.a, p.c, p.d, p.a000, p.b000);
    let [_, a2, a3] = p.alpha;
    let [_, b2, b3] = p.beta;
    let [_, g2, g3] = p.gamma;
    alloc::vec![
        3.0 * a * b000 * a2 * b3,
        3.0 * a * sq(a2) * a3 * b2,
        -3.0 * a * a2 * sq(a3) * b3,
        -a * cb(a3) * b2,
        6.0 * a * a000 * a2 * a3,
        -b2 * g3,
        a * cb(a2) * b3,
        3.0 * a * b000 * a3 * b2,
        -c * a2 * b3,
        -c * a3 * b2,
        -2.0 * d * b2 * b3,
        -b3 * g2,
    ]
}

fn main_03(p: &SystemParameters) -> Vec<C> {
    let (a, c, d, a000, b000) = (p.a, p.c, p.d, p.a000, p.b000);
    let [a1, _, a3] = p.alpha;
    let [b1, _, b3] = p.beta;
    let [g1, _, g3] = p.gamma;
    alloc::vec![
        3.0 * a * b000 * a1 * b3,
        -a * cb(a1) * b3,
        -3.0 * a * sq(a1) * a3 * b1,
        -3.0 * a * a1 * sq(a3) * b3,
        -a * cb(a3) * b1,
        6.0 * a * a000 * a1 * a3,
        3.0 * a * b000 * a3 * b1,
        -c * a1 * b3,
        -c * a3 * b1,
        -2.0 * d * b1 * b3,
        -b1 * g3,
        -b3 * g1,
    ]
}

fn main_04(p: &SystemParameters) -> Vec<C> {
    let (a, c, d, a000, b000) = (p.a, p.c, p.d, p.a000, p.b000);
    let [a1, a2, _] = p.alpha;
    let [b1, b2, _] = p.beta;
    let [g1, g2, _] = p.gamma;
    alloc::vec![
        a * cb(a1) * b2,
        3.0 * a * sq(a1) * a2 * b1,
        -3.0 * a * a1 * sq(a2) * b2,
        -a * cb(a2) * b1,
        -6.0 * a * a000 * a1 * a2,
        -3.0 * a * b000 * a1 * b2,
        -3.0 * a * b000 * a2 * b1,
        c * a1 * b2,
        c * a2 * b1,
        2.0 * d * b1 * b2,
        b1 * g2,
        b2 * g1,
    ]
}

fn main_05(p: &SystemParameters) -> Vec<C> {
    let (a, c, d, a000, b000) = (p.a, p.c, p.d, p.a000, p.b000);
    let [a1, a2, _] = p.alpha;
    let [b1, b2, _] = p.beta;
    let [g1, g2, _] = p.gamma;
    alloc::vec![
        3.0 * a * b000 * a2 * b1,
        -a * cb(a1) * b2,
        -3.0 * a * sq(a1) * a2 * b1,
        a * cb(a2) * b1,
        6.0 * a * a000 * a1 * a2,
        -b1 * g2,
        3.0 * a * a1 * sq(a2) * b2,
        -c * a1 * b2,
        -c * a2 * b1,
        -2.0 * d * b1 * b2,
        3.0 * a * b000 * a1 * b2,
        -b2 * g1,
    ]
}

fn main_06(p: &SystemParameters) -> Vec<C> {
    let (a, c, d, a000, b000) = (p.a, p.c, p.d, p.a000, p.b000);
    let [a1, _, a3] = p.alpha;
    let [b1, _, b3] = p.beta;
    let [g1, _, g3] = p.gamma;
    alloc::vec![
        3.0 * a * a000 * sq(a1),
        -a * cb(a1) * b1,
        -3.0 * a * sq(a1) * a3 * b3,
        -3.0 * a * a1 * sq(a3) * b1,
        -a * cb(a3) * b3,
        3.0 * a * a000 * sq(a3),
        3.0 * a * b000 * a1 * b1,
        3.0 * a * b000 * a3 * b3,
        -c * a1 * b1,
        -c * a3 * b3,
        -d * sq(b1),
        -d * sq(b3),
        -b1 * g1,
        -b3 * g3,
    ]
}

fn main_07(p: &SystemParameters) -> Vec<C> {
    let (a, c, d, a000, b000) = (p.a, p.c, p.d, p.a000, p.b000);
    let [a1, a2, _] = p.alpha;
    let [b1, b2, _] = p.beta;
    let [g1, g2, _] = p.gamma;
    alloc::vec![
        3.0 * a * sq(a1) * a2 * b2,
        -a * cb(a1) * b1,
        3.0 * a * a1 * sq(a2) * b1,
        -a * cb(a2) * b2,
        3.0 * a * a000 * sq(a1),
        -d * sq(b1),
        -3.0 * a000 * a * sq(a2),
        3.0 * a * b000 * a1 * b1,
        -3.0 * a * b000 * a2 * b2,
        -c * a1 * b1,
        c * a2 * b2,
        d * sq(b2),
        -b1 * g1,
        b2 * g2,
    ]
}

fn main_08(p: &SystemParameters) -> Vec<C> {
    let (a, c, d, a000, b000) = (p.a, p.c, p.d, p.a000, p.b000);
    let [a1, a2, _] = p.alpha;
    let [b1, b2, _] = p.beta;
    let [g1, g2, _] = p.gamma;
    alloc::vec![
        3.0 * a * sq(a1) * a2 * b2,
        -3.0 * a * b000 * a2 * b2,
        3.0 * a * a1 * sq(a2) * b1,
        3.0 * a * a000 * sq(a1),
        -3.0 * a * a000 * sq(a2),
        3.0 * a * a1 * b000 * b1,
        -a * cb(a1) * b1,
        -a * cb(a2) * b2,
        -c * a1 * b1,
        c * a2 * b2,
        -d * sq(b1),
        d * sq(b2),
        -b1 * g1,
        b2 * g2,
    ]
}

fn main_09(p: &SystemParameters) -> Vec<C> {
    let (a, c, d, a000, b000) = (p.a, p.c, p.d, p.a000, p.b000);
    let [a1, _, a3] = p.alpha;
    let [b1, _, b3] = p.beta;
    let [g1, _, g3] = p.gamma;
    alloc::vec![
        3.0 * a * a000 * sq(a1),
        -a * cb(a1) * b1,
        -3.0 * a * sq(a1) * a3 * b3,
        -3.0 * a * a1 * sq(a3) * b1,
        -a * cb(a3) * b3,
        3.0 * a * a000 * sq(a3),
        -b1 * g1,
        3.0 * a * b000 * a1 * b1,
        3.0 * a * b000 * a3 * b3,
        -c * a1 * b1,
        -c * a3 * b3,
        -d * sq(b1),
        -d * sq(b3),
        -b3 * g3,
    ]
}

fn main_10(p: &SystemParameters) -> Vec<C> {
    let (a, c, d, a000, b000) = (p.a, p.c, p.d, p.a000, p.b000);
    let [_, a2, a3] = p.alpha;
    let [_, b2, b3] = p.beta;
    let [_, g2, g3] = p.gamma;
    alloc::vec![
        3.0 * a * sq(a2) * a3 * b3,
        -a * cb(a2) * b2,
        3.0 * a * a2 * sq(a3) * b2,
        -a * cb(a3) * b3,
        -3.0 * a * a000 * sq(a2),
        3.0 * a * a000 * sq(a3),
        -3.0 * a * b000 * a2 * b2,
        3.0 * a * b000 * a3 * b3,
        c * a2 * b2,
        -c * a3 * b3,
        d * sq(b2),
        -d * sq(b3),
        b2 * g2,
        -b3 * g3,
    ]
}

fn main_11(p: &SystemParameters) -> Vec<C> {
    let (a, c, d, a000, b000) = (p.a, p.c, p.d, p.a000, p.b000);
    let [a1, a2, a3] = p.alpha;
    let [b1, b2, b3] = p.beta;
    let [g1, g2, g3] = p.gamma;
    let [e1, e2, e3] = p.amp;
    alloc::vec![
        3.0 * a * a000 * sq(a3) * sq(e2),
        -4.0 * a * cb(a2) * b2 * sq(e1),
        -4.0 * a * cb(a3) * b3 * sq(e2),
        -3.0 * a * a000 * sq(a2) * sq(e1),
        3.0 * a * b000 * a3 * b3 * sq(e2),
        -16.0 * a * cb(a1) * b1 * e3,
        -4.0 * b1 * g1 * e3,
        -3.0 * a * b000 * a2 * b2 * sq(e1),
        12.0 * a * a000 * sq(a1) * e3,
        12.0 * a * b000 * a1 * b1 * e3,
        c * a2 * b2 * sq(e1),
        -c * a3 * b3 * sq(e2),
        d * sq(b2) * sq(e1),
        -d * sq(b3) * sq(e2),
        -4.0 * c * a1 * b1 * e3,
        -4.0 * d * sq(b1) * e3,
        b2 * g2 * sq(e1),
        -b3 * g3 * sq(e2),
    ]
}

// The auxiliary system: coefficients collected from the second bilinear
// equation.

fn aux_01(p: &SystemParameters) -> Vec<C> {
    let (a000, c000) = (p.a000, p.c000);
    let [_, a2, a3] = p.alpha;
    let [_, b2, b3] = p.beta;
    alloc::vec![
        3.0 * a2 * sq(b2) * b3,
        -a2 * cb(b3),
        a3 * cb(b2),
        -3.0 * a3 * b2 * sq(b3),
        6.0 * a000 * b2 * b3,
        3.0 * c000 * a2 * b3,
        3.0 * c000 * a3 * b2,
    ]
}

fn aux_02(p: &SystemParameters) -> Vec<C> {
    let (a000, c000) = (p.a000, p.c000);
    let [a1, _, a3] = p.alpha;
    let [b1, _, b3] = p.beta;
    alloc::vec![
        6.0 * a000 * b1 * b3,
        -3.0 * a1 * sq(b1) * b3,
        -a1 * cb(b3),
        -a3 * cb(b1),
        -3.0 * a3 * b1 * sq(b3),
        3.0 * c000 * a1 * b3,
        3.0 * c000 * a3 * b1,
    ]
}

fn aux_03(p: &SystemParameters) -> Vec<C> {
    let (a000, c000) = (p.a000, p.c000);
    let [a1, _, a3] = p.alpha;
    let [b1, _, b3] = p.beta;
    alloc::vec![
        3.0 * a1 * sq(b1) * b3,
        a1 * cb(b3),
        a3 * cb(b1),
        3.0 * a3 * b1 * sq(b3),
        -6.0 * a000 * b1 * b3,
        -3.0 * c000 * a1 * b3,
        -3.0 * c000 * a3 * b1,
    ]
}

fn aux_04(p: &SystemParameters) -> Vec<C> {
    let (a000, c000) = (p.a000, p.c000);
    let [a1, a2, _] = p.alpha;
    let [b1, b2, _] = p.beta;
    alloc::vec![
        a1 * cb(b2),
        -3.0 * a1 * sq(b1) * b2,
        -a2 * cb(b1),
        3.0 * a2 * b1 * sq(b2),
        6.0 * a000 * b1 * b2,
        3.0 * c000 * a1 * b2,
        3.0 * c000 * a2 * b1,
    ]
}

fn aux_05(p: &SystemParameters) -> Vec<C> {
    let (a000, c000) = (p.a000, p.c000);
    let [a1, a2, _] = p.alpha;
    let [b1, b2, _] = p.beta;
    alloc::vec![
        3.0 * a1 * sq(b1) * b2,
        -a1 * cb(b2),
        a2 * cb(b1),
        -3.0 * a2 * b1 * sq(b2),
        -6.0 * a000 * b1 * b2,
        -3.0 * c000 * a1 * b2,
        -3.0 * c000 * a2 * b1,
    ]
}

fn aux_06(p: &SystemParameters) -> Vec<C> {
    let (a000, c000) = (p.a000, p.c000);
    let [a1, a2, _] = p.alpha;
    let [b1, b2, _] = p.beta;
    alloc::vec![
        3.0 * a1 * b1 * sq(b2),
        -a1 * cb(b1),
        3.0 * a2 * sq(b1) * b2,
        -a2 * cb(b2),
        3.0 * a000 * sq(b1),
        -3.0 * a000 * sq(b2),
        3.0 * c000 * a1 * b1,
        -3.0 * c000 * a2 * b2,
    ]
}

fn aux_07(p: &SystemParameters) -> Vec<C> {
    let (a000, c000) = (p.a000, p.c000);
    let [a1, _, a3] = p.alpha;
    let [b1, _, b3] = p.beta;
    alloc::vec![
        3.0 * a000 * sq(b3),
        -a1 * cb(b1),
        -3.0 * a1 * b1 * sq(b3),
        -3.0 * a3 * sq(b1) * b3,
        -a3 * cb(b3),
        3.0 * a000 * sq(b1),
        3.0 * c000 * a1 * b1,
        3.0 * c000 * a3 * b3,
    ]
}

fn aux_08(p: &SystemParameters) -> Vec<C> {
    // Same polynomial as aux_06; printed once per amplitude multiplier.
    aux_06(p)
}

fn aux_09(p: &SystemParameters) -> Vec<C> {
    let (a000, c000) = (p.a000, p.c000);
    let [a1, _, a3] = p.alpha;
    let [b1, _, b3] = p.beta;
    alloc::vec![
        3.0 * a000 * sq(b1),
        -a1 * cb(b1),
        -3.0 * a1 * b1 * sq(b3),
        -3.0 * a3 * sq(b1) * b3,
        -a3 * cb(b3),
        3.0 * a000 * sq(b3),
        3.0 * c000 * a1 * b1,
        3.0 * c000 * a3 * b3,
    ]
}

fn aux_10(p: &SystemParameters) -> Vec<C> {
    let (a000, c000) = (p.a000, p.c000);
    let [_, a2, a3] = p.alpha;
    let [_, b2, b3] = p.beta;
    alloc::vec![
        3.0 * a2 * b2 * sq(b3),
        -a2 * cb(b2),
        3.0 * a3 * sq(b2) * b3,
        -a3 * cb(b3),
        -3.0 * a000 * sq(b2),
        3.0 * a000 * sq(b3),
        -3.0 * c000 * a2 * b2,
        3.0 * c000 * a3 * b3,
    ]
}

fn aux_11(p: &SystemParameters) -> Vec<C> {
    let (a000, c000) = (p.a000, p.c000);
    let [a1, a2, a3] = p.alpha;
    let [b1, b2, b3] = p.beta;
    let [e1, e2, e3] = p.amp;
    alloc::vec![
        3.0 * a000 * sq(b3) * sq(e2),
        -4.0 * a2 * cb(b2) * sq(e1),
        -4.0 * a3 * cb(b3) * sq(e2),
        -3.0 * a000 * sq(b2) * sq(e1),
        -16.0 * a1 * cb(b1) * e3,
        -3.0 * c000 * a2 * b2 * sq(e1),
        3.0 * c000 * a3 * b3 * sq(e2),
        12.0 * a000 * sq(b1) * e3,
        12.0 * c000 * a1 * b1 * e3,
    ]
}

const EQUATIONS: &[Eq] = &[
    Eq {
        name: "main-01",
        body: main_01,
        mult: &[1, 2],
    },
    Eq {
        name: "main-02",
        body: main_02,
        mult: &[0, 1],
    },
    Eq {
        name: "main-03",
        body: main_03,
        mult: &[1],
    },
    Eq {
        name: "main-04",
        body: main_04,
        mult: &[0],
    },
    Eq {
        name: "main-05",
        body: main_05,
        mult: &[0, 2],
    },
    Eq {
        name: "main-06",
        body: main_06,
        mult: &[1, 2],
    },
    Eq {
        name: "main-07",
        body: main_07,
        mult: &[0, 2],
    },
    Eq {
        name: "main-08",
        body: main_08,
        mult: &[0],
    },
    Eq {
        name: "main-09",
        body: main_09,
        mult: &[1],
    },
    Eq {
        name: "main-10",
        body: main_10,
        mult: &[0, 1],
    },
    Eq {
        name: "main-11",
        body: main_11,
        mult: &[],
    },
    Eq {
        name: "aux-01",
        body: aux_01,
        mult: &[0, 1],
    },
    Eq {
        name: "aux-02",
        body: aux_02,
        mult: &[1],
    },
    Eq {
        name: "aux-03",
        body: aux_03,
        mult: &[1, 2],
    },
    Eq {
        name: "aux-04",
        body: aux_04,
        mult: &[0, 2],
    },
    Eq {
        name: "aux-05",
        body: aux_05,
        mult: &[0],
    },
    Eq {
        name: "aux-06",
        body: aux_06,
        mult: &[0, 2],
    },
    Eq {
        name: "aux-07",
        body: aux_07,
        mult: &[1, 2],
    },
    Eq {
        name: "aux-08",
        body: aux_08,
        mult: &[0],
    },
    Eq {
        name: "aux-09",
        body: aux_09,
        mult: &[1],
    },
    Eq {
        name: "aux-10",
        body: aux_10,
        mult: &[0, 1],
    },
    Eq {
        name: "aux-11",
        body: aux_11,
        mult: &[],
    },
];

/// Evaluates every printed equation at the given parameter values.
pub fn equation_residuals(p: &SystemParameters) -> Vec<EquationResidual> {
    EQUATIONS
        .iter()
        .map(|eq| {
            let monomials = (eq.body)(p);
            let mult: C = eq
                .mult
                .iter()
                .fold(C::new(1.0, 0.0), |acc, &i| acc * p.amp[i]);
            let sum: C = monomials.iter().sum();
            let scale = monomials.iter().map(|m| m.norm()).fold(0.0, f64::max) * mult.norm();
            let abs = (sum * mult).norm();
            EquationResidual {
                name: eq.name,
                abs,
                rel: abs / (1.0 + scale),
            }
        })
        .collect()
}

/// Default tolerance: the equations are exact polynomial identities, only
/// rounding remains.
pub const DEFAULT_SYSTEM_TOLERANCE: f64 = 1e-9;

/// Folds all equation residuals into one report.
pub fn coefficient_system_residual(p: &SystemParameters, tolerance: f64) -> ResidualReport {
    let mut acc = ResidualReport::accumulator("coefficient-system", tolerance);
    for eq in equation_residuals(p) {
        acc.record_rel(Point::ORIGIN, eq.abs, eq.rel);
    }
    acc.finish()
}
