//! The 43 solved parameter branches of the three-wave ansatz.
//!
//! Each branch is a direct transcription of one printed parameter block:
//! given the branch's free parameters it derives the remaining phase
//! coefficients, amplitudes and background constants. Where the printed
//! source dropped an operator or an exponent, the repaired reading is used
//! here and documented in `KNOWN_DEVIATIONS.md`; every reading is adjudicated
//! by the residual oracles, never by eye.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::{CaseInfo, ThreeWaveError};
use crate::soliton::EquationCoefficients;
use crate::Complex;

type C = Complex;
type Res<T> = Result<T, ThreeWaveError>;

/// Denominators smaller than this count as singular configurations.
const SINGULAR: f64 = 1e-9;

fn sq(z: C) -> C {
    z * z
}

fn cb(z: C) -> C {
    z * z * z
}

pub(super) struct Ctx<'a> {
    pub eps: C,
    pub a: C,
    pub c: C,
    pub d: C,
    free: &'a BTreeMap<String, C>,
}

impl<'a> Ctx<'a> {
    pub(super) fn new(
        epsilon: i8,
        eqc: &EquationCoefficients,
        free: &'a BTreeMap<String, C>,
    ) -> Self {
        Ctx {
            eps: C::new(epsilon as f64, 0.0),
            a: C::new(eqc.a, 0.0),
            c: C::new(eqc.c, 0.0),
            d: C::new(eqc.d, 0.0),
            free,
        }
    }

    fn p(&self, name: &'static str) -> Res<C> {
        self.free
            .get(name)
            .copied()
            .ok_or(ThreeWaveError::MissingParameter { name })
    }

    /// Free background constants default to zero when not supplied.
    fn bg(&self, name: &str) -> C {
        self.free.get(name).copied().unwrap_or(Z)
    }

    fn opt(&self, name: &str) -> Option<C> {
        self.free.get(name).copied()
    }

    fn nonzero(&self, v: C, name: &'static str) -> Res<C> {
        if v.norm() < SINGULAR {
            Err(ThreeWaveError::SingularDenominator { name })
        } else {
            Ok(v)
        }
    }

    /// Principal n-th root of `target`, unless the root was supplied as a
    /// free parameter (in which case it must satisfy `root^n = target`).
    fn root(&self, name: &'static str, n: u32, target: C) -> Res<C> {
        match self.opt(name) {
            Some(r) => {
                if (r.powu(n) - target).norm() > 1e-9 * (1.0 + target.norm()) {
                    Err(ThreeWaveError::RootInconsistent { name })
                } else {
                    Ok(r)
                }
            }
            None => Ok(target.powf(1.0 / n as f64)),
        }
    }
}

pub(super) struct Raw {
    pub amp: [C; 3],
    pub alpha: [C; 3],
    pub beta: [C; 3],
    pub gamma: [C; 3],
    pub a000: C,
    pub b000: C,
    pub c000: C,
    pub derived: Vec<(&'static str, C)>,
}

pub(super) struct CaseDef {
    pub info: CaseInfo,
    pub build: fn(&Ctx) -> Res<Raw>,
}

const Z: C = C::new(0.0, 0.0);

fn c01_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let b1 = x.nonzero(x.p("beta1")?, "beta1")?;
    let d3 = x.p("d3")?;
    let b000 = x.bg("b000");
    let c000 = x.bg("c000");
    let a000 = a1 * (4.0 * sq(b1) - 3.0 * c000) / (3.0 * b1);
    let g1 =
        -(3.0 * a * c000 * cb(a1) - 3.0 * a * b000 * a1 * sq(b1) + c * a1 * sq(b1) + d * cb(b1))
            / sq(b1);
    Ok(Raw {
        amp: [Z, Z, d3],
        alpha: [a1, Z, Z],
        beta: [b1, Z, Z],
        gamma: [g1, Z, Z],
        a000,
        b000,
        c000,
        derived: alloc::vec![("a000", a000), ("gamma1", g1)],
    })
}

fn c02_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let b1 = x.nonzero(x.p("beta1")?, "beta1")?;
    let d2 = x.p("d2")?;
    let b000 = x.bg("b000");
    let c000 = x.bg("c000");
    let a000 = a1 * (sq(b1) - 3.0 * c000) / (3.0 * b1);
    let g1 =
        -(3.0 * a * c000 * cb(a1) - 3.0 * a * b000 * a1 * sq(b1) + c * a1 * sq(b1) + d * cb(b1))
            / sq(b1);
    Ok(Raw {
        amp: [Z, d2, Z],
        alpha: [a1, Z, Z],
        beta: [b1, Z, Z],
        gamma: [g1, Z, Z],
        a000,
        b000,
        c000,
        derived: alloc::vec![("a000", a000), ("gamma1", g1)],
    })
}

fn c02_2(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let a3 = x.p("alpha3")?;
    let b1 = x.p("beta1")?;
    let d2 = x.p("d2")?;
    let b000 = x.bg("b000");
    let c000 = sq(b1) / 3.0;
    let g1 = 3.0 * a * b000 * a1 - a * cb(a1) - 3.0 * a * a1 * sq(a3) - c * a1 - d * b1;
    let g3 = 3.0 * a * b000 * a3 - 3.0 * a * sq(a1) * a3 - a * cb(a3) - c * a3;
    Ok(Raw {
        amp: [Z, d2, Z],
        alpha: [a1, Z, a3],
        beta: [b1, Z, Z],
        gamma: [g1, Z, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma1", g1), ("gamma3", g3)],
    })
}

fn c03_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let a2 = x.p("alpha2")?;
    let b1 = x.p("beta1")?;
    let d1 = x.p("d1")?;
    let b000 = x.bg("b000");
    let c000 = sq(b1) / 3.0;
    let g1 = 3.0 * a * a1 * sq(a2) - a * cb(a1) + 3.0 * a * b000 * a1 - c * a1 - d * b1;
    let g2 = 3.0 * a * b000 * a2 - 3.0 * a * sq(a1) * a2 + a * cb(a2) - c * a2;
    Ok(Raw {
        amp: [d1, Z, Z],
        alpha: [a1, a2, Z],
        beta: [b1, Z, Z],
        gamma: [g1, g2, Z],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma1", g1), ("gamma2", g2)],
    })
}

fn c03_2(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.p("alpha1")?;
    let b2 = x.p("beta2")?;
    let d1 = x.p("d1")?;
    let b000 = x.bg("b000");
    let c000 = -4.0 * sq(b2) / 3.0;
    let b1 = e * i * b2;
    let g1 = 3.0 * a * b000 * a1 - a * cb(a1) - e * i * d * b2 - c * a1;
    let g2 = -d * b2;
    Ok(Raw {
        amp: [d1, Z, Z],
        alpha: [a1, Z, Z],
        beta: [b1, b2, Z],
        gamma: [g1, g2, Z],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![
            ("c000", c000),
            ("beta1", b1),
            ("gamma1", g1),
            ("gamma2", g2)
        ],
    })
}

fn c04_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let b3 = x.p("beta3")?;
    let d2 = x.p("d2")?;
    let d3 = x.p("d3")?;
    let b000 = x.bg("b000");
    let c000 = sq(b3) / 3.0;
    let g1 = -a1 * (a * sq(a1) - 3.0 * a * b000 + c);
    let g3 = -b3 * d;
    Ok(Raw {
        amp: [Z, d2, d3],
        alpha: [a1, Z, Z],
        beta: [Z, Z, b3],
        gamma: [g1, Z, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma1", g1), ("gamma3", g3)],
    })
}

fn c04_2(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let a3 = x.p("alpha3")?;
    let g3 = x.p("gamma3")?;
    let d2 = x.p("d2")?;
    let d3 = x.p("d3")?;
    let b000 = x.bg("b000");
    x.nonzero(d, "d")?;
    let disc = x.nonzero(sq(d2) - 4.0 * d3, "d2^2 - 4*d3")?;
    let b1 = -(4.0 * a * sq(d2) * cb(a3) + 12.0 * a * d3 * cb(a1)
        - 12.0 * a * d3 * sq(a1) * a3
        - 12.0 * a * d3 * a1 * sq(a3)
        - 3.0 * a * b000 * sq(d2) * a3
        + 12.0 * a * b000 * d3 * a3
        + c * sq(d2) * a3
        - 4.0 * c * d3 * a3
        + sq(d2) * g3
        - 4.0 * d3 * g3
        - 4.0 * a * d3 * cb(a3))
        / (d * disc);
    // Three operators lost in the printed gamma1 were resolved as
    // +4c·d3·a3, +4a·d3·a3^3 and +12a·b000·d3·a1 (the readings forced by the
    // constraint system; see KNOWN_DEVIATIONS.md).
    let g1 =
        -(a * sq(d2) * cb(a1) + 3.0 * a * sq(d2) * sq(a1) * a3 + 3.0 * a * sq(d2) * a1 * sq(a3)
            - 7.0 * a * sq(d2) * cb(a3)
            - 28.0 * a * d3 * cb(a1)
            + 12.0 * a * d3 * sq(a1) * a3
            + c * sq(d2) * a1
            - c * sq(d2) * a3
            - 4.0 * c * d3 * a1
            + 4.0 * c * d3 * a3
            - sq(d2) * g3
            + 4.0 * d3 * g3
            + 12.0 * a * d3 * a1 * sq(a3)
            - 3.0 * a * b000 * sq(d2) * a1
            + 4.0 * a * d3 * cb(a3)
            + 3.0 * a * b000 * sq(d2) * a3
            + 12.0 * a * b000 * d3 * a1
            - 12.0 * a * b000 * d3 * a3)
            / disc;
    let c000 = 4.0 * sq(b1) / 3.0;
    Ok(Raw {
        amp: [Z, d2, d3],
        alpha: [a1, Z, a3],
        beta: [b1, Z, b1],
        gamma: [g1, Z, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("beta1", b1), ("beta3", b1), ("gamma1", g1), ("c000", c000)],
    })
}

fn c04_3(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let a1 = x.p("alpha1")?;
    let b1 = x.nonzero(x.p("beta1")?, "beta1")?;
    let d2 = x.p("d2")?;
    let d3 = x.p("d3")?;
    let b000 = x.bg("b000");
    let c000 = x.bg("c000");
    let a3 = e * a1;
    let b3 = e * b1;
    let a000 = a3 * (4.0 * sq(b3) - 3.0 * c000) / (3.0 * b3);
    // Printed with alpha3/beta3 in place of alpha1/beta1, which only agrees
    // for eps = +1; the cosh collapse makes the true relation eps-free.
    let g1 =
        -(3.0 * a * c000 * cb(a1) - 3.0 * a * b000 * a1 * sq(b1) + c * a1 * sq(b1) + d * cb(b1))
            / sq(b1);
    let g3 = e * g1;
    Ok(Raw {
        amp: [Z, d2, d3],
        alpha: [a1, Z, a3],
        beta: [b1, Z, b3],
        gamma: [g1, Z, g3],
        a000,
        b000,
        c000,
        derived: alloc::vec![("a000", a000), ("gamma1", g1), ("gamma3", g3)],
    })
}

fn c04_4(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let a3 = x.p("alpha3")?;
    let g3 = x.p("gamma3")?;
    let d2 = x.p("d2")?;
    let d3 = x.p("d3")?;
    let b000 = x.bg("b000");
    x.nonzero(d, "d")?;
    let disc = x.nonzero(sq(d2) - 4.0 * d3, "d2^2 - 4*d3")?;
    let b1 = -(4.0 * a * d3 * cb(a3) - 4.0 * a * sq(d2) * cb(a3)
        + 12.0 * a * d3 * cb(a1)
        + 12.0 * a * d3 * sq(a1) * a3
        - 12.0 * a * d3 * a1 * sq(a3)
        + 3.0 * a * b000 * sq(d2) * a3
        - 12.0 * a * b000 * d3 * a3
        - c * sq(d2) * a3
        + 4.0 * c * d3 * a3
        - sq(d2) * g3
        + 4.0 * d3 * g3)
        / (d * disc);
    let g1 = -(a * sq(d2) * cb(a1) - 3.0 * a * sq(d2) * sq(a1) * a3
        + 3.0 * a * sq(d2) * a1 * sq(a3)
        + 7.0 * a * sq(d2) * cb(a3)
        - 28.0 * a * d3 * cb(a1)
        - 12.0 * a * d3 * sq(a1) * a3
        + c * sq(d2) * a1
        + c * sq(d2) * a3
        - 4.0 * c * d3 * a1
        - 4.0 * c * d3 * a3
        + sq(d2) * g3
        - 4.0 * d3 * g3
        + 12.0 * a * d3 * a1 * sq(a3)
        - 3.0 * a * b000 * sq(d2) * a1
        - 4.0 * a * d3 * cb(a3)
        - 3.0 * a * b000 * sq(d2) * a3
        + 12.0 * a * b000 * d3 * a1
        + 12.0 * a * b000 * d3 * a3)
        / disc;
    let c000 = 4.0 * sq(b1) / 3.0;
    Ok(Raw {
        amp: [Z, d2, d3],
        alpha: [a1, Z, a3],
        beta: [b1, Z, -b1],
        gamma: [g1, Z, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![
            ("beta1", b1),
            ("beta3", -b1),
            ("gamma1", g1),
            ("c000", c000)
        ],
    })
}

fn c04_5(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let b1 = x.p("beta1")?;
    let a3 = x.p("alpha3")?;
    let d2 = x.p("d2")?;
    let d3 = x.p("d3")?;
    let b000 = x.bg("b000");
    let g1 = -d * b1;
    let g3 = 3.0 * a * b000 * a3 - a * cb(a3) - c * a3;
    // Printed as c000 = 0; both sides of the constraint pair demand
    // c000 = beta1^2/3 (the alpha1 = 0 analogue of the sibling branches).
    let c000 = sq(b1) / 3.0;
    Ok(Raw {
        amp: [Z, d2, d3],
        alpha: [Z, Z, a3],
        beta: [b1, Z, Z],
        gamma: [g1, Z, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma1", g1), ("gamma3", g3)],
    })
}

fn c05_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let a1 = x.p("alpha1")?;
    let b1 = x.nonzero(x.p("beta1")?, "beta1")?;
    let g3 = x.p("gamma3")?;
    let d2 = x.p("d2")?;
    let b000 = x.bg("b000");
    let c000 = x.bg("c000");
    let a3 = e * a1;
    let b3 = e * b1;
    let d3 = sq(d2) / 4.0;
    let a000 = a3 * (4.0 * sq(b3) - 3.0 * c000) / (3.0 * b3);
    let g1 = (6.0 * a * b000 * a1 * sq(b1)
        - 6.0 * a * c000 * cb(a1)
        - 2.0 * c * a1 * sq(b1)
        - 2.0 * d * cb(b1)
        - e * sq(b1) * g3)
        / sq(b1);
    Ok(Raw {
        amp: [Z, d2, d3],
        alpha: [a1, Z, a3],
        beta: [b1, Z, b3],
        gamma: [g1, Z, g3],
        a000,
        b000,
        c000,
        derived: alloc::vec![("d3", d3), ("a000", a000), ("gamma1", g1)],
    })
}

fn c05_2(x: &Ctx) -> Res<Raw> {
    let (d, e) = (x.d, x.eps);
    let a1 = x.p("alpha1")?;
    let b1 = x.p("beta1")?;
    let g3 = x.p("gamma3")?;
    let d2 = x.p("d2")?;
    let b000 = x.bg("b000");
    let c000 = x.bg("c000");
    let d3 = sq(d2) / 4.0;
    let g1 = e * g3 - 2.0 * d * b1;
    Ok(Raw {
        amp: [Z, d2, d3],
        alpha: [a1, Z, e * a1],
        beta: [b1, Z, -e * b1],
        gamma: [g1, Z, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("d3", d3), ("gamma1", g1)],
    })
}

fn c06_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let a3 = x.nonzero(x.p("alpha3")?, "alpha3")?;
    let b1 = x.nonzero(x.p("beta1")?, "beta1")?;
    let b3 = x.p("beta3")?;
    let g3 = x.p("gamma3")?;
    let d2 = x.p("d2")?;
    x.nonzero(a, "a")?;
    let cross = x.nonzero(a1 * b3 - a3 * b1, "alpha1*beta3 - alpha3*beta1")?;
    let beta_diff = x.nonzero(sq(b1) - sq(b3), "beta1^2 - beta3^2")?;
    let d3_den = x.nonzero(
        3.0 * a1 * sq(b1) - a1 * sq(b3) - 2.0 * a3 * b1 * b3,
        "3*alpha1*beta1^2 - alpha1*beta3^2 - 2*alpha3*beta1*beta3",
    )?;
    let d3 =
        b3 * sq(d2) * (2.0 * a1 * b1 * b3 + a3 * sq(b1) - 3.0 * a3 * sq(b3)) / (4.0 * b1 * d3_den);
    let a000 = 2.0 * b1 * b3 * (sq(a1) - sq(a3)) / (3.0 * cross);
    let c000 = (a1 * sq(b1) * b3 - a1 * cb(b3) + a3 * cb(b1) - a3 * b1 * sq(b3)) / (-3.0 * cross);
    let b000 = (2.0 * a * a1.powu(4) * b1 * sq(b3)
        - a * cb(a1) * a3 * sq(b1) * b3
        - 3.0 * a * cb(a1) * a3 * cb(b3)
        - 3.0 * a * sq(a1) * sq(a3) * cb(b1)
        + 3.0 * a * sq(a1) * sq(a3) * b1 * sq(b3)
        + 5.0 * a * a1 * cb(a3) * sq(b1) * b3
        + c * a1 * a3 * sq(b1) * b3
        - c * a1 * a3 * cb(b3)
        + d * a1 * sq(b1) * sq(b3)
        - d * a1 * b3.powu(4)
        - c * sq(a3) * cb(b1)
        - a * a3.powu(4) * cb(b1)
        - a * a3.powu(4) * b1 * sq(b3)
        - a * a1 * cb(a3) * cb(b3)
        + c * sq(a3) * b1 * sq(b3)
        - d * a3 * cb(b1) * b3
        + d * a3 * b1 * cb(b3)
        + a1 * sq(b1) * b3 * g3
        - a1 * cb(b3) * g3
        - a3 * cb(b1) * g3
        + a3 * b1 * sq(b3) * g3)
        / (3.0 * a * a3 * cross * beta_diff);
    let g1 = (2.0 * a * a1.powu(4) * b1 * b3 + 2.0 * a * cb(a1) * a3 * sq(b1)
        - 2.0 * a * cb(a1) * a3 * sq(b3)
        - 4.0 * a * sq(a1) * sq(a3) * b1 * b3
        - 2.0 * a * a1 * cb(a3) * sq(b1)
        + 2.0 * a * a1 * cb(a3) * sq(b3)
        + 2.0 * a * a3.powu(4) * b1 * b3
        + d * a1 * sq(b1) * b3
        - d * a1 * cb(b3)
        - d * a3 * cb(b1)
        + d * a3 * b1 * sq(b3)
        + a1 * sq(b1) * g3
        - a1 * sq(b3) * g3)
        / (a3 * beta_diff);
    Ok(Raw {
        amp: [Z, d2, d3],
        alpha: [a1, Z, a3],
        beta: [b1, Z, b3],
        gamma: [g1, Z, g3],
        a000,
        b000,
        c000,
        derived: alloc::vec![
            ("d3", d3),
            ("a000", a000),
            ("b000", b000),
            ("c000", c000),
            ("gamma1", g1)
        ],
    })
}

fn c06_2(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let b1 = x.p("beta1")?;
    let b3 = x.p("beta3")?;
    let d2 = x.p("d2")?;
    let b000 = x.bg("b000");
    let narrow = x.nonzero(3.0 * sq(b1) - sq(b3), "3*beta1^2 - beta3^2")?;
    let beta_diff = x.nonzero(sq(b1) - sq(b3), "beta1^2 - beta3^2")?;
    let d3 = sq(d2) * sq(b3) / (2.0 * narrow);
    let a000 = 2.0 * a1 * b1 / 3.0;
    let c000 = (sq(b3) - sq(b1)) / 3.0;
    let g1 = (a * cb(a1) * sq(b1) + a * cb(a1) * sq(b3) + 3.0 * a * b000 * a1 * sq(b1)
        - 3.0 * a * b000 * a1 * sq(b3)
        - c * a1 * sq(b1)
        + c * a1 * sq(b3)
        - d * cb(b1)
        + d * b1 * sq(b3))
        / beta_diff;
    let g3 = b3 * (2.0 * a * cb(a1) * b1 + d * sq(b1) - d * sq(b3)) / (-beta_diff);
    Ok(Raw {
        amp: [Z, d2, d3],
        alpha: [a1, Z, Z],
        beta: [b1, Z, b3],
        gamma: [g1, Z, g3],
        a000,
        b000,
        c000,
        derived: alloc::vec![
            ("d3", d3),
            ("a000", a000),
            ("c000", c000),
            ("gamma1", g1),
            ("gamma3", g3)
        ],
    })
}

fn c07_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let b2 = x.p("beta2")?;
    let d1 = x.p("d1")?;
    let d3 = x.p("d3")?;
    let b000 = x.bg("b000");
    let c000 = -sq(b2) / 3.0;
    let g1 = -a1 * (a * sq(a1) - 3.0 * a * b000 + c);
    let g2 = -d * b2;
    Ok(Raw {
        amp: [d1, Z, d3],
        alpha: [a1, Z, Z],
        beta: [Z, b2, Z],
        gamma: [g1, g2, Z],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma1", g1), ("gamma2", g2)],
    })
}

fn c07_2(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a2 = x.p("alpha2")?;
    let b1 = x.p("beta1")?;
    let d1 = x.p("d1")?;
    let d3 = x.p("d3")?;
    let b000 = x.bg("b000");
    let c000 = sq(b1) / 3.0;
    let g1 = -d * b1;
    let g2 = a * cb(a2) + 3.0 * a * a2 * b000 - c * a2;
    Ok(Raw {
        amp: [d1, Z, d3],
        alpha: [Z, a2, Z],
        beta: [b1, Z, Z],
        gamma: [g1, g2, Z],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma1", g1), ("gamma2", g2)],
    })
}

fn c07_3(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.p("alpha1")?;
    let a2 = x.nonzero(x.p("alpha2")?, "alpha2")?;
    let b2 = x.p("beta2")?;
    let g2 = x.p("gamma2")?;
    let d1 = x.p("d1")?;
    let d3 = x.p("d3")?;
    x.nonzero(a, "a")?;
    let disc = x.nonzero(4.0 * d3 - sq(d1), "4*d3 - d1^2")?;
    let c000 = -4.0 * sq(b2) / 3.0;
    let b1 = e * i * b2;
    let b000 = (4.0 * a * cb(a2) * sq(d1) + 12.0 * a * d3 * sq(a1) * a2
        - 4.0 * a * d3 * cb(a2)
        - c * sq(d1) * a2
        - d * sq(d1) * b2
        + 4.0 * c * d3 * a2
        + 4.0 * d * d3 * b2
        - sq(d1) * g2
        + 4.0 * d3 * g2)
        / (3.0 * a * disc * a2)
        + e * i * (4.0 * a * d3 * cb(a1) + 4.0 * a * d3 * a1 * sq(a2)) / (a * disc * a2);
    let g1 = -a1 * (a * sq(a1) * a2 + a * cb(a2) - d * b2 - g2) / a2
        + e * i
            * (3.0 * a * sq(d1) * sq(a1) * sq(a2)
                + 3.0 * a * sq(d1) * a2.powu(4)
                + 12.0 * a * d3 * a1.powu(4)
                + 12.0 * a * d3 * sq(a1) * sq(a2)
                + d * sq(d1) * a2 * b2
                - 4.0 * d * d3 * a2 * b2)
            / (disc * a2);
    Ok(Raw {
        amp: [d1, Z, d3],
        alpha: [a1, a2, Z],
        beta: [b1, b2, Z],
        gamma: [g1, g2, Z],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![
            ("c000", c000),
            ("beta1", b1),
            ("b000", b000),
            ("gamma1", g1)
        ],
    })
}

fn c07_4(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let b2 = x.p("beta2")?;
    let g2 = x.p("gamma2")?;
    let d1 = x.p("d1")?;
    let d3 = x.nonzero(x.p("d3")?, "d3")?;
    let b000 = x.bg("b000");
    x.nonzero(a, "a")?;
    let hump = x.nonzero(sq(d1) + 2.0 * d3, "d1^2 + 2*d3")?;
    let disc = sq(d1) - 4.0 * d3;
    let target = sq(disc) * sq(d * b2 + g2) / (-24.0 * sq(a) * d3 * hump);
    let root_a = x.nonzero(x.root("A", 6, target)?, "A")?;
    let a000 = disc * (d * b2 + g2) * b2 / (18.0 * a * sq(root_a) * d3);
    let c000 = sq(b2) * disc / (18.0 * d3);
    let b1 = disc * (d * b2 + g2) * b2 / (12.0 * a * cb(root_a) * d3);
    let g1 = ((72.0 * sq(a) * b000 * sq(d1) * d3 + 144.0 * sq(a) * b000 * sq(d3)
        - 24.0 * a * c * sq(d1) * d3
        - 48.0 * a * c * sq(d3))
        * root_a.powu(4)
        - 3.0 * sq(d) * d1.powu(4) * sq(b2)
        - 4.0 * d * d1.powu(4) * b2 * g2
        + 48.0 * sq(d) * sq(d3) * sq(b2)
        - 4.0 * d * sq(d1) * d3 * b2 * g2
        - d1.powu(4) * sq(g2)
        + 80.0 * d * sq(d3) * b2 * g2
        - 4.0 * sq(d1) * d3 * sq(g2)
        + 32.0 * sq(d3) * sq(g2))
        / (24.0 * a * d3 * cb(root_a) * hump);
    Ok(Raw {
        amp: [d1, Z, d3],
        alpha: [root_a, Z, Z],
        beta: [b1, b2, Z],
        gamma: [g1, g2, Z],
        a000,
        b000,
        c000,
        derived: alloc::vec![
            ("A", root_a),
            ("a000", a000),
            ("c000", c000),
            ("beta1", b1),
            ("gamma1", g1)
        ],
    })
}

fn c07_5(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a2 = x.nonzero(x.p("alpha2")?, "alpha2")?;
    let b2 = x.p("beta2")?;
    let g2 = x.p("gamma2")?;
    let d1 = x.p("d1")?;
    let d3 = x.p("d3")?;
    x.nonzero(a, "a")?;
    let b000 = (4.0 * a * cb(a2) - c * a2 - d * b2 - g2) / (-3.0 * a * a2);
    let c000 = -4.0 * sq(b2) / 3.0;
    let g1 = -e * i * (2.0 * d * b2 + g2);
    Ok(Raw {
        amp: [d1, Z, d3],
        alpha: [-e * i * a2, a2, Z],
        beta: [e * i * b2, b2, Z],
        gamma: [g1, g2, Z],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("b000", b000), ("c000", c000), ("gamma1", g1)],
    })
}

fn c07_6(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a2 = x.nonzero(x.p("alpha2")?, "alpha2")?;
    let b2 = x.nonzero(x.p("beta2")?, "beta2")?;
    let g2 = x.p("gamma2")?;
    let c000 = x.bg("c000");
    let d1 = x.p("d1")?;
    let d3 = x.p("d3")?;
    x.nonzero(a, "a")?;
    let a000 = a2 * (4.0 * sq(b2) + 3.0 * c000) / (-3.0 * b2);
    let b000 = (3.0 * a * c000 * cb(a2) + c * a2 * sq(b2) + d * cb(b2) + sq(b2) * g2)
        / (3.0 * a * a2 * sq(b2));
    Ok(Raw {
        amp: [d1, Z, d3],
        alpha: [e * i * a2, a2, Z],
        beta: [e * i * b2, b2, Z],
        gamma: [e * i * g2, g2, Z],
        a000,
        b000,
        c000,
        derived: alloc::vec![("a000", a000), ("b000", b000)],
    })
}

fn c07_7(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let b2 = x.p("beta2")?;
    let g2 = x.p("gamma2")?;
    let d1 = x.p("d1")?;
    let d3 = x.nonzero(x.p("d3")?, "d3")?;
    let b000 = x.bg("b000");
    x.nonzero(a, "a")?;
    let disc = sq(d1) - 4.0 * d3;
    let target = sq(disc) * sq(d * b2 + g2) / (-144.0 * sq(a) * sq(d3));
    let root_b = x.nonzero(x.root("B", 6, target)?, "B")?;
    let c000 = -4.0 * sq(b2) / 3.0;
    let b1 = b2 * disc * (d * b2 + g2) / (12.0 * a * d3 * cb(root_b));
    let g1 = ((432.0 * sq(a) * b000 * sq(d3) - 144.0 * a * c * sq(d3)) * root_b.powu(4)
        + sq(d) * d1.powu(4) * sq(b2)
        - 32.0 * sq(d) * sq(d1) * d3 * sq(b2)
        + 2.0 * d * d1.powu(4) * b2 * g2
        + 112.0 * sq(d) * sq(d3) * sq(b2)
        - 52.0 * d * sq(d1) * d3 * b2 * g2
        + d1.powu(4) * sq(g2)
        + 176.0 * d * sq(d3) * b2 * g2
        - 20.0 * sq(d1) * d3 * sq(g2)
        + 64.0 * sq(d3) * sq(g2))
        / (144.0 * a * sq(d3) * cb(root_b));
    Ok(Raw {
        amp: [d1, Z, d3],
        alpha: [root_b, Z, Z],
        beta: [b1, b2, Z],
        gamma: [g1, g2, Z],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("B", root_b), ("c000", c000), ("beta1", b1), ("gamma1", g1)],
    })
}

fn c08_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let a2 = x.nonzero(x.p("alpha2")?, "alpha2")?;
    let b1 = x.nonzero(x.p("beta1")?, "beta1")?;
    let b2 = x.p("beta2")?;
    let g2 = x.p("gamma2")?;
    let d1 = x.p("d1")?;
    x.nonzero(a, "a")?;
    let cross = x.nonzero(a1 * b2 - a2 * b1, "alpha1*beta2 - alpha2*beta1")?;
    let beta_sum = x.nonzero(sq(b1) + sq(b2), "beta1^2 + beta2^2")?;
    let d3_den = x.nonzero(
        3.0 * a1 * sq(b1) + a1 * sq(b2) + 2.0 * a2 * b1 * b2,
        "3*alpha1*beta1^2 + alpha1*beta2^2 + 2*alpha2*beta1*beta2",
    )?;
    let d3 =
        sq(d1) * b2 * (2.0 * a1 * b1 * b2 + a2 * sq(b1) + 3.0 * a2 * sq(b2)) / (-4.0 * b1 * d3_den);
    let a000 = 2.0 * b1 * b2 * (sq(a1) + sq(a2)) / (3.0 * cross);
    let c000 = (a1 * sq(b1) * b2 + a1 * cb(b2) + a2 * cb(b1) + a2 * b1 * sq(b2)) / (-3.0 * cross);
    let b000 = (2.0 * a * a1.powu(4) * b1 * sq(b2) - a * cb(a1) * a2 * sq(b1) * b2
        + 3.0 * a * cb(a1) * a2 * cb(b2)
        - 3.0 * a * sq(a1) * sq(a2) * cb(b1)
        - 3.0 * a * sq(a1) * sq(a2) * b1 * sq(b2)
        + c * a1 * a2 * sq(b1) * b2
        + c * a1 * a2 * cb(b2)
        + d * a1 * sq(b1) * sq(b2)
        - a * a1 * cb(a2) * cb(b2)
        + a * a2.powu(4) * cb(b1)
        - a * a2.powu(4) * b1 * sq(b2)
        - a2 * b1 * sq(b2) * g2
        - 5.0 * a * a1 * cb(a2) * sq(b1) * b2
        + d * a1 * b2.powu(4)
        - c * sq(a2) * cb(b1)
        - c * sq(a2) * b1 * sq(b2)
        - d * a2 * cb(b1) * b2
        - d * a2 * b1 * cb(b2)
        + a1 * sq(b1) * b2 * g2
        + a1 * cb(b2) * g2
        - a2 * cb(b1) * g2)
        / (3.0 * a * a2 * cross * beta_sum);
    let g1 = (2.0 * a * a1.powu(4) * b1 * b2
        + 2.0 * a * cb(a1) * a2 * sq(b1)
        + 2.0 * a * cb(a1) * a2 * sq(b2)
        + 4.0 * a * sq(a1) * sq(a2) * b1 * b2
        + 2.0 * a * a1 * cb(a2) * sq(b1)
        + 2.0 * a * a1 * cb(a2) * sq(b2)
        + 2.0 * a * a2.powu(4) * b1 * b2
        + d * a1 * sq(b1) * b2
        + d * a1 * cb(b2)
        - d * a2 * cb(b1)
        - d * a2 * b1 * sq(b2)
        + a1 * sq(b1) * g2
        + a1 * sq(b2) * g2)
        / (a2 * beta_sum);
    Ok(Raw {
        amp: [d1, Z, d3],
        alpha: [a1, a2, Z],
        beta: [b1, b2, Z],
        gamma: [g1, g2, Z],
        a000,
        b000,
        c000,
        derived: alloc::vec![
            ("d3", d3),
            ("a000", a000),
            ("b000", b000),
            ("c000", c000),
            ("gamma1", g1)
        ],
    })
}

fn c08_2(x: &Ctx) -> Res<Raw> {
    let (d, e) = (x.d, x.eps);
    let i = C::i();
    let a2 = x.p("alpha2")?;
    let b2 = x.p("beta2")?;
    let g2 = x.p("gamma2")?;
    let d1 = x.p("d1")?;
    let b000 = x.bg("b000");
    let c000 = x.bg("c000");
    let d3 = sq(d1) / 4.0;
    let g1 = -e * i * (2.0 * d * b2 + g2);
    Ok(Raw {
        amp: [d1, Z, d3],
        alpha: [-e * i * a2, a2, Z],
        beta: [e * i * b2, b2, Z],
        gamma: [g1, g2, Z],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("d3", d3), ("gamma1", g1)],
    })
}

fn c08_3(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a2 = x.p("alpha2")?;
    let b2 = x.nonzero(x.p("beta2")?, "beta2")?;
    let g2 = x.p("gamma2")?;
    let d1 = x.p("d1")?;
    let b000 = x.bg("b000");
    let c000 = x.bg("c000");
    let d3 = sq(d1) / 4.0;
    let a000 = a2 * (4.0 * sq(b2) + 3.0 * c000) / (-3.0 * b2);
    let g1 = e
        * i
        * (6.0 * a * c000 * cb(a2) - 6.0 * a * b000 * a2 * sq(b2)
            + 2.0 * c * a2 * sq(b2)
            + 2.0 * d * cb(b2)
            + sq(b2) * g2)
        / (-sq(b2));
    Ok(Raw {
        amp: [d1, Z, d3],
        alpha: [e * i * a2, a2, Z],
        beta: [e * i * b2, b2, Z],
        gamma: [g1, g2, Z],
        a000,
        b000,
        c000,
        derived: alloc::vec![("d3", d3), ("a000", a000), ("gamma1", g1)],
    })
}

fn c09_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.p("alpha1")?;
    let a3 = x.p("alpha3")?;
    let b1 = x.p("beta1")?;
    let d1 = x.p("d1")?;
    let d2 = x.p("d2")?;
    let b000 = x.bg("b000");
    let a2 = e * i * a3;
    let g1 = 3.0 * a * b000 * a1 - a * cb(a1) - 3.0 * a * a1 * sq(a3) - c * a1 - d * b1;
    let g2 = e * i * a3 * (3.0 * a * b000 - 3.0 * a * sq(a1) - a * sq(a3) - c);
    let g3 = 3.0 * a * b000 * a3 - 3.0 * a * sq(a1) * a3 - a * cb(a3) - c * a3;
    // Printed as beta2^2/3 with beta2 = 0; the constraint pair demands
    // beta1^2/3 (subscript typo).
    let c000 = sq(b1) / 3.0;
    Ok(Raw {
        amp: [d1, d2, Z],
        alpha: [a1, a2, a3],
        beta: [b1, Z, Z],
        gamma: [g1, g2, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![
            ("alpha2", a2),
            ("c000", c000),
            ("gamma1", g1),
            ("gamma2", g2),
            ("gamma3", g3)
        ],
    })
}

fn c09_2(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.p("alpha1")?;
    let b1 = x.nonzero(x.p("beta1")?, "beta1")?;
    let d1 = x.p("d1")?;
    let d2 = x.p("d2")?;
    let b000 = x.bg("b000");
    let c000 = x.bg("c000");
    let a3 = e * a1;
    let b3 = e * b1;
    let a000 = a3 * (4.0 * sq(b3) - 3.0 * c000) / (3.0 * b3);
    let g1 =
        (3.0 * a * c000 * cb(a1) - 3.0 * a * b000 * a1 * sq(b1) + c * a1 * sq(b1) + d * cb(b1))
            / (-sq(b1));
    // gamma3 printed as gamma1 (equal values for eps = +1); the cosh
    // collapse xi3 = eps*xi1 requires gamma3 = eps*gamma1.
    Ok(Raw {
        amp: [d1, d2, Z],
        alpha: [a1, e * i * a1, a3],
        beta: [b1, e * i * b1, b3],
        gamma: [g1, e * i * g1, e * g1],
        a000,
        b000,
        c000,
        derived: alloc::vec![("a000", a000), ("gamma1", g1)],
    })
}

fn c09_3(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.p("alpha1")?;
    let b1 = x.p("beta1")?;
    let d1 = x.p("d1")?;
    let d2 = x.p("d2")?;
    let b000 = x.bg("b000");
    let b3 = -b1;
    let c000 = 4.0 * sq(b3) / 3.0;
    let g1 = 3.0 * a * b000 * a1 - a * cb(a1) - c * a1 - d * b1;
    Ok(Raw {
        amp: [d1, d2, Z],
        alpha: [a1, Z, Z],
        beta: [b1, -e * i * b1, b3],
        gamma: [g1, e * i * d * b1, d * b1],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma1", g1)],
    })
}

fn c10_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.nonzero(x.p("alpha1")?, "alpha1")?;
    let a3 = x.p("alpha3")?;
    let b1 = x.p("beta1")?;
    let d2 = x.p("d2")?;
    let b000 = x.bg("b000");
    let sum = x.nonzero(a1 + a3, "alpha1 + alpha3")?;
    let target = (a1 + 2.0 * a3) * (a1 - a3) / (a1 * sum);
    let root_c = x.root("C", 2, target)?;
    let d1 = d2 * root_c;
    let b3 = b1;
    let c000 = 4.0 * sq(b3) / 3.0;
    let g1 = 3.0 * a * b000 * a1
        - a * cb(a1)
        - 1.5 * a * sq(a1) * a3
        - 1.5 * a * a1 * sq(a3)
        - c * a1
        - d * b1;
    let g2 = e * i / 2.0 * (3.0 * a * sq(a1) * a3 + 3.0 * a * a1 * sq(a3) - 2.0 * d * b1);
    let g3 = 3.0 * a * b000 * a3
        - 1.5 * a * sq(a1) * a3
        - 1.5 * a * a1 * sq(a3)
        - a * cb(a3)
        - c * a3
        - d * b1;
    Ok(Raw {
        amp: [d1, d2, Z],
        alpha: [a1, Z, a3],
        beta: [b1, e * i * b1, b3],
        gamma: [g1, g2, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![
            ("C", root_c),
            ("d1", d1),
            ("c000", c000),
            ("gamma1", g1),
            ("gamma2", g2),
            ("gamma3", g3)
        ],
    })
}

fn c10_2(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.nonzero(x.p("alpha1")?, "alpha1")?;
    let a3 = x.p("alpha3")?;
    let b1 = x.p("beta1")?;
    let d2 = x.p("d2")?;
    let b000 = x.bg("b000");
    let diff = x.nonzero(a1 - a3, "alpha1 - alpha3")?;
    let target = (a1 - 2.0 * a3) * (a1 + a3) / (a1 * diff);
    let root_c = x.root("C", 2, target)?;
    let d1 = d2 * root_c;
    let b3 = -b1;
    let c000 = 4.0 * sq(b3) / 3.0;
    let g1 = 3.0 * a * b000 * a1 - a * cb(a1) + 1.5 * a * sq(a1) * a3
        - 1.5 * a * a1 * sq(a3)
        - c * a1
        - d * b1;
    let g2 = e * i / 2.0 * (3.0 * a * sq(a1) * a3 - 3.0 * a * a1 * sq(a3) + 2.0 * d * b1);
    let g3 =
        3.0 * a * b000 * a3 - 1.5 * a * sq(a1) * a3 + 1.5 * a * a1 * sq(a3) - a * cb(a3) - c * a3
            + d * b1;
    Ok(Raw {
        amp: [d1, d2, Z],
        alpha: [a1, Z, a3],
        beta: [b1, -e * i * b1, b3],
        gamma: [g1, g2, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![
            ("C", root_c),
            ("d1", d1),
            ("c000", c000),
            ("gamma1", g1),
            ("gamma2", g2),
            ("gamma3", g3)
        ],
    })
}

fn c11_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let a3 = x.p("alpha3")?;
    let b2 = x.p("beta2")?;
    let (d1, d2, d3) = (x.p("d1")?, x.p("d2")?, x.p("d3")?);
    let b000 = x.bg("b000");
    let c000 = -sq(b2) / 3.0;
    let g1 = 3.0 * a * b000 * a1 - a * cb(a1) - c * a1;
    let g2 = -d * b2;
    let g3 = 3.0 * a * b000 * a3 - a * cb(a3) - c * a3;
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [a1, Z, a3],
        beta: [Z, b2, Z],
        gamma: [g1, g2, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![
            ("c000", c000),
            ("gamma1", g1),
            ("gamma2", g2),
            ("gamma3", g3)
        ],
    })
}

fn c11_2(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a2 = x.p("alpha2")?;
    let a3 = x.p("alpha3")?;
    let b1 = x.p("beta1")?;
    let (d1, d2, d3) = (x.p("d1")?, x.p("d2")?, x.p("d3")?);
    let b000 = x.bg("b000");
    let g1 = -d * b1;
    let g2 = a2 * (a * sq(a2) + 3.0 * a * b000 - c);
    let g3 = 3.0 * a * b000 * a3 - a * cb(a3) - c * a3;
    // Printed as beta2^2/3 with beta2 = 0; the constraint pair demands
    // beta1^2/3 (subscript typo).
    let c000 = sq(b1) / 3.0;
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [Z, a2, a3],
        beta: [b1, Z, Z],
        gamma: [g1, g2, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![
            ("c000", c000),
            ("gamma1", g1),
            ("gamma2", g2),
            ("gamma3", g3)
        ],
    })
}

fn c11_3(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a3 = x.p("alpha3")?;
    let b2 = x.p("beta2")?;
    let (d1, d2, d3) = (x.p("d1")?, x.p("d2")?, x.p("d3")?);
    let b000 = x.bg("b000");
    let c000 = -sq(b2) / 3.0;
    let g3 = 3.0 * a * a3 * b000 - a * cb(a3) - c * a3;
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [Z, Z, a3],
        beta: [e * i * b2, b2, Z],
        gamma: [-e * i * d * b2, -d * b2, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma3", g3)],
    })
}

fn c11_4(x: &Ctx) -> Res<Raw> {
    // Transcribed literally; flagged as a suspected typo: the constant-term
    // constraint of this structure demands d1^2 = d2^2, which contradicts
    // the branch's claim that all three amplitudes are free (the d2 = -d1
    // subcase is the separately printed case 13).
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a2 = x.p("alpha2")?;
    let b3 = x.p("beta3")?;
    let (d1, d2, d3) = (x.p("d1")?, x.p("d2")?, x.p("d3")?);
    let b000 = x.bg("b000");
    let b2 = e * i * b3;
    let c000 = sq(b2) / 3.0;
    let g2 = a * cb(a2) + 3.0 * a * b000 * a2 - e * i * d * b3 - c * a2;
    let g3 = e * i * a * cb(a2) + 3.0 * e * i * a * b000 * a2 - e * i * c * a2 - d * b3;
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [Z, a2, e * i * a2],
        beta: [Z, b2, b3],
        gamma: [Z, g2, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma2", g2), ("gamma3", g3)],
    })
}

fn c11_5(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let a2 = x.p("alpha2")?;
    let b1 = x.p("beta1")?;
    let (d1, d2, d3) = (x.p("d1")?, x.p("d2")?, x.p("d3")?);
    let b000 = x.bg("b000");
    let b3 = e * b1;
    let c000 = sq(b3) / 3.0;
    let g2 = a2 * (a * sq(a2) + 3.0 * a * b000 - c);
    // gamma1 printed as eps*d*beta1, which coincides with the equation
    // system's -d*beta1 only at eps = -1; the system fixes gamma1 = -d*beta1.
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [Z, a2, Z],
        beta: [b1, Z, b3],
        gamma: [-d * b1, g2, -e * d * b1],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma2", g2)],
    })
}

fn c11_6(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.p("alpha1")?;
    let b3 = x.p("beta3")?;
    let (d1, d2, d3) = (x.p("d1")?, x.p("d2")?, x.p("d3")?);
    let b000 = x.bg("b000");
    let c000 = sq(b3) / 3.0;
    let g1 = -a1 * (a * sq(a1) - 3.0 * a * b000 + c);
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [a1, Z, Z],
        beta: [Z, e * i * b3, b3],
        gamma: [g1, -e * i * d * b3, -d * b3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma1", g1)],
    })
}

fn c11_7(x: &Ctx) -> Res<Raw> {
    let (a, c, d) = (x.a, x.c, x.d);
    let a1 = x.p("alpha1")?;
    let a2 = x.p("alpha2")?;
    let b3 = x.p("beta3")?;
    let (d1, d2, d3) = (x.p("d1")?, x.p("d2")?, x.p("d3")?);
    let b000 = x.bg("b000");
    let c000 = sq(b3) / 3.0;
    let g1 = -a1 * (a * sq(a1) - 3.0 * a * b000 + c);
    let g2 = a2 * (a * sq(a2) + 3.0 * a * b000 - c);
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [a1, a2, Z],
        beta: [Z, Z, b3],
        gamma: [g1, g2, -d * b3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma1", g1), ("gamma2", g2)],
    })
}

fn c11_8(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.p("alpha1")?;
    let b1 = x.p("beta1")?;
    let (d1, d2, d3) = (x.p("d1")?, x.p("d2")?, x.p("d3")?);
    let b000 = x.bg("b000");
    let c000 = 4.0 * sq(b1) / 3.0;
    let g1 = 3.0 * a * b000 * a1 - 4.0 * a * cb(a1) - c * a1 - d * b1;
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [a1, e * i * a1, a1],
        beta: [b1, e * i * b1, b1],
        gamma: [g1, e * i * g1, g1],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma1", g1)],
    })
}

fn c11_9(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.p("alpha1")?;
    let b1 = x.p("beta1")?;
    let (d1, d2, d3) = (x.p("d1")?, x.p("d2")?, x.p("d3")?);
    let b000 = x.bg("b000");
    let c000 = 4.0 * sq(b1) / 3.0;
    let g1 = 3.0 * a * b000 * a1 - 4.0 * a * cb(a1) - c * a1 - d * b1;
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [a1, -e * i * a1, -a1],
        beta: [b1, -e * i * b1, -b1],
        gamma: [g1, -e * i * g1, -g1],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("c000", c000), ("gamma1", g1)],
    })
}

fn c12_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.p("alpha1")?;
    let a3 = x.p("alpha3")?;
    let b2 = x.p("beta2")?;
    let (d1, d2) = (x.p("d1")?, x.p("d2")?);
    let b000 = x.bg("b000");
    let d3 = sq(d1) / 4.0;
    let c000 = -sq(b2) / 3.0;
    let g1 = 3.0 * a * b000 * a1 - a * cb(a1) - 3.0 * a * a1 * sq(a3) - c * a1 - e * i * d * b2;
    let g2 = 3.0 * e * i * a * b000 * a1
        - e * i * a * cb(a1)
        - 3.0 * e * i * a * a1 * sq(a3)
        - e * i * c * a1
        - d * b2;
    let g3 = 3.0 * a * b000 * a3 - 3.0 * a * sq(a1) * a3 - a * cb(a3) - c * a3;
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [a1, e * i * a1, a3],
        beta: [e * i * b2, b2, Z],
        gamma: [g1, g2, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![
            ("d3", d3),
            ("c000", c000),
            ("gamma1", g1),
            ("gamma2", g2),
            ("gamma3", g3)
        ],
    })
}

fn c12_2(x: &Ctx) -> Res<Raw> {
    // Transcribed literally; flagged as a suspected typo: the cos-paired and
    // cosh-paired groups of the constraint system pin c000 to beta1^2/3 and
    // 4*beta1^2/3 respectively, which cannot both hold.
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let a1 = x.p("alpha1")?;
    let a2 = x.p("alpha2")?;
    let b1 = x.p("beta1")?;
    let (d1, d2) = (x.p("d1")?, x.p("d2")?);
    let b000 = x.bg("b000");
    let d3 = sq(d2) / 4.0;
    let c000 = sq(b1) / 3.0;
    let g1 = 3.0 * a * a1 * sq(a2) - a * cb(a1) + 3.0 * a * b000 * a1 - c * a1 - d * b1;
    let g2 = -a2 * (3.0 * a * sq(a1) - a * sq(a2) - 3.0 * a * b000 + c);
    let g3 = e * (a * cb(a1) - 3.0 * a * a1 * sq(a2) - 3.0 * a * b000 * a1 + c * a1 - d * b1);
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [a1, a2, e * a1],
        beta: [b1, Z, e * b1],
        gamma: [g1, g2, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![
            ("d3", d3),
            ("c000", c000),
            ("gamma1", g1),
            ("gamma2", g2),
            ("gamma3", g3)
        ],
    })
}

fn c12_3(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let a1 = x.p("alpha1")?;
    let b1 = x.p("beta1")?;
    let (d1, d2) = (x.p("d1")?, x.p("d2")?);
    let b000 = x.bg("b000");
    // Transcribed literally; this branch is flagged as a suspected typo
    // (see KNOWN_DEVIATIONS.md): the frequency groups of its own constraint
    // system contradict each other for generic parameters, and no repaired
    // reading found so far passes the residual oracles.
    let d3 = sq(d2) / 4.0;
    let b3 = e * b1;
    let c000 = sq(b3) / 3.0;
    let g1 = a * cb(a1) - 3.0 * a * b000 * a1 + c * a1 - d * b1;
    let g3 = e * (3.0 * a * b000 * a1 - a * cb(a1) - c * a1 - d * b1);
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [a1, Z, e * a1],
        beta: [b1, Z, b3],
        gamma: [g1, Z, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("d3", d3), ("c000", c000), ("gamma1", g1), ("gamma3", g3)],
    })
}

fn c13_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a2 = x.p("alpha2")?;
    let b3 = x.p("beta3")?;
    let d1 = x.p("d1")?;
    let d3 = x.p("d3")?;
    let b000 = x.bg("b000");
    let c000 = sq(b3) / 3.0;
    let g2 = a * cb(a2) + 3.0 * a * b000 * a2 - e * i * d * b3 - c * a2;
    let g3 = e * i * a * cb(a2) + 3.0 * e * i * a * b000 * a2 - e * i * c * a2 - d * b3;
    Ok(Raw {
        amp: [d1, -d1, d3],
        alpha: [Z, a2, e * i * a2],
        beta: [Z, e * i * b3, b3],
        gamma: [Z, g2, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![("d2", -d1), ("c000", c000), ("gamma2", g2), ("gamma3", g3)],
    })
}

fn c14_1(x: &Ctx) -> Res<Raw> {
    let (a, c, d, e) = (x.a, x.c, x.d, x.eps);
    let i = C::i();
    let a1 = x.p("alpha1")?;
    let a2 = x.p("alpha2")?;
    let a3 = x.p("alpha3")?;
    let b1 = x.p("beta1")?;
    let (d1, d2) = (x.p("d1")?, x.p("d2")?);
    let b000 = x.bg("b000");
    let den = e * i * (4.0 * a2 * sq(a3) - 4.0 * sq(a1) * a2) - 8.0 * cb(a1) + 4.0 * sq(a1) * a3
        - 4.0 * a1 * sq(a2)
        + 4.0 * a1 * sq(a3)
        + 4.0 * sq(a2) * a3;
    let den = x.nonzero(den, "d3 denominator")?;
    let d3 = (sq(d1) * sq(a1) * a3 - sq(d2) * sq(a1) * a3 + sq(d1) * a1 * sq(a2)
        - sq(d2) * a1 * sq(a2)
        + sq(d1) * a1 * sq(a3)
        - sq(d2) * a1 * sq(a3)
        + sq(d1) * sq(a2) * a3
        + sq(d2) * sq(a2) * a3
        + 2.0 * sq(d2) * cb(a3)
        + e * i
            * (sq(d1) * sq(a1) * a2 - sq(d2) * sq(a1) * a2
                + 2.0 * sq(d1) * cb(a2)
                + sq(d1) * a2 * sq(a3)
                + sq(d2) * a2 * sq(a3)))
        / den;
    let b3 = b1;
    let c000 = 4.0 * sq(b3) / 3.0;
    let g1 = 1.5 * e * i * (a * sq(a1) * a2 - a * a2 * sq(a3))
        + 1.5 * (a * a1 * sq(a2) - a * sq(a1) * a3 - a * a1 * sq(a3) - a * sq(a2) * a3)
        + 3.0 * a * b000 * a1
        - c * a1
        - d * b1
        - a * cb(a1);
    let g2 = a * cb(a2) - 1.5 * a * sq(a1) * a2 - 1.5 * a * a2 * sq(a3) + 3.0 * a * b000 * a2
        - c * a2
        + 1.5
            * e
            * i
            * (a * sq(a1) * a3 + a * a1 * sq(a2) + a * a1 * sq(a3) + a * sq(a2) * a3
                - 2.0 / 3.0 * d * b1);
    let g3 = 1.5 * (a * sq(a2) * a3 - a * sq(a1) * a3 - a * a1 * sq(a2) - a * a1 * sq(a3))
        - a * cb(a3)
        + 3.0 * a * b000 * a3
        - c * a3
        - d * b1
        + 1.5 * e * i * (a * a2 * sq(a3) - a * sq(a1) * a2);
    Ok(Raw {
        amp: [d1, d2, d3],
        alpha: [a1, a2, a3],
        beta: [b1, e * i * b1, b3],
        gamma: [g1, g2, g3],
        a000: Z,
        b000,
        c000,
        derived: alloc::vec![
            ("d3", d3),
            ("c000", c000),
            ("gamma1", g1),
            ("gamma2", g2),
            ("gamma3", g3)
        ],
    })
}

/// Branches that fail residual verification under every plausible reading of
/// the printed parameter block. Each is documented in `KNOWN_DEVIATIONS.md`
/// with the contradiction its own constraint system produces.
pub(super) const SUSPECTED_TYPOS: &[(u8, u8)] = &[(11, 4), (12, 2), (12, 3)];

macro_rules! case {
    ($id:literal, $branch:literal, $free:expr, $root:expr, $summary:literal, $f:ident) => {
        CaseDef {
            info: CaseInfo {
                case_id: $id,
                branch: $branch,
                free: $free,
                root: $root,
                summary: $summary,
            },
            build: $f,
        }
    };
}

pub(super) fn registry() -> &'static [CaseDef] {
    static CASES: &[CaseDef] = &[
        case!(1, 1, &["alpha1", "beta1", "d3", "b000", "c000"], None,
            "d1 = d2 = 0; kink pair e^{-xi1} + d3 e^{xi1}; a000, gamma1 derived", c01_1),
        case!(2, 1, &["alpha1", "beta1", "d2", "b000", "c000"], None,
            "d1 = d3 = 0, xi3 = 0; w = e^{-xi1} + d2; a000, gamma1 derived", c02_1),
        case!(2, 2, &["alpha1", "alpha3", "beta1", "d2", "b000"], None,
            "d1 = d3 = 0; a000 = 0, c000 = beta1^2/3; xi3 along x,t", c02_2),
        case!(3, 1, &["alpha1", "alpha2", "beta1", "d1", "b000"], None,
            "d2 = d3 = 0; a000 = 0, c000 = beta1^2/3; xi2 along x,t", c03_1),
        case!(3, 2, &["alpha1", "beta2", "d1", "b000"], None,
            "d2 = d3 = 0; beta1 = eps*I*beta2, c000 = -4 beta2^2/3", c03_2),
        case!(4, 1, &["alpha1", "beta3", "d2", "d3", "b000"], None,
            "d1 = 0; xi1 along x,t and xi3 along y,t; c000 = beta3^2/3", c04_1),
        case!(4, 2, &["alpha1", "alpha3", "gamma3", "d2", "d3", "b000"], None,
            "d1 = 0; beta1 = beta3 derived, c000 = 4 beta1^2/3", c04_2),
        case!(4, 3, &["alpha1", "beta1", "d2", "d3", "b000", "c000"], None,
            "d1 = 0; xi3 = eps*xi1; a000 derived", c04_3),
        case!(4, 4, &["alpha1", "alpha3", "gamma3", "d2", "d3", "b000"], None,
            "d1 = 0; beta3 = -beta1 derived, c000 = 4 beta1^2/3", c04_4),
        case!(4, 5, &["beta1", "alpha3", "d2", "d3", "b000"], None,
            "d1 = 0; alpha1 = 0, beta3 = 0; a000 = c000 = 0", c04_5),
        case!(5, 1, &["alpha1", "beta1", "gamma3", "d2", "b000", "c000"], None,
            "d1 = 0, d3 = d2^2/4; xi3 = eps*xi1 direction; a000 derived", c05_1),
        case!(5, 2, &["alpha1", "beta1", "gamma3", "d2", "b000", "c000"], None,
            "d1 = 0, d3 = d2^2/4; a000 = 0; gamma1 = eps*gamma3 - 2 d beta1", c05_2),
        case!(6, 1, &["alpha1", "alpha3", "beta1", "beta3", "gamma3", "d2"], None,
            "d1 = 0; d3 and full background derived from the phase geometry", c06_1),
        case!(6, 2, &["alpha1", "beta1", "beta3", "d2", "b000"], None,
            "d1 = 0, alpha3 = 0; d3 = d2^2 beta3^2 / (2(3 beta1^2 - beta3^2))", c06_2),
        case!(7, 1, &["alpha1", "beta2", "d1", "d3", "b000"], None,
            "d2 = 0; xi1 along x,t and xi2 along y,t; c000 = -beta2^2/3", c07_1),
        case!(7, 2, &["alpha2", "beta1", "d1", "d3", "b000"], None,
            "d2 = 0; xi1 along y,t and xi2 along x,t; c000 = beta1^2/3", c07_2),
        case!(7, 3, &["alpha1", "alpha2", "beta2", "gamma2", "d1", "d3"], None,
            "d2 = 0; beta1 = eps*I*beta2; b000, gamma1 derived (complex)", c07_3),
        case!(7, 4, &["beta2", "gamma2", "d1", "d3", "b000"], Some("A"),
            "d2 = 0; alpha1 = A with A^6 fixed by the amplitudes", c07_4),
        case!(7, 5, &["alpha2", "beta2", "gamma2", "d1", "d3"], None,
            "d2 = 0; xi1 = -eps*I*(xi2 conjugate direction); b000 derived", c07_5),
        case!(7, 6, &["alpha2", "beta2", "gamma2", "c000", "d1", "d3"], None,
            "d2 = 0; xi1 = eps*I*xi2; a000, b000 derived", c07_6),
        case!(7, 7, &["beta2", "gamma2", "d1", "d3", "b000"], Some("B"),
            "d2 = 0; alpha1 = B with B^6 fixed by the amplitudes", c07_7),
        case!(8, 1, &["alpha1", "alpha2", "beta1", "beta2", "gamma2", "d1"], None,
            "d2 = 0; d3 and full background derived from the phase geometry", c08_1),
        case!(8, 2, &["alpha2", "beta2", "gamma2", "d1", "b000", "c000"], None,
            "d2 = 0, d3 = d1^2/4; a000 = 0; complex xi1", c08_2),
        case!(8, 3, &["alpha2", "beta2", "gamma2", "d1", "b000", "c000"], None,
            "d2 = 0, d3 = d1^2/4; a000 derived; complex xi1", c08_3),
        case!(9, 1, &["alpha1", "alpha3", "beta1", "d1", "d2", "b000"], None,
            "d3 = 0; alpha2 = eps*I*alpha3; beta2 = beta3 = 0", c09_1),
        case!(9, 2, &["alpha1", "beta1", "d1", "d2", "b000", "c000"], None,
            "d3 = 0; xi2 = eps*I*xi1, xi3 = eps*xi1; a000 derived", c09_2),
        case!(9, 3, &["alpha1", "beta1", "d1", "d2", "b000"], None,
            "d3 = 0; alpha2 = alpha3 = 0; c000 = 4 beta1^2/3", c09_3),
        case!(10, 1, &["alpha1", "alpha3", "beta1", "d2", "b000"], Some("C"),
            "d3 = 0, d1 = d2*C with C^2 = (alpha1+2 alpha3)(alpha1-alpha3)/(alpha1(alpha1+alpha3))", c10_1),
        case!(10, 2, &["alpha1", "alpha3", "beta1", "d2", "b000"], Some("C"),
            "d3 = 0, d1 = d2*C with C^2 = (alpha1-2 alpha3)(alpha1+alpha3)/(alpha1(alpha1-alpha3))", c10_2),
        case!(11, 1, &["alpha1", "alpha3", "beta2", "d1", "d2", "d3", "b000"], None,
            "xi1, xi3 along x,t; xi2 along y,t; c000 = -beta2^2/3", c11_1),
        case!(11, 2, &["alpha2", "alpha3", "beta1", "d1", "d2", "d3", "b000"], None,
            "xi1 along y,t; xi2, xi3 along x,t; c000 = 0", c11_2),
        case!(11, 3, &["alpha3", "beta2", "d1", "d2", "d3", "b000"], None,
            "beta1 = eps*I*beta2; xi3 along x,t; c000 = -beta2^2/3", c11_3),
        case!(11, 4, &["alpha2", "beta3", "d1", "d2", "d3", "b000"], None,
            "xi1 = 0; xi3 = eps*I*(xi2 rotated); c000 = -beta3^2/3", c11_4),
        case!(11, 5, &["alpha2", "beta1", "d1", "d2", "d3", "b000"], None,
            "xi3 = eps*(y-part of xi1); xi2 along x,t; c000 = beta1^2/3", c11_5),
        case!(11, 6, &["alpha1", "beta3", "d1", "d2", "d3", "b000"], None,
            "xi1 along x,t; beta2 = eps*I*beta3; c000 = beta3^2/3", c11_6),
        case!(11, 7, &["alpha1", "alpha2", "beta3", "d1", "d2", "d3", "b000"], None,
            "xi1, xi2 along x,t; xi3 along y,t; c000 = beta3^2/3", c11_7),
        case!(11, 8, &["alpha1", "beta1", "d1", "d2", "d3", "b000"], None,
            "all three phases share direction; gamma1 = 3a b000 alpha1 - 4a alpha1^3 - c alpha1 - d beta1", c11_8),
        case!(11, 9, &["alpha1", "beta1", "d1", "d2", "d3", "b000"], None,
            "mirrored variant of branch 8 (xi3 = -xi1 direction)", c11_9),
        case!(12, 1, &["alpha1", "alpha3", "beta2", "d1", "d2", "b000"], None,
            "d3 = d1^2/4; alpha2 = eps*I*alpha1, beta1 = eps*I*beta2", c12_1),
        case!(12, 2, &["alpha1", "alpha2", "beta1", "d1", "d2", "b000"], None,
            "d3 = d2^2/4; xi3 = eps*(xi1 direction); c000 = beta1^2/3", c12_2),
        case!(12, 3, &["alpha1", "beta1", "d1", "d2", "b000"], None,
            "d3 = d2^2/4, xi2 = 0 (d1 becomes a constant term)", c12_3),
        case!(13, 1, &["alpha2", "beta3", "d1", "d3", "b000"], None,
            "d2 = -d1, xi1 = 0; cos and cosh terms cancel pairwise", c13_1),
        case!(14, 1, &["alpha1", "alpha2", "alpha3", "beta1", "d1", "d2", "b000"], None,
            "fully coupled: d3 rational in the alphas, all gammas carry eps*I parts", c14_1),
    ];
    CASES
}
