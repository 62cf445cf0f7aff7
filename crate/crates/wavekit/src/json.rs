//! JSON wire formats.
//!
//! Complex numbers travel as `[re, im]` pairs. The tau-function format is the
//! interchange format used by scenario files:
//!
//! ```json
//! {"constant": [1.0, 0.0],
//!  "terms": [{"coef": [1.0, 0.0], "kind": "exp",
//!             "alpha": [1.0, 0.0], "beta": [0.5, 0.0],
//!             "gamma": [-0.25, 0.0], "delta": [0.0, 0.0]}]}
//! ```

use serde::{Deserialize, Serialize};
use wavekit_core::soliton::{Background, EquationCoefficients, SolitonFamily, SolitonSpec};
use wavekit_core::threewave::ThreeWaveSpec;
use wavekit_core::wave::{LinearPhase, Point, TauFunction, WaveKind, WaveTerm};
use wavekit_core::{Complex, ResidualReport};

pub type ComplexPair = [f64; 2];

pub fn to_pair(z: Complex) -> ComplexPair {
    [z.re, z.im]
}

pub fn from_pair(p: ComplexPair) -> Complex {
    Complex::new(p[0], p[1])
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EquationCoefficientsJson {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl From<EquationCoefficients> for EquationCoefficientsJson {
    fn from(e: EquationCoefficients) -> Self {
        EquationCoefficientsJson {
            a: e.a,
            b: e.b,
            c: e.c,
            d: e.d,
        }
    }
}

impl From<EquationCoefficientsJson> for EquationCoefficients {
    fn from(e: EquationCoefficientsJson) -> Self {
        EquationCoefficients::new(e.a, e.b, e.c, e.d)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BackgroundJson {
    pub a000: ComplexPair,
    pub b000: ComplexPair,
    pub c000: ComplexPair,
}

impl From<Background> for BackgroundJson {
    fn from(b: Background) -> Self {
        BackgroundJson {
            a000: to_pair(b.a000),
            b000: to_pair(b.b000),
            c000: to_pair(b.c000),
        }
    }
}

impl From<BackgroundJson> for Background {
    fn from(b: BackgroundJson) -> Self {
        Background::new(from_pair(b.a000), from_pair(b.b000), from_pair(b.c000))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WaveTermJson {
    pub coef: ComplexPair,
    pub kind: String,
    pub alpha: ComplexPair,
    pub beta: ComplexPair,
    pub gamma: ComplexPair,
    pub delta: ComplexPair,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TauFunctionJson {
    pub constant: ComplexPair,
    pub terms: Vec<WaveTermJson>,
}

fn kind_name(kind: WaveKind) -> &'static str {
    match kind {
        WaveKind::Exp => "exp",
        WaveKind::Cos => "cos",
        WaveKind::Sin => "sin",
        WaveKind::Cosh => "cosh",
        WaveKind::Sinh => "sinh",
    }
}

fn kind_from_name(name: &str) -> Result<WaveKind, String> {
    match name {
        "exp" => Ok(WaveKind::Exp),
        "cos" => Ok(WaveKind::Cos),
        "sin" => Ok(WaveKind::Sin),
        "cosh" => Ok(WaveKind::Cosh),
        "sinh" => Ok(WaveKind::Sinh),
        other => Err(format!("unknown wave kind '{other}'")),
    }
}

impl From<&TauFunction> for TauFunctionJson {
    fn from(tau: &TauFunction) -> Self {
        TauFunctionJson {
            constant: to_pair(tau.constant),
            terms: tau
                .terms
                .iter()
                .map(|t| WaveTermJson {
                    coef: to_pair(t.coefficient),
                    kind: kind_name(t.kind).to_string(),
                    alpha: to_pair(t.phase.alpha),
                    beta: to_pair(t.phase.beta),
                    gamma: to_pair(t.phase.gamma),
                    delta: to_pair(t.phase.delta),
                })
                .collect(),
        }
    }
}

impl TryFrom<&TauFunctionJson> for TauFunction {
    type Error = String;

    fn try_from(json: &TauFunctionJson) -> Result<Self, String> {
        let terms = json
            .terms
            .iter()
            .map(|t| {
                Ok(WaveTerm::new(
                    from_pair(t.coef),
                    kind_from_name(&t.kind)?,
                    LinearPhase::with_offset(
                        from_pair(t.alpha),
                        from_pair(t.beta),
                        from_pair(t.gamma),
                        from_pair(t.delta),
                    ),
                ))
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(TauFunction::new(from_pair(json.constant), terms))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SolitonSpecJson {
    pub family: String,
    pub eq: EquationCoefficientsJson,
    pub background: BackgroundJson,
    #[serde(rename = "P")]
    pub wavenumbers: Vec<ComplexPair>,
}

impl From<&SolitonSpec> for SolitonSpecJson {
    fn from(spec: &SolitonSpec) -> Self {
        SolitonSpecJson {
            family: match spec.family() {
                SolitonFamily::A => "A".to_string(),
                SolitonFamily::B => "B".to_string(),
            },
            eq: (*spec.coefficients()).into(),
            background: (*spec.background()).into(),
            wavenumbers: spec.wavenumbers().iter().map(|&p| to_pair(p)).collect(),
        }
    }
}

impl TryFrom<&SolitonSpecJson> for SolitonSpec {
    type Error = String;

    fn try_from(json: &SolitonSpecJson) -> Result<Self, String> {
        let family = match json.family.as_str() {
            "A" => SolitonFamily::A,
            "B" => SolitonFamily::B,
            other => return Err(format!("unknown soliton family '{other}'")),
        };
        SolitonSpec::new(
            family,
            json.eq.clone().into(),
            json.background.clone().into(),
            json.wavenumbers.iter().map(|&p| from_pair(p)).collect(),
        )
        .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PhaseJson {
    pub alpha: ComplexPair,
    pub beta: ComplexPair,
    pub gamma: ComplexPair,
    pub delta: ComplexPair,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct NamedValueJson {
    pub name: String,
    pub value: ComplexPair,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ThreeWaveSpecJson {
    pub case_id: u8,
    pub branch: u8,
    pub epsilon: i8,
    pub eq: EquationCoefficientsJson,
    pub background: BackgroundJson,
    pub free: Vec<NamedValueJson>,
    pub derived: Vec<NamedValueJson>,
    pub amplitudes: [ComplexPair; 3],
    pub phases: [PhaseJson; 3],
}

impl From<&ThreeWaveSpec> for ThreeWaveSpecJson {
    fn from(spec: &ThreeWaveSpec) -> Self {
        let phase = |p: &LinearPhase| PhaseJson {
            alpha: to_pair(p.alpha),
            beta: to_pair(p.beta),
            gamma: to_pair(p.gamma),
            delta: to_pair(p.delta),
        };
        ThreeWaveSpecJson {
            case_id: spec.case_id,
            branch: spec.branch,
            epsilon: spec.epsilon,
            eq: spec.eqc.into(),
            background: spec.background.into(),
            free: spec
                .free
                .iter()
                .map(|(n, v)| NamedValueJson {
                    name: n.clone(),
                    value: to_pair(*v),
                })
                .collect(),
            derived: spec
                .derived
                .iter()
                .map(|(n, v)| NamedValueJson {
                    name: n.clone(),
                    value: to_pair(*v),
                })
                .collect(),
            amplitudes: [
                to_pair(spec.amplitudes[0]),
                to_pair(spec.amplitudes[1]),
                to_pair(spec.amplitudes[2]),
            ],
            phases: [
                phase(&spec.phases[0]),
                phase(&spec.phases[1]),
                phase(&spec.phases[2]),
            ],
        }
    }
}

impl From<&ThreeWaveSpecJson> for ThreeWaveSpec {
    fn from(json: &ThreeWaveSpecJson) -> Self {
        let phase = |p: &PhaseJson| {
            LinearPhase::with_offset(
                from_pair(p.alpha),
                from_pair(p.beta),
                from_pair(p.gamma),
                from_pair(p.delta),
            )
        };
        ThreeWaveSpec {
            case_id: json.case_id,
            branch: json.branch,
            epsilon: json.epsilon,
            eqc: json.eq.clone().into(),
            background: json.background.clone().into(),
            free: json
                .free
                .iter()
                .map(|nv| (nv.name.clone(), from_pair(nv.value)))
                .collect(),
            derived: json
                .derived
                .iter()
                .map(|nv| (nv.name.clone(), from_pair(nv.value)))
                .collect(),
            amplitudes: [
                from_pair(json.amplitudes[0]),
                from_pair(json.amplitudes[1]),
                from_pair(json.amplitudes[2]),
            ],
            phases: [
                phase(&json.phases[0]),
                phase(&json.phases[1]),
                phase(&json.phases[2]),
            ],
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ResidualReportJson {
    pub equation: String,
    pub max_abs: f64,
    pub max_rel: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub worst_point: [f64; 3],
    pub skipped: usize,
}

impl From<&ResidualReport> for ResidualReportJson {
    fn from(r: &ResidualReport) -> Self {
        ResidualReportJson {
            equation: r.equation.clone(),
            max_abs: r.max_abs,
            max_rel: r.max_rel,
            tolerance: r.tolerance,
            pass: r.pass,
            worst_point: r.worst_point.into(),
            skipped: r.singular_skipped,
        }
    }
}

impl From<&ResidualReportJson> for ResidualReport {
    fn from(r: &ResidualReportJson) -> Self {
        ResidualReport {
            equation: r.equation.clone(),
            max_abs: r.max_abs,
            max_rel: r.max_rel,
            tolerance: r.tolerance,
            pass: r.pass,
            worst_point: Point::from(r.worst_point),
            singular_skipped: r.skipped,
        }
    }
}
