//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 I/O error.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wavekit::grid::to_csv_string;
use wavekit::scenario::AxisSpec;
use wavekit::scenario::{
    realness_summary, sweep_threewave, verify_scenario, GridSpec, Scenario, Solution, Tolerances,
};
use wavekit_core::soliton::{Background, EquationCoefficients, SolitonFamily, SolitonSpec};
use wavekit_core::threewave::{self, ThreeWavePreset};
use wavekit_core::Complex;

#[derive(Parser)]
#[command(
    name = "wavekit",
    version,
    about = "Exact GNNV soliton and three-wave solutions with residual verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a solution and write it as a scenario file.
    Build {
        #[command(subcommand)]
        what: BuildCommand,
    },
    /// Run every applicable residual check for a scenario.
    Verify {
        /// Scenario file (optional with --sweep-threewave).
        scenario: Option<PathBuf>,
        /// Write the JSON report array here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Verify every branch of the three-wave catalog instead of a file.
        #[arg(long = "sweep-threewave")]
        sweep_threewave: bool,
    },
    /// Evaluate the fields over the scenario grid and write CSV.
    Grid {
        scenario: PathBuf,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// List the three-wave case catalog and the named presets.
    ListCases,
}

#[derive(Args)]
struct CommonBuild {
    /// Equation coefficients a,b,c,d.
    #[arg(long, default_value = "1,1,0,0", value_name = "a,b,c,d")]
    eq: String,
    /// Scenario seed (sample points and report determinism).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output scenario path.
    #[arg(long, default_value = "scenario.json")]
    out: PathBuf,
    /// Grid x-range as min:max:count.
    #[arg(long, default_value = "-5:5:41")]
    x_range: String,
    /// Grid y-range as min:max:count.
    #[arg(long, default_value = "-5:5:41")]
    y_range: String,
    /// Grid times, comma separated.
    #[arg(long, default_value = "0")]
    times: String,
}

#[derive(Subcommand)]
enum BuildCommand {
    /// N-soliton solution of family A (c000 = 0) or B (a000 = 0).
    Soliton {
        /// Background family: A or B.
        #[arg(long)]
        family: String,
        /// Wavenumbers, comma separated (complex literals like 1.5 or 1+0.5i).
        #[arg(long = "P", value_name = "P1,P2,...")]
        wavenumbers: String,
        /// Background a000 (family A only).
        #[arg(long, default_value = "0")]
        a000: String,
        /// Background b000.
        #[arg(long, default_value = "0")]
        b000: String,
        /// Background c000 (family B only).
        #[arg(long, default_value = "0")]
        c000: String,
        #[command(flatten)]
        common: CommonBuild,
    },
    /// Three-wave solution: one solved branch or a named preset.
    Threewave {
        /// Case number (1..14).
        #[arg(long)]
        case: Option<u8>,
        /// Branch number within the case.
        #[arg(long)]
        branch: Option<u8>,
        /// Sign choice, +1 or -1.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        eps: i8,
        /// Free parameters as name=value pairs, comma separated.
        #[arg(long, value_name = "k=v,...")]
        set: Vec<String>,
        /// Named preset (two-soliton, periodic-solitary, doubly-periodic,
        /// kink-periodic) instead of --case/--branch.
        #[arg(long)]
        preset: Option<String>,
        #[command(flatten)]
        common: CommonBuild,
    },
}

enum CliError {
    Usage(String),
    Verification,
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verification => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses complex literals: `1.5`, `-2`, `3i`, `1+2i`, `0.5-1.5i`, `i`.
fn parse_complex(text: &str) -> Result<Complex, CliError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(usage("empty number"));
    }
    if !s.ends_with('i') {
        let re: f64 = s.parse().map_err(|_| usage(format!("bad number '{s}'")))?;
        return Ok(Complex::new(re, 0.0));
    }
    let body = &s[..s.len() - 1];
    // Split the imaginary part off at the last +/- that is not an exponent
    // sign and not the leading sign.
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        let ch = bytes[idx] as char;
        if (ch == '+' || ch == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
            split = Some(idx);
            break;
        }
    }
    match split {
        Some(idx) => {
            let re: f64 = body[..idx]
                .parse()
                .map_err(|_| usage(format!("bad number '{s}'")))?;
            let im_text = &body[idx..];
            let im: f64 = match im_text {
                "+" => 1.0,
                "-" => -1.0,
                _ => im_text
                    .parse()
                    .map_err(|_| usage(format!("bad number '{s}'")))?,
            };
            Ok(Complex::new(re, im))
        }
        None => {
            let im: f64 = match body {
                "" => 1.0,
                "-" => -1.0,
                _ => body
                    .parse()
                    .map_err(|_| usage(format!("bad number '{s}'")))?,
            };
            Ok(Complex::new(0.0, im))
        }
    }
}

fn parse_eq(text: &str) -> Result<EquationCoefficients, CliError> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("bad --eq '{text}', expected a,b,c,d")))?;
    if parts.len() != 4 {
        return Err(usage(format!(
            "--eq needs four values, got {}",
            parts.len()
        )));
    }
    Ok(EquationCoefficients::new(
        parts[0], parts[1], parts[2], parts[3],
    ))
}

fn parse_axis(text: &str) -> Result<AxisSpec, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(usage(format!("bad range '{text}', expected min:max:count")));
    }
    let min: f64 = parts[0]
        .parse()
        .map_err(|_| usage(format!("bad range '{text}'")))?;
    let max: f64 = parts[1]
        .parse()
        .map_err(|_| usage(format!("bad range '{text}'")))?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| usage(format!("bad range '{text}'")))?;
    if count < 1 || min > max {
        return Err(usage(format!("bad range '{text}'")));
    }
    Ok(AxisSpec { min, max, count })
}

fn parse_grid(common: &CommonBuild) -> Result<GridSpec, CliError> {
    let t: Vec<f64> = common
        .times
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("bad --times '{}'", common.times)))?;
    if t.is_empty() {
        return Err(usage("--times needs at least one value"));
    }
    Ok(GridSpec {
        x: parse_axis(&common.x_range)?,
        y: parse_axis(&common.y_range)?,
        t,
    })
}

fn parse_assignments(items: &[String]) -> Result<BTreeMap<String, Complex>, CliError> {
    let mut map = BTreeMap::new();
    for item in items {
        for pair in item.split(',') {
            let pair = pair.trim();
            if pair.is_empty() {
                continue;
            }
            let (name, value) = pair
                .split_once('=')
                .ok_or_else(|| usage(format!("bad assignment '{pair}', expected name=value")))?;
            map.insert(name.trim().to_string(), parse_complex(value)?);
        }
    }
    Ok(map)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn env_seed() -> Option<u64> {
    std::env::var("WAVEKIT_SEED")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn fmt_c(z: Complex) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn build_soliton(
    family: &str,
    wavenumbers: &str,
    a000: &str,
    b000: &str,
    c000: &str,
    common: &CommonBuild,
) -> Result<(), CliError> {
    let family = match family {
        "A" | "a" => SolitonFamily::A,
        "B" | "b" => SolitonFamily::B,
        other => return Err(usage(format!("unknown family '{other}', expected A or B"))),
    };
    let eqc = parse_eq(&common.eq)?;
    let bg = Background::new(
        parse_complex(a000)?,
        parse_complex(b000)?,
        parse_complex(c000)?,
    );
    let ps: Vec<Complex> = wavenumbers
        .split(',')
        .map(parse_complex)
        .collect::<Result<_, _>>()?;
    let spec = SolitonSpec::new(family, eqc, bg, ps).map_err(|e| usage(e.to_string()))?;

    for i in 0..spec.len() {
        println!(
            "P_{} = {}  Omega_{} = {}  K_{} = {}",
            i + 1,
            fmt_c(spec.wavenumbers()[i]),
            i + 1,
            fmt_c(spec.omega(i)),
            i + 1,
            fmt_c(spec.k(i))
        );
    }
    for i in 0..spec.len() {
        for j in (i + 1)..spec.len() {
            println!("a_{}{} = {}", i + 1, j + 1, fmt_c(spec.shift(i, j)));
        }
    }

    let scenario = Scenario::new(
        Solution::Soliton(spec),
        parse_grid(common)?,
        Tolerances::default(),
        common.seed,
    );
    write_file(&common.out, &scenario.to_json_string())?;
    println!("wrote {}", common.out.display());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn build_threewave(
    case: Option<u8>,
    branch: Option<u8>,
    eps: i8,
    set: &[String],
    preset_name: Option<&str>,
    common: &CommonBuild,
) -> Result<(), CliError> {
    let eqc = parse_eq(&common.eq)?;
    let free = parse_assignments(set)?;
    let spec = match (preset_name, case, branch) {
        (Some(name), None, None) => {
            let which = ThreeWavePreset::from_name(name)
                .ok_or_else(|| usage(format!("unknown preset '{name}'")))?;
            threewave::preset(which, eps, &eqc, &free).map_err(|e| usage(e.to_string()))?
        }
        (None, Some(case), Some(branch)) => threewave::instantiate(case, branch, eps, &eqc, &free)
            .map_err(|e| usage(e.to_string()))?,
        _ => {
            return Err(usage(
                "use either --preset NAME or both --case N and --branch M".to_string(),
            ))
        }
    };

    for (name, value) in &spec.derived {
        println!("{name} = {}", fmt_c(*value));
    }
    println!(
        "background: a000 = {}, b000 = {}, c000 = {}",
        fmt_c(spec.background.a000),
        fmt_c(spec.background.b000),
        fmt_c(spec.background.c000)
    );

    let scenario = Scenario::new(
        Solution::ThreeWave(spec),
        parse_grid(common)?,
        Tolerances::default(),
        common.seed,
    );
    let (_, _, _, real) = realness_summary(&scenario);
    println!("fields real: {real}");
    write_file(&common.out, &scenario.to_json_string())?;
    println!("wrote {}", common.out.display());
    Ok(())
}

fn cmd_verify(
    scenario_path: Option<&Path>,
    out: Option<&Path>,
    sweep: bool,
) -> Result<(), CliError> {
    let outcome = if sweep {
        let seed = env_seed().unwrap_or(0);
        sweep_threewave(seed, &Tolerances::default())
    } else {
        let path = scenario_path
            .ok_or_else(|| usage("verify needs a scenario file or --sweep-threewave"))?;
        let mut scenario = Scenario::from_json_str(&read_file(path)?).map_err(CliError::Usage)?;
        if let Some(seed) = env_seed() {
            scenario.seed = seed;
        }
        verify_scenario(&scenario)
    };
    let report = outcome.to_json_string();
    match out {
        Some(path) => write_file(path, &report)?,
        None => print!("{report}"),
    }
    for r in &outcome.reports {
        eprintln!(
            "{}: {} (rel {:.3e}, tol {:.1e})",
            r.equation,
            if r.pass { "pass" } else { "FAIL" },
            r.max_rel,
            r.tolerance
        );
    }
    if outcome.acceptable() {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

fn cmd_grid(scenario_path: &Path, out: &Path) -> Result<(), CliError> {
    let mut scenario =
        Scenario::from_json_str(&read_file(scenario_path)?).map_err(CliError::Usage)?;
    if let Some(seed) = env_seed() {
        scenario.seed = seed;
    }
    write_file(out, &to_csv_string(&scenario))?;
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_list_cases() {
    println!("case branch  free parameters                                  constraints");
    for info in threewave::list_cases() {
        let mut free = info.free.join(", ");
        if let Some(root) = info.root {
            free.push_str(&format!(" [{root} optional]"));
        }
        println!(
            "{:>4} {:>6}  {:<48} {}",
            info.case_id, info.branch, free, info.summary
        );
    }
    println!();
    println!("presets:");
    for preset in ThreeWavePreset::ALL {
        let (case, branch) = preset.case();
        println!("  {:<18} -> case {case} branch {branch}", preset.name());
    }
    let flagged = threewave::suspected_typos();
    if !flagged.is_empty() {
        println!();
        print!("suspected-typo branches (fail as printed, see KNOWN_DEVIATIONS.md):");
        for (case, branch) in flagged {
            print!(" {case}.{branch}");
        }
        println!();
    }
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Build { what } => match what {
            BuildCommand::Soliton {
                family,
                wavenumbers,
                a000,
                b000,
                c000,
                common,
            } => build_soliton(&family, &wavenumbers, &a000, &b000, &c000, &common),
            BuildCommand::Threewave {
                case,
                branch,
                eps,
                set,
                preset,
                common,
            } => build_threewave(case, branch, eps, &set, preset.as_deref(), &common),
        },
        Command::Verify {
            scenario,
            out,
            sweep_threewave,
        } => cmd_verify(scenario.as_deref(), out.as_deref(), sweep_threewave),
        Command::Grid { scenario, out } => cmd_grid(&scenario, &out),
        Command::ListCases => {
            cmd_list_cases();
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::Verification => eprintln!("verification failed"),
                CliError::Io(msg) => eprintln!("i/o error: {msg}"),
            }
            ExitCode::from(e.code())
        }
    }
}
