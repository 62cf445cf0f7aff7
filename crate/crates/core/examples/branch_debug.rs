//! Development diagnostic: per-equation residual dump for three-wave branches.
//!
//! Usage: cargo run -p wavekit-core --example branch_debug [case] [branch]

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wavekit_core::hirota::{bilinear_residual_with_tolerance, BilinearForm};
use wavekit_core::sample;
use wavekit_core::soliton::{EquationCoefficients, SolitonFamily};
use wavekit_core::threewave::{instantiate, list_cases, system};
use wavekit_core::Complex;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let filter_case: Option<u8> = args.get(1).and_then(|s| s.parse().ok());
    let filter_branch: Option<u8> = args.get(2).and_then(|s| s.parse().ok());

    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let points = sample::default_points(17);

    for info in list_cases() {
        if filter_case.is_some_and(|c| c != info.case_id) {
            continue;
        }
        if filter_branch.is_some_and(|b| b != info.branch) {
            continue;
        }
        for epsilon in [1i8, -1] {
            let mut spec = None;
            for _ in 0..50 {
                let eqc = EquationCoefficients::new(
                    rng.gen_range(0.5..1.2),
                    rng.gen_range(0.5..1.2),
                    rng.gen_range(-0.6..0.6),
                    rng.gen_range(0.5..1.2),
                );
                let free: BTreeMap<String, Complex> = info
                    .free
                    .iter()
                    .map(|&n| {
                        (
                            String::from(n),
                            Complex::new(rng.gen_range(0.45..1.35), 0.0),
                        )
                    })
                    .collect();
                match instantiate(info.case_id, info.branch, epsilon, &eqc, &free) {
                    Ok(s) => {
                        spec = Some(s);
                        break;
                    }
                    Err(_) => continue,
                }
            }
            let Some(spec) = spec else {
                println!(
                    "case {}.{} eps {epsilon}: NO DRAW",
                    info.case_id, info.branch
                );
                continue;
            };
            let tau = spec.tau();
            let (main, constraint) =
                BilinearForm::pair(SolitonFamily::A, &spec.eqc, &spec.background).unwrap();
            let rm = bilinear_residual_with_tolerance(&main, &tau, &points, 1e-8);
            let ra = bilinear_residual_with_tolerance(&constraint, &tau, &points, 1e-8);
            println!(
                "case {}.{} eps {epsilon}: bilinear main {:.2e} aux {:.2e}",
                info.case_id, info.branch, rm.max_rel, ra.max_rel
            );
            for eq in system::equation_residuals(&spec.system_parameters()) {
                if eq.rel > 1e-9 {
                    println!("    {}: rel {:.3e}", eq.name, eq.rel);
                }
            }
        }
    }
}
