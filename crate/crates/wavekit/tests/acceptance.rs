//! Acceptance suite: one test per exit criterion, each printing a pass line
//! with its measured figures (visible with `--nocapture`).

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wavekit::grid::to_csv_string;
use wavekit::scenario::{
    sweep_threewave, verify_scenario, GridSpec, Scenario, Solution, Tolerances,
};
use wavekit_core::balance::solve_balance_exponents;
use wavekit_core::fields::{assemble, pde_residual_with_tolerances, realness_report};
use wavekit_core::hirota::{bilinear_residual_with_tolerance, d_apply, BilinearForm, DMultiIndex};
use wavekit_core::sample;
use wavekit_core::soliton::{Background, EquationCoefficients, SolitonFamily, SolitonSpec};
use wavekit_core::threewave::{self, preset, system, ThreeWavePreset};
use wavekit_core::wave::{LinearPhase, Point, TauFunction, WaveKind, WaveTerm};
use wavekit_core::Complex;

fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

/// O(h^4) central stencil weights by solving the moment system; independent
/// of the library's derivative code.
fn stencil(order: u32) -> Vec<(f64, f64)> {
    if order == 0 {
        return vec![(0.0, 1.0)];
    }
    let m = (order as usize).div_ceil(2) + 1;
    let offsets: Vec<f64> = (-(m as i64)..=(m as i64)).map(|o| o as f64).collect();
    let n = offsets.len();
    let mut a = vec![vec![0.0f64; n + 1]; n];
    for (k, row) in a.iter_mut().enumerate() {
        for (i, &o) in offsets.iter().enumerate() {
            row[i] = o.powi(k as i32);
        }
        row[n] = if k as u32 == order {
            (1..=k).map(|v| v as f64).product()
        } else {
            0.0
        };
    }
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r1, &r2| a[r1][col].abs().total_cmp(&a[r2][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        let lead = a[col][col];
        for item in a[col][col..].iter_mut() {
            *item /= lead;
        }
        let pivot_row: Vec<f64> = a[col][col..].to_vec();
        for (row, dst_row) in a.iter_mut().enumerate() {
            if row != col && dst_row[col] != 0.0 {
                let f = dst_row[col];
                for (dst, src) in dst_row[col..].iter_mut().zip(&pivot_row) {
                    *dst -= f * src;
                }
            }
        }
    }
    offsets
        .iter()
        .zip(a.iter())
        .map(|(&o, row)| (o, row[n]))
        .collect()
}

fn fd_mixed(f: &dyn Fn(Point) -> Complex, order: (u32, u32, u32), p: Point, h: f64) -> Complex {
    let eval = |step: f64| {
        let (i, j, k) = order;
        let (sx, sy, st) = (stencil(i), stencil(j), stencil(k));
        let mut acc = Complex::new(0.0, 0.0);
        for &(ox, wx) in &sx {
            for &(oy, wy) in &sy {
                for &(ot, wt) in &st {
                    acc += wx
                        * wy
                        * wt
                        * f(Point::new(
                            p.x + ox * step,
                            p.y + oy * step,
                            p.t + ot * step,
                        ));
                }
            }
        }
        acc / step.powi((i + j + k) as i32)
    };
    (16.0 * eval(h / 2.0) - eval(h)) / 15.0
}

/// Random tau with coefficients in `[-coef_amp, coef_amp]` and phase
/// coefficients in `[-phase_amp, phase_amp]` (milder phases keep the
/// finite-difference reference away from its rounding floor).
fn random_tau(rng: &mut ChaCha8Rng, n_terms: usize, coef_amp: f64, phase_amp: f64) -> TauFunction {
    let kinds = [
        WaveKind::Exp,
        WaveKind::Cos,
        WaveKind::Sin,
        WaveKind::Cosh,
        WaveKind::Sinh,
    ];
    let cplx = |rng: &mut ChaCha8Rng, amp: f64| {
        Complex::new(rng.gen_range(-amp..amp), rng.gen_range(-amp..amp))
    };
    let terms = (0..n_terms)
        .map(|_| {
            let kind = kinds[rng.gen_range(0..kinds.len())];
            let coef = cplx(rng, coef_amp);
            WaveTerm::new(
                coef,
                kind,
                LinearPhase::with_offset(
                    cplx(rng, phase_amp),
                    cplx(rng, phase_amp),
                    cplx(rng, phase_amp),
                    cplx(rng, phase_amp),
                ),
            )
        })
        .collect();
    let constant = cplx(rng, coef_amp);
    TauFunction::new(constant, terms)
}

/// Random admissible draw. Resamples configurations whose tau passes close
/// to zero on the sample set: the log transform is singular there (family B
/// interaction coefficients can be negative, putting a kink line through the
/// box), and the residual checks presuppose points away from that set.
fn random_soliton(
    rng: &mut ChaCha8Rng,
    family: SolitonFamily,
    n: usize,
    nnv: bool,
    points: &[Point],
) -> SolitonSpec {
    for _ in 0..200 {
        let eqc = if nnv {
            EquationCoefficients::nnv(rng.gen_range(0.4..1.2), rng.gen_range(0.4..1.2))
        } else {
            EquationCoefficients::new(
                rng.gen_range(0.4..1.2),
                rng.gen_range(0.4..1.2),
                rng.gen_range(-0.8..0.8),
                rng.gen_range(0.4..1.2),
            )
        };
        let bg = match family {
            SolitonFamily::A => {
                Background::real(rng.gen_range(-0.8..0.8), rng.gen_range(-0.8..0.8), 0.0)
            }
            SolitonFamily::B => {
                Background::real(0.0, rng.gen_range(-0.8..0.8), rng.gen_range(-0.8..0.8))
            }
        };
        let mut ps: Vec<Complex> = Vec::new();
        while ps.len() < n {
            let p = rng.gen_range(0.3..2.5);
            if ps.iter().all(|q: &Complex| (q.re - p).abs() > 0.1) {
                ps.push(c(p));
            }
        }
        let spec = SolitonSpec::new(family, eqc, bg, ps).expect("admissible draw");
        // Family B's dispersion carries a d^3 denominator: unbounded draws
        // produce |K| in the hundreds of thousands, and no f64 computation
        // holds 1e-8 relative accuracy against phases of that size. The
        // tolerances assume moderate phases, so the draw does too.
        let moderate = (0..n).all(|i| spec.omega(i).norm() < 40.0 && spec.k(i).norm() < 40.0);
        if !moderate {
            continue;
        }
        let tau = spec.tau();
        let near_singular = points.iter().any(|&p| {
            let shift = tau.log_scale(p);
            tau.eval_scaled(p, shift).norm() < 1e-3 * (1.0 + tau.term_scale_scaled(p, shift))
        });
        if !near_singular {
            return spec;
        }
    }
    panic!("no nonsingular draw in 200 tries");
}

fn soliton_criterion_run(nnv: bool, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for family in [SolitonFamily::A, SolitonFamily::B] {
        if nnv && family == SolitonFamily::B {
            continue; // family B requires d != 0 by its own precondition
        }
        for n in 1..=4usize {
            let (bilinear_tol, pde_tol) = if n <= 3 { (1e-9, 1e-8) } else { (1e-7, 1e-7) };
            let draws = if n <= 3 { 20 } else { 6 };
            for draw in 0..draws {
                let points = sample::default_points(seed + draw as u64);
                let spec = random_soliton(&mut rng, family, n, nnv, &points);
                let tau = spec.tau();
                let (main, constraint) =
                    BilinearForm::pair(family, spec.coefficients(), spec.background()).unwrap();
                for form in [&main, &constraint] {
                    let r = bilinear_residual_with_tolerance(form, &tau, &points, bilinear_tol);
                    assert!(
                        r.pass,
                        "{family:?} N={n} draw {draw} {}: rel {:.3e}",
                        r.equation, r.max_rel
                    );
                }
                let ft = assemble(tau, *spec.background());
                let pde =
                    pde_residual_with_tolerances(&ft, spec.coefficients(), &points, pde_tol, 1e-10);
                assert!(
                    pde.all_pass(),
                    "{family:?} N={n} draw {draw}: evolution {:.3e} compat {:.3e}/{:.3e}",
                    pde.evolution.max_rel,
                    pde.compat_x.max_rel,
                    pde.compat_y.max_rel
                );
            }
        }
    }
}

#[test]
fn criterion_01_balance_reproduction() {
    let start = Instant::now();
    let sol = solve_balance_exponents();
    let elapsed = start.elapsed();
    assert_eq!(sol.exponents(), (1, 1, 0, 2, 0, 0, 0, 2, 0));
    assert_eq!(
        (sol.a110, sol.b200, sol.c020, sol.a100, sol.a010, sol.b100, sol.c010),
        (-2.0, -2.0, -2.0, 0.0, 0.0, 0.0, 0.0)
    );
    assert!(sol.balance_equations_hold());
    assert!(elapsed.as_micros() < 1000, "took {elapsed:?}");
    println!("criterion 01 PASS: balance exponents and coefficients exact, {elapsed:?}");
}

#[test]
fn criterion_02_derivative_engine_vs_finite_differences() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20240202);
    let mut orders = Vec::new();
    for i in 0..=4u32 {
        for j in 0..=(4 - i) {
            for k in 0..=(4 - i - j) {
                if i + j + k >= 1 {
                    orders.push((i, j, k));
                }
            }
        }
    }
    let mut worst = 0.0f64;
    for trial in 0..200 {
        let n_terms = rng.gen_range(1..=4);
        let tau = random_tau(&mut rng, n_terms, 2.0, 1.0);
        let p = Point::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let order = orders[rng.gen_range(0..orders.len())];
        let exact = tau.partial(order).unwrap().eval(p);
        // Step chosen per order: total order four divides by h^4, so it
        // needs a larger step to stay above the f64 rounding floor.
        let h = if order.0 + order.1 + order.2 >= 4 {
            4e-2
        } else {
            2e-2
        };
        let fd = fd_mixed(&|q| tau.eval(q), order, p, h);
        let rel = (exact - fd).norm() / (1.0 + exact.norm().max(fd.norm()));
        worst = worst.max(rel);
        assert!(rel < 1e-6, "trial {trial} order {order:?}: rel {rel:.3e}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!("criterion 02 PASS: 200 random taus, orders ≤ 4, worst rel {worst:.3e}, {elapsed:?}");
}

#[test]
fn criterion_03_d_operator_identities() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    // Odd order on identical pair vanishes exactly.
    let w = random_tau(&mut rng, 3, 1.0, 1.0);
    let p = Point::new(0.4, -0.8, 0.3);
    for (m, n, q) in [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (2, 1, 0),
        (1, 1, 1),
        (3, 0, 0),
    ] {
        let v = d_apply(&w, &w, DMultiIndex::new(m, n, q).unwrap(), p);
        assert_eq!(
            v,
            Complex::new(0.0, 0.0),
            "odd order ({m},{n},{q}) gave {v}"
        );
    }
    // Single-exponential gauge property to 1e-12.
    let single = TauFunction::new(
        Complex::new(0.0, 0.0),
        vec![WaveTerm::exp(c(1.2), LinearPhase::real(0.9, -1.4, 0.6))],
    );
    for m in 0..=4u32 {
        for n in 0..=(4 - m) {
            for q in 0..=(4 - m - n) {
                if m + n + q == 0 {
                    continue;
                }
                let v = d_apply(&single, &single, DMultiIndex::new(m, n, q).unwrap(), p);
                let scale = single.eval(p).norm().powi(2);
                assert!(
                    v.norm() <= 1e-12 * (1.0 + scale),
                    "gauge ({m},{n},{q}): {v}"
                );
            }
        }
    }
    // Antisymmetry to machine rounding.
    let f = random_tau(&mut rng, 2, 1.0, 1.0);
    let g = random_tau(&mut rng, 2, 1.0, 1.0);
    for (m, n, q) in [
        (1, 0, 0),
        (2, 0, 0),
        (1, 1, 0),
        (2, 1, 0),
        (1, 1, 1),
        (3, 1, 0),
    ] {
        let idx = DMultiIndex::new(m, n, q).unwrap();
        let fg = d_apply(&f, &g, idx, p);
        let gf = d_apply(&g, &f, idx, p);
        let sign = if (m + n + q) % 2 == 1 { -1.0 } else { 1.0 };
        assert!((fg - sign * gf).norm() <= 1e-11 * (1.0 + fg.norm()));
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("criterion 03 PASS: odd-order zero, gauge ≤ 1e-12, antisymmetry, {elapsed:?}");
}

#[test]
fn criterion_04_soliton_families() {
    let start = Instant::now();
    soliton_criterion_run(false, 404);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!(
        "criterion 04 PASS: families A and B, N ∈ 1..4, 20 draws each (6 for N=4), {elapsed:?}"
    );
}

#[test]
fn criterion_05_three_soliton_existence_condition() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut points = sample::default_points(505);
    points.extend(sample::sample_box(506, 50, -1.5, 1.5));
    for family in [SolitonFamily::A, SolitonFamily::B] {
        let eqc = EquationCoefficients::new(
            rng.gen_range(0.5..1.1),
            rng.gen_range(0.5..1.1),
            rng.gen_range(-0.5..0.5),
            rng.gen_range(0.5..1.1),
        );
        let bg = match family {
            SolitonFamily::A => {
                Background::real(rng.gen_range(-0.6..0.6), rng.gen_range(-0.6..0.6), 0.0)
            }
            SolitonFamily::B => {
                Background::real(0.0, rng.gen_range(-0.6..0.6), rng.gen_range(-0.6..0.6))
            }
        };
        let ps = vec![
            c(rng.gen_range(0.5..0.8)),
            c(rng.gen_range(1.1..1.5)),
            c(rng.gen_range(1.9..2.4)),
        ];
        let spec = SolitonSpec::new(family, eqc, bg, ps).unwrap();
        let (main, constraint) = BilinearForm::pair(family, &eqc, &bg).unwrap();
        // Intact tau passes...
        for form in [&main, &constraint] {
            assert!(bilinear_residual_with_tolerance(form, &spec.tau(), &points, 1e-9).pass);
        }
        // ...and the 1.01-scaled top coefficient is detected above 1e-6.
        let bad = spec.tau_with_scaled_top_coefficient(1.01);
        let worst = [&main, &constraint]
            .iter()
            .map(|f| bilinear_residual_with_tolerance(f, &bad, &points, 1e-9).max_rel)
            .fold(0.0, f64::max);
        assert!(worst > 1e-6, "{family:?}: worst rel {worst:.3e}");
        println!(
            "criterion 05 PASS ({family:?}): perturbed a_123 raises residual to {worst:.3e} > 1e-6"
        );
    }
}

#[test]
fn criterion_06_threewave_sweep() {
    let start = Instant::now();
    let outcome = sweep_threewave(
        606,
        &Tolerances {
            bilinear: 1e-8,
            pde: 1e-7,
            identity: 1e-9,
            system: 1e-8,
        },
    );
    assert_eq!(outcome.reports.len(), 43, "one entry per printed branch");
    let passing = outcome.reports.iter().filter(|r| r.pass).count();
    assert!(
        passing * 100 >= 43 * 80,
        "only {passing}/43 branches pass (need ≥ 80%)"
    );
    // Every non-passing branch is a pre-declared suspect, and both oracles
    // agreed on it (the sweep folds both; disagreement is asserted inside).
    for r in &outcome.reports {
        if !r.pass {
            assert!(
                r.equation.contains("[suspected-typo]"),
                "unflagged failure: {}",
                r.equation
            );
        }
    }
    // Every flagged branch is documented in KNOWN_DEVIATIONS.md.
    let deviations = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../KNOWN_DEVIATIONS.md"),
    )
    .expect("KNOWN_DEVIATIONS.md at the repository root");
    for &(case, branch) in threewave::suspected_typos() {
        let needle = format!("Case {case}, branch {branch}");
        assert!(
            deviations.contains(&needle),
            "KNOWN_DEVIATIONS.md lacks '{needle}'"
        );
    }
    // Oracle agreement, branch by branch.
    let mut rng = ChaCha8Rng::seed_from_u64(607);
    let points = sample::default_points(607);
    for info in threewave::list_cases() {
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
                    .map(|&n| (n.to_string(), c(rng.gen_range(0.45..1.35))))
                    .collect();
                if let Ok(s) =
                    threewave::instantiate(info.case_id, info.branch, epsilon, &eqc, &free)
                {
                    spec = Some(s);
                    break;
                }
            }
            let spec = spec.expect("admissible draw");
            let tau = spec.tau();
            let (main, constraint) =
                BilinearForm::pair(SolitonFamily::A, &spec.eqc, &spec.background).unwrap();
            let bilinear_pass = bilinear_residual_with_tolerance(&main, &tau, &points, 1e-8).pass
                && bilinear_residual_with_tolerance(&constraint, &tau, &points, 1e-8).pass;
            let system_pass =
                system::coefficient_system_residual(&spec.system_parameters(), 1e-8).pass;
            assert_eq!(
                bilinear_pass, system_pass,
                "oracles disagree on case {}.{} eps {epsilon}",
                info.case_id, info.branch
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "criterion 06 PASS: {passing}/43 branches pass, failures all flagged, oracles agree, {elapsed:?}"
    );
}

#[test]
fn criterion_07_presets() {
    let eqc = EquationCoefficients::new(1.0, 1.0, 0.1, 0.4);
    let points = sample::default_points(707);
    for which in ThreeWavePreset::ALL {
        let free: BTreeMap<String, Complex> = match which {
            ThreeWavePreset::TwoSoliton => {
                [("alpha1", 0.8), ("beta3", 0.7), ("d2", 1.2), ("b000", 0.3)]
            }
            ThreeWavePreset::PeriodicSolitary => {
                [("alpha1", 0.8), ("beta2", 0.7), ("d1", 0.5), ("b000", 0.3)]
            }
            ThreeWavePreset::DoublyPeriodic => [
                ("alpha1", 0.8),
                ("alpha3", 0.6),
                ("beta1", 1.0),
                ("d1", 0.5),
            ],
            ThreeWavePreset::KinkPeriodic => [
                ("alpha1", 0.8),
                ("alpha3", 0.6),
                ("beta2", 0.9),
                ("d1", 0.4),
            ],
        }
        .iter()
        .map(|&(k, v)| (k.to_string(), c(v)))
        .collect();
        let mut free = free;
        match which {
            ThreeWavePreset::DoublyPeriodic => {
                free.insert("d2".to_string(), c(0.6));
                free.insert("b000".to_string(), c(0.3));
            }
            ThreeWavePreset::KinkPeriodic => {
                free.insert("d2".to_string(), c(0.6));
                free.insert("b000".to_string(), c(0.3));
            }
            _ => {}
        }
        let spec = preset(which, 1, &eqc, &free).unwrap();
        let tau = spec.tau();
        let (main, constraint) =
            BilinearForm::pair(SolitonFamily::A, &spec.eqc, &spec.background).unwrap();
        for form in [&main, &constraint] {
            let r = bilinear_residual_with_tolerance(form, &tau, &points, 1e-9);
            assert!(
                r.pass,
                "{}: {} rel {:.3e}",
                which.name(),
                r.equation,
                r.max_rel
            );
        }
        let ft = assemble(tau, spec.background);
        let pde = pde_residual_with_tolerances(&ft, &spec.eqc, &points, 1e-8, 1e-10);
        assert!(
            pde.all_pass(),
            "{}: pde {:.3e}",
            which.name(),
            pde.evolution.max_rel
        );
        if which == ThreeWavePreset::DoublyPeriodic {
            let rr = realness_report(&ft, &points);
            assert!(
                rr.max_im_u < 1e-10 && rr.max_im_v < 1e-10 && rr.max_im_omega < 1e-10,
                "doubly periodic not real: {rr:?}"
            );
            println!(
                "criterion 07 PASS (doubly-periodic): real fields, max |Im| = {:.2e}",
                rr.max_im_u.max(rr.max_im_v).max(rr.max_im_omega)
            );
        }
    }
    println!("criterion 07 PASS: all four presets verified");
}

#[test]
fn criterion_08_nnv_reduction() {
    let start = Instant::now();
    soliton_criterion_run(true, 808);
    let elapsed = start.elapsed();
    println!(
        "criterion 08 PASS: c = d = 0 reduction (family A; family B needs d ≠ 0), {elapsed:?}"
    );
}

#[test]
fn criterion_09_field_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    let points = sample::default_points(909);
    // Solitons of both families plus a spread of three-wave branches.
    for family in [SolitonFamily::A, SolitonFamily::B] {
        let spec = random_soliton(&mut rng, family, 3, false, &points);
        let ft = assemble(spec.tau(), *spec.background());
        let pde = pde_residual_with_tolerances(&ft, spec.coefficients(), &points, 1e-8, 1e-10);
        assert!(
            pde.compat_x.pass && pde.compat_y.pass,
            "{family:?}: {:?}",
            pde.compat_x
        );
    }
    for (case, branch) in [(1, 1), (4, 1), (7, 2), (9, 3), (11, 8), (14, 1)] {
        let info = threewave::list_cases()
            .into_iter()
            .find(|i| i.case_id == case && i.branch == branch)
            .unwrap();
        let free: BTreeMap<String, Complex> = info
            .free
            .iter()
            .map(|&n| (n.to_string(), c(rng.gen_range(0.5..1.2))))
            .collect();
        let eqc = EquationCoefficients::new(1.0, 0.8, 0.2, 0.7);
        let spec = threewave::instantiate(case, branch, 1, &eqc, &free).unwrap();
        let ft = assemble(spec.tau(), spec.background);
        let pde = pde_residual_with_tolerances(&ft, &eqc, &points, 1e-7, 1e-10);
        assert!(
            pde.compat_x.pass && pde.compat_y.pass,
            "case {case}.{branch}: compat {:.3e}/{:.3e}",
            pde.compat_x.max_rel,
            pde.compat_y.max_rel
        );
    }
    println!(
        "criterion 09 PASS: u_x = v_y and u_y = ω_x below 1e-10 for every constructed solution"
    );
}

#[test]
fn criterion_10_cli_round_trip_and_determinism() {
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let spec = random_soliton(
        &mut rng,
        SolitonFamily::A,
        2,
        false,
        &sample::default_points(77),
    );
    let scenario = Scenario::new(
        Solution::Soliton(spec),
        GridSpec::default(),
        Tolerances::default(),
        77,
    );

    // Round trip is identity on all fields, and byte-identical on re-save.
    let text = scenario.to_json_string();
    let back = Scenario::from_json_str(&text).unwrap();
    assert_eq!(scenario, back);
    assert_eq!(text, back.to_json_string());

    // Fixed seed ⇒ byte-identical reports and grids.
    let r1 = verify_scenario(&scenario).to_json_string();
    let r2 = verify_scenario(&back).to_json_string();
    assert_eq!(r1, r2);
    let g1 = to_csv_string(&scenario);
    let g2 = to_csv_string(&back);
    assert_eq!(g1, g2);

    // Three-wave scenarios round-trip too (complex parameters included).
    let eqc = EquationCoefficients::new(1.0, 1.1, -0.2, 0.6);
    let free: BTreeMap<String, Complex> =
        [("alpha1", 0.9), ("beta2", 0.8), ("d1", 0.5), ("b000", 0.2)]
            .iter()
            .map(|&(k, v)| (k.to_string(), c(v)))
            .collect();
    let tw = threewave::instantiate(3, 2, -1, &eqc, &free).unwrap();
    let scenario = Scenario::new(
        Solution::ThreeWave(tw),
        GridSpec::default(),
        Tolerances::default(),
        5,
    );
    let text = scenario.to_json_string();
    let back = Scenario::from_json_str(&text).unwrap();
    assert_eq!(scenario, back);
    assert_eq!(text, back.to_json_string());

    println!("criterion 10 PASS: scenario round-trip identity, byte-identical reports and CSV");
}
