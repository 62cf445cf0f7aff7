//! Property tests for the structural invariants of the wave machinery.

use proptest::prelude::*;
use wavekit_core::hirota::{d_apply, DMultiIndex};
use wavekit_core::wave::{LinearPhase, Point, TauFunction, WaveKind, WaveTerm};
use wavekit_core::Complex;

fn complex_in(amp: f64) -> impl Strategy<Value = Complex> {
    (-amp..amp, -amp..amp).prop_map(|(re, im)| Complex::new(re, im))
}

fn wave_kind() -> impl Strategy<Value = WaveKind> {
    prop_oneof![
        Just(WaveKind::Exp),
        Just(WaveKind::Cos),
        Just(WaveKind::Sin),
        Just(WaveKind::Cosh),
        Just(WaveKind::Sinh),
    ]
}

fn wave_term(amp: f64) -> impl Strategy<Value = WaveTerm> {
    (
        complex_in(amp),
        wave_kind(),
        complex_in(amp),
        complex_in(amp),
        complex_in(amp),
        complex_in(amp),
    )
        .prop_map(|(coef, kind, alpha, beta, gamma, delta)| {
            WaveTerm::new(
                coef,
                kind,
                LinearPhase::with_offset(alpha, beta, gamma, delta),
            )
        })
}

fn tau(max_terms: usize, amp: f64) -> impl Strategy<Value = TauFunction> {
    (
        complex_in(amp),
        proptest::collection::vec(wave_term(amp), 0..=max_terms),
    )
        .prop_map(|(constant, terms)| TauFunction::new(constant, terms))
}

fn point() -> impl Strategy<Value = Point> {
    (-2.0..2.0, -2.0..2.0, -2.0..2.0).prop_map(|(x, y, t)| Point::new(x, y, t))
}

fn order() -> impl Strategy<Value = (u32, u32, u32)> {
    (0u32..=2, 0u32..=2, 0u32..=2)
}

proptest! {
    /// partial(w1 + w2) = partial(w1) + partial(w2), to machine rounding.
    #[test]
    fn partial_is_linear(w1 in tau(3, 1.5), w2 in tau(3, 1.5), o in order(), p in point()) {
        let lhs = w1.plus(&w2).partial(o).unwrap().eval(p);
        let rhs = w1.partial(o).unwrap().eval(p) + w2.partial(o).unwrap().eval(p);
        prop_assert!((lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm().max(rhs.norm())));
    }

    /// Mixed partials commute: ∂y ∂x w = ∂^{(1,1,0)} w pointwise.
    #[test]
    fn mixed_partials_commute(w in tau(4, 1.5), p in point()) {
        let step = w.partial((1, 0, 0)).unwrap().partial((0, 1, 0)).unwrap();
        let direct = w.partial((1, 1, 0)).unwrap();
        let a = step.eval(p);
        let b = direct.eval(p);
        prop_assert!((a - b).norm() <= 1e-10 * (1.0 + a.norm()));
    }

    /// Evaluation in the normalized gauge reproduces the direct value.
    #[test]
    fn scaled_evaluation_consistent(w in tau(4, 1.5), p in point()) {
        let direct = w.eval(p);
        let shift = w.log_scale(p);
        let scaled = w.eval_scaled(p, shift);
        let back = scaled * Complex::new(shift, 0.0).exp();
        prop_assert!((back - direct).norm() <= 1e-10 * (1.0 + direct.norm()));
    }

    /// D-operator antisymmetry: D^idx f·g = (−1)^{|idx|} D^idx g·f.
    #[test]
    fn d_operator_antisymmetry(
        f in tau(3, 1.2),
        g in tau(3, 1.2),
        m in 0u32..=2,
        n in 0u32..=2,
        q in 0u32..=1,
        p in point(),
    ) {
        prop_assume!(m + n + q >= 1);
        let idx = DMultiIndex::new(m, n, q).unwrap();
        let fg = d_apply(&f, &g, idx, p);
        let gf = d_apply(&g, &f, idx, p);
        let sign = if (m + n + q) % 2 == 1 { -1.0 } else { 1.0 };
        prop_assert!((fg - sign * gf).norm() <= 1e-9 * (1.0 + fg.norm()));
    }

    /// Translation covariance: shifting the phases evaluates the original at
    /// the shifted point.
    #[test]
    fn translation_covariance(
        w in tau(4, 1.2),
        p in point(),
        dx in -1.0..1.0,
        dy in -1.0..1.0,
        dt in -1.0..1.0,
    ) {
        let shifted = w.translated(dx, dy, dt);
        let q = Point::new(p.x + dx, p.y + dy, p.t + dt);
        let a = shifted.eval(p);
        let b = w.eval(q);
        prop_assert!((a - b).norm() <= 1e-9 * (1.0 + a.norm()));
    }
}
