//! Shared test support: finite-difference oracles and random generators.
//!
//! The finite-difference machinery here is deliberately independent of the
//! exact-derivative code paths it cross-checks: it only ever calls
//! `TauFunction::eval`.

use rand::Rng;
use wavekit_core::wave::{LinearPhase, Point, TauFunction, WaveKind, WaveTerm};
use wavekit_core::Complex;

/// Central stencil for derivative order `r`, computed by solving the moment
/// system `Σ w_i·o_i^k = k!·δ_{k,r}` over symmetric offsets. Solving rather
/// than hard-coding keeps the oracle free of transcription mistakes.
fn stencil(order: u32) -> Vec<(f64, f64)> {
    if order == 0 {
        return vec![(0.0, 1.0)];
    }
    let m = (order as usize).div_ceil(2) + 1;
    let offsets: Vec<f64> = (-(m as i64)..=(m as i64)).map(|o| o as f64).collect();
    let n = offsets.len();
    // Moment matrix A[k][i] = offsets[i]^k, rhs[k] = k!·δ_{k,order}.
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
    // Gaussian elimination with partial pivoting.
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
                let factor = dst_row[col];
                for (dst, src) in dst_row[col..].iter_mut().zip(&pivot_row) {
                    *dst -= factor * src;
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

/// Mixed central difference of `f` at `p` for derivative order `(i, j, k)`
/// with one step size per axis.
pub fn central_mixed<F>(f: &F, order: (u32, u32, u32), p: Point, h: f64) -> Complex
where
    F: Fn(Point) -> Complex,
{
    let (i, j, k) = order;
    let sx = stencil(i);
    let sy = stencil(j);
    let st = stencil(k);
    let mut acc = Complex::new(0.0, 0.0);
    for &(ox, wx) in &sx {
        for &(oy, wy) in &sy {
            for &(ot, wt) in &st {
                let q = Point::new(p.x + ox * h, p.y + oy * h, p.t + ot * h);
                acc += wx * wy * wt * f(q);
            }
        }
    }
    let scale = h.powi((i + j + k) as i32);
    acc / scale
}

/// One Richardson step on the O(h^4) stencil: O(h^6) accurate.
pub fn fd_mixed_partial<F>(f: &F, order: (u32, u32, u32), p: Point, h: f64) -> Complex
where
    F: Fn(Point) -> Complex,
{
    let coarse = central_mixed(f, order, p, h);
    let fine = central_mixed(f, order, p, h / 2.0);
    (16.0 * fine - coarse) / 15.0
}

/// A random tau function with `n_terms` terms, coefficients and phase
/// coefficients drawn from `[-amp, amp]` (complex), kinds uniform.
pub fn random_tau<R: Rng>(rng: &mut R, n_terms: usize, amp: f64) -> TauFunction {
    let c = move |rng: &mut R| Complex::new(rng.gen_range(-amp..amp), rng.gen_range(-amp..amp));
    let kinds = [
        WaveKind::Exp,
        WaveKind::Cos,
        WaveKind::Sin,
        WaveKind::Cosh,
        WaveKind::Sinh,
    ];
    let terms = (0..n_terms)
        .map(|_| {
            let kind = kinds[rng.gen_range(0..kinds.len())];
            WaveTerm::new(
                c(rng),
                kind,
                LinearPhase::with_offset(c(rng), c(rng), c(rng), c(rng)),
            )
        })
        .collect();
    TauFunction::new(c(rng), terms)
}

/// Relative deviation with a unit guard.
pub fn rel_err(got: Complex, want: Complex) -> f64 {
    (got - want).norm() / (1.0 + got.norm().max(want.norm()))
}
