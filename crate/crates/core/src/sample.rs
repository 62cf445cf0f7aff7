//! Deterministic low-discrepancy sample points.
//!
//! Residual checks evaluate equations on a scattered point set. An additive
//! Kronecker sequence (the R2 sequence, based on the plastic number) gives
//! well-spread points with no RNG dependency; the seed shifts the sequence so
//! reports are reproducible run to run and distinguishable seed to seed.

use alloc::vec::Vec;

use crate::wave::Point;

// Fractional parts of the inverse powers of the plastic number
// g = 1.2207440846..., the 3D generalization of the golden ratio.
const R2_ALPHA: [f64; 3] = [
    0.819_172_513_396_164_5,
    0.671_043_606_703_789_2,
    0.549_700_477_901_936,
];

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn unit(bits: u64) -> f64 {
    (bits >> 11) as f64 / (1u64 << 53) as f64
}

/// `count` points spread over the box `[lo, hi]^3`, deterministic in `seed`.
pub fn sample_box(seed: u64, count: usize, lo: f64, hi: f64) -> Vec<Point> {
    let mut state = seed ^ 0xa076_1d64_78bd_642f;
    let mut frac = [
        unit(splitmix64(&mut state)),
        unit(splitmix64(&mut state)),
        unit(splitmix64(&mut state)),
    ];
    let span = hi - lo;
    let mut points = Vec::with_capacity(count);
    for _ in 0..count {
        for (f, step) in frac.iter_mut().zip(R2_ALPHA) {
            *f += step;
            if *f >= 1.0 {
                *f -= 1.0;
            }
        }
        points.push(Point::new(
            lo + span * frac[0],
            lo + span * frac[1],
            lo + span * frac[2],
        ));
    }
    points
}

/// Default point set for residual verification: 50 points in `[-5, 5]^3`.
pub fn default_points(seed: u64) -> Vec<Point> {
    sample_box(seed, 50, -5.0, 5.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_in_seed() {
        assert_eq!(sample_box(7, 20, -5.0, 5.0), sample_box(7, 20, -5.0, 5.0));
        assert_ne!(sample_box(7, 20, -5.0, 5.0), sample_box(8, 20, -5.0, 5.0));
    }

    #[test]
    fn points_stay_in_box() {
        for p in sample_box(123, 500, -5.0, 5.0) {
            for v in [p.x, p.y, p.t] {
                assert!((-5.0..=5.0).contains(&v));
            }
        }
    }

    #[test]
    fn coordinates_spread_over_the_box() {
        let pts = sample_box(1, 200, 0.0, 1.0);
        let mean_x = pts.iter().map(|p| p.x).sum::<f64>() / 200.0;
        let mean_y = pts.iter().map(|p| p.y).sum::<f64>() / 200.0;
        assert!((mean_x - 0.5).abs() < 0.1, "mean x {mean_x}");
        assert!((mean_y - 0.5).abs() < 0.1, "mean y {mean_y}");
    }
}
