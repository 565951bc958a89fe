use num_traits::ToPrimitive;

use crate::exact_arith::{angle_to_float, Angle};

const ORBIT_BITS: u32 = 128;

/// Largest circular gap left by the orbit `start + k * rotation`, `0 <= k < n`.
pub fn orbit_max_gap(rotation: &Angle, start: &Angle, n: usize) -> f64 {
    assert!(n > 0, "empty orbit");
    let mut points: Vec<u128> = (0..n as i64)
        .map(|k| {
            let p = start + &rotation.scale(k);
            angle_to_float(&p, ORBIT_BITS)
                .mantissa()
                .to_u128()
                .expect("128-bit mantissa")
        })
        .collect();
    points.sort_unstable();
    let mut gap = 0u128;
    for w in points.windows(2) {
        gap = gap.max(w[1] - w[0]);
    }
    let (lo, hi) = (points[0], points[points.len() - 1]);
    let scale = 2f64.powi(ORBIT_BITS as i32);
    if lo == hi {
        return 1.0;
    }
    // wrap-around gap is 2^128 - (hi - lo)
    let wrap = lo.wrapping_sub(hi);
    gap = gap.max(wrap);
    gap as f64 / scale
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinimalityReport {
    pub iterations: usize,
    pub max_gap: f64,
    pub bound: f64,
    pub passed: bool,
}

/// Checks that the first `n` points of the orbit of `start` leave no gap of
/// `10 / n` or more.
pub fn minimality_report_for(rotation: &Angle, start: &Angle, n: usize) -> MinimalityReport {
    let max_gap = orbit_max_gap(rotation, start, n);
    let bound = 10.0 / n as f64;
    MinimalityReport {
        iterations: n,
        max_gap,
        bound,
        passed: max_gap < bound,
    }
}

/// The orbit of `0` under `sigma`.
pub fn minimality_report(n: usize) -> MinimalityReport {
    minimality_report_for(&Angle::theta_multiple(1), &Angle::zero(), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_rotation_fills_the_circle() {
        let r = minimality_report(10_000);
        assert!(r.passed, "{r:?}");
        // three-gap theorem: gaps are bounded by a small multiple of 1/n
        assert!(r.max_gap < 3.0 / 10_000.0);
    }

    #[test]
    fn rational_rotation_fails() {
        let r = minimality_report_for(&Angle::frac(1, 7), &Angle::zero(), 10_000);
        assert!(!r.passed);
        assert!((r.max_gap - 1.0 / 7.0).abs() < 1e-12);
    }

    #[test]
    fn single_point_orbit() {
        assert_eq!(
            orbit_max_gap(&Angle::theta_multiple(1), &Angle::frac(1, 3), 1),
            1.0
        );
        let gap = orbit_max_gap(&Angle::frac(1, 2), &Angle::zero(), 2);
        assert!((gap - 0.5).abs() < 1e-15);
    }
}
