//! Principal circle bundles `L_n -> T^2` presented by clutching data.
//!
//! `L_n` is the trivial bundle over the cylinder `[0, 1) x T` glued along the
//! seam `x = 0` by `y -> n*y`. Points are stored against the discontinuous
//! set-theoretic section `s(x, y) = (x, y, 0)`, so fibrewise algebra is exact.
//! Continuity is only ever read off the two charts below and their
//! transition function.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::exact_arith::{Angle, BasePoint, Rational};

/// Default number of grid points for winding computations.
pub const DEFAULT_WINDING_SAMPLES: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("points lie in different fibres: {left} vs {right}")]
    BaseMismatch { left: String, right: String },
    #[error("point {point} is not in the overlap of charts {from} and {to}")]
    NotInOverlap {
        from: usize,
        to: usize,
        point: String,
    },
    #[error("point {point} is outside chart {chart}")]
    NotInChart { chart: usize, point: String },
    #[error("consecutive samples {index} and {next} differ by at least 1/4")]
    SamplingTooCoarse { index: usize, next: usize },
}

/// The bundle `L_n`; `n` is its Chern number.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ClutchBundle {
    chern: i64,
}

impl ClutchBundle {
    pub const fn new(chern: i64) -> Self {
        ClutchBundle { chern }
    }

    pub const fn trivial() -> Self {
        ClutchBundle { chern: 0 }
    }

    pub fn chern(&self) -> i64 {
        self.chern
    }

    pub fn conjugate(&self) -> ClutchBundle {
        ClutchBundle { chern: -self.chern }
    }

    /// The reference point of the fibre over `base`.
    pub fn reference_point(&self, base: BasePoint) -> FiberPoint {
        FiberPoint::new(*self, base, Angle::zero())
    }

    /// `transition(from, to, p)` is the `z` with `z * S_from(p) = S_to(p)`.
    pub fn transition(
        &self,
        from: &Chart,
        to: &Chart,
        p: &BasePoint,
    ) -> Result<TransitionValue, BundleError> {
        let not_in_overlap = || BundleError::NotInOverlap {
            from: from.index(),
            to: to.index(),
            point: p.to_string(),
        };
        if !from.contains(&p.x) || !to.contains(&p.x) {
            return Err(not_in_overlap());
        }
        if from.index() == to.index() {
            return Ok(TransitionValue(Angle::zero()));
        }
        let seam = Angle::rational(p.y().mul_int(self.chern));
        let value = if in_seam_strip(&p.x) {
            seam
        } else {
            Angle::zero()
        };
        Ok(TransitionValue(if from.index() == 1 {
            value
        } else {
            -value
        }))
    }

    /// The continuous local section over `chart`.
    pub fn local_section(&self, chart: Chart) -> LocalSection {
        LocalSection {
            bundle: *self,
            chart,
        }
    }
}

impl fmt::Display for ClutchBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.chern)
    }
}

/// A point of `L_n` in canonical coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiberPoint {
    pub bundle: ClutchBundle,
    pub base: BasePoint,
    pub phase: Angle,
}

impl FiberPoint {
    pub fn new(bundle: ClutchBundle, base: BasePoint, phase: Angle) -> Self {
        FiberPoint {
            bundle,
            base,
            phase,
        }
    }

    /// Bundle projection `p`.
    pub fn project(&self) -> &BasePoint {
        &self.base
    }
}

impl fmt::Display for FiberPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}@({} ; {} ; {})",
            self.bundle,
            self.base.x,
            self.base.y(),
            self.phase
        )
    }
}

/// Fibre-preserving free action of `T`.
pub fn t_act(z: &Angle, b: &FiberPoint) -> FiberPoint {
    FiberPoint {
        bundle: b.bundle,
        base: b.base.clone(),
        phase: z + &b.phase,
    }
}

/// `<b1, b2>`: the unique `z` with `z * b2 = b1`.
pub fn pairing(b1: &FiberPoint, b2: &FiberPoint) -> Result<Angle, BundleError> {
    if b1.bundle != b2.bundle || b1.base != b2.base {
        return Err(BundleError::BaseMismatch {
            left: b1.to_string(),
            right: b2.to_string(),
        });
    }
    Ok(&b1.phase - &b2.phase)
}

/// The copy of `b` in the conjugate bundle, where `z * conj(b) = conj(-z * b)`.
pub fn conjugate(b: &FiberPoint) -> FiberPoint {
    FiberPoint {
        bundle: b.bundle.conjugate(),
        base: b.base.clone(),
        phase: -&b.phase,
    }
}

/// One of the two charts covering the x-circle.
///
/// Chart 0 covers `[0, 5/8)`, chart 1 covers `[1/2, 9/8)` (wrapping). The
/// overlaps are the seam strip `[0, 1/8)` and the strip `[1/2, 5/8)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Chart {
    Zero,
    One,
}

impl Chart {
    pub fn index(&self) -> usize {
        match self {
            Chart::Zero => 0,
            Chart::One => 1,
        }
    }

    /// The half-open x-interval `[start, end)`, read mod 1.
    pub fn x_range(&self) -> (Rational, Rational) {
        match self {
            Chart::Zero => (Rational::zero(), Rational::new(5, 8)),
            Chart::One => (Rational::new(1, 2), Rational::new(9, 8)),
        }
    }

    pub fn contains(&self, x: &Angle) -> bool {
        match self {
            Chart::Zero => x.cmp_representative(&Rational::new(5, 8)) == Ordering::Less,
            Chart::One => {
                x.cmp_representative(&Rational::new(1, 2)) != Ordering::Less || in_seam_strip(x)
            }
        }
    }
}

fn in_seam_strip(x: &Angle) -> bool {
    x.cmp_representative(&Rational::new(1, 8)) == Ordering::Less
}

/// A rational circle value attached to a pair of charts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransitionValue(pub Angle);

impl TransitionValue {
    pub fn angle(&self) -> &Angle {
        &self.0
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LocalSection {
    pub bundle: ClutchBundle,
    pub chart: Chart,
}

impl LocalSection {
    /// Chart 0 is the reference section; chart 1 is continuous across the
    /// seam, so on the seam strip it sits at phase `-n*y`.
    pub fn eval(&self, p: &BasePoint) -> Result<FiberPoint, BundleError> {
        if !self.chart.contains(&p.x) {
            return Err(BundleError::NotInChart {
                chart: self.chart.index(),
                point: p.to_string(),
            });
        }
        let phase = match self.chart {
            Chart::One if in_seam_strip(&p.x) => -Angle::rational(p.y().mul_int(self.bundle.chern)),
            _ => Angle::zero(),
        };
        Ok(FiberPoint::new(self.bundle, p.clone(), phase))
    }
}

/// Degree of a sampled closed loop in the circle.
///
/// Each step is lifted to the representative in `[-1/2, 1/2)`; the step from
/// the last sample back to the first closes the loop.
pub fn winding_number(loop_samples: &[Angle]) -> Result<i64, BundleError> {
    let n = loop_samples.len();
    if n < 2 {
        return Ok(0);
    }
    let quarter = Rational::new(1, 4);
    let mut total = Rational::zero();
    for i in 0..n {
        let next = (i + 1) % n;
        let step = &loop_samples[next] - &loop_samples[i];
        if !step.centered_abs_lt(&quarter) {
            return Err(BundleError::SamplingTooCoarse { index: i, next });
        }
        total = total + step.centered_rational_part();
    }
    // theta-coefficients telescope to zero around a closed loop
    debug_assert!(total.is_integer());
    Ok(total.numer().try_into().expect("winding fits in i64"))
}

/// Samples of the seam clutching `y -> transition(1, 0, (1/16, y))` on a grid.
pub fn seam_clutching_samples(bundle: &ClutchBundle, samples: usize) -> Vec<Angle> {
    let seam_x = Angle::frac(1, 16);
    (0..samples)
        .map(|j| {
            let p = BasePoint::new(seam_x.clone(), Rational::new(j as i64, samples as i64));
            bundle
                .transition(&Chart::One, &Chart::Zero, &p)
                .expect("seam point lies in both charts")
                .0
        })
        .collect()
}

/// Winding of the seam clutching, refining the grid until lifting is unique.
pub fn chern_oracle(bundle: &ClutchBundle) -> i64 {
    let mut samples = DEFAULT_WINDING_SAMPLES;
    loop {
        match winding_number(&seam_clutching_samples(bundle, samples)) {
            Ok(n) => return n,
            Err(_) => samples *= 2,
        }
    }
}

/// Sampled evidence that a section is continuous across the seam.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeamCertificate {
    pub samples_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GlobalSection {
    /// The constant-phase section `s(x, y) = (x, y, phase)`.
    Present {
        phase: Angle,
        certificate: SeamCertificate,
    },
    Absent {
        obstruction: i64,
    },
}

impl GlobalSection {
    pub fn eval(&self, bundle: &ClutchBundle, p: &BasePoint) -> Option<FiberPoint> {
        match self {
            GlobalSection::Present { phase, .. } => {
                Some(FiberPoint::new(*bundle, p.clone(), phase.clone()))
            }
            GlobalSection::Absent { .. } => None,
        }
    }
}

pub fn global_section(bundle: &ClutchBundle) -> GlobalSection {
    let obstruction = chern_oracle(bundle);
    if obstruction != 0 {
        return GlobalSection::Absent { obstruction };
    }
    let samples = seam_clutching_samples(bundle, DEFAULT_WINDING_SAMPLES);
    let consistent = samples.iter().all(|t| t.is_zero());
    if consistent {
        GlobalSection::Present {
            phase: Angle::zero(),
            certificate: SeamCertificate {
                samples_checked: samples.len(),
            },
        }
    } else {
        // degree zero but non-constant clutching; not produced by L_n
        GlobalSection::Absent { obstruction: 0 }
    }
}
