//! The two-point twist over `X x {0,1}^2` built from a single line bundle.
//!
//! `G` is `X` times the pair groupoid on `{0, 1}`, so its isotropy is just
//! `G^(0)`. The twist places `X x T` over both units, `L_1` over the arrows
//! `1 -> 0` and the conjugate bundle over `0 -> 1`. Its restriction to the
//! isotropy is trivial, yet the full twist is not, since `L_1` has Chern
//! number 1.

use std::fmt;

use rand::{Rng, RngCore};

use crate::bundle::{self, chern_oracle, ClutchBundle, FiberPoint};
use crate::exact_arith::{Angle, BasePoint};
use crate::twistcore::sample;
use crate::twistcore::{CheckReport, Sampler, TwistError, TwistStructure};

pub const LINE_BUNDLE: ClutchBundle = ClutchBundle::new(1);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KUnit {
    pub point: BasePoint,
    pub index: u8,
}

impl fmt::Display for KUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.point, self.index)
    }
}

/// `(x, (range, source))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KArrow {
    pub point: BasePoint,
    pub range: u8,
    pub source: u8,
}

impl fmt::Display for KArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {} <- {})", self.point, self.range, self.source)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum KElement {
    /// `(x, z)` over the unit `(x, (i, i))`.
    Unit {
        point: BasePoint,
        phase: Angle,
        index: u8,
    },
    /// A point of `L_1`, over `(x, (0, 1))`.
    Arrow01(FiberPoint),
    /// A point of the conjugate bundle, over `(x, (1, 0))`.
    Arrow10(FiberPoint),
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KElement::Unit {
                point,
                phase,
                index,
            } => write!(f, "unit#{index}{point}[{phase}]"),
            KElement::Arrow01(c) => write!(f, "b:{c}"),
            KElement::Arrow10(c) => write!(f, "bbar:{c}"),
        }
    }
}

impl KElement {
    pub fn point(&self) -> &BasePoint {
        match self {
            KElement::Unit { point, .. } => point,
            KElement::Arrow01(c) | KElement::Arrow10(c) => &c.base,
        }
    }
}

pub fn k_range(e: &KElement) -> KUnit {
    let index = match e {
        KElement::Unit { index, .. } => *index,
        KElement::Arrow01(_) => 0,
        KElement::Arrow10(_) => 1,
    };
    KUnit {
        point: e.point().clone(),
        index,
    }
}

pub fn k_source(e: &KElement) -> KUnit {
    let index = match e {
        KElement::Unit { index, .. } => *index,
        KElement::Arrow01(_) => 1,
        KElement::Arrow10(_) => 0,
    };
    KUnit {
        point: e.point().clone(),
        index,
    }
}

/// `<b, c>` for `b` in `L_1` and `c-bar` in the conjugate bundle.
fn inner(b: &FiberPoint, c_bar: &FiberPoint) -> Angle {
    bundle::pairing(b, &bundle::conjugate(c_bar)).expect("same base and bundle")
}

pub fn k_multiply(a: &KElement, b: &KElement) -> Result<KElement, TwistError> {
    if k_source(a) != k_range(b) {
        return Err(TwistError::NotComposable {
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    use KElement::*;
    Ok(match (a, b) {
        (
            Unit {
                point,
                phase,
                index,
            },
            Unit { phase: p2, .. },
        ) => Unit {
            point: point.clone(),
            phase: phase + p2,
            index: *index,
        },
        (Unit { phase, .. }, Arrow01(c)) | (Arrow01(c), Unit { phase, .. }) => {
            Arrow01(bundle::t_act(phase, c))
        }
        (Unit { phase, .. }, Arrow10(c)) | (Arrow10(c), Unit { phase, .. }) => {
            Arrow10(bundle::t_act(phase, c))
        }
        (Arrow01(b), Arrow10(c)) => Unit {
            point: b.base.clone(),
            phase: inner(b, c),
            index: 0,
        },
        (Arrow10(c), Arrow01(b)) => Unit {
            point: b.base.clone(),
            phase: inner(b, c),
            index: 1,
        },
        _ => unreachable!("composability was checked"),
    })
}

pub fn k_invert(a: &KElement) -> KElement {
    match a {
        KElement::Unit {
            point,
            phase,
            index,
        } => KElement::Unit {
            point: point.clone(),
            phase: -phase,
            index: *index,
        },
        KElement::Arrow01(b) => KElement::Arrow10(bundle::conjugate(b)),
        KElement::Arrow10(c) => KElement::Arrow01(bundle::conjugate(c)),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct KumjianTwist;

impl TwistStructure for KumjianTwist {
    type Unit = KUnit;
    type Elem = KElement;
    type Arrow = KArrow;

    fn multiply(&self, a: &KElement, b: &KElement) -> Result<KElement, TwistError> {
        k_multiply(a, b)
    }

    fn invert(&self, a: &KElement) -> KElement {
        k_invert(a)
    }

    fn range(&self, a: &KElement) -> KUnit {
        k_range(a)
    }

    fn source(&self, a: &KElement) -> KUnit {
        k_source(a)
    }

    fn unit(&self, x: &KUnit) -> KElement {
        self.iota(x, &Angle::zero())
    }

    fn iota(&self, x: &KUnit, z: &Angle) -> KElement {
        KElement::Unit {
            point: x.point.clone(),
            phase: z.clone(),
            index: x.index,
        }
    }

    fn fibre_coordinate(&self, a: &KElement) -> Option<(KUnit, Angle)> {
        match a {
            KElement::Unit {
                point,
                phase,
                index,
            } => Some((
                KUnit {
                    point: point.clone(),
                    index: *index,
                },
                phase.clone(),
            )),
            _ => None,
        }
    }

    fn pi(&self, a: &KElement) -> KArrow {
        KArrow {
            point: a.point().clone(),
            range: k_range(a).index,
            source: k_source(a).index,
        }
    }

    fn g_multiply(&self, a: &KArrow, b: &KArrow) -> Result<KArrow, TwistError> {
        if a.point != b.point || a.source != b.range {
            return Err(TwistError::NotComposable {
                left: a.to_string(),
                right: b.to_string(),
            });
        }
        Ok(KArrow {
            point: a.point.clone(),
            range: a.range,
            source: b.source,
        })
    }

    fn g_invert(&self, a: &KArrow) -> KArrow {
        KArrow {
            point: a.point.clone(),
            range: a.source,
            source: a.range,
        }
    }

    fn g_range(&self, a: &KArrow) -> KUnit {
        KUnit {
            point: a.point.clone(),
            index: a.range,
        }
    }

    fn g_source(&self, a: &KArrow) -> KUnit {
        KUnit {
            point: a.point.clone(),
            index: a.source,
        }
    }

    fn g_unit(&self, x: &KUnit) -> KArrow {
        KArrow {
            point: x.point.clone(),
            range: x.index,
            source: x.index,
        }
    }
}

impl Sampler for KumjianTwist {
    fn sample_unit(&self, rng: &mut dyn RngCore) -> KUnit {
        KUnit {
            point: sample::random_base_point(rng),
            index: rng.random_range(0..2),
        }
    }

    fn sample_from(&self, rng: &mut dyn RngCore, source: &KUnit) -> KElement {
        let phase = sample::random_angle(rng);
        let point = source.point.clone();
        if rng.random_bool(0.5) {
            return KElement::Unit {
                point,
                phase,
                index: source.index,
            };
        }
        if source.index == 1 {
            KElement::Arrow01(FiberPoint::new(LINE_BUNDLE, point, phase))
        } else {
            KElement::Arrow10(FiberPoint::new(LINE_BUNDLE.conjugate(), point, phase))
        }
    }
}

/// Chern number of the twist restricted to the arrows `range <- source`.
pub fn k_obstruction_certificate(range: u8, source: u8) -> i64 {
    match (range, source) {
        (0, 1) => chern_oracle(&LINE_BUNDLE),
        (1, 0) => chern_oracle(&LINE_BUNDLE.conjugate()),
        _ => chern_oracle(&ClutchBundle::trivial()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KEffectivenessReport {
    pub checks: CheckReport,
    /// Isotropic arrows found that are not units.
    pub non_unit_isotropy: usize,
    /// Certificate of the twist restricted to the isotropy.
    pub isotropy_certificate: i64,
    /// Certificate over the arrows `0 <- 1`.
    pub full_certificate: i64,
}

impl KEffectivenessReport {
    pub fn passed(&self) -> bool {
        self.checks.passed()
            && self.non_unit_isotropy == 0
            && self.isotropy_certificate == 0
            && self.full_certificate != 0
    }
}

/// Samples arrows to confirm the isotropy is `G^(0)` and that the zero-phase
/// section over it is a continuous multiplicative section.
pub fn k_effectiveness_check(rng: &mut dyn RngCore, n: usize) -> KEffectivenessReport {
    let tw = KumjianTwist;
    let mut checks = CheckReport::new("kumjian effectiveness");
    let mut non_unit_isotropy = 0;
    for _ in 0..n {
        checks.cases += 1;
        let x = tw.sample_unit(rng);
        let e = tw.sample_from(rng, &x);
        let g = tw.pi(&e);
        if g.range == g.source && g != tw.g_unit(&tw.g_source(&g)) {
            non_unit_isotropy += 1;
        }
        // s(x, i) = (x, 0, i) is multiplicative on the isotropy
        let s = tw.unit(&x);
        let ss = tw.multiply(&s, &s);
        if ss.as_ref() != Ok(&s) {
            checks.fail(
                "zero section multiplicative",
                x.to_string(),
                s.to_string(),
                format!("{ss:?}"),
            );
        }
        checks.expect_eq(
            "zero section lifts",
            || x.to_string(),
            &tw.g_unit(&x),
            &tw.pi(&s),
        );
    }
    KEffectivenessReport {
        checks,
        non_unit_isotropy,
        isotropy_certificate: k_obstruction_certificate(0, 0),
        full_certificate: k_obstruction_certificate(0, 1),
    }
}
