use std::fmt;

use rand::RngCore;

use super::checks::CheckReport;
use super::groupoid::{g_multiply, GroupoidElement, Sampler, TwistStructure};
use super::sample;
use super::TwistError;
use crate::bundle::{self, DEFAULT_WINDING_SAMPLES};
use crate::exact_arith::{Angle, BasePoint, Rational};
use crate::freegroup::Word;

/// A circle-valued function on composable pairs of `G`.
pub trait TwoCocycle {
    fn eval(&self, a: &GroupoidElement, b: &GroupoidElement) -> Angle;
    fn name(&self) -> String;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ZeroCocycle;

impl TwoCocycle for ZeroCocycle {
    fn eval(&self, _: &GroupoidElement, _: &GroupoidElement) -> Angle {
        Angle::zero()
    }

    fn name(&self) -> String {
        "zero".into()
    }
}

/// `(alpha, beta) -> coeff * ell_a(alpha) * ell_b(beta)`.
#[derive(Clone, Debug)]
pub struct BilinearCocycle {
    pub coeff: Rational,
}

impl TwoCocycle for BilinearCocycle {
    fn eval(&self, a: &GroupoidElement, b: &GroupoidElement) -> Angle {
        Angle::rational(self.coeff.mul_int(a.word().ell_a() * b.word().ell_b()))
    }

    fn name(&self) -> String {
        format!("{} * ell_a * ell_b", self.coeff)
    }
}

/// `s(a, b) + s(ab, c) = s(a, bc) + s(b, c)` on random composable triples.
pub fn check_cocycle_identity<C: TwoCocycle + ?Sized>(
    c: &C,
    rng: &mut dyn RngCore,
    n: usize,
) -> CheckReport {
    let mut rep = CheckReport::new("cocycle identity");
    for _ in 0..n {
        rep.cases += 1;
        let (a, b, g) = sample::random_composable_arrows(rng, 4);
        let ab = g_multiply(&a, &b).expect("composable by construction");
        let bg = g_multiply(&b, &g).expect("composable by construction");
        let left = &c.eval(&a, &b) + &c.eval(&ab, &g);
        let right = &c.eval(&a, &bg) + &c.eval(&b, &g);
        rep.expect_eq(
            "cocycle identity",
            || format!("{a}, {b}, {g}"),
            &left,
            &right,
        );
    }
    rep
}

/// An element `(gamma, z)` of the cocycle twist `G x_s T`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CocycleElement {
    pub arrow: GroupoidElement,
    pub phase: Angle,
}

impl fmt::Display for CocycleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | {}>", self.arrow, self.phase)
    }
}

/// `G x T` with `(a, s)(b, t) = (ab, s + t + c(a, b))`.
#[derive(Clone, Debug)]
pub struct CocycleTwist<C> {
    cocycle: C,
}

/// Validates the identity on `samples` random triples before building.
pub fn build_cocycle_twist<C: TwoCocycle>(
    c: C,
    rng: &mut dyn RngCore,
    samples: usize,
) -> Result<CocycleTwist<C>, TwistError> {
    let rep = check_cocycle_identity(&c, rng, samples);
    match rep.failures.into_iter().next() {
        Some(f) => Err(TwistError::CocycleIdentityViolated(f.witness)),
        None => Ok(CocycleTwist { cocycle: c }),
    }
}

impl<C: TwoCocycle> CocycleTwist<C> {
    pub fn cocycle(&self) -> &C {
        &self.cocycle
    }

    fn unit_phase(&self, x: &BasePoint) -> Angle {
        let u = GroupoidElement::unit(x.clone());
        self.cocycle.eval(&u, &u)
    }

    /// The continuous section `gamma -> (gamma, 0)`.
    pub fn canonical_section(&self, g: &GroupoidElement) -> CocycleElement {
        CocycleElement {
            arrow: g.clone(),
            phase: Angle::zero(),
        }
    }

    /// Winding of the seam clutching of the canonical section over `G^w`.
    /// The section is global, so the loop is constant.
    pub fn obstruction_certificate(&self, _w: &Word) -> i64 {
        let samples = vec![Angle::zero(); DEFAULT_WINDING_SAMPLES];
        bundle::winding_number(&samples).expect("constant loop")
    }
}

impl<C: TwoCocycle> TwistStructure for CocycleTwist<C> {
    type Unit = BasePoint;
    type Elem = CocycleElement;
    type Arrow = GroupoidElement;

    fn multiply(
        &self,
        a: &CocycleElement,
        b: &CocycleElement,
    ) -> Result<CocycleElement, TwistError> {
        let arrow = g_multiply(&a.arrow, &b.arrow)?;
        let phase = &(&a.phase + &b.phase) + &self.cocycle.eval(&a.arrow, &b.arrow);
        Ok(CocycleElement { arrow, phase })
    }

    fn invert(&self, a: &CocycleElement) -> CocycleElement {
        let inv = super::groupoid::g_invert(&a.arrow);
        let phase =
            &(&-&a.phase - &self.cocycle.eval(&a.arrow, &inv)) - &self.unit_phase(&a.arrow.range());
        CocycleElement { arrow: inv, phase }
    }

    fn range(&self, a: &CocycleElement) -> BasePoint {
        a.arrow.range()
    }

    fn source(&self, a: &CocycleElement) -> BasePoint {
        a.arrow.source().clone()
    }

    fn unit(&self, x: &BasePoint) -> CocycleElement {
        self.iota(x, &Angle::zero())
    }

    fn iota(&self, x: &BasePoint, z: &Angle) -> CocycleElement {
        CocycleElement {
            arrow: GroupoidElement::unit(x.clone()),
            phase: z - &self.unit_phase(x),
        }
    }

    fn fibre_coordinate(&self, a: &CocycleElement) -> Option<(BasePoint, Angle)> {
        if a.arrow.word().is_identity() {
            let x = a.arrow.source().clone();
            let z = &a.phase + &self.unit_phase(&x);
            Some((x, z))
        } else {
            None
        }
    }

    fn pi(&self, a: &CocycleElement) -> GroupoidElement {
        a.arrow.clone()
    }

    fn g_multiply(
        &self,
        a: &GroupoidElement,
        b: &GroupoidElement,
    ) -> Result<GroupoidElement, TwistError> {
        g_multiply(a, b)
    }

    fn g_invert(&self, a: &GroupoidElement) -> GroupoidElement {
        super::groupoid::g_invert(a)
    }

    fn g_range(&self, a: &GroupoidElement) -> BasePoint {
        a.range()
    }

    fn g_source(&self, a: &GroupoidElement) -> BasePoint {
        a.source().clone()
    }

    fn g_unit(&self, x: &BasePoint) -> GroupoidElement {
        GroupoidElement::unit(x.clone())
    }
}

impl<C: TwoCocycle> Sampler for CocycleTwist<C> {
    fn sample_unit(&self, rng: &mut dyn RngCore) -> BasePoint {
        sample::random_base_point(rng)
    }

    fn sample_from(&self, rng: &mut dyn RngCore, source: &BasePoint) -> CocycleElement {
        CocycleElement {
            arrow: GroupoidElement::over(sample::random_word(rng, 4), source.clone()),
            phase: sample::random_angle(rng),
        }
    }
}

/// `s(a, b)` defined by `S(a) S(b) = s(a, b) . S(ab)` for a section `S` of `pi`.
pub struct SectionCocycle<'a, T, F> {
    twist: &'a T,
    section: F,
}

impl<'a, T, F> SectionCocycle<'a, T, F>
where
    T: TwistStructure<Arrow = GroupoidElement>,
    F: Fn(&GroupoidElement) -> T::Elem,
{
    pub fn section(&self, g: &GroupoidElement) -> T::Elem {
        (self.section)(g)
    }
}

impl<'a, T, F> TwoCocycle for SectionCocycle<'a, T, F>
where
    T: TwistStructure<Arrow = GroupoidElement>,
    F: Fn(&GroupoidElement) -> T::Elem,
{
    fn eval(&self, a: &GroupoidElement, b: &GroupoidElement) -> Angle {
        let tw = self.twist;
        let ab = tw
            .g_multiply(a, b)
            .expect("cocycles are evaluated on composable pairs");
        let prod = tw
            .multiply(&(self.section)(a), &(self.section)(b))
            .and_then(|p| tw.multiply(&p, &tw.invert(&(self.section)(&ab))))
            .expect("section values of composable arrows compose");
        tw.fibre_coordinate(&prod)
            .expect("S(a) S(b) S(ab)^-1 lies over a unit")
            .1
    }

    fn name(&self) -> String {
        "section cocycle".into()
    }
}

/// Builds the cocycle of `section` after checking `pi(S(g)) = g` on samples.
pub fn cocycle_from_section<'a, T, F>(
    twist: &'a T,
    section: F,
    rng: &mut dyn RngCore,
    samples: usize,
) -> Result<SectionCocycle<'a, T, F>, TwistError>
where
    T: Sampler<Arrow = GroupoidElement>,
    F: Fn(&GroupoidElement) -> T::Elem,
{
    for _ in 0..samples {
        let x = twist.sample_unit(rng);
        let g = twist.pi(&twist.sample_from(rng, &x));
        let got = twist.pi(&section(&g));
        if got != g {
            return Err(TwistError::NotASection(format!("pi(S({g})) = {got}")));
        }
    }
    Ok(SectionCocycle { twist, section })
}

/// `S'(g) = iota(r(g), f(r(g))) S(g)` with `f(x, y) = x + 2y`.
pub struct CoboundaryShift<'a, T, F> {
    twist: &'a T,
    section: F,
}

impl<'a, T, F> CoboundaryShift<'a, T, F>
where
    T: TwistStructure<Unit = BasePoint, Arrow = GroupoidElement>,
    F: Fn(&GroupoidElement) -> T::Elem,
{
    pub fn new(twist: &'a T, section: F) -> Self {
        CoboundaryShift { twist, section }
    }

    pub fn f(p: &BasePoint) -> Angle {
        &p.x + &Angle::rational(p.y().mul_int(2))
    }

    pub fn apply(&self, g: &GroupoidElement) -> T::Elem {
        let r = g.range();
        self.twist.t_act(&Self::f(&r), &(self.section)(g))
    }
}
