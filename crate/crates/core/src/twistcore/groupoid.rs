use std::fmt;
use std::sync::Arc;

use rand::{Rng, RngCore};

use super::classes::{bar, t_act_class, ClassRep};
use super::letters::alpha;
use super::psi::psi;
use super::sample;
use super::TwistError;
use crate::exact_arith::{Angle, BasePoint};
use crate::freegroup::Word;

/// A point of `E`; its word is the grading.
pub type TwistElement = ClassRep;

/// An arrow `(alpha_w(x), w, x)` of the transformation groupoid.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupoidElement {
    word: Word,
    source: BasePoint,
}

impl GroupoidElement {
    pub fn over(word: Word, source: BasePoint) -> GroupoidElement {
        GroupoidElement { word, source }
    }

    pub fn from_parts(
        range: BasePoint,
        word: Word,
        source: BasePoint,
    ) -> Result<GroupoidElement, TwistError> {
        let g = GroupoidElement { word, source };
        if g.range() != range {
            return Err(TwistError::InvalidArrow(format!(
                "({range}, {}, {})",
                g.word, g.source
            )));
        }
        Ok(g)
    }

    pub fn unit(x: BasePoint) -> GroupoidElement {
        GroupoidElement::over(Word::identity(), x)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn source(&self) -> &BasePoint {
        &self.source
    }

    pub fn range(&self) -> BasePoint {
        alpha(&self.word, &self.source)
    }
}

impl fmt::Display for GroupoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.range(), self.word, self.source)
    }
}

pub fn g_multiply(a: &GroupoidElement, b: &GroupoidElement) -> Result<GroupoidElement, TwistError> {
    if a.source != b.range() {
        return Err(TwistError::NotComposable {
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    Ok(GroupoidElement::over(
        a.word.multiply(&b.word),
        b.source.clone(),
    ))
}

pub fn g_invert(a: &GroupoidElement) -> GroupoidElement {
    GroupoidElement::over(a.word.invert(), a.range())
}

pub fn g_range(a: &GroupoidElement) -> BasePoint {
    a.range()
}

pub fn g_source(a: &GroupoidElement) -> BasePoint {
    a.source.clone()
}

pub fn e_multiply(a: &TwistElement, b: &TwistElement) -> Result<TwistElement, TwistError> {
    psi(a, b)
}

pub fn e_invert(a: &TwistElement) -> TwistElement {
    bar(a)
}

/// `r(e) = alpha_w(p^w(e))`, as a point of `E^(0)`.
pub fn e_range(a: &TwistElement) -> TwistElement {
    ClassRep::unit(alpha(a.word(), a.base()))
}

pub fn e_source(a: &TwistElement) -> TwistElement {
    ClassRep::unit(a.base().clone())
}

pub fn iota(x: &BasePoint, z: &Angle) -> TwistElement {
    ClassRep::new(Word::identity(), x.clone(), z.clone())
}

pub fn pi(a: &TwistElement) -> GroupoidElement {
    GroupoidElement::over(a.word().clone(), a.base().clone())
}

pub fn t_act_elem(z: &Angle, a: &TwistElement) -> TwistElement {
    t_act_class(z, a)
}

/// The operations shared by every twist `T x G^(0) -> E -> G` in this crate.
pub trait TwistStructure {
    type Unit: Clone + PartialEq + fmt::Debug + fmt::Display;
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;
    type Arrow: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, TwistError>;
    fn invert(&self, a: &Self::Elem) -> Self::Elem;
    fn range(&self, a: &Self::Elem) -> Self::Unit;
    fn source(&self, a: &Self::Elem) -> Self::Unit;
    fn unit(&self, x: &Self::Unit) -> Self::Elem;
    fn iota(&self, x: &Self::Unit, z: &Angle) -> Self::Elem;
    /// `Some((x, z))` exactly when `a = iota(x, z)`.
    fn fibre_coordinate(&self, a: &Self::Elem) -> Option<(Self::Unit, Angle)>;
    fn pi(&self, a: &Self::Elem) -> Self::Arrow;

    fn g_multiply(&self, a: &Self::Arrow, b: &Self::Arrow) -> Result<Self::Arrow, TwistError>;
    fn g_invert(&self, a: &Self::Arrow) -> Self::Arrow;
    fn g_range(&self, a: &Self::Arrow) -> Self::Unit;
    fn g_source(&self, a: &Self::Arrow) -> Self::Unit;
    fn g_unit(&self, x: &Self::Unit) -> Self::Arrow;

    fn t_act(&self, z: &Angle, a: &Self::Elem) -> Self::Elem {
        self.multiply(&self.iota(&self.range(a), z), a)
            .expect("iota(r(e), z) is composable with e")
    }
}

pub trait Sampler: TwistStructure {
    fn sample_unit(&self, rng: &mut dyn RngCore) -> Self::Unit;
    /// A random element with the given source.
    fn sample_from(&self, rng: &mut dyn RngCore, source: &Self::Unit) -> Self::Elem;

    fn sample_angle(&self, rng: &mut dyn RngCore) -> Angle {
        sample::random_angle(rng)
    }
}

/// Which gradings a twist keeps.
#[derive(Clone)]
pub enum WordFilter {
    All,
    /// Words with `ell_a(w) = 0`.
    KernelEllA,
    /// Only the empty word.
    UnitsOnly,
    Custom {
        name: String,
        accepts: Arc<dyn Fn(&Word) -> bool + Send + Sync>,
    },
}

impl WordFilter {
    pub fn custom(name: &str, f: impl Fn(&Word) -> bool + Send + Sync + 'static) -> WordFilter {
        WordFilter::Custom {
            name: name.to_string(),
            accepts: Arc::new(f),
        }
    }

    pub fn accepts(&self, w: &Word) -> bool {
        match self {
            WordFilter::All => true,
            WordFilter::KernelEllA => w.ell_a() == 0,
            WordFilter::UnitsOnly => w.is_identity(),
            WordFilter::Custom { accepts, .. } => accepts(w),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            WordFilter::All => "all",
            WordFilter::KernelEllA => "ker ell_a",
            WordFilter::UnitsOnly => "units",
            WordFilter::Custom { name, .. } => name,
        }
    }
}

impl fmt::Debug for WordFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WordFilter({})", self.name())
    }
}

/// The twist `E -> G`, or its restriction to the gradings a filter accepts.
#[derive(Clone, Debug)]
pub struct FreeGroupTwist {
    filter: WordFilter,
    by_length: Vec<Vec<Word>>,
}

impl FreeGroupTwist {
    pub const SAMPLE_WORD_LEN: usize = 4;

    pub fn full() -> FreeGroupTwist {
        FreeGroupTwist::with_filter(WordFilter::All)
    }

    pub(crate) fn with_filter(filter: WordFilter) -> FreeGroupTwist {
        let mut by_length = vec![Vec::new(); Self::SAMPLE_WORD_LEN + 1];
        for w in Word::enumerate(Self::SAMPLE_WORD_LEN) {
            if filter.accepts(&w) {
                by_length[w.len()].push(w);
            }
        }
        by_length.retain(|b| !b.is_empty());
        FreeGroupTwist { filter, by_length }
    }

    pub fn filter(&self) -> &WordFilter {
        &self.filter
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.filter.accepts(w)
    }

    fn graded(&self, w: &Word) -> Result<(), TwistError> {
        if self.filter.accepts(w) {
            Ok(())
        } else {
            Err(TwistError::NotInGrading(w.to_string()))
        }
    }

    /// A word of the grading: the length class first, then uniformly inside it.
    pub fn sample_word(&self, rng: &mut dyn RngCore) -> Word {
        let bucket = &self.by_length[rng.random_range(0..self.by_length.len())];
        bucket[rng.random_range(0..bucket.len())].clone()
    }
}

impl TwistStructure for FreeGroupTwist {
    type Unit = BasePoint;
    type Elem = TwistElement;
    type Arrow = GroupoidElement;

    fn multiply(&self, a: &TwistElement, b: &TwistElement) -> Result<TwistElement, TwistError> {
        self.graded(a.word())?;
        self.graded(b.word())?;
        e_multiply(a, b)
    }

    fn invert(&self, a: &TwistElement) -> TwistElement {
        e_invert(a)
    }

    fn range(&self, a: &TwistElement) -> BasePoint {
        alpha(a.word(), a.base())
    }

    fn source(&self, a: &TwistElement) -> BasePoint {
        a.base().clone()
    }

    fn unit(&self, x: &BasePoint) -> TwistElement {
        ClassRep::unit(x.clone())
    }

    fn iota(&self, x: &BasePoint, z: &Angle) -> TwistElement {
        iota(x, z)
    }

    fn fibre_coordinate(&self, a: &TwistElement) -> Option<(BasePoint, Angle)> {
        if a.word().is_identity() {
            Some((a.base().clone(), a.total_phase().clone()))
        } else {
            None
        }
    }

    fn pi(&self, a: &TwistElement) -> GroupoidElement {
        pi(a)
    }

    fn g_multiply(
        &self,
        a: &GroupoidElement,
        b: &GroupoidElement,
    ) -> Result<GroupoidElement, TwistError> {
        self.graded(a.word())?;
        self.graded(b.word())?;
        g_multiply(a, b)
    }

    fn g_invert(&self, a: &GroupoidElement) -> GroupoidElement {
        g_invert(a)
    }

    fn g_range(&self, a: &GroupoidElement) -> BasePoint {
        a.range()
    }

    fn g_source(&self, a: &GroupoidElement) -> BasePoint {
        a.source.clone()
    }

    fn g_unit(&self, x: &BasePoint) -> GroupoidElement {
        GroupoidElement::unit(x.clone())
    }

    fn t_act(&self, z: &Angle, a: &TwistElement) -> TwistElement {
        t_act_class(z, a)
    }
}

impl Sampler for FreeGroupTwist {
    fn sample_unit(&self, rng: &mut dyn RngCore) -> BasePoint {
        sample::random_base_point(rng)
    }

    fn sample_from(&self, rng: &mut dyn RngCore, source: &BasePoint) -> TwistElement {
        let w = self.sample_word(rng);
        ClassRep::new(w, source.clone(), sample::random_angle(rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::Rational;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn x0() -> BasePoint {
        BasePoint::new(Angle::frac(1, 3), Rational::new(1, 2))
    }

    #[test]
    fn arrow_bookkeeping() {
        let g = GroupoidElement::over(w("ab"), x0());
        assert_eq!(g.range(), x0().rotate_by(1));
        assert!(GroupoidElement::from_parts(x0(), w("ab"), x0()).is_err());
        let gi = g_invert(&g);
        assert_eq!(
            g_multiply(&g, &gi).unwrap(),
            GroupoidElement::unit(g.range())
        );
        assert!(g_multiply(&g, &g).is_err());
    }

    #[test]
    fn twist_range_source_and_units() {
        let e = ClassRep::new(w("aa"), x0(), Angle::frac(1, 4));
        assert_eq!(e_source(&e), ClassRep::unit(x0()));
        assert_eq!(e_range(&e), ClassRep::unit(x0().rotate_by(2)));
        assert_eq!(e_multiply(&e_range(&e), &e).unwrap(), e);
        assert_eq!(e_multiply(&e, &e_source(&e)).unwrap(), e);
        assert_eq!(
            pi(&iota(&x0(), &Angle::frac(1, 9))),
            GroupoidElement::unit(x0())
        );
    }

    #[test]
    fn filtered_twist_rejects_outside_words() {
        let tw = FreeGroupTwist::with_filter(WordFilter::KernelEllA);
        let e = ClassRep::new(w("a"), x0(), Angle::zero());
        let u = ClassRep::unit(x0());
        assert_eq!(
            tw.multiply(&e, &u),
            Err(TwistError::NotInGrading("a".into()))
        );
        let mut rng = sample::seeded_rng(3);
        for _ in 0..50 {
            assert_eq!(tw.sample_word(&mut rng).ell_a(), 0);
        }
    }

    #[test]
    fn default_t_act_agrees_with_class_action() {
        struct Plain(FreeGroupTwist);
        impl TwistStructure for Plain {
            type Unit = BasePoint;
            type Elem = TwistElement;
            type Arrow = GroupoidElement;
            fn multiply(&self, a: &ClassRep, b: &ClassRep) -> Result<ClassRep, TwistError> {
                self.0.multiply(a, b)
            }
            fn invert(&self, a: &ClassRep) -> ClassRep {
                self.0.invert(a)
            }
            fn range(&self, a: &ClassRep) -> BasePoint {
                self.0.range(a)
            }
            fn source(&self, a: &ClassRep) -> BasePoint {
                self.0.source(a)
            }
            fn unit(&self, x: &BasePoint) -> ClassRep {
                self.0.unit(x)
            }
            fn iota(&self, x: &BasePoint, z: &Angle) -> ClassRep {
                self.0.iota(x, z)
            }
            fn fibre_coordinate(&self, a: &ClassRep) -> Option<(BasePoint, Angle)> {
                self.0.fibre_coordinate(a)
            }
            fn pi(&self, a: &ClassRep) -> GroupoidElement {
                self.0.pi(a)
            }
            fn g_multiply(
                &self,
                a: &GroupoidElement,
                b: &GroupoidElement,
            ) -> Result<GroupoidElement, TwistError> {
                self.0.g_multiply(a, b)
            }
            fn g_invert(&self, a: &GroupoidElement) -> GroupoidElement {
                self.0.g_invert(a)
            }
            fn g_range(&self, a: &GroupoidElement) -> BasePoint {
                self.0.g_range(a)
            }
            fn g_source(&self, a: &GroupoidElement) -> BasePoint {
                self.0.g_source(a)
            }
            fn g_unit(&self, x: &BasePoint) -> GroupoidElement {
                self.0.g_unit(x)
            }
        }
        let plain = Plain(FreeGroupTwist::full());
        let e = ClassRep::new(w("bAb"), x0(), Angle::frac(2, 7));
        let z = Angle::new(Rational::new(1, 5), 2);
        assert_eq!(plain.t_act(&z, &e), t_act_class(&z, &e));
    }
}
