use super::groupoid::{FreeGroupTwist, GroupoidElement, WordFilter};
use super::letters::LetterBundle;
use super::TwistError;
use crate::bundle::{self, BundleError, Chart, DEFAULT_WINDING_SAMPLES};
use crate::exact_arith::{Angle, BasePoint, Rational};
use crate::freegroup::{Letter, Word};

/// Membership in the interior of the isotropy: `a` acts freely, so exactly the
/// words with `ell_a(w) = 0` fix every point.
pub fn isotropy_interior(g: &GroupoidElement) -> bool {
    g.word().ell_a() == 0
}

pub fn is_isotropic(g: &GroupoidElement) -> bool {
    g.range() == *g.source()
}

/// Restricts the twist to the gradings accepted by `filter`.
///
/// Closure under products and inverses is searched over all words of length
/// up to four; the first violation found is returned as the witness.
pub fn restrict_twist(filter: WordFilter) -> Result<FreeGroupTwist, TwistError> {
    let words: Vec<Word> = Word::enumerate(FreeGroupTwist::SAMPLE_WORD_LEN)
        .into_iter()
        .filter(|w| filter.accepts(w))
        .collect();
    if !filter.accepts(&Word::identity()) {
        return Err(TwistError::NotSubgroupoid("e is rejected".into()));
    }
    for u in &words {
        let inv = u.invert();
        if !filter.accepts(&inv) {
            return Err(TwistError::NotSubgroupoid(format!("{u}^-1 = {inv}")));
        }
    }
    for u in &words {
        for v in &words {
            let p = u * v;
            if !filter.accepts(&p) {
                return Err(TwistError::NotSubgroupoid(format!("{u} * {v} = {p}")));
            }
        }
    }
    Ok(FreeGroupTwist::with_filter(filter))
}

fn seam_point(j: usize, samples: usize) -> BasePoint {
    BasePoint::new(Angle::frac(1, 16), Rational::new(j as i64, samples as i64))
}

/// Seam transitions of the four letter bundles at `samples` heights.
///
/// `B^w` is the tensor product of the pullbacks `alpha_{s_i}^* C^{w_i}` where
/// `s_i` is the suffix after letter `i`. A pullback by a rotation moves the
/// seam but keeps its clutching function, so the clutching loop of `B^w` is
/// the sum of the letter transitions at one seam point.
#[derive(Clone, Debug)]
pub struct SeamTable {
    samples: usize,
    by_letter: [Vec<Angle>; 4],
}

impl SeamTable {
    pub fn new(samples: usize) -> SeamTable {
        let by_letter = Letter::ALL.map(|l| {
            let bundle = LetterBundle::of(Some(l)).bundle;
            (0..samples)
                .map(|j| {
                    bundle
                        .transition(&Chart::One, &Chart::Zero, &seam_point(j, samples))
                        .expect("seam point lies in the chart overlap")
                        .0
                })
                .collect()
        });
        SeamTable { samples, by_letter }
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    /// The clutching loop of `B^w`.
    pub fn clutching(&self, w: &Word) -> Vec<Angle> {
        let mut counts = [0i64; 4];
        for l in w.letters() {
            counts[Letter::ALL
                .iter()
                .position(|x| x == l)
                .expect("known letter")] += 1;
        }
        (0..self.samples)
            .map(|j| {
                (0..4).fold(Angle::zero(), |acc, i| {
                    if counts[i] == 0 {
                        acc
                    } else {
                        &acc + &self.by_letter[i][j].scale(counts[i])
                    }
                })
            })
            .collect()
    }

    /// Winding number of the clutching loop of `B^w`; non-zero forbids a
    /// continuous section over `G^w`.
    ///
    /// Each letter transition turns at most once across the seam, so a loop
    /// sampled fewer than `4 |w|` times could alias; such words get a finer
    /// table. Steps that are still too large to lift also refine.
    pub fn certificate(&self, tw: &FreeGroupTwist, w: &Word) -> Result<i64, TwistError> {
        if !tw.accepts(w) {
            return Err(TwistError::NotInGrading(w.to_string()));
        }
        if 4 * w.len() >= self.samples {
            let finer = (8 * w.len()).next_power_of_two();
            return SeamTable::new(finer).certificate(tw, w);
        }
        match bundle::winding_number(&self.clutching(w)) {
            Ok(k) => Ok(k),
            Err(BundleError::SamplingTooCoarse { .. }) if self.samples < 1 << 22 => {
                SeamTable::new(self.samples * 2).certificate(tw, w)
            }
            Err(e) => panic!("clutching loop of {w} is not closed: {e}"),
        }
    }
}

/// The clutching loop of `B^w` across the seam, sampled at `samples` heights.
pub fn word_clutching_samples(w: &Word, samples: usize) -> Vec<Angle> {
    SeamTable::new(samples).clutching(w)
}

/// Winding number of the clutching loop of `B^w` at the default sampling.
pub fn obstruction_certificate(tw: &FreeGroupTwist, w: &Word) -> Result<i64, TwistError> {
    obstruction_certificate_sampled(tw, w, DEFAULT_WINDING_SAMPLES)
}

pub fn obstruction_certificate_sampled(
    tw: &FreeGroupTwist,
    w: &Word,
    samples: usize,
) -> Result<i64, TwistError> {
    SeamTable::new(samples.max(4)).certificate(tw, w)
}

/// Chern number of `B^w`: the signed count of `b`.
pub fn chern_of_word(w: &Word) -> i64 {
    w.ell_b()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn interior_examples() {
        let x = BasePoint::new(Angle::frac(1, 7), Rational::new(1, 3));
        assert!(!isotropy_interior(&GroupoidElement::over(
            w("bab"),
            x.clone()
        )));
        assert!(isotropy_interior(&GroupoidElement::over(
            w("aBA"),
            x.clone()
        )));
        assert!(isotropy_interior(&GroupoidElement::over(w("b"), x.clone())));
        assert!(is_isotropic(&GroupoidElement::over(w("aBA"), x.clone())));
        assert!(!is_isotropic(&GroupoidElement::over(w("a"), x)));
    }

    #[test]
    fn restrictions() {
        assert!(restrict_twist(WordFilter::KernelEllA).is_ok());
        assert!(restrict_twist(WordFilter::UnitsOnly).is_ok());
        assert!(restrict_twist(WordFilter::custom("even length", |w| w.len() % 2 == 0)).is_ok());
        let err = restrict_twist(WordFilter::custom("length <= 2", |w| w.len() <= 2)).unwrap_err();
        assert!(matches!(err, TwistError::NotSubgroupoid(_)));
        let err = restrict_twist(WordFilter::custom("positive b", |w| w.ell_b() >= 0)).unwrap_err();
        assert_eq!(err, TwistError::NotSubgroupoid("b^-1 = B".into()));
    }

    #[test]
    fn certificates() {
        let full = FreeGroupTwist::full();
        assert_eq!(obstruction_certificate(&full, &w("b")), Ok(1));
        assert_eq!(obstruction_certificate(&full, &w("B")), Ok(-1));
        assert_eq!(obstruction_certificate(&full, &Word::identity()), Ok(0));
        assert_eq!(obstruction_certificate(&full, &w("abAb")), Ok(2));
        assert_eq!(obstruction_certificate(&full, &w("aaa")), Ok(0));
        let ker = restrict_twist(WordFilter::KernelEllA).unwrap();
        assert!(matches!(
            obstruction_certificate(&ker, &w("a")),
            Err(TwistError::NotInGrading(_))
        ));
    }

    #[test]
    fn certificate_matches_chern_on_short_words() {
        let full = FreeGroupTwist::full();
        let table = SeamTable::new(DEFAULT_WINDING_SAMPLES);
        for word in Word::enumerate(3) {
            assert_eq!(table.certificate(&full, &word), Ok(chern_of_word(&word)));
        }
    }

    #[test]
    fn coarse_table_refines() {
        let full = FreeGroupTwist::full();
        let w: Word = "bbbbbbbb".parse().unwrap();
        // eight samples would alias to a constant loop
        assert_eq!(SeamTable::new(8).certificate(&full, &w), Ok(8));
        // 36 samples: steps of 2/9 lift directly
        assert_eq!(SeamTable::new(36).certificate(&full, &w), Ok(8));
        let w: Word = "bbbbbbbbbbbb".parse().unwrap();
        // 49 samples give steps of 12/49 < 1/4; 48 is too few and is replaced
        assert_eq!(SeamTable::new(49).certificate(&full, &w), Ok(12));
        assert_eq!(SeamTable::new(48).certificate(&full, &w), Ok(12));
    }
}
