//! Seeded random generators for exact angles, points and words.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact_arith::{Angle, BasePoint, Rational};
use crate::freegroup::{Letter, Word};
use crate::twistcore::GroupoidElement;

pub type SuiteRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational in `[0, 1)` with denominator at most 48.
pub fn random_unit_rational(rng: &mut dyn RngCore) -> Rational {
    let den: i64 = rng.random_range(1..=48);
    let num: i64 = rng.random_range(0..den);
    Rational::new(num, den)
}

/// `q + m theta` with small `|m|`.
pub fn random_angle(rng: &mut dyn RngCore) -> Angle {
    let m: i64 = rng.random_range(-6..=6);
    Angle::new(random_unit_rational(rng), m)
}

pub fn random_base_point(rng: &mut dyn RngCore) -> BasePoint {
    BasePoint::new(random_angle(rng), random_unit_rational(rng))
}

/// A reduced word whose length is uniform in `0..=max_len`.
pub fn random_word(rng: &mut dyn RngCore, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::ALL[rng.random_range(0..4)];
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    Word::reduce(letters)
}

/// Arrows `(a, b, c)` of `G` with `s(a) = r(b)` and `s(b) = r(c)`.
pub fn random_composable_arrows(
    rng: &mut dyn RngCore,
    max_len: usize,
) -> (GroupoidElement, GroupoidElement, GroupoidElement) {
    let c = GroupoidElement::over(random_word(rng, max_len), random_base_point(rng));
    let b = GroupoidElement::over(random_word(rng, max_len), c.range());
    let a = GroupoidElement::over(random_word(rng, max_len), b.range());
    (a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_streams_repeat() {
        let mut a = seeded_rng(7);
        let mut b = seeded_rng(7);
        for _ in 0..20 {
            assert_eq!(random_base_point(&mut a), random_base_point(&mut b));
            assert_eq!(random_word(&mut a, 5), random_word(&mut b, 5));
        }
    }

    #[test]
    fn words_are_reduced_with_requested_length() {
        let mut rng = seeded_rng(1);
        for _ in 0..200 {
            let w = random_word(&mut rng, 6);
            assert!(w.len() <= 6);
            assert_eq!(Word::reduce(w.letters().iter().copied()), w);
        }
    }
}
