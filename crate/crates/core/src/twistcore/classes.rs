use std::fmt;

use super::letters::{alpha, bar_letter, AlphaAction, LetterBundle};
use super::TwistError;
use crate::bundle::{self, ClutchBundle, FiberPoint};
use crate::exact_arith::{Angle, BasePoint};
use crate::freegroup::{Letter, Word};

/// An element of `C^w`: one fibre point per letter, chained through `alpha`.
///
/// The empty word carries a single entry in the trivial bundle `C^e`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TupleElement {
    word: Word,
    entries: Vec<FiberPoint>,
}

impl TupleElement {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn entries(&self) -> &[FiberPoint] {
        &self.entries
    }

    pub(crate) fn from_parts_unchecked(word: Word, entries: Vec<FiberPoint>) -> TupleElement {
        debug_assert_eq!(entries.len(), word.len().max(1));
        TupleElement { word, entries }
    }

    pub(crate) fn into_parts(self) -> (Word, Vec<FiberPoint>) {
        (self.word, self.entries)
    }

    /// `p^w`: the base of the last entry.
    pub fn base(&self) -> &BasePoint {
        &self.entries.last().expect("tuples are non-empty").base
    }

    /// `z . [c_1, ..., c_n] = [c_1, ..., z . c_n]`.
    pub fn t_act(&self, z: &Angle) -> TupleElement {
        let mut entries = self.entries.clone();
        let last = entries.last_mut().expect("tuples are non-empty");
        *last = bundle::t_act(z, last);
        TupleElement {
            word: self.word.clone(),
            entries,
        }
    }

    /// Coordinatewise action of `(z_1, ..., z_n)` with `z_1 + ... + z_n = 0`.
    pub fn act_kernel(&self, zs: &[Angle]) -> Result<TupleElement, TwistError> {
        if zs.len() != self.entries.len() {
            return Err(TwistError::LengthMismatch {
                expected: self.entries.len(),
                got: zs.len(),
            });
        }
        let sum = zs.iter().fold(Angle::zero(), |acc, z| &acc + z);
        if !sum.is_zero() {
            return Err(TwistError::NotInKernel);
        }
        let entries = self
            .entries
            .iter()
            .zip(zs)
            .map(|(c, z)| bundle::t_act(z, c))
            .collect();
        Ok(TupleElement {
            word: self.word.clone(),
            entries,
        })
    }
}

fn letter_at(word: &Word, i: usize) -> Option<Letter> {
    word.letters().get(i).copied()
}

/// Checks membership in `C^w`; error indices are 1-based.
pub fn tuple_validate(word: Word, entries: Vec<FiberPoint>) -> Result<TupleElement, TwistError> {
    let expected = word.len().max(1);
    if entries.len() != expected {
        return Err(TwistError::LengthMismatch {
            expected,
            got: entries.len(),
        });
    }
    for (i, c) in entries.iter().enumerate() {
        if c.bundle != LetterBundle::of(letter_at(&word, i)).bundle {
            return Err(TwistError::WrongBundle(i + 1));
        }
        if let Some(next) = entries.get(i + 1) {
            let shifted = AlphaAction.apply_letter(letter_at(&word, i + 1), &next.base);
            if c.base != shifted {
                return Err(TwistError::ChainMismatch(i + 1));
            }
        }
    }
    Ok(TupleElement { word, entries })
}

/// A point of `B^w`: the orbit of a tuple under the anti-diagonal circle
/// action, represented by its base `p^w` and the sum of the entry phases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClassRep {
    word: Word,
    base: BasePoint,
    total_phase: Angle,
}

impl ClassRep {
    pub fn new(word: Word, base: BasePoint, total_phase: Angle) -> ClassRep {
        ClassRep {
            word,
            base,
            total_phase,
        }
    }

    /// The unit `(e, (x, 0))` of `B^e`.
    pub fn unit(x: BasePoint) -> ClassRep {
        ClassRep::new(Word::identity(), x, Angle::zero())
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn base(&self) -> &BasePoint {
        &self.base
    }

    pub fn total_phase(&self) -> &Angle {
        &self.total_phase
    }

    /// The canonical tuple: phase 0 everywhere except the last entry.
    pub fn to_tuple(&self) -> TupleElement {
        let n = self.word.len().max(1);
        let mut entries = Vec::with_capacity(n);
        for i in 0..n {
            let letter = letter_at(&self.word, i);
            // p^{w_i}(c_i) = alpha_{w_{i+1} ... w_n}(p^w)
            let base = alpha(&self.word.suffix_from(i + 1), &self.base);
            let phase = if i + 1 == n {
                self.total_phase.clone()
            } else {
                Angle::zero()
            };
            entries.push(LetterBundle::of(letter).point(base, phase));
        }
        TupleElement {
            word: self.word.clone(),
            entries,
        }
    }

    /// Bundle of the single-letter or empty-word class, if `|w| <= 1`.
    pub fn letter_bundle(&self) -> Option<ClutchBundle> {
        match self.word.len() {
            0 => Some(ClutchBundle::trivial()),
            1 => Some(LetterBundle::of(self.word.first()).bundle),
            _ => None,
        }
    }
}

impl fmt::Display for ClassRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} | {} ; {} | {}]",
            self.word,
            self.base.x,
            self.base.y(),
            self.total_phase
        )
    }
}

pub fn canonicalize(t: &TupleElement) -> ClassRep {
    let total = t
        .entries
        .iter()
        .fold(Angle::zero(), |acc, c| &acc + &c.phase);
    ClassRep {
        word: t.word.clone(),
        base: t.base().clone(),
        total_phase: total,
    }
}

pub fn t_act_class(z: &Angle, c: &ClassRep) -> ClassRep {
    ClassRep {
        word: c.word.clone(),
        base: c.base.clone(),
        total_phase: z + &c.total_phase,
    }
}

/// `[c_1, ..., c_n] -> [c_n-bar, ..., c_1-bar]` in `B^{w^-1}`.
pub fn bar(c: &ClassRep) -> ClassRep {
    let tuple = c.to_tuple();
    let word = c.word.invert();
    let entries: Vec<FiberPoint> = if c.word.is_identity() {
        vec![bar_letter(None, &tuple.entries[0])]
    } else {
        c.word
            .letters()
            .iter()
            .zip(tuple.entries.iter())
            .rev()
            .map(|(l, e)| bar_letter(Some(*l), e))
            .collect()
    };
    canonicalize(&TupleElement { word, entries })
}
