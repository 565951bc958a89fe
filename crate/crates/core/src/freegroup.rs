//! Reduced words in the free group `F2 = <a, b>`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AInv => 'A',
            Letter::B => 'b',
            Letter::BInv => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::AInv),
            'b' => Some(Letter::B),
            'B' => Some(Letter::BInv),
            _ => None,
        }
    }

    pub fn ell_a(self) -> i64 {
        match self {
            Letter::A => 1,
            Letter::AInv => -1,
            _ => 0,
        }
    }

    pub fn ell_b(self) -> i64 {
        match self {
            Letter::B => 1,
            Letter::BInv => -1,
            _ => 0,
        }
    }
}

/// A freely reduced word; the empty word is the identity.
///
/// Reduced forms are unique, so structural equality is group equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// Free reduction by a single left-to-right stack pass.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// The suffix `w_{i+1} ... w_n` (0-based `i` counts dropped letters).
    pub fn suffix_from(&self, i: usize) -> Word {
        Word(self.0[i.min(self.0.len())..].to_vec())
    }

    /// The first `n` letters.
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.0.len())].to_vec())
    }

    pub fn multiply(&self, other: &Word) -> Word {
        Word::reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Signed count of `a`; the homomorphism `F2 -> Z` with `a -> 1, b -> 0`.
    pub fn ell_a(&self) -> i64 {
        self.0.iter().map(|l| l.ell_a()).sum()
    }

    /// Signed count of `b`.
    pub fn ell_b(&self) -> i64 {
        self.0.iter().map(|l| l.ell_b()).sum()
    }

    /// Every reduced word of length at most `max_len`, shortest first.
    pub fn enumerate(max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::identity()];
        let mut frontier = vec![Word::identity()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(frontier.len() * 3);
            for w in &frontier {
                for l in Letter::ALL {
                    if w.last() == Some(l.inverse()) {
                        continue;
                    }
                    let mut letters = w.0.clone();
                    letters.push(l);
                    next.push(Word(letters));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Self {
        Word::letter(l)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseWordError {
    #[error("empty word text; use `e` for the identity")]
    Empty,
    #[error("unexpected character {found:?} at offset {offset}")]
    UnexpectedChar { offset: usize, found: char },
}

impl FromStr for Word {
    type Err = ParseWordError;

    /// Accepts `e` or a string over `a A b B`; the result is freely reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParseWordError::Empty);
        }
        if s == "e" {
            return Ok(Word::identity());
        }
        let mut letters = Vec::with_capacity(s.len());
        for (offset, c) in s.char_indices() {
            match Letter::from_char(c) {
                Some(l) => letters.push(l),
                None => return Err(ParseWordError::UnexpectedChar { offset, found: c }),
            }
        }
        Ok(Word::reduce(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Independent reduction oracle: repeatedly delete the first cancelling pair.
    fn rewrite_oracle(mut v: Vec<Letter>) -> Vec<Letter> {
        loop {
            let pos = v.windows(2).position(|p| p[0] == p[1].inverse());
            match pos {
                Some(i) => {
                    v.drain(i..i + 2);
                }
                None => return v,
            }
        }
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(Word::reduce([A, B, BInv, AInv]), Word::identity());
        assert_eq!(Word::reduce([A, A]).letters(), &[A, A]);
        let raw = vec![B, AInv, A, A, BInv, B];
        assert_eq!(rewrite_oracle(raw.clone()), vec![B, A]);
        assert_eq!(Word::reduce(raw).letters(), &[B, A]);
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(&w("ab") * &w("BA"), Word::identity());
        assert_eq!(&Word::identity() * &w("abA"), w("abA"));
        assert_eq!((&w("ab") * &w("ba")).letters(), &[A, B, B, A]);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("ab").invert(), w("BA"));
        assert_eq!(Word::identity().invert(), Word::identity());
        assert_eq!(w("abA").invert(), w("aBA"));
    }

    #[test]
    fn grading_examples() {
        assert_eq!(w("abaB").ell_a(), 2);
        assert_eq!(Word::identity().ell_a(), 0);
        assert_eq!(w("AbA").ell_a(), -2);
        assert_eq!(w("b").ell_b(), 1);
        assert_eq!(w("bB").ell_b(), 0);
        assert!(w("bB").is_identity());
        assert_eq!(w("abbAB").ell_b(), 1);
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(w("e").to_string(), "e");
        assert_eq!(w("abAB").to_string(), "abAB");
        assert_eq!("".parse::<Word>(), Err(ParseWordError::Empty));
        assert_eq!(
            "abx".parse::<Word>(),
            Err(ParseWordError::UnexpectedChar {
                offset: 2,
                found: 'x'
            })
        );
    }

    #[test]
    fn enumeration_counts() {
        // 1 + 4 * (3^n - 1) / 2
        let counts: Vec<usize> = (0..=6).map(|n| Word::enumerate(n).len()).collect();
        assert_eq!(counts, vec![1, 5, 17, 53, 161, 485, 1457]);
        assert!(Word::enumerate(4)
            .iter()
            .all(|x| Word::reduce(x.letters().iter().copied()) == *x));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn raw_letters() -> impl Strategy<Value = Vec<Letter>> {
            prop::collection::vec(prop::sample::select(Letter::ALL.to_vec()), 0..12)
        }

        proptest! {
            #[test]
            fn reduce_matches_oracle_and_is_idempotent(v in raw_letters()) {
                let r = Word::reduce(v.clone());
                let expected = rewrite_oracle(v);
                prop_assert_eq!(r.letters(), expected.as_slice());
                prop_assert_eq!(Word::reduce(r.letters().iter().copied()), r);
            }

            #[test]
            fn multiplication_is_a_group_law(u in raw_letters(), v in raw_letters(), x in raw_letters()) {
                let (u, v, x) = (Word::reduce(u), Word::reduce(v), Word::reduce(x));
                prop_assert_eq!(&(&u * &v) * &x, &u * &(&v * &x));
                prop_assert!((&u * &v).len() <= u.len() + v.len());
                prop_assert_eq!(&u * &u.invert(), Word::identity());
                prop_assert_eq!(u.invert().invert(), u.clone());
                prop_assert_eq!((&u * &v).invert(), &v.invert() * &u.invert());
            }
        }
    }
}
