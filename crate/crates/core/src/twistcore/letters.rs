use crate::bundle::{ClutchBundle, FiberPoint};
use crate::exact_arith::{Angle, BasePoint};
use crate::freegroup::{Letter, Word};

/// The action of `F2` on `X`: `a` rotates the x-circle by `theta`, `b` is
/// the identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AlphaAction;

impl AlphaAction {
    pub fn apply(&self, w: &Word, p: &BasePoint) -> BasePoint {
        p.rotate_by(w.ell_a())
    }

    pub fn apply_letter(&self, l: Option<Letter>, p: &BasePoint) -> BasePoint {
        match l {
            Some(l) => p.rotate_by(l.ell_a()),
            None => p.clone(),
        }
    }
}

pub fn alpha(w: &Word, p: &BasePoint) -> BasePoint {
    AlphaAction.apply(w, p)
}

/// The bundle `C^d` attached to a letter (`None` is the empty word).
///
/// Stored phases always transform by `z -> z + phase`. `action_sign` records
/// how the stored phase relates to the raw fibre coordinate: for `a^-1` the
/// raw coordinate of `X x T` under the conjugate action, for `b^-1` the phase
/// of the underlying point of `C^b`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LetterBundle {
    pub letter: Option<Letter>,
    pub bundle: ClutchBundle,
    pub action_sign: i8,
}

impl LetterBundle {
    pub fn of(letter: Option<Letter>) -> LetterBundle {
        let (bundle, action_sign) = match letter {
            None | Some(Letter::A) => (ClutchBundle::trivial(), 1),
            Some(Letter::AInv) => (ClutchBundle::trivial(), -1),
            Some(Letter::B) => (ClutchBundle::new(1), 1),
            Some(Letter::BInv) => (ClutchBundle::new(-1), -1),
        };
        LetterBundle {
            letter,
            bundle,
            action_sign,
        }
    }

    pub fn point(&self, base: BasePoint, phase: Angle) -> FiberPoint {
        FiberPoint::new(self.bundle, base, phase)
    }

    pub fn raw_coordinate(&self, c: &FiberPoint) -> Angle {
        if self.action_sign < 0 {
            -&c.phase
        } else {
            c.phase.clone()
        }
    }

    pub fn from_raw_coordinate(&self, base: BasePoint, raw: Angle) -> FiberPoint {
        let phase = if self.action_sign < 0 { -raw } else { raw };
        self.point(base, phase)
    }
}

/// `c -> c-bar`, from `C^d` to `C^{d^-1}`; lands over `alpha_d(p(c))`.
pub fn bar_letter(d: Option<Letter>, c: &FiberPoint) -> FiberPoint {
    FiberPoint::new(
        c.bundle.conjugate(),
        AlphaAction.apply_letter(d, &c.base),
        -&c.phase,
    )
}
