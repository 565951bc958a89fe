use super::classes::{canonicalize, ClassRep, TupleElement};
use super::letters::{alpha, bar_letter, LetterBundle};
use super::TwistError;
use crate::bundle::{self, FiberPoint};
use crate::exact_arith::Angle;

/// Product `psi_{w,w'}` on classes; requires `p^w(left) = alpha_{w'}(p^{w'}(right))`.
pub fn psi(left: &ClassRep, right: &ClassRep) -> Result<ClassRep, TwistError> {
    let target = alpha(right.word(), right.base());
    if left.base() != &target {
        return Err(TwistError::NotComposable {
            left: format!("{left} with source {}", left.base()),
            right: format!("{right} with range {target}"),
        });
    }
    let out = psi_tuples(left.to_tuple(), right.to_tuple());
    debug_assert_eq!(out.word(), &left.word().multiply(right.word()));
    Ok(canonicalize(&out))
}

fn eps_tuple(c: FiberPoint) -> TupleElement {
    TupleElement::from_parts_unchecked(Default::default(), vec![c])
}

fn act_first(z: &Angle, t: TupleElement) -> TupleElement {
    let (word, mut entries) = t.into_parts();
    entries[0] = bundle::t_act(z, &entries[0]);
    TupleElement::from_parts_unchecked(word, entries)
}

fn act_last(z: &Angle, t: TupleElement) -> TupleElement {
    let (word, mut entries) = t.into_parts();
    let n = entries.len() - 1;
    entries[n] = bundle::t_act(z, &entries[n]);
    TupleElement::from_parts_unchecked(word, entries)
}

/// Tuple-level recursion: absorb `C^e` factors into a neighbour, cancel an
/// inner pair `d d^-1` through the pairing, otherwise concatenate.
pub fn psi_tuples(left: TupleElement, right: TupleElement) -> TupleElement {
    if left.word().is_identity() {
        let z = left.entries()[0].phase.clone();
        return act_first(&z, right);
    }
    if right.word().is_identity() {
        let z = right.entries()[0].phase.clone();
        return act_last(&z, left);
    }
    let d = left.word().last().expect("non-empty");
    let e = right.word().first().expect("non-empty");
    let (lw, mut lentries) = left.into_parts();
    let (rw, mut rentries) = right.into_parts();
    if e != d.inverse() {
        let word = lw.multiply(&rw);
        lentries.append(&mut rentries);
        return TupleElement::from_parts_unchecked(word, lentries);
    }

    let c = lentries.pop().expect("non-empty");
    let c_dag = rentries.remove(0);
    let partner = bar_letter(Some(e), &c_dag);
    let u = bundle::pairing(&c, &partner).expect("composable pair shares a base");
    let unit = eps_tuple(LetterBundle::of(None).point(c_dag.base.clone(), u));

    let left_rest = if lentries.is_empty() {
        None
    } else {
        Some(TupleElement::from_parts_unchecked(
            lw.prefix(lw.len() - 1),
            lentries,
        ))
    };
    let right_rest = if rentries.is_empty() {
        None
    } else {
        Some(TupleElement::from_parts_unchecked(
            rw.suffix_from(1),
            rentries,
        ))
    };
    match (left_rest, right_rest) {
        (None, None) => unit,
        (None, Some(r)) => psi_tuples(unit, r),
        (Some(l), None) => psi_tuples(l, unit),
        (Some(l), Some(r)) => psi_tuples(psi_tuples(l, unit), r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{BasePoint, Rational};
    use crate::freegroup::Word;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn base() -> BasePoint {
        BasePoint::new(Angle::new(Rational::new(3, 10), 1), Rational::new(1, 4))
    }

    /// Product formula in class coordinates, derived independently.
    fn oracle(l: &ClassRep, r: &ClassRep) -> ClassRep {
        ClassRep::new(
            l.word().multiply(r.word()),
            r.base().clone(),
            l.total_phase() + r.total_phase(),
        )
    }

    #[test]
    fn identity_classes_multiply_by_adding() {
        let l = ClassRep::new(Word::identity(), base(), Angle::frac(1, 3));
        let r = ClassRep::new(Word::identity(), base(), Angle::frac(1, 6));
        assert_eq!(
            psi(&l, &r).unwrap(),
            ClassRep::new(Word::identity(), base(), Angle::frac(1, 2))
        );
    }

    #[test]
    fn b_times_b_inverse() {
        let l = ClassRep::new(w("b"), base(), Angle::frac(1, 5));
        let r = ClassRep::new(w("B"), base(), Angle::frac(2, 5));
        let p = psi(&l, &r).unwrap();
        assert!(p.word().is_identity());
        assert_eq!(p, oracle(&l, &r));
    }

    #[test]
    fn deep_cancellation() {
        let r = ClassRep::new(w("Bab"), base(), Angle::new(Rational::new(1, 7), -2));
        let l_base = alpha(r.word(), r.base());
        let l = ClassRep::new(w("aBAb"), l_base, Angle::frac(5, 9));
        let p = psi(&l, &r).unwrap();
        assert_eq!(p.word(), &w("a"));
        assert_eq!(p, oracle(&l, &r));
    }

    #[test]
    fn not_composable() {
        let l = ClassRep::new(w("a"), base(), Angle::zero());
        let r = ClassRep::new(w("a"), base(), Angle::zero());
        assert!(matches!(psi(&l, &r), Err(TwistError::NotComposable { .. })));
    }
}
