use proptest::prelude::*;
use twistlab::{eval_str, parse, parse_angle, parse_word, Expr, ExprError, ExprKind, Span};
use twistlab_core::exact_arith::{Angle, BasePoint, Rational};
use twistlab_core::freegroup::{Letter, Word};
use twistlab_core::twistcore::ClassRep;

fn angle() -> impl Strategy<Value = Angle> {
    ((-40i64..40), (1i64..30), (-5i64..6)).prop_map(|(n, d, m)| Angle::new(Rational::new(n, d), m))
}

fn class() -> impl Strategy<Value = ClassRep> {
    (
        prop::collection::vec(prop::sample::select(Letter::ALL.to_vec()), 0..7),
        angle(),
        (0i64..40, 1i64..40),
        angle(),
    )
        .prop_map(|(w, x, (n, d), t)| {
            ClassRep::new(Word::reduce(w), BasePoint::new(x, Rational::new(n, d)), t)
        })
}

fn node(kind: ExprKind) -> Expr {
    Expr {
        kind,
        span: Span::default(),
    }
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = class().prop_map(|c| node(ExprKind::Literal(c)));
    leaf.prop_recursive(5, 32, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| node(ExprKind::Product(Box::new(a), Box::new(b)))),
            inner
                .clone()
                .prop_map(|a| node(ExprKind::Inverse(Box::new(a)))),
            (angle(), inner).prop_map(|(z, a)| node(ExprKind::Act(z, Box::new(a)))),
        ]
    })
}

proptest! {
    #[test]
    fn parse_render_is_identity_on_literals(c in class()) {
        let parsed = parse(&c.to_string()).unwrap();
        prop_assert_eq!(parsed.kind, ExprKind::Literal(c));
    }

    #[test]
    fn parse_render_is_identity_on_trees(e in expr()) {
        let text = e.to_string();
        let parsed = parse(&text).unwrap();
        prop_assert!(parsed.same_shape(&e), "{} parsed as {}", text, parsed);
        prop_assert_eq!(parsed.to_string(), text);
    }

    #[test]
    fn angles_and_words_round_trip(a in angle(), c in class()) {
        prop_assert_eq!(parse_angle(&a.to_string()).unwrap(), a);
        prop_assert_eq!(&parse_word(&c.word().to_string()).unwrap(), c.word());
    }

    #[test]
    fn evaluation_output_parses_back(c in class()) {
        let v = eval_str(&format!("{c} * {c}^-1")).unwrap();
        prop_assert!(v.word().is_identity());
        prop_assert_eq!(eval_str(&v.to_string()).unwrap(), v);
    }
}

#[test]
fn errors_carry_positions() {
    match eval_str("[a | 0 ; 0 | 0]\n * [b | 0 ; 1/0 | 0]") {
        Err(ExprError::Syntax(e)) => assert_eq!((e.line, e.col), (2, 15)),
        other => panic!("{other:?}"),
    }
    match eval_str("[a | 0 ; 0 | 0] * [a | 0 ; 0 | 0]") {
        Err(ExprError::Eval(e)) => assert_eq!(e.span.start, 0),
        other => panic!("{other:?}"),
    }
}
