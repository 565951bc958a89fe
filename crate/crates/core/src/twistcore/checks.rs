use rand::RngCore;

use super::groupoid::Sampler;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub witness: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of a randomized check: how many cases ran and which ones failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new(name: &str) -> CheckReport {
        CheckReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, case: &str, witness: String, expected: String, got: String) {
        self.failures.push(Failure {
            case: case.to_string(),
            witness,
            expected,
            got,
        });
    }

    /// Records a failure for `case` unless `expected == got`.
    pub fn expect_eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        case: &str,
        witness: impl FnOnce() -> String,
        expected: &T,
        got: &T,
    ) {
        if expected != got {
            self.fail(case, witness(), expected.to_string(), got.to_string());
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

fn show<E: std::fmt::Display>(r: &Result<impl std::fmt::Display, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Associativity, units, inverses and range/source bookkeeping on random
/// composable triples.
pub fn check_groupoid_axioms<T: Sampler>(tw: &T, rng: &mut dyn RngCore, n: usize) -> CheckReport {
    let mut rep = CheckReport::new("groupoid axioms");
    for _ in 0..n {
        rep.cases += 1;
        let x = tw.sample_unit(rng);
        let e3 = tw.sample_from(rng, &x);
        let e2 = tw.sample_from(rng, &tw.range(&e3));
        let e1 = tw.sample_from(rng, &tw.range(&e2));
        let triple = || format!("{e1} * {e2} * {e3}");

        let left = tw.multiply(&e1, &e2).and_then(|p| tw.multiply(&p, &e3));
        let right = tw.multiply(&e2, &e3).and_then(|p| tw.multiply(&e1, &p));
        match (&left, &right) {
            (Ok(l), Ok(r)) => rep.expect_eq("associativity", triple, l, r),
            _ => rep.fail("associativity", triple(), show(&left), show(&right)),
        }

        let witness = || e1.to_string();
        let lu = tw.multiply(&tw.unit(&tw.range(&e1)), &e1);
        let ru = tw.multiply(&e1, &tw.unit(&tw.source(&e1)));
        if lu.as_ref() != Ok(&e1) {
            rep.fail("left unit", witness(), e1.to_string(), show(&lu));
        }
        if ru.as_ref() != Ok(&e1) {
            rep.fail("right unit", witness(), e1.to_string(), show(&ru));
        }

        let inv = tw.invert(&e1);
        let r_unit = tw.unit(&tw.range(&e1));
        let s_unit = tw.unit(&tw.source(&e1));
        let a = tw.multiply(&e1, &inv);
        let b = tw.multiply(&inv, &e1);
        if a.as_ref() != Ok(&r_unit) {
            rep.fail("e * e^-1 = r(e)", witness(), r_unit.to_string(), show(&a));
        }
        if b.as_ref() != Ok(&s_unit) {
            rep.fail("e^-1 * e = s(e)", witness(), s_unit.to_string(), show(&b));
        }
        rep.expect_eq("double inverse", witness, &e1, &tw.invert(&inv));
        rep.expect_eq("r(e^-1) = s(e)", witness, &tw.source(&e1), &tw.range(&inv));

        if let Ok(p) = tw.multiply(&e1, &e2) {
            let w = || format!("{e1} * {e2}");
            rep.expect_eq("r(e1 e2) = r(e1)", w, &tw.range(&e1), &tw.range(&p));
            rep.expect_eq("s(e1 e2) = s(e2)", w, &tw.source(&e2), &tw.source(&p));
        }
    }
    rep
}

/// `pi` and `iota` are compatible homomorphisms, `iota` is onto the kernel of
/// `pi`, and the circle action is free and fibre-preserving.
pub fn check_twist_axioms<T: Sampler>(tw: &T, rng: &mut dyn RngCore, n: usize) -> CheckReport {
    let mut rep = CheckReport::new("twist axioms");
    for _ in 0..n {
        rep.cases += 1;
        let x = tw.sample_unit(rng);
        let e2 = tw.sample_from(rng, &x);
        let e1 = tw.sample_from(rng, &tw.range(&e2));
        let z = tw.sample_angle(rng);
        let z2 = tw.sample_angle(rng);
        let pair = || format!("{e1} * {e2}");
        let one = || e1.to_string();

        match tw.multiply(&e1, &e2) {
            Ok(p) => {
                let expected = tw.g_multiply(&tw.pi(&e1), &tw.pi(&e2));
                match expected {
                    Ok(g) => rep.expect_eq("pi multiplicative", pair, &g, &tw.pi(&p)),
                    Err(err) => rep.fail(
                        "pi multiplicative",
                        pair(),
                        format!("error: {err}"),
                        tw.pi(&p).to_string(),
                    ),
                }
            }
            Err(err) => rep.fail(
                "composable product",
                pair(),
                "a product".into(),
                format!("error: {err}"),
            ),
        }

        let g1 = tw.pi(&e1);
        rep.expect_eq("r(pi e) = r(e)", one, &tw.range(&e1), &tw.g_range(&g1));
        rep.expect_eq("s(pi e) = s(e)", one, &tw.source(&e1), &tw.g_source(&g1));

        let ix = tw.iota(&x, &z);
        rep.expect_eq(
            "pi(iota(x, z)) = x",
            || format!("x = {x}, z = {z}"),
            &tw.g_unit(&x),
            &tw.pi(&ix),
        );
        let sum = tw.multiply(&ix, &tw.iota(&x, &z2));
        let want = tw.iota(&x, &(&z + &z2));
        if sum.as_ref() != Ok(&want) {
            rep.fail(
                "iota multiplicative",
                format!("x = {x}, z = {z}, z' = {z2}"),
                want.to_string(),
                show(&sum),
            );
        }

        let is_unit_arrow = g1 == tw.g_unit(&tw.g_source(&g1));
        match tw.fibre_coordinate(&e1) {
            Some((y, w)) => {
                if !is_unit_arrow {
                    rep.fail(
                        "iota onto ker pi",
                        one(),
                        "no fibre coordinate".into(),
                        format!("({y}, {w})"),
                    );
                }
                rep.expect_eq("iota onto ker pi", one, &e1, &tw.iota(&y, &w));
            }
            None => {
                if is_unit_arrow {
                    rep.fail(
                        "iota onto ker pi",
                        one(),
                        "a fibre coordinate".into(),
                        "none".into(),
                    );
                }
            }
        }

        let acted = tw.t_act(&z, &e1);
        rep.expect_eq(
            "pi(z . e) = pi(e)",
            || format!("z = {z}, e = {e1}"),
            &g1,
            &tw.pi(&acted),
        );
        if !z.is_zero() && acted == e1 {
            rep.fail(
                "free action",
                format!("z = {z}, e = {e1}"),
                "z . e != e".into(),
                acted.to_string(),
            );
        }
    }
    rep
}

/// `iota(r(e), z) e = e iota(s(e), z)`.
pub fn check_centrality<T: Sampler>(tw: &T, rng: &mut dyn RngCore, n: usize) -> CheckReport {
    let mut rep = CheckReport::new("centrality");
    for _ in 0..n {
        rep.cases += 1;
        let x = tw.sample_unit(rng);
        let e = tw.sample_from(rng, &x);
        let z = tw.sample_angle(rng);
        let left = tw.multiply(&tw.iota(&tw.range(&e), &z), &e);
        let right = tw.multiply(&e, &tw.iota(&tw.source(&e), &z));
        match (&left, &right) {
            (Ok(l), Ok(r)) => rep.expect_eq("central circle", || format!("z = {z}, e = {e}"), l, r),
            _ => rep.fail(
                "central circle",
                format!("z = {z}, e = {e}"),
                show(&left),
                show(&right),
            ),
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::super::groupoid::{FreeGroupTwist, TwistStructure};
    use super::super::sample::seeded_rng;
    use super::super::{ClassRep, GroupoidElement, TwistError};
    use super::*;
    use crate::exact_arith::{Angle, BasePoint};

    #[test]
    fn full_twist_passes() {
        let tw = FreeGroupTwist::full();
        let mut rng = seeded_rng(11);
        assert!(check_groupoid_axioms(&tw, &mut rng, 200).passed());
        assert!(check_twist_axioms(&tw, &mut rng, 200).passed());
        assert!(check_centrality(&tw, &mut rng, 200).passed());
    }

    /// Multiplication perturbed on products of two `b`-words.
    struct Faulty(FreeGroupTwist);

    impl TwistStructure for Faulty {
        type Unit = BasePoint;
        type Elem = ClassRep;
        type Arrow = GroupoidElement;
        fn multiply(&self, a: &ClassRep, b: &ClassRep) -> Result<ClassRep, TwistError> {
            let p = self.0.multiply(a, b)?;
            if a.word().ell_b() > 0 && b.word().ell_b() > 0 {
                Ok(ClassRep::new(
                    p.word().clone(),
                    p.base().clone(),
                    p.total_phase() + &Angle::frac(1, 1000),
                ))
            } else {
                Ok(p)
            }
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

    impl Sampler for Faulty {
        fn sample_unit(&self, rng: &mut dyn RngCore) -> BasePoint {
            self.0.sample_unit(rng)
        }
        fn sample_from(&self, rng: &mut dyn RngCore, source: &BasePoint) -> ClassRep {
            self.0.sample_from(rng, source)
        }
    }

    #[test]
    fn injected_fault_is_reported() {
        let tw = Faulty(FreeGroupTwist::full());
        let mut rng = seeded_rng(5);
        let rep = check_groupoid_axioms(&tw, &mut rng, 300);
        assert!(!rep.passed());
        assert!(rep.failures.iter().any(|f| f.case == "associativity"));
        let f = &rep.failures[0];
        assert!(!f.witness.is_empty() && f.expected != f.got);
    }
}
