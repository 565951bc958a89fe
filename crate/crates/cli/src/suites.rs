use std::time::Instant;

use thiserror::Error;
use twistlab_core::bundle::DEFAULT_WINDING_SAMPLES;
use twistlab_core::exact_arith::{Angle, Rational};
use twistlab_core::freegroup::Word;
use twistlab_core::kumjian::{k_effectiveness_check, k_obstruction_certificate, KumjianTwist};
use twistlab_core::twistcore::sample::{random_base_point, random_composable_arrows, seeded_rng};
use twistlab_core::twistcore::{
    build_cocycle_twist, check_centrality, check_cocycle_identity, check_groupoid_axioms,
    check_twist_axioms, chern_of_word, cocycle_from_section, is_isotropic, isotropy_interior,
    minimality_report, minimality_report_for, restrict_twist, BilinearCocycle, FreeGroupTwist,
    GroupoidElement, SeamTable, TwoCocycle, WordFilter, ZeroCocycle,
};

use crate::report::Report;

pub const SUITES: [&str; 8] = [
    "axioms",
    "twist",
    "isotropy",
    "obstruction",
    "kumjian",
    "cocycle",
    "minimality",
    "all",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}; expected one of axioms, twist, isotropy, obstruction, kumjian, cocycle, minimality, all")]
    UnknownSuite(String),
}

/// What `samples` counts in each suite, and its default.
pub fn default_samples(name: &str) -> Option<usize> {
    Some(match name {
        // composable triples
        "axioms" => 10_000,
        // sampled elements
        "twist" => 10_000,
        // base points per word of length <= 6
        "isotropy" => 100,
        // seam heights per clutching loop
        "obstruction" => DEFAULT_WINDING_SAMPLES,
        // sampled elements
        "kumjian" => 1_000,
        // composable triples for the cocycle identity
        "cocycle" => 10_000,
        // orbit points
        "minimality" => 100_000,
        "all" => 0,
        _ => return None,
    })
}

/// Runs a suite; a `samples` of `None` uses [`default_samples`].
pub fn run_suite(name: &str, seed: u64, samples: Option<usize>) -> Result<Report, SuiteError> {
    let n = match default_samples(name) {
        Some(d) => samples.unwrap_or(d),
        None => return Err(SuiteError::UnknownSuite(name.to_string())),
    };
    let start = Instant::now();
    let mut report = match name {
        "axioms" => axioms(seed, n),
        "twist" => twist(seed, n),
        "isotropy" => isotropy(seed, n),
        "obstruction" => obstruction(seed, n),
        "kumjian" => kumjian(seed, n),
        "cocycle" => cocycle(seed, n),
        "minimality" => minimality(seed, n),
        _ => all(seed, samples),
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn axioms(seed: u64, n: usize) -> Report {
    let mut rng = seeded_rng(seed);
    let mut r = Report::new("axioms", seed, n);
    r.absorb(check_groupoid_axioms(&FreeGroupTwist::full(), &mut rng, n));
    r
}

fn twist(seed: u64, n: usize) -> Report {
    let mut rng = seeded_rng(seed);
    let tw = FreeGroupTwist::full();
    let mut r = Report::new("twist", seed, n);
    r.absorb(check_twist_axioms(&tw, &mut rng, n));
    r.absorb(check_centrality(&tw, &mut rng, n));
    r
}

fn isotropy(seed: u64, n: usize) -> Report {
    let mut rng = seeded_rng(seed);
    let mut r = Report::new("isotropy", seed, n);
    let points: Vec<_> = (0..n).map(|_| random_base_point(&mut rng)).collect();
    for w in Word::enumerate(6) {
        let expected = w.ell_a() == 0;
        for x in &points {
            r.cases += 1;
            let g = GroupoidElement::over(w.clone(), x.clone());
            if is_isotropic(&g) != expected {
                r.fail(
                    "r = s iff ell_a = 0",
                    g.to_string(),
                    expected.to_string(),
                    (!expected).to_string(),
                );
            }
            if isotropy_interior(&g) != is_isotropic(&g) {
                r.fail(
                    "interior equals isotropy",
                    g.to_string(),
                    is_isotropic(&g).to_string(),
                    isotropy_interior(&g).to_string(),
                );
            }
        }
    }
    r.cases += 2;
    if let Err(e) = restrict_twist(WordFilter::KernelEllA) {
        r.fail(
            "ker ell_a is a subgroupoid",
            "ker ell_a".into(),
            "ok".into(),
            e.to_string(),
        );
    }
    if restrict_twist(WordFilter::custom("length <= 2", |w| w.len() <= 2)).is_ok() {
        r.fail(
            "non-subgroupoid rejected",
            "length <= 2".into(),
            "NotSubgroupoid".into(),
            "ok".into(),
        );
    }
    r
}

fn obstruction(seed: u64, n: usize) -> Report {
    let mut r = Report::new("obstruction", seed, n);
    let full = FreeGroupTwist::full();
    let table = SeamTable::new(n.max(4));
    for w in Word::enumerate(4) {
        r.cases += 1;
        match table.certificate(&full, &w) {
            Ok(k) => {
                if k != chern_of_word(&w) {
                    r.fail(
                        "certificate = chern",
                        w.to_string(),
                        chern_of_word(&w).to_string(),
                        k.to_string(),
                    );
                }
                if w.len() <= 2 {
                    r.certificates.insert(w.to_string(), k);
                }
            }
            Err(e) => r.fail(
                "certificate",
                w.to_string(),
                chern_of_word(&w).to_string(),
                e.to_string(),
            ),
        }
    }
    r.cases += 1;
    let b: Word = "b".parse().expect("literal word");
    let restricted =
        restrict_twist(WordFilter::KernelEllA).and_then(|tw| table.certificate(&tw, &b));
    match restricted {
        Ok(k) => {
            r.certificates.insert("isotropy:b".into(), k);
            if k != 1 {
                r.fail(
                    "restricted twist at b",
                    "b".into(),
                    "1".into(),
                    k.to_string(),
                );
            }
        }
        Err(e) => r.fail(
            "restricted twist at b",
            "b".into(),
            "1".into(),
            e.to_string(),
        ),
    }
    r
}

fn kumjian(seed: u64, n: usize) -> Report {
    let mut rng = seeded_rng(seed);
    let mut r = Report::new("kumjian", seed, n);
    let tw = KumjianTwist;
    r.absorb(check_groupoid_axioms(&tw, &mut rng, n));
    r.absorb(check_twist_axioms(&tw, &mut rng, n));
    r.absorb(check_centrality(&tw, &mut rng, n));
    let eff = k_effectiveness_check(&mut rng, n);
    let ok = eff.passed();
    r.certificates.insert("0<-1".into(), eff.full_certificate);
    r.certificates
        .insert("1<-0".into(), k_obstruction_certificate(1, 0));
    r.certificates
        .insert("isotropy".into(), eff.isotropy_certificate);
    let summary = format!(
        "non-unit isotropy {}, isotropy certificate {}, full certificate {}",
        eff.non_unit_isotropy, eff.isotropy_certificate, eff.full_certificate
    );
    r.absorb(eff.checks);
    if !ok {
        r.fail(
            "effective with non-trivial twist",
            "kumjian".into(),
            "0 / 0 / non-zero".into(),
            summary,
        );
    }
    r
}

fn cocycle_case<C: TwoCocycle>(r: &mut Report, c: C, seed: u64, n: usize) {
    let mut rng = seeded_rng(seed);
    let name = c.name();
    r.absorb(check_cocycle_identity(&c, &mut rng, n));
    let tw = match build_cocycle_twist(c, &mut rng, 100) {
        Ok(tw) => tw,
        Err(e) => {
            r.fail("cocycle twist", name, "a twist".into(), e.to_string());
            return;
        }
    };
    let m = (n / 10).max(100);
    r.absorb(check_groupoid_axioms(&tw, &mut rng, m));
    r.absorb(check_twist_axioms(&tw, &mut rng, m));
    r.absorb(check_centrality(&tw, &mut rng, m));
    let sc = match cocycle_from_section(&tw, |g| tw.canonical_section(g), &mut rng, 100) {
        Ok(sc) => sc,
        Err(e) => {
            r.fail("canonical section", name, "a section".into(), e.to_string());
            return;
        }
    };
    for _ in 0..1000.min(n.max(1)) {
        r.cases += 1;
        let (a, b, _) = random_composable_arrows(&mut rng, 4);
        let (want, got) = (tw.cocycle().eval(&a, &b), sc.eval(&a, &b));
        if want != got {
            r.fail(
                "section recovers cocycle",
                format!("{name}: {a}, {b}"),
                want.to_string(),
                got.to_string(),
            );
        }
    }
    r.certificates.insert(
        format!("{name}:b"),
        tw.obstruction_certificate(&"b".parse().expect("literal word")),
    );
}

fn cocycle(seed: u64, n: usize) -> Report {
    let mut r = Report::new("cocycle", seed, n);
    cocycle_case(&mut r, ZeroCocycle, seed, n);
    cocycle_case(
        &mut r,
        BilinearCocycle {
            coeff: Rational::new(1, 3),
        },
        seed.wrapping_add(1),
        n,
    );
    r
}

fn minimality(seed: u64, n: usize) -> Report {
    let mut r = Report::new("minimality", seed, n);
    let n = n.max(1);
    let rep = minimality_report(n);
    r.cases += 1;
    r.max_gap = Some(rep.max_gap);
    if !rep.passed {
        r.fail(
            "golden orbit gap < 10/N",
            format!("N = {n}"),
            format!("< {:e}", rep.bound),
            format!("{:e}", rep.max_gap),
        );
    }
    r.cases += 1;
    let control = minimality_report_for(&Angle::frac(1, 7), &Angle::zero(), n);
    if control.passed {
        r.fail(
            "rational rotation exceeds 10/N",
            format!("rotation 1/7, N = {n}"),
            format!(">= {:e}", control.bound),
            format!("{:e}", control.max_gap),
        );
    }
    r
}

/// Every suite in order, each with its own stream seeded by `seed`.
fn all(seed: u64, samples: Option<usize>) -> Report {
    let mut r = Report::new("all", seed, samples.unwrap_or(0));
    for name in &SUITES[..SUITES.len() - 1] {
        let sub = run_suite(name, seed, samples).expect("known suite");
        r.cases += sub.cases;
        r.failures.extend(sub.failures.into_iter().map(|mut f| {
            f.case = format!("{name}/{}", f.case);
            f
        }));
        for (k, v) in sub.certificates {
            r.certificates.insert(format!("{name}/{k}"), v);
        }
        if sub.max_gap.is_some() {
            r.max_gap = sub.max_gap;
        }
    }
    r
}
