//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use twistlab::{run_suite, Report};
use twistlab_core::bundle::{conjugate, pairing, t_act, ClutchBundle, FiberPoint};
use twistlab_core::exact_arith::{sign_of, Angle, BasePoint, Rational};
use twistlab_core::freegroup::Word;
use twistlab_core::twistcore::sample::{random_angle, random_base_point, seeded_rng};
use twistlab_core::twistcore::{alpha, canonicalize, psi, psi_tuples, tuple_validate, ClassRep};

const SEED: u64 = 42;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t < limit {
        Ok(())
    } else {
        Err(format!(
            "took {:.1}s, limit {}s",
            t.as_secs_f64(),
            limit.as_secs()
        ))
    }
}

fn suite(name: &str, samples: usize) -> Result<Report, String> {
    let r = run_suite(name, SEED, Some(samples)).map_err(|e| e.to_string())?;
    if let Some(f) = r.failures.first() {
        return Err(format!(
            "{} failures; first: {} at {} (expected {}, got {})",
            r.failures.len(),
            f.case,
            f.witness,
            f.expected,
            f.got
        ));
    }
    Ok(r)
}

fn groupoid_axioms() -> Outcome {
    let start = Instant::now();
    let r = suite("axioms", 10_000)?;
    within(Duration::from_secs(30), start)?;
    Ok(format!("{} exact checks on 10000 triples", r.cases))
}

fn twist_axioms() -> Outcome {
    let start = Instant::now();
    let r = suite("twist", 10_000)?;
    within(Duration::from_secs(30), start)?;
    Ok(format!("{} exact checks on 10000 samples", r.cases))
}

fn psi_oracle() -> Outcome {
    let mut rng = seeded_rng(SEED);
    let words = Word::enumerate(3);
    let mut cases = 0usize;
    for w in &words {
        for w2 in &words {
            for _ in 0..100 {
                let p = random_base_point(&mut rng);
                let right = ClassRep::new(w2.clone(), p.clone(), random_angle(&mut rng));
                let left = ClassRep::new(w.clone(), alpha(w2, &p), random_angle(&mut rng));
                let expected =
                    ClassRep::new(w.multiply(w2), p, left.total_phase() + right.total_phase());
                let got = psi(&left, &right).map_err(|e| format!("{left} * {right}: {e}"))?;
                if got != expected {
                    return Err(format!("{left} * {right}: expected {expected}, got {got}"));
                }
                let t = psi_tuples(left.to_tuple(), right.to_tuple());
                tuple_validate(t.word().clone(), t.entries().to_vec())
                    .map_err(|e| format!("{left} * {right}: tuple invalid: {e}"))?;
                if canonicalize(&t) != expected {
                    return Err(format!("{left} * {right}: tuple path disagrees"));
                }
                cases += 1;
            }
        }
    }
    Ok(format!(
        "{} word pairs, {cases} products",
        words.len() * words.len()
    ))
}

fn isotropy() -> Outcome {
    let r = suite("isotropy", 100)?;
    Ok(format!("{} cases over words of length <= 6", r.cases))
}

fn obstruction() -> Outcome {
    let start = Instant::now();
    let r = suite("obstruction", 1024)?;
    within(Duration::from_secs(10), start)?;
    let k = r.certificates.get("isotropy:b").copied();
    if k != Some(1) {
        return Err(format!("restricted certificate at b is {k:?}, expected 1"));
    }
    Ok(format!(
        "restricted certificate 1; chern = certificate on {} words",
        r.cases - 1
    ))
}

fn kumjian() -> Outcome {
    let r = suite("kumjian", 1_000)?;
    let full = r.certificates.get("0<-1").copied();
    let iso = r.certificates.get("isotropy").copied();
    if full != Some(1) || iso != Some(0) {
        return Err(format!("full {full:?}, isotropy {iso:?}; expected 1 and 0"));
    }
    Ok("full certificate 1, isotropy certificate 0, effective".into())
}

fn cocycles() -> Outcome {
    let r = suite("cocycle", 10_000)?;
    Ok(format!(
        "{} cases for the zero and bilinear cocycles",
        r.cases
    ))
}

fn minimality() -> Outcome {
    let start = Instant::now();
    let r = suite("minimality", 100_000)?;
    within(Duration::from_secs(10), start)?;
    let gap = r.max_gap.ok_or("no gap reported")?;
    if gap >= 10.0 / 100_000.0 {
        return Err(format!("max gap {gap:e} >= 1e-4"));
    }
    Ok(format!(
        "max gap {gap:.3e} < 1e-4; rational control fails the bound"
    ))
}

fn grid() -> Vec<Rational> {
    let mut out = Vec::new();
    for d in 1i64..=12 {
        for n in -2 * d..=2 * d {
            let r = Rational::new(n, d);
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}

fn exactness() -> Outcome {
    let rationals = grid();
    let mut cases = 0usize;
    for q in &rationals {
        for m in (-5i64..=5).filter(|&m| m != 0) {
            let a = Angle::new(q.clone(), m);
            if a.is_rational() {
                return Err(format!("{a} reported rational"));
            }
            for r in &rationals {
                cases += 1;
                if a == Angle::rational(r.clone()) {
                    return Err(format!("{a} equals {r}"));
                }
                let d = &a - &Angle::rational(r.clone());
                if sign_of(d.q(), d.m()).is_eq() {
                    return Err(format!("{a} - {r} has sign zero"));
                }
            }
        }
    }
    let mut rng = seeded_rng(SEED);
    for i in 0..10_000 {
        let p: BasePoint = random_base_point(&mut rng);
        let bundle = ClutchBundle::new(i as i64 % 5 - 2);
        let b1 = FiberPoint::new(bundle, p.clone(), random_angle(&mut rng));
        let b2 = FiberPoint::new(bundle, p, random_angle(&mut rng));
        let (z, w) = (random_angle(&mut rng), random_angle(&mut rng));
        let pr = pairing(&b1, &b2).map_err(|e| e.to_string())?;
        let moved = pairing(&t_act(&z, &b1), &t_act(&w, &b2)).map_err(|e| e.to_string())?;
        let ok = moved == &(&z - &w) + &pr
            && pairing(&b2, &b1).ok() == Some(-&pr)
            && t_act(&pr, &b2) == b1
            && pairing(&conjugate(&b1), &conjugate(&b2)).ok() == Some(-&pr);
        if !ok {
            return Err(format!("pairing relations fail at {b1}, {b2}"));
        }
        cases += 1;
    }
    Ok(format!("{cases} exact checks"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("groupoid axioms", groupoid_axioms),
        ("twist axioms", twist_axioms),
        ("psi oracle", psi_oracle),
        ("isotropy", isotropy),
        ("obstruction certificate", obstruction),
        ("kumjian contrast", kumjian),
        ("cocycle machinery", cocycles),
        ("minimality", minimality),
        ("exactness", exactness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
