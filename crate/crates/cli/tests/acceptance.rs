//! The twelve acceptance criteria, one pass/fail line each.
//!
//! Run with `cargo test -p paritydeg-cli --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::Instant;

use paritydeg::degree::{
    degree_perturbed, degree_regular, degree_via_chi, perturbation_corpus, regular_corpus,
    verify_degree_axioms,
};
use paritydeg::parity::{parity_local_at, parity_with_spectrum};
use paritydeg::random::{stream_rng, CoefficientBounds};
use paritydeg::verify::{
    generate_random_path, random_interval, run, Campaign, CheckName, PathRequest,
};
use paritydeg::{AdmissiblePath, Sign};

const SEED: u64 = 42;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// Runs `n` instances of each check and requires every one to pass.
fn campaign(checks: &[(CheckName, usize)]) -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for &(check, n) in checks {
        let report = run(&Campaign::new(SEED, n, vec![check])).expect("valid campaign");
        let s = &report.checks[0];
        let good = s.passed == n;
        ok &= good;
        let mut d = format!("{check} {}/{n}", s.passed);
        if let Some(w) = &s.first_failure {
            d.push_str(&format!(" (first failure #{}: {})", w.instance, w.message));
        }
        if s.skipped > 0 {
            d.push_str(&format!(" ({} skipped)", s.skipped));
        }
        details.push(d);
    }
    outcome(ok, details.join(", "))
}

fn criterion_1() -> Outcome {
    campaign(&[(CheckName::ChiAgreement, 200)])
}

fn criterion_2() -> Outcome {
    campaign(&[
        (CheckName::ChiProduct, 200),
        (CheckName::ChiNormalization, 25),
    ])
}

fn criterion_3() -> Outcome {
    campaign(&[(CheckName::MalgEquivalence, 100)])
}

fn criterion_4() -> Outcome {
    campaign(&[(CheckName::ParityOracle, 500)])
}

fn criterion_5() -> Outcome {
    campaign(&[
        (CheckName::ParityProduct, 100),
        (CheckName::ParitySplit, 100),
        (CheckName::ParityHomotopy, 100),
    ])
}

/// Every eigenvalue of 200 random admissible paths: local parity is -1
/// exactly when det changes sign across the certified window.
fn criterion_6() -> Outcome {
    let mut eigenvalues = 0;
    let mut failures = Vec::new();
    for i in 0..200u64 {
        let mut rng = stream_rng(SEED, 6, i);
        let iv = random_interval(&mut rng);
        let n = 1 + (i as usize) % 3;
        let degree = 1 + (i as usize) % 3;
        let path = generate_random_path(
            &mut rng,
            n,
            degree,
            CoefficientBounds::default(),
            &PathRequest::Admissible(iv.clone()),
        );
        let ap = AdmissiblePath::new(path.clone(), iv).expect("admissible by construction");
        let (_, spectrum) = parity_with_spectrum(&ap).expect("finite spectrum");
        for ev in &spectrum.eigenvalues {
            eigenvalues += 1;
            let local = parity_local_at(&path, ev).expect("isolated eigenvalue");
            let lo = Sign::of(&path.det_at(local.window.a()));
            let hi = Sign::of(&path.det_at(local.window.b()));
            let change = lo.is_some() && hi.is_some() && lo != hi;
            if (local.value == Sign::Minus) != change {
                failures.push(format!("path #{i} at {:?}", ev.location));
            }
        }
    }
    outcome(
        failures.is_empty() && eigenvalues > 0,
        format!(
            "{eigenvalues} eigenvalues, {} mismatches{}",
            failures.len(),
            failures
                .first()
                .map(|f| format!(" ({f})"))
                .unwrap_or_default()
        ),
    )
}

fn criterion_7() -> Outcome {
    campaign(&[(CheckName::OrientationC3, 200)])
}

fn criterion_8() -> Outcome {
    let corpus = regular_corpus();
    let mut bad = Vec::new();
    for e in &corpus {
        let regular = degree_regular(&e.tern);
        let chi = degree_via_chi(&e.tern, None);
        if regular != Ok(e.expected) || chi != Ok(e.expected) {
            bad.push(format!(
                "{}: regular {regular:?}, chi {chi:?}, expected {}",
                e.name, e.expected
            ));
        }
    }
    let random = campaign(&[(CheckName::DegreeFormulaEquivalence, 100)]);
    outcome(
        bad.is_empty() && corpus.len() >= 20 && random.passed,
        format!(
            "corpus {}/{} hand values, {}",
            corpus.len() - bad.len(),
            corpus.len(),
            random.detail
        ) + &bad.first().map(|b| format!(" ({b})")).unwrap_or_default(),
    )
}

fn criterion_9() -> Outcome {
    let terns: Vec<_> = regular_corpus().into_iter().map(|e| e.tern).collect();
    let r = verify_degree_axioms(&terns, SEED).expect("axiom suite runs");
    let covered = |t: &paritydeg::degree::AxiomTally| t.failed == 0 && t.passed == terns.len();
    let ok = r.normalization.failed == 0
        && r.normalization.passed >= 100
        && covered(&r.additivity)
        && covered(&r.excision)
        && covered(&r.empty_set)
        && r.homotopy.failed == 0
        && r.homotopy.passed >= 20;
    let random = campaign(&[(CheckName::DegreeAxioms, 50)]);
    outcome(
        ok && random.passed,
        format!(
            "normalization {}, additivity {}, excision {}, empty set {}, homotopy {} certified ({} uncertified), {}{}",
            r.normalization.passed,
            r.additivity.passed,
            r.excision.passed,
            r.empty_set.passed,
            r.homotopy.passed,
            r.homotopy.skipped,
            random.detail,
            r.witnesses.first().map(|w| format!(" ({w})")).unwrap_or_default()
        ),
    )
}

fn criterion_10() -> Outcome {
    campaign(&[(CheckName::LsFormula, 100)])
}

fn criterion_11() -> Outcome {
    let corpus = perturbation_corpus();
    let mut bad = Vec::new();
    for (i, e) in corpus.iter().enumerate() {
        let t = &e.tern;
        let a = degree_perturbed(t.map(), t.domain(), t.orientation(), i as u64);
        let b = degree_perturbed(t.map(), t.domain(), t.orientation(), 1000 + i as u64);
        match (&a, &b) {
            (Ok(a), Ok(b))
                if a.degree == e.expected
                    && b.degree == e.expected
                    && a.samples[0].x0 != b.samples[0].x0 => {}
            _ => bad.push(format!(
                "{}: {:?} / {:?}",
                e.name,
                a.map(|r| r.degree),
                b.map(|r| r.degree)
            )),
        }
    }
    let square = corpus
        .iter()
        .any(|e| e.name == "critical-square" && e.expected == 0);
    let cube = corpus
        .iter()
        .any(|e| e.name == "critical-cube" && e.expected == 1);
    outcome(
        bad.is_empty() && square && cube,
        format!(
            "{}/{} corpus terns stable over 4 regular values each{}",
            corpus.len() - bad.len(),
            corpus.len(),
            bad.first().map(|b| format!(" ({b})")).unwrap_or_default()
        ),
    )
}

fn criterion_12() -> Outcome {
    let dir = tempfile::tempdir().expect("temp dir");
    let exe = env!("CARGO_BIN_EXE_paritydeg");
    let mut outputs = Vec::new();
    for k in 0..2 {
        let file = dir.path().join(format!("report-{k}.json"));
        let out = Command::new(exe)
            .args([
                "verify", "--seed", "42", "--n", "50", "--checks", "all", "--out",
            ])
            .arg(&file)
            .output()
            .expect("binary runs");
        let saved = std::fs::read(&file).unwrap_or_default();
        outputs.push((out.status.code(), out.stdout, saved));
    }
    let same = outputs[0] == outputs[1];
    let exit = outputs[0].0;
    outcome(
        same && exit == Some(0) && !outputs[0].2.is_empty(),
        format!(
            "two runs of `verify --seed 42 --n 50 --checks all`: exit {exit:?}, text and JSON reports {}",
            if same { "byte-identical" } else { "DIFFER" }
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("chi cross-method agreement", criterion_1),
        ("multiplicity axioms", criterion_2),
        ("classical multiplicity equivalence", criterion_3),
        ("parity oracle", criterion_4),
        ("parity axioms", criterion_5),
        ("delta-isolated equivalence", criterion_6),
        ("orientation identity", criterion_7),
        ("degree formula equivalence", criterion_8),
        ("degree axioms", criterion_9),
        ("Leray-Schauder formula", criterion_10),
        ("perturbation stability", criterion_11),
        ("determinism", criterion_12),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let o = f();
        if !o.passed {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<36} {} [{:.1}s] {}",
            i + 1,
            name,
            if o.passed { "PASS" } else { "FAIL" },
            t0.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
