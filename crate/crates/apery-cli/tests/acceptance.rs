//! Acceptance gate: one test per criterion, each emitting a single
//! `ACCEPTANCE criterion-N: PASS` line on success. Exact arithmetic
//! everywhere — a single failed congruence anywhere is a regression.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use apery_core::arith::{binom_exact, ModCtx};
use apery_core::sequences::{
    bilinear_sum_identity, closed_window, int_window, series_square_check, shift_identity_check,
    w_poly, RecurrenceSpec, SequenceId, RECURRENT,
};
use apery_core::{evaluate, weighted_sum, Status};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Run `apery verify` into a temp report, assert exit 0, and hand back the
/// parsed summary object plus the wall time.
fn verify(args: &[&str], jobs: &str) -> (serde_json::Value, Duration) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_apery"))
        .arg("verify")
        .args(args)
        .args(["--jobs", jobs, "--output", path.to_str().unwrap()])
        .env_remove("APERY_JOBS")
        .output()
        .expect("spawn apery");
    let elapsed = started.elapsed();
    assert_eq!(
        out.status.code(),
        Some(0),
        "verify {:?} failed:\n{}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&path).unwrap();
    let last = text.lines().last().unwrap();
    let v: serde_json::Value = serde_json::from_str(last).unwrap();
    (v["summary"].clone(), elapsed)
}

fn assert_clean(summary: &serde_json::Value, what: &str) {
    assert_eq!(summary["failed"].as_u64(), Some(0), "{}: {}", what, summary);
    assert_eq!(summary["indeterminate"].as_u64(), Some(0), "{}: {}", what, summary);
}

#[test]
fn criterion_1_dual_definitions() {
    let started = Instant::now();
    for id in &RECURRENT {
        assert_eq!(
            closed_window(id, 200),
            int_window(id, 200),
            "closed sum and recurrence disagree for {}",
            id.tag()
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {:?}", elapsed);
    println!(
        "ACCEPTANCE criterion-1: PASS — ten sequences, both definitions, n <= 200 ({:?})",
        elapsed
    );
}

#[test]
fn criterion_2_exact_identities() {
    let started = Instant::now();

    // binomial shift: 20 deterministic rational pairs, all n <= 40
    let mut state = 0x2545f4914f6cdd1du64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state
    };
    for _ in 0..20 {
        let x = rat((next() % 51) as i64 - 25, (next() % 8 + 1) as i64);
        let y = rat((next() % 51) as i64 - 25, (next() % 8 + 1) as i64);
        for n in 0..=40u64 {
            assert!(shift_identity_check(n, &x, &y), "n={} x={} y={}", n, x, y);
        }
    }

    // collapse at the origin: zero unless 3 | n, else a binomial product
    for n in 0..=60u64 {
        let v = w_poly(n, &BigRational::zero());
        let want = if n % 3 == 0 {
            let k = (n / 3) as i64;
            BigRational::from_integer(binom_exact(2 * (n / 3), k) * binom_exact(n, k))
        } else {
            BigRational::zero()
        };
        assert_eq!(v, want, "n={}", n);
    }

    // bilinear tail identity for the ten sequences and a Legendre instance
    let mut specs: Vec<RecurrenceSpec> = RECURRENT
        .iter()
        .map(|id| RecurrenceSpec::for_sequence(id).unwrap())
        .collect();
    specs.push(RecurrenceSpec::legendre(&rat(3, 5)));
    for spec in &specs {
        for n in 1..=100u64 {
            assert!(bilinear_sum_identity(spec, n), "n={}", n);
        }
    }

    assert!(series_square_check(30));

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {:?}", elapsed);
    println!("ACCEPTANCE criterion-2: PASS — shift/collapse/bilinear/series identities ({:?})", elapsed);
}

#[test]
fn criterion_3_theorem_suite() {
    let suites: [&[&str]; 3] = [
        &["--claims", "thm-2.1-a,thm-2.1-b,thm-2.1-c,thm-2.2", "--primes", "5:2000"],
        &[
            "--claims",
            "thm-2.3,thm-2.4,thm-2.5,thm-2.6,thm-2.7,thm-2.8,thm-2.9,thm-2.10,cong-2.1,cong-2.2",
            "--primes",
            "3:1000",
        ],
        &["--claims", "lem-2.2,lem-2.4,thm-2.11,cor-2.1", "--primes", "3:300"],
    ];
    let mut single = Duration::ZERO;
    for args in suites {
        let (summary, t) = verify(args, "1");
        assert_clean(&summary, "theorem suite, single worker");
        single += t;
    }
    assert!(single < Duration::from_secs(300), "single-threaded took {:?}", single);

    let mut eight = Duration::ZERO;
    for args in suites {
        let (summary, t) = verify(args, "8");
        assert_clean(&summary, "theorem suite, eight workers");
        eight += t;
    }
    assert!(eight < Duration::from_secs(60), "eight workers took {:?}", eight);
    println!(
        "ACCEPTANCE criterion-3: PASS — mod-p theorems, zero failures (1 worker {:?}, 8 workers {:?})",
        single, eight
    );
}

#[test]
fn criterion_4_reflection_and_lucas() {
    let (summary, _) = verify(&["--claims", "thm-3.1,cor-3.1", "--primes", "3:200"], "1");
    assert_clean(&summary, "reflection");
    let (summary, _) = verify(
        &["--claims", "thm-3.2,cor-3.2", "--primes", "3:13", "--heavy-max", "13"],
        "1",
    );
    assert_clean(&summary, "lucas");
    let (summary, _) = verify(&["--claims", "thm-3.3", "--primes", "3:100"], "1");
    assert_clean(&summary, "bilinear tail mod p^r");
    println!("ACCEPTANCE criterion-4: PASS — reflection, Lucas digits, mod p^r tails");
}

#[test]
fn criterion_5_conjecture_suite() {
    let mut total = Duration::ZERO;
    let (summary, t) = verify(&["--claims", "conj-4.1,conj-4.2", "--primes", "5:500"], "8");
    assert_clean(&summary, "conjectures mod p^4/p^3");
    total += t;
    // includes heavy conj-4.4/conj-4.5, capped at the default bound 31
    let (summary, t) = verify(&["--claims", "conjectures", "--primes", "3:300"], "8");
    assert_clean(&summary, "conjecture corpus");
    total += t;
    assert!(total < Duration::from_secs(600), "took {:?}", total);
    println!(
        "ACCEPTANCE criterion-5: PASS — conjecture corpus, zero failures, zero indeterminates ({:?})",
        total
    );
}

#[test]
fn criterion_6_spot_anchors() {
    let r = evaluate("thm-2.2", 13).unwrap();
    assert_eq!(r.status, Status::Verified);
    assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("10", "10"));
    assert!(r.witness.as_deref().unwrap().contains("(3,2)"));

    let ctx = ModCtx::new(7, 1);
    let s = weighted_sum(&SequenceId::W, &rat(-3, 1), 0, 1, false, &ctx);
    assert_eq!(s.residue(&ctx), Some(6));

    let out = Command::new(env!("CARGO_BIN_EXE_apery"))
        .args(["seq", "--id", "W", "--n", "0:3"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1, -3, 9, -21\n");

    let out = Command::new(env!("CARGO_BIN_EXE_apery")).arg("list").output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.lines().count() >= 40);
    assert!(text.contains("thm-2.1-a") && text.contains("conj-4.26-1"));

    println!("ACCEPTANCE criterion-6: PASS — spot anchors and registry coverage");
}
