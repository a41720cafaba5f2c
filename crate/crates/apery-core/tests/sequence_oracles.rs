//! Oracle tests for the sequence layer: every recurrent sequence is
//! generated two independent ways (closed binomial sum vs three-term
//! recurrence), anchored against well-known prefixes, and the exact
//! polynomial identities are checked over ranges.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use apery_core::arith::binom_exact;
use apery_core::sequences::{
    bilinear_sum_identity, closed_window, int_window, recurrence_terms, seq_exact,
    series_square_check, shift_identity_check, w_poly, RecurrenceSpec, SequenceId, RECURRENT,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn dual_definitions_agree_to_200() {
    for id in RECURRENT {
        let closed = closed_window(&id, 200);
        let recur = int_window(&id, 200);
        assert_eq!(closed.len(), recur.len());
        for n in 0..closed.len() {
            assert_eq!(closed[n], recur[n], "{} at n={}", id.tag(), n);
        }
    }
}

#[test]
fn known_prefixes() {
    let cases: [(&str, [i64; 5]); 6] = [
        ("A", [1, 5, 73, 1445, 33001]),
        ("A'", [1, 3, 19, 147, 1251]),
        ("f", [1, 2, 10, 56, 346]),
        ("D", [1, 4, 28, 256, 2716]),
        ("a", [1, 3, 15, 93, 639]),
        ("W", [1, -3, 9, -21, 9]),
    ];
    for (tag, want) in cases {
        let id = SequenceId::parse(tag).unwrap();
        for (n, w) in want.iter().enumerate() {
            assert_eq!(seq_exact(&id, n as u64), BigInt::from(*w), "{}_{}", tag, n);
        }
    }
    // the two next W values pin the sign pattern
    assert_eq!(seq_exact(&SequenceId::W, 5), BigInt::from(297));
    assert_eq!(seq_exact(&SequenceId::W, 6), BigInt::from(-2421));
}

#[test]
fn w_at_zero_collapses_to_central_binomials() {
    // only the 3k = n term of W_n(x) survives at x = 0
    let zero = BigRational::zero();
    for n in 0..=60u64 {
        let got = w_poly(n, &zero);
        let want = if n % 3 != 0 {
            BigRational::zero()
        } else {
            let k = n / 3;
            BigRational::from_integer(binom_exact(2 * k, k as i64) * binom_exact(n, k as i64))
        };
        assert_eq!(got, want, "W_{}(0)", n);
    }
}

#[test]
fn shift_identity_random_rationals() {
    // deterministic LCG so the 20 pairs are reproducible
    let mut state = 0x2545f4914f6cdd1du64;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as i64
    };
    for _ in 0..20 {
        let x = rat(next() % 50 - 25, next() % 9 + 1);
        let y = rat(next() % 50 - 25, next() % 9 + 1);
        for n in 0..=40u64 {
            assert!(shift_identity_check(n, &x, &y), "n={} x={} y={}", n, x, y);
        }
    }
}

#[test]
fn bilinear_identity_to_100() {
    for id in RECURRENT {
        let spec = RecurrenceSpec::for_sequence(&id).unwrap();
        for n in 1..=100u64 {
            assert!(bilinear_sum_identity(&spec, n), "{} at n={}", id.tag(), n);
        }
    }
    // the Legendre instance of the same recurrence shape
    for x in [rat(3, 5), rat(-7, 2), rat(12, 1)] {
        let spec = RecurrenceSpec::legendre(&x);
        for n in 1..=100u64 {
            assert!(bilinear_sum_identity(&spec, n), "P at n={} x={}", n, x);
        }
    }
}

#[test]
fn series_square_to_30() {
    assert!(series_square_check(30));
}

#[test]
fn recurrence_terms_match_windows() {
    for id in RECURRENT {
        let spec = RecurrenceSpec::for_sequence(&id).unwrap();
        let terms = recurrence_terms(&spec, &spec.eval_b(0), 50);
        let win = int_window(&id, 50);
        for n in 0..=50usize {
            assert!(terms[n].is_integer(), "{} term {}", id.tag(), n);
            assert_eq!(terms[n].to_integer(), win[n], "{} at {}", id.tag(), n);
        }
    }
}

#[test]
fn fourth_power_window_is_closed_sum() {
    let win = closed_window(&SequenceId::FourthPower, 30);
    for n in 0..=30u64 {
        let direct: BigInt = (0..=n).map(|k| binom_exact(n, k as i64).pow(4)).sum();
        assert_eq!(win[n as usize], direct, "g4({})", n);
    }
}
