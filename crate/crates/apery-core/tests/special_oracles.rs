//! Oracles for the special-values layer: Bernoulli and Euler-family numbers
//! recomputed exactly (rational/big-integer recurrences plus textbook
//! values), Legendre polynomials mod p vs their exact rational values,
//! quadratic form representations, and character sums recomputed via the
//! Euler criterion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use apery_core::arith::{binom_exact, is_prime, jacobi, pow_mod, reduce_signed, ModCtx};
use apery_core::special::{
    bernoulli_mod, binom_product_sum, cubic_char_sum, euler_mod, legendre_poly, legendre_poly_mod,
    quad_rep, BinomKind, EulerKind, QuadForm,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// B_0..B_top as exact rationals: B_m = -(1/(m+1)) Σ_{j<m} C(m+1,j) B_j.
fn bernoulli_exact(top: usize) -> Vec<BigRational> {
    let mut b = vec![BigRational::one()];
    for m in 1..=top {
        let mut s = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            s += BigRational::from_integer(binom_exact(m as u64 + 1, j as i64)) * bj;
        }
        b.push(-s / BigRational::from_integer(BigInt::from(m as u64 + 1)));
    }
    b
}

#[test]
fn bernoulli_mod_matches_exact_rationals() {
    let b = bernoulli_exact(98);
    // textbook values pin the exact recurrence itself
    assert_eq!(b[2], rat(1, 6));
    assert_eq!(b[4], rat(-1, 30));
    assert_eq!(b[12], rat(-691, 2730));
    for p in (5..=101u64).filter(|&p| is_prime(p)) {
        let ctx = ModCtx::new(p, 1);
        let want = ctx.reduce(&b[(p - 3) as usize]).residue(&ctx).unwrap();
        assert_eq!(bernoulli_mod(p), want, "B_(p-3) at p={}", p);
    }
}

/// The even-index E/U families as exact integers:
/// X_n = -mult * Σ_{k=1}^{n/2} C(n,2k) X_{n-2k}, X_0 = 1.
fn euler_family_exact(mult: i64, top: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); top + 1];
    e[0] = BigInt::one();
    for n in (2..=top).step_by(2) {
        let mut s = BigInt::zero();
        for k in 1..=n / 2 {
            s += binom_exact(n as u64, (2 * k) as i64) * &e[n - 2 * k];
        }
        e[n] = -BigInt::from(mult) * s;
    }
    e
}

#[test]
fn euler_mod_matches_exact_integers() {
    let ee = euler_family_exact(1, 98);
    let uu = euler_family_exact(2, 98);
    // classical Euler numbers as an independent anchor
    assert_eq!(ee[2], BigInt::from(-1));
    assert_eq!(ee[4], BigInt::from(5));
    assert_eq!(ee[6], BigInt::from(-61));
    assert_eq!(ee[8], BigInt::from(1385));
    assert_eq!(ee[10], BigInt::from(-50521));
    for p in (5..=101u64).filter(|&p| is_prime(p)) {
        let ctx = ModCtx::new(p, 1);
        let i = (p - 3) as usize;
        assert_eq!(euler_mod(p, EulerKind::E), ctx.reduce_bigint(&ee[i]), "E at {}", p);
        assert_eq!(euler_mod(p, EulerKind::U), ctx.reduce_bigint(&uu[i]), "U at {}", p);
    }
}

#[test]
fn legendre_mod_matches_exact() {
    for p in [5u64, 13] {
        for k in 1..=2u32 {
            let ctx = ModCtx::new(p, k);
            // index stays below p: the recurrence divides by n
            for n in 0..p {
                for x in 0..p {
                    let exact = legendre_poly(n, &rat(x as i64, 1));
                    let want = ctx.reduce(&exact).residue(&ctx).unwrap();
                    assert_eq!(legendre_poly_mod(n, x, &ctx), want, "P_{}({}) p={}", n, x, p);
                }
            }
        }
    }
}

#[test]
fn quad_rep_solves_the_form_and_normalizes() {
    for p in (3..=500u64).filter(|&p| is_prime(p)) {
        for &(s, a, d) in QuadForm::catalogue() {
            let form = QuadForm::new(s, a, d);
            if let Some(rep) = quad_rep(p, &form) {
                let lhs = BigInt::from(form.s) * BigInt::from(p);
                let rhs = BigInt::from(form.a) * rep.x * rep.x + BigInt::from(form.d) * rep.y * rep.y;
                assert_eq!(lhs, rhs, "p={} form {} {} {}", p, form.s, form.a, form.d);
                assert!(rep.y >= 0);
            }
        }
    }
}

#[test]
fn quad_rep_representability_criteria() {
    // classical representability criteria for the forms with one class
    // per genus; quad_rep must find a solution exactly on these classes
    for p in (5..=2000u64).filter(|&p| is_prime(p)) {
        let cases: [(QuadForm, bool); 7] = [
            (QuadForm::new(1, 1, 1), p % 4 == 1),
            (QuadForm::new(1, 1, 2), matches!(p % 8, 1 | 3)),
            (QuadForm::new(1, 1, 3), p % 3 == 1),
            (QuadForm::new(4, 1, 27), p % 3 == 1),
            (QuadForm::new(1, 1, 6), matches!(p % 24, 1 | 7)),
            (QuadForm::new(1, 2, 3), matches!(p % 24, 5 | 11)),
            (QuadForm::new(1, 1, 9), p % 12 == 1),
        ];
        for (form, representable) in cases {
            assert_eq!(
                quad_rep(p, &form).is_some(),
                representable,
                "p={} form ({},{},{})",
                p,
                form.s,
                form.a,
                form.d
            );
        }
    }
    // spot anchor: 13 = 9 + 4 with x odd, and 4*7 = 1 + 27 with L = 1 mod 3
    let r = quad_rep(13, &QuadForm::new(1, 1, 1)).unwrap();
    assert_eq!((r.x, r.y), (3, 2));
    let r = quad_rep(7, &QuadForm::new(4, 1, 27)).unwrap();
    assert_eq!((r.x, r.y), (1, 1));
}

#[test]
fn cubic_char_sum_matches_euler_criterion() {
    for p in [7u64, 11, 13, 17, 19, 23] {
        for a in [-5i64, 0, 3, 9, 100] {
            for b in [-7i64, 1, 4, 50] {
                let mut want = 0i64;
                for x in 0..p as i128 {
                    let t = (x * x * x + a as i128 * x + b as i128).rem_euclid(p as i128) as u64;
                    if t == 0 {
                        continue;
                    }
                    want += if pow_mod(t, (p - 1) / 2, p) == 1 { 1 } else { -1 };
                }
                assert_eq!(cubic_char_sum(a, b, p), want, "p={} a={} b={}", p, a, b);
            }
        }
    }
}

#[test]
fn binom_product_sums_match_rational_recount() {
    let kinds = [BinomKind::CCC, BinomKind::CC3, BinomKind::CC4, BinomKind::C36];
    for p in [5u64, 7, 11] {
        for k in 1..=2u32 {
            let ctx = ModCtx::new(p, k);
            for m in [1i64, 4, -8, 81] {
                for kind in kinds {
                    let mut exact = BigRational::zero();
                    for j in 0..p {
                        let c2 = binom_exact(2 * j, j as i64);
                        let prod = match kind {
                            BinomKind::CCC => c2.pow(3),
                            BinomKind::CC3 => c2.pow(2) * binom_exact(3 * j, j as i64),
                            BinomKind::CC4 => c2.pow(2) * binom_exact(4 * j, (2 * j) as i64),
                            BinomKind::C36 => {
                                c2 * binom_exact(3 * j, j as i64) * binom_exact(6 * j, (3 * j) as i64)
                            }
                        };
                        exact += BigRational::new(prod, BigInt::from(m).pow(j as u32));
                    }
                    let want = ctx.reduce(&exact).residue(&ctx).unwrap();
                    let got = binom_product_sum(kind, &rat(m, 1), &ctx).residue(&ctx).unwrap();
                    assert_eq!(got, want, "p={} k={} m={} {:?}", p, k, m, kind);
                }
            }
        }
    }
}

#[test]
fn jacobi_agrees_with_reduce_signed_square_test() {
    // (a/p) = 1 exactly when a is a nonzero square mod p
    for p in [5u64, 11, 17, 23] {
        let squares: std::collections::BTreeSet<u64> =
            (1..p).map(|x| x * x % p).collect();
        for a in -30i64..30 {
            let r = reduce_signed(a, p);
            let want = if r == 0 {
                0
            } else if squares.contains(&r) {
                1
            } else {
                -1
            };
            assert_eq!(jacobi(a, p), want, "a={} p={}", a, p);
        }
    }
}
