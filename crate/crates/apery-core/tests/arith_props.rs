//! Property tests for the residue layer: binomials mod p^k against exact
//! big-integer binomials, Lucas digits against exact values, Jacobi symbol
//! laws, and the valuation-tracking residue algebra.

use num_bigint::BigInt;
use num_rational::BigRational;

use apery_core::arith::{
    binom_exact, is_prime, jacobi, lucas_binom, mod_inv, pow_mod, ModCtx, PrimeRange,
};
use proptest::prelude::*;

const PRIMES: [u64; 4] = [3, 5, 7, 13];

proptest! {
    #[test]
    fn binom_mod_matches_exact(pi in 0usize..4, k in 1u32..=3, nr in 0u64..10_000, mr in 0u64..10_000) {
        let p = PRIMES[pi];
        let n = nr % (10 * p);
        let m = mr % (n + 1);
        let ctx = ModCtx::new(p, k);
        let exact = ctx.reduce_bigint(&binom_exact(n, m as i64));
        let got = ctx.binom_mod(n, m).residue(&ctx).expect("binomials are p-integral");
        prop_assert_eq!(got, exact);
    }

    #[test]
    fn lucas_matches_exact_mod_p(pi in 0usize..4, n in 0u64..2000, mr in 0u64..2000) {
        let p = PRIMES[pi];
        let m = mr % (n + 1);
        let ctx = ModCtx::new(p, 1);
        let exact = ctx.reduce_bigint(&binom_exact(n, m as i64));
        prop_assert_eq!(lucas_binom(n, m, p), exact);
    }

    #[test]
    fn jacobi_is_multiplicative(a in -300i64..300, b in -300i64..300, nr in 0u64..200) {
        let n = 2 * nr + 1; // odd modulus
        prop_assert_eq!(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n));
    }

    #[test]
    fn jacobi_euler_criterion(a in -500i64..500, pr in 0u64..300) {
        let p = (pr..).map(|i| 3 + 2 * i).find(|&n| is_prime(n)).unwrap();
        let r = a.rem_euclid(p as i64) as u64;
        let e = pow_mod(r, (p - 1) / 2, p);
        let want = if e == 0 { 0 } else if e == 1 { 1 } else { -1 };
        prop_assert_eq!(jacobi(a, p), want);
    }

    #[test]
    fn pvalued_mul_add_match_exact(
        pi in 0usize..4,
        k in 1u32..=4,
        a1 in -200i64..200, d1 in 1i64..40,
        a2 in -200i64..200, d2 in 1i64..40,
    ) {
        let p = PRIMES[pi];
        prop_assume!(d1 % p as i64 != 0 && d2 % p as i64 != 0);
        let ctx = ModCtx::new(p, k);
        let q1 = BigRational::new(BigInt::from(a1), BigInt::from(d1));
        let q2 = BigRational::new(BigInt::from(a2), BigInt::from(d2));
        let prod = ctx.reduce(&(&q1 * &q2)).residue(&ctx);
        let got_prod = ctx.reduce(&q1).mul(&ctx.reduce(&q2), &ctx).residue(&ctx);
        prop_assert_eq!(got_prod, prod);
        let sum = ctx.reduce(&(&q1 + &q2)).residue(&ctx);
        let got_sum = ctx.reduce(&q1).add(&ctx.reduce(&q2), &ctx).residue(&ctx);
        prop_assert_eq!(got_sum, sum);
    }

    #[test]
    fn pvalued_inverse_roundtrip(pi in 0usize..4, k in 1u32..=4, a in 1i64..400) {
        let p = PRIMES[pi];
        prop_assume!(a % p as i64 != 0);
        let ctx = ModCtx::new(p, k);
        let q = BigRational::from_integer(BigInt::from(a));
        let v = ctx.reduce(&q);
        let back = v.inv(&ctx).unwrap().mul(&v, &ctx);
        prop_assert_eq!(back.residue(&ctx), Some(1 % ctx.modulus()));
    }

    #[test]
    fn mod_inv_is_inverse(a in 1u64..5000, m in 2u64..5000) {
        match mod_inv(a % m, m) {
            Some(i) => prop_assert_eq!((a % m) * i % m, 1 % m),
            None => {
                // gcd > 1: verify by brute force on small m
                let g = gcd(a % m, m);
                prop_assert!(g > 1 || a % m == 0);
            }
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn prime_range_respects_exclusions() {
    let r = PrimeRange::new(2, 30).exclude(&[3, 11]);
    let ps = apery_core::arith::primes_in(&r);
    assert_eq!(ps, vec![2, 5, 7, 13, 17, 19, 23, 29]);
}
