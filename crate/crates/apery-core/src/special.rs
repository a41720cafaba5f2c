//! Number-theoretic side objects: Bernoulli, Euler and U numbers mod p,
//! Legendre polynomials over exact rationals and over Z/p^k, cubic
//! character sums, normalized binary-quadratic-form representations, and
//! the truncated central-binomial product sums.

use alloc::vec;
use alloc::vec::Vec;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::{is_prime, mod_inv, mul_mod, ModCtx, PValued};

/// B_{p-3} mod p from the recurrence B_0 = 1, Σ_{k=0}^{n-1} C(n,k) B_k = 0
/// (n >= 2), run entirely mod p; every inverse taken is of an index < p.
pub fn bernoulli_mod(p: u64) -> u64 {
    assert!(p > 3 && is_prime(p), "needs a prime p > 3");
    let top = (p - 3) as usize;
    let mut b = vec![0u64; top + 1];
    b[0] = 1;
    // row holds C(m+1, .) mod p while computing B_m
    let mut row: Vec<u64> = vec![1, 2, 1];
    for m in 1..=top {
        let mut s = 0u64;
        for k in 0..m {
            s = (s + mul_mod(row[k], b[k], p)) % p;
        }
        let minv = mod_inv((m as u64 + 1) % p, p).expect("m + 1 < p");
        b[m] = mul_mod((p - s) % p, minv, p);
        row.push(1);
        let len = row.len();
        for k in (1..len - 1).rev() {
            row[k] = (row[k] + row[k - 1]) % p;
        }
    }
    b[top]
}

/// The two integer recurrences of the Euler family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EulerKind {
    /// E_n = -Σ_{k=1}^{[n/2]} C(n,2k) E_{n-2k}, E_0 = 1
    E,
    /// U_n = -2 Σ_{k=1}^{[n/2]} C(n,2k) U_{n-2k}, U_0 = 1
    U,
}

/// E_{p-3} or U_{p-3} mod p; odd-index values are zero by the recurrences.
pub fn euler_mod(p: u64, kind: EulerKind) -> u64 {
    assert!(p > 3 && is_prime(p), "needs a prime p > 3");
    let top = (p - 3) as usize;
    let mult = match kind {
        EulerKind::E => 1,
        EulerKind::U => 2,
    };
    let mut e = vec![0u64; top + 1];
    e[0] = 1;
    let mut row: Vec<u64> = vec![1]; // C(0, .)
    for n in 1..=top {
        row.push(1);
        let len = row.len();
        for k in (1..len - 1).rev() {
            row[k] = (row[k] + row[k - 1]) % p;
        }
        if n % 2 == 1 {
            continue;
        }
        let mut s = 0u64;
        for k in 1..=n / 2 {
            s = (s + mul_mod(row[2 * k], e[n - 2 * k], p)) % p;
        }
        e[n] = (p - mul_mod(mult, s, p)) % p;
    }
    e[top]
}

/// The per-prime table of special values entering the mod p^3 / p^4
/// congruence right-hand sides.
#[derive(Clone, Copy, Debug)]
pub struct SpecialTable {
    pub p: u64,
    pub bern: u64,
    pub euler: u64,
    pub useq: u64,
}

impl SpecialTable {
    pub fn new(p: u64) -> SpecialTable {
        SpecialTable {
            p,
            bern: bernoulli_mod(p),
            euler: euler_mod(p, EulerKind::E),
            useq: euler_mod(p, EulerKind::U),
        }
    }
}

/// P_n(x) over exact rationals via (n+1)P_{n+1} = (2n+1)x P_n - n P_{n-1}.
pub fn legendre_poly(n: u64, x: &BigRational) -> BigRational {
    let mut prev = BigRational::one();
    if n == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for j in 1..n {
        let jr = BigRational::from_integer(j.into());
        let next = (BigRational::from_integer((2 * j + 1).into()) * x * &cur - &jr * &prev)
            / (jr + BigRational::one());
        prev = cur;
        cur = next;
    }
    cur
}

/// P_n(x) over Z/p^k; every division is by j + 1 <= n < p, a unit.
pub fn legendre_poly_mod(n: u64, x: u64, ctx: &ModCtx) -> u64 {
    assert!(n < ctx.p(), "index must stay below p for unit divisions");
    let pk = ctx.modulus();
    let x = x % pk;
    let mut prev = 1u64;
    if n == 0 {
        return prev;
    }
    let mut cur = x;
    for j in 1..n {
        let a = mul_mod(mul_mod(2 * j + 1, x, pk), cur, pk);
        let b = mul_mod(j % pk, prev, pk);
        let next = mul_mod((a + pk - b) % pk, ctx.inv_unit(j + 1), pk);
        prev = cur;
        cur = next;
    }
    cur
}

/// Σ_{n=0}^{p-1} ((n³ + a·n + b) / p), the quadratic character summed over
/// a full period; O(p) with a precomputed residue table.
pub fn cubic_char_sum(a: i64, b: i64, p: u64) -> i64 {
    assert!(p >= 3 && is_prime(p));
    let mut chi = vec![-1i64; p as usize];
    chi[0] = 0;
    for x in 1..p {
        chi[mul_mod(x, x, p) as usize] = 1;
    }
    let (a, b) = (
        (a as i128).rem_euclid(p as i128) as u64,
        (b as i128).rem_euclid(p as i128) as u64,
    );
    let mut s = 0i64;
    for n in 0..p {
        let t = (mul_mod(mul_mod(n, n, p), n, p) + mul_mod(a, n, p) + b) % p;
        s += chi[t as usize];
    }
    s
}

/// Which side condition pins down the reported representation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Norm {
    /// x >= 0, no further condition (statements use x² only)
    XPos,
    /// x odd (and positive); the search skips even-x solutions
    XOdd,
    /// x ≡ 1 mod 3, sign of x flipped to arrange it
    LMod3,
}

/// The equation s·p = a·x² + d·y² with its normalization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuadForm {
    pub s: u64,
    pub a: u64,
    pub d: u64,
    pub norm: Norm,
}

impl QuadForm {
    /// Builds a catalogue form, fixing the normalization the statements
    /// that use it require.
    pub fn new(s: u64, a: u64, d: u64) -> QuadForm {
        let norm = match (s, a, d) {
            (1, 1, 1) => Norm::XOdd,
            (4, 1, 27) => Norm::LMod3,
            _ => Norm::XPos,
        };
        QuadForm { s, a, d, norm }
    }

    /// All (s, a, d) triples the congruence statements draw on.
    pub fn catalogue() -> &'static [(u64, u64, u64)] {
        &[
            (1, 1, 1),
            (1, 1, 2),
            (1, 1, 3),
            (1, 1, 4),
            (1, 1, 6),
            (1, 2, 3),
            (1, 1, 7),
            (1, 1, 9),
            (2, 1, 9),
            (1, 1, 15),
            (1, 3, 5),
            (4, 1, 11),
            (4, 1, 19),
            (4, 1, 27),
            (4, 1, 43),
            (4, 1, 67),
            (4, 1, 163),
        ]
    }

    /// Parses the CLI form id "s:a:d", e.g. "4:1:27".
    pub fn parse(s: &str) -> Option<QuadForm> {
        let mut it = s.split(':');
        let sv = it.next()?.parse().ok()?;
        let a = it.next()?.parse().ok()?;
        let d = it.next()?.parse().ok()?;
        if it.next().is_some() || !QuadForm::catalogue().contains(&(sv, a, d)) {
            return None;
        }
        Some(QuadForm::new(sv, a, d))
    }
}

/// A representation s·p = a·x² + d·y², y >= 0, x selected by the form's
/// normalization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuadRep {
    pub x: i64,
    pub y: i64,
    pub normalized: bool,
}

fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    // Newton iteration from an upper bound converges to the floor.
    let mut x = 1u64 << (64 - n.leading_zeros()).div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Bounded search for the normalized representation: y runs upward from 0,
/// and the first (y, x) meeting the form's side conditions is returned.
pub fn quad_rep(p: u64, form: &QuadForm) -> Option<QuadRep> {
    let target = form.s * p;
    let mut y = 0u64;
    while form.d * y * y <= target {
        let rem = target - form.d * y * y;
        if rem.is_multiple_of(form.a) {
            let t = rem / form.a;
            let x = isqrt(t);
            if x * x == t {
                match form.norm {
                    Norm::XPos => {
                        return Some(QuadRep {
                            x: x as i64,
                            y: y as i64,
                            normalized: true,
                        })
                    }
                    Norm::XOdd => {
                        if x % 2 == 1 {
                            return Some(QuadRep {
                                x: x as i64,
                                y: y as i64,
                                normalized: true,
                            });
                        }
                        // even x: keep searching, the partner solution has odd x
                    }
                    Norm::LMod3 => {
                        if !x.is_multiple_of(3) {
                            let sx = if x % 3 == 1 { x as i64 } else { -(x as i64) };
                            return Some(QuadRep {
                                x: sx,
                                y: y as i64,
                                normalized: true,
                            });
                        }
                    }
                }
            }
        }
        y += 1;
    }
    None
}

/// The four central-binomial product kinds of the truncated sums
/// Σ_{k=0}^{p-1} prod(k)/m^k.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BinomKind {
    /// C(2k,k)³
    CCC,
    /// C(2k,k)² C(3k,k)
    CC3,
    /// C(2k,k)² C(4k,2k)
    CC4,
    /// C(2k,k) C(3k,k) C(6k,3k)
    C36,
}

/// Σ_{k=0}^{p-1} prod(k)/m^k in Z/p^k for a p-unit m. Each term is a
/// p-integral exact value, so plain residue accumulation is exact.
pub fn binom_product_sum(kind: BinomKind, m: &BigRational, ctx: &ModCtx) -> PValued {
    let mv = ctx.reduce(m);
    assert!(!mv.is_zero() && mv.val() == 0, "base must be a p-unit");
    let minv = ctx.inv_unit(mv.unit());
    let pk = ctx.modulus();
    let mut acc = 0u64;
    let mut w = 1u64;
    for k in 0..ctx.p() {
        let c2 = ctx.binom_mod(2 * k, k);
        let prod = match kind {
            BinomKind::CCC => c2.mul(&c2, ctx).mul(&c2, ctx),
            BinomKind::CC3 => c2.mul(&c2, ctx).mul(&ctx.binom_mod(3 * k, k), ctx),
            BinomKind::CC4 => c2.mul(&c2, ctx).mul(&ctx.binom_mod(4 * k, 2 * k), ctx),
            BinomKind::C36 => c2
                .mul(&ctx.binom_mod(3 * k, k), ctx)
                .mul(&ctx.binom_mod(6 * k, 3 * k), ctx),
        };
        let r = prod.residue(ctx).expect("binomials are p-integral");
        acc = (acc + mul_mod(r, w, pk)) % pk;
        w = mul_mod(w, minv, pk);
    }
    PValued::from_residue(acc, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binom_exact, jacobi};
    use num_bigint::BigInt;

    #[test]
    fn bernoulli_small() {
        // B_2 = 1/6: mod 5 -> 1, mod 7 -> 6; B_4 = -1/30: mod 7 -> 3
        assert_eq!(bernoulli_mod(5), 1);
        assert_eq!(bernoulli_mod(7), 3);
    }

    #[test]
    fn euler_small() {
        // E_2 = -1, U_2 = -2, E_4 = 5
        assert_eq!(euler_mod(5, EulerKind::E), 4);
        assert_eq!(euler_mod(5, EulerKind::U), 3);
        assert_eq!(euler_mod(7, EulerKind::E), 5);
    }

    #[test]
    fn legendre_values() {
        let x = BigRational::new(BigInt::from(7), BigInt::from(3));
        // P_2(x) = (3x² - 1)/2
        let p2 = (BigRational::from_integer(3.into()) * &x * &x
            - BigRational::one())
            / BigRational::from_integer(2.into());
        assert_eq!(legendre_poly(2, &x), p2);
        assert_eq!(legendre_poly(5, &BigRational::one()), BigRational::one());
        let ctx = ModCtx::new(13, 2);
        // mod path agrees with the rational path reduced
        let v = legendre_poly(6, &BigRational::from_integer(5.into()));
        assert_eq!(
            legendre_poly_mod(6, 5, &ctx),
            ctx.reduce(&v).residue(&ctx).unwrap()
        );
    }

    #[test]
    fn cubic_sum_values() {
        // Σ (n³/5) = Σ (n/5) = 0 over a full period
        assert_eq!(cubic_char_sum(0, 0, 5), 0);
        let direct: i64 = (0..7)
            .map(|n: i64| jacobi((n * n * n + n + 3).rem_euclid(7), 7) as i64)
            .sum();
        assert_eq!(cubic_char_sum(1, 3, 7), direct);
    }

    #[test]
    fn quad_rep_values() {
        // 13 = 3² + 2², odd x
        let r = quad_rep(13, &QuadForm::new(1, 1, 1)).unwrap();
        assert_eq!((r.x, r.y), (3, 2));
        // 4·7 = 1² + 27·1²
        let r = quad_rep(7, &QuadForm::new(4, 1, 27)).unwrap();
        assert_eq!((r.x, r.y), (1, 1));
        // 4·13 = 25 + 27, and 5 ≡ 2 mod 3 forces the sign flip
        let r = quad_rep(13, &QuadForm::new(4, 1, 27)).unwrap();
        assert_eq!((r.x, r.y), (-5, 1));
        // 11 is not of the form x² + y²
        assert!(quad_rep(11, &QuadForm::new(1, 1, 1)).is_none());
    }

    #[test]
    fn binom_sum_values() {
        // direct big-integer oracle at p=5, m=1
        let ctx = ModCtx::new(5, 1);
        let exact: BigInt = (0..5u64).map(|k| binom_exact(2 * k, k as i64).pow(3)).sum();
        let got = binom_product_sum(BinomKind::CCC, &BigRational::one(), &ctx);
        assert_eq!(got.residue(&ctx).unwrap(), ctx.reduce_bigint(&exact));
        // twelve-cubed sum at p = 13 = 3² + 2²: jacobi(-3,13)·(2·3)² = 36
        let ctx = ModCtx::new(13, 1);
        let m = BigRational::from_integer(1728.into());
        let got = binom_product_sum(BinomKind::C36, &m, &ctx);
        assert_eq!(got.residue(&ctx).unwrap(), 36 % 13);
    }
}
