//! Integer and residue arithmetic modulo prime powers.
//!
//! Residues live in Z/p^k for an odd prime p and k <= 4, so every modulus
//! fits in a `u64` and products fit in a `u128`. Quantities with
//! denominators are carried as [`PValued`]: a p-adic valuation plus a unit
//! part, so that expressions like p^2 / (4x^2) stay exact.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// a * b mod m without overflow; m must be below 2^63.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

/// a^e mod m by binary exponentiation.
pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Reduces a signed integer into [0, m).
pub fn reduce_signed(a: i64, m: u64) -> u64 {
    let r = a.rem_euclid(m as i64);
    r as u64
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0.
fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Multiplicative inverse of a modulo m, or None when gcd(a, m) > 1.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    assert!(m >= 2);
    let (g, x, _) = extended_gcd(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

/// Jacobi symbol (a/n) for odd n >= 1; equals the Legendre symbol when n is
/// prime. Returns 0 exactly when gcd(a, n) > 1.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n % 2 == 1 && n >= 1, "jacobi requires odd positive n");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut sign = 1i32;
    while a != 0 {
        // Extract factors of 2: (2/n) = (-1)^((n^2-1)/8)
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        core::mem::swap(&mut a, &mut n);
        // Quadratic reciprocity for odd a, n
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Deterministic Miller-Rabin, valid for all u64 inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// An inclusive range of candidate primes with an explicit exclusion set,
/// mirroring statements like "all primes p with p != 2, 3, 11".
#[derive(Clone, Debug)]
pub struct PrimeRange {
    pub lo: u64,
    pub hi: u64,
    pub exclusions: BTreeSet<u64>,
}

impl PrimeRange {
    pub fn new(lo: u64, hi: u64) -> PrimeRange {
        assert!(lo <= hi, "prime range must satisfy lo <= hi");
        PrimeRange {
            lo,
            hi,
            exclusions: BTreeSet::new(),
        }
    }

    pub fn exclude(mut self, ps: &[u64]) -> PrimeRange {
        self.exclusions.extend(ps.iter().copied());
        self
    }
}

/// All primes in the range, ascending, minus the exclusions.
pub fn primes_in(range: &PrimeRange) -> Vec<u64> {
    (range.lo..=range.hi)
        .filter(|&n| is_prime(n) && !range.exclusions.contains(&n))
        .collect()
}

/// Exact binomial coefficient; 0 when m < 0 or m > n.
pub fn binom_exact(n: u64, m: i64) -> BigInt {
    if m < 0 || m as u64 > n {
        return BigInt::zero();
    }
    let m = (m as u64).min(n - m as u64);
    let mut acc = BigInt::from(1u32);
    // Multiply (n-m+i)/i one factor at a time; each division is exact.
    for i in 1..=m {
        acc = acc * BigInt::from(n - m + i) / BigInt::from(i);
    }
    acc
}

/// C(n, m) mod p via Lucas' theorem: the product of digitwise binomial
/// coefficients of the base-p expansions.
pub fn lucas_binom(n: u64, m: u64, p: u64) -> u64 {
    assert!(is_prime(p));
    let mut n = n;
    let mut m = m;
    let mut acc = 1u64;
    while m > 0 || n > 0 {
        let (nd, md) = (n % p, m % p);
        if md > nd {
            return 0;
        }
        // Digit binomial C(nd, md) mod p by the multiplicative formula.
        let mut digit = 1u64;
        for i in 1..=md {
            digit = mul_mod(digit, nd - md + i, p);
            digit = mul_mod(digit, mod_inv(i, p).unwrap(), p);
        }
        acc = mul_mod(acc, digit, p);
        n /= p;
        m /= p;
    }
    acc
}

/// Context for arithmetic in Z/p^k: the modulus itself plus a table of
/// p-stripped factorials, so binomial coefficients divisible by p can be
/// split into valuation and unit part.
#[derive(Clone, Debug)]
pub struct ModCtx {
    p: u64,
    k: u32,
    modulus: u64,
    // stripped_fact[i] = product of all j <= i with p not dividing j, mod p^k
    stripped_fact: Vec<u64>,
}

impl ModCtx {
    /// Builds the context; the factorial table covers arguments up to 10p,
    /// enough for every binomial the claim evaluators request.
    pub fn new(p: u64, k: u32) -> ModCtx {
        assert!(p >= 3 && is_prime(p), "ModCtx requires an odd prime");
        assert!((1..=4).contains(&k), "ModCtx supports k in 1..=4");
        let modulus = p.checked_pow(k).expect("p^k overflows u64");
        assert!(modulus < (1 << 63));
        let limit = (10 * p) as usize;
        let mut stripped_fact = Vec::with_capacity(limit + 1);
        stripped_fact.push(1u64);
        for i in 1..=limit as u64 {
            let prev = stripped_fact[(i - 1) as usize];
            let f = if i % p == 0 { prev } else { mul_mod(prev, i % modulus, modulus) };
            stripped_fact.push(f);
        }
        ModCtx {
            p,
            k,
            modulus,
            stripped_fact,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Inverse of a unit residue.
    pub fn inv_unit(&self, a: u64) -> u64 {
        mod_inv(a % self.modulus, self.modulus).expect("not a unit")
    }

    /// v mod p^k mapped into [0, p^k).
    pub fn reduce_bigint(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.modulus);
        let r = ((v % &m) + &m) % &m;
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }

    /// Embeds an exact rational into Z/p^k as valuation plus unit.
    pub fn reduce(&self, q: &BigRational) -> PValued {
        if q.is_zero() {
            return PValued::ZERO;
        }
        let (vn, un) = split_valuation(q.numer(), self.p);
        let (vd, ud) = split_valuation(q.denom(), self.p);
        let unit = mul_mod(
            self.reduce_bigint(&un),
            self.inv_unit(self.reduce_bigint(&ud)),
            self.modulus,
        );
        PValued {
            val: vn - vd,
            unit,
        }
    }

    /// Unit part of n! (factorial with all p factors removed) mod p^k,
    /// together with the valuation v_p(n!).
    fn factorial_split(&self, n: u64) -> (u64, i64) {
        assert!((n as usize) < self.stripped_fact.len(), "factorial table too small");
        // n! = stripped(n) * p^(n/p) * (n/p)!  -- recurse on the quotient.
        let mut unit = self.stripped_fact[n as usize];
        let mut val = 0i64;
        let mut q = n / self.p;
        while q > 0 {
            val += q as i64;
            unit = mul_mod(unit, self.stripped_fact[q as usize], self.modulus);
            q /= self.p;
        }
        (unit, val)
    }

    /// C(n, m) as valuation and unit mod p^k; exact for any n the factorial
    /// table covers. Agrees with reduce(binom_exact(n, m)).
    pub fn binom_mod(&self, n: u64, m: u64) -> PValued {
        if m > n {
            return PValued::ZERO;
        }
        let (un, vn) = self.factorial_split(n);
        let (um, vm) = self.factorial_split(m);
        let (ud, vd) = self.factorial_split(n - m);
        let unit = mul_mod(un, self.inv_unit(mul_mod(um, ud, self.modulus)), self.modulus);
        PValued {
            val: vn - vm - vd,
            unit,
        }
    }
}

/// Splits v = p^val * unit with p not dividing unit; v must be nonzero.
fn split_valuation(v: &BigInt, p: u64) -> (i64, BigInt) {
    assert!(!v.is_zero());
    let p = BigInt::from(p);
    let mut val = 0i64;
    let mut u = v.abs();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&u, &p);
        if !r.is_zero() {
            break;
        }
        u = q;
        val += 1;
    }
    if v.sign() == Sign::Minus {
        u = -u;
    }
    (val, u)
}

/// A residue in Z/p^k written as unit * p^val, or the distinguished ZERO.
/// The valuation may be negative (a denominator divisible by p); such
/// values cannot be flattened back to a plain residue.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PValued {
    val: i64,
    unit: u64,
}

/// Valuation sentinel for ZERO: larger than any honest valuation.
const ZERO_VAL: i64 = i64::MAX;

impl PValued {
    pub const ZERO: PValued = PValued {
        val: ZERO_VAL,
        unit: 0,
    };

    /// Wraps an explicit (valuation, unit) pair; unit must be a p-unit.
    pub fn from_parts(val: i64, unit: u64, ctx: &ModCtx) -> PValued {
        let unit = unit % ctx.modulus;
        assert!(!unit.is_multiple_of(ctx.p), "unit part must be coprime to p");
        PValued { val, unit }
    }

    /// Classifies a plain residue mod p^k: strips the p factors it can see.
    /// A residue of 0 has valuation >= k and is represented as ZERO.
    pub fn from_residue(r: u64, ctx: &ModCtx) -> PValued {
        let mut r = r % ctx.modulus;
        if r == 0 {
            return PValued::ZERO;
        }
        let mut val = 0i64;
        while r.is_multiple_of(ctx.p) {
            r /= ctx.p;
            val += 1;
        }
        PValued { val, unit: r }
    }

    pub fn is_zero(&self) -> bool {
        self.val == ZERO_VAL
    }

    pub fn val(&self) -> i64 {
        self.val
    }

    pub fn unit(&self) -> u64 {
        self.unit
    }

    pub fn mul(&self, other: &PValued, ctx: &ModCtx) -> PValued {
        if self.is_zero() || other.is_zero() {
            return PValued::ZERO;
        }
        PValued {
            val: self.val + other.val,
            unit: mul_mod(self.unit, other.unit, ctx.modulus),
        }
    }

    /// Inverse: negates the valuation, inverts the unit. None for ZERO.
    pub fn inv(&self, ctx: &ModCtx) -> Option<PValued> {
        if self.is_zero() {
            return None;
        }
        Some(PValued {
            val: -self.val,
            unit: ctx.inv_unit(self.unit),
        })
    }

    /// Addition: the higher-valuation operand is shifted by p^(difference)
    /// and the units added. When the valuations differ by k or more the
    /// smaller-valuation operand absorbs the other entirely.
    pub fn add(&self, other: &PValued, ctx: &ModCtx) -> PValued {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (lo, hi) = if self.val <= other.val {
            (self, other)
        } else {
            (other, self)
        };
        let dv = hi.val - lo.val;
        if dv >= ctx.k as i64 {
            return *lo;
        }
        let shift = ctx.p.pow(dv as u32);
        let sum = (lo.unit + mul_mod(hi.unit, shift, ctx.modulus)) % ctx.modulus;
        if sum == 0 {
            return PValued::ZERO;
        }
        // Re-normalize in case the leading digits cancelled.
        let renorm = PValued::from_residue(sum, ctx);
        PValued {
            val: lo.val + renorm.val,
            unit: renorm.unit,
        }
    }

    /// Flattens back to a residue mod p^k. None when the valuation is
    /// negative (the value is not p-integral).
    pub fn residue(&self, ctx: &ModCtx) -> Option<u64> {
        if self.is_zero() {
            return Some(0);
        }
        if self.val < 0 {
            return None;
        }
        if self.val >= ctx.k as i64 {
            return Some(0);
        }
        Some(mul_mod(self.unit, ctx.p.pow(self.val as u32), ctx.modulus))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn jacobi_small_values() {
        assert_eq!(jacobi(1, 7), 1);
        assert_eq!(jacobi(3, 7), -1); // 3^3 = 27 = 6 (mod 7), a non-residue
        assert_eq!(jacobi(14, 7), 0);
        assert_eq!(jacobi(-1, 7), -1); // 7 = 3 (mod 4)
        assert_eq!(jacobi(-1, 13), 1);
        assert_eq!(jacobi(2, 17), 1); // 17 = 1 (mod 8)
    }

    #[test]
    fn mod_inv_small_values() {
        assert_eq!(mod_inv(1, 9), Some(1));
        assert_eq!(mod_inv(3, 25), Some(17)); // 3*17 = 51 = 2*25 + 1
        assert_eq!(mod_inv(5, 25), None);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(1999));
        assert!(!is_prime(1));
        assert!(!is_prime(2001)); // 3 * 23 * 29
    }

    #[test]
    fn primes_in_range_with_exclusions() {
        let r = PrimeRange::new(3, 20).exclude(&[11]);
        assert_eq!(primes_in(&r), [3, 5, 7, 13, 17, 19]);
        assert!(primes_in(&PrimeRange::new(14, 16)).is_empty());
    }

    #[test]
    fn binomials() {
        assert_eq!(binom_exact(0, 0), BigInt::one());
        assert_eq!(binom_exact(6, 3), BigInt::from(20));
        assert_eq!(binom_exact(5, 7), BigInt::zero());
        assert_eq!(binom_exact(5, -1), BigInt::zero());
    }

    #[test]
    fn lucas_matches_exact() {
        assert_eq!(lucas_binom(7, 2, 5), 1); // C(7,2) = 21 = 1 (mod 5)
        assert_eq!(lucas_binom(9, 0, 5), 1);
        assert_eq!(lucas_binom(5, 1, 5), 0); // digit C(0,1) = 0
    }

    #[test]
    fn binom_mod_tracks_valuation() {
        let ctx = ModCtx::new(5, 2);
        // C(6,3) = 20 = 4 * 5
        let b = ctx.binom_mod(6, 3);
        assert_eq!((b.val(), b.unit()), (1, 4));
        assert_eq!(b.residue(&ctx), Some(20));
        // C(25,5) = 53130 = 5 * 10626
        let b = ctx.binom_mod(25, 5);
        assert_eq!(b.val(), 1);
        assert_eq!(b.residue(&ctx), Some(53130 % 25));
    }

    #[test]
    fn reduce_rational() {
        let ctx = ModCtx::new(5, 2);
        let q = BigRational::new(BigInt::from(50), BigInt::one());
        let r = ctx.reduce(&q);
        assert_eq!((r.val(), r.unit()), (2, 2)); // 50 = 5^2 * 2
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        assert_eq!(ctx.reduce(&third).residue(&ctx), mod_inv(3, 25));
        assert!(ctx.reduce(&BigRational::zero()).is_zero());
    }

    #[test]
    fn pvalued_addition_shifts_and_absorbs() {
        let ctx = ModCtx::new(5, 2);
        let a = PValued::from_parts(0, 3, &ctx);
        let b = PValued::from_parts(1, 1, &ctx); // 3 + 5 = 8
        assert_eq!(a.add(&b, &ctx).residue(&ctx), Some(8));
        let far = PValued::from_parts(2, 1, &ctx); // 25 = 0 in Z/25, absorbed
        assert_eq!(a.add(&far, &ctx), a);
        let neg = PValued::from_parts(0, 22, &ctx); // 3 + 22 = 25, valuation jumps
        assert!(a.add(&neg, &ctx).is_zero());
    }
}
