//! Per-prime evaluation context: cached moduli contexts and exact sequence
//! windows, plus the truncated-sum helpers every evaluator shares.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::{mul_mod, pow_mod, reduce_signed, ModCtx};
use crate::sequences::{closed_window, int_window, SequenceId, RECURRENT};
use crate::special::{binom_product_sum, BinomKind};

/// Owned by a single claim evaluation; never shared between threads.
pub(crate) struct PrimeWorkspace {
    pub p: u64,
    ctxs: RefCell<BTreeMap<u32, Rc<ModCtx>>>,
    windows: RefCell<BTreeMap<&'static str, Rc<Vec<BigInt>>>>,
}

impl PrimeWorkspace {
    pub fn new(p: u64) -> PrimeWorkspace {
        PrimeWorkspace {
            p,
            ctxs: RefCell::new(BTreeMap::new()),
            windows: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn ctx(&self, k: u32) -> Rc<ModCtx> {
        let mut map = self.ctxs.borrow_mut();
        map.entry(k)
            .or_insert_with(|| Rc::new(ModCtx::new(self.p, k)))
            .clone()
    }

    /// Exact values u_0..u_hi, grown on demand and cached by sequence tag.
    pub fn window(&self, id: &SequenceId, hi: u64) -> Rc<Vec<BigInt>> {
        let tag = id.tag();
        if let Some(win) = self.windows.borrow().get(tag) {
            if win.len() > hi as usize {
                return win.clone();
            }
        }
        let win = Rc::new(fresh_window(id, hi));
        self.windows.borrow_mut().insert(tag, win.clone());
        win
    }
}

/// Exact values u_0..u_hi, by recurrence where one is on file.
pub(crate) fn fresh_window(id: &SequenceId, hi: u64) -> Vec<BigInt> {
    if RECURRENT.contains(id) {
        int_window(id, hi)
    } else {
        closed_window(id, hi)
    }
}

/// The multiplier 1/m per index step, for m = m_num/m_den a p-unit.
pub(crate) fn unit_inv(m_num: i64, m_den: i64, ctx: &ModCtx) -> u64 {
    let pk = ctx.modulus();
    let p = ctx.p();
    let mn = reduce_signed(m_num, pk);
    let md = reduce_signed(m_den, pk);
    assert!(!mn.is_multiple_of(p) && !md.is_multiple_of(p), "base must be a p-unit");
    mul_mod(ctx.inv_unit(mn), md, pk)
}

/// Σ_{j=0}^{p-1} (α·j + β)·C(2j,j)^[central]·u_j·minv^j over a window of
/// exact values, reduced term by term.
pub(crate) fn weighted_window_sum(
    u: &[BigInt],
    minv: u64,
    alpha: i64,
    beta: i64,
    central: bool,
    ctx: &ModCtx,
) -> u64 {
    let pk = ctx.modulus();
    let p = ctx.p();
    let mut acc = 0u64;
    let mut mp = 1u64;
    for j in 0..p {
        let mut t = mul_mod(
            reduce_signed(alpha * j as i64 + beta, pk),
            ctx.reduce_bigint(&u[j as usize]),
            pk,
        );
        if central {
            let c = ctx.binom_mod(2 * j, j).residue(ctx).expect("p-integral");
            t = mul_mod(t, c, pk);
        }
        acc = (acc + mul_mod(t, mp, pk)) % pk;
        mp = mul_mod(mp, minv, pk);
    }
    acc
}

/// Σ u_n / m^n mod p^k.
pub(crate) fn seq_sum(
    ws: &PrimeWorkspace,
    id: &SequenceId,
    m_num: i64,
    m_den: i64,
    k: u32,
) -> u64 {
    let ctx = ws.ctx(k);
    let u = ws.window(id, ws.p - 1);
    weighted_window_sum(&u, unit_inv(m_num, m_den, &ctx), 0, 1, false, &ctx)
}

/// Σ (α·j + β)·C(2j,j)·u_j / m^j mod p^k.
pub(crate) fn wsum_central(
    ws: &PrimeWorkspace,
    id: &SequenceId,
    m_num: i64,
    alpha: i64,
    beta: i64,
    k: u32,
) -> u64 {
    let ctx = ws.ctx(k);
    let u = ws.window(id, ws.p - 1);
    weighted_window_sum(&u, unit_inv(m_num, 1, &ctx), alpha, beta, true, &ctx)
}

/// Central-binomial product sum with integer base, as a plain residue.
pub(crate) fn csum(kind: BinomKind, m: i64, ctx: &ModCtx) -> u64 {
    let m = BigRational::from_integer(BigInt::from(m));
    binom_product_sum(kind, &m, ctx)
        .residue(ctx)
        .expect("terms are p-integral")
}

/// Σ C(2j,j)C(3j,j)C(6j,3j)/base^(3j): the base enters cubed.
pub(crate) fn csum36_cubed(base: i64, ctx: &ModCtx) -> u64 {
    let m = BigRational::from_integer(BigInt::from(base).pow(3));
    binom_product_sum(BinomKind::C36, &m, ctx)
        .residue(ctx)
        .expect("terms are p-integral")
}

/// Σ C(2j,j)C(3j,j)C(6j,3j)/m^j with the base taken directly.
pub(crate) fn csum36_direct(m: i64, ctx: &ModCtx) -> u64 {
    let m = BigRational::from_integer(BigInt::from(m));
    binom_product_sum(BinomKind::C36, &m, ctx)
        .residue(ctx)
        .expect("terms are p-integral")
}

/// Σ u_n · base^n mod p (base a residue multiplier, k = 1 use only).
pub(crate) fn seq_sum_residue_base(
    ws: &PrimeWorkspace,
    id: &SequenceId,
    base: u64,
    ctx: &ModCtx,
) -> u64 {
    let pk = ctx.modulus();
    let u = ws.window(id, ws.p - 1);
    let mut acc = 0u64;
    let mut mp = 1u64;
    for n in 0..ws.p {
        acc = (acc + mul_mod(ctx.reduce_bigint(&u[n as usize]), mp, pk)) % pk;
        mp = mul_mod(mp, base, pk);
    }
    acc
}

/// Σ prod(j) · t^j mod p for the CC3 / C36 products (t a residue).
pub(crate) fn csum_residue_base(kind: BinomKind, t: u64, ctx: &ModCtx) -> u64 {
    let pk = ctx.modulus();
    let mut acc = 0u64;
    let mut mp = 1u64;
    for j in 0..ctx.p() {
        let c2 = ctx.binom_mod(2 * j, j);
        let prod = match kind {
            BinomKind::CC3 => c2.mul(&c2, ctx).mul(&ctx.binom_mod(3 * j, j), ctx),
            BinomKind::C36 => c2
                .mul(&ctx.binom_mod(3 * j, j), ctx)
                .mul(&ctx.binom_mod(6 * j, 3 * j), ctx),
            _ => unreachable!("residue-base path used for CC3/C36 only"),
        };
        let r = prod.residue(ctx).expect("p-integral");
        acc = (acc + mul_mod(r, mp, pk)) % pk;
        mp = mul_mod(mp, t, pk);
    }
    acc
}

/// Σ C(2k,k) · W_k · t^k mod p (t a residue).
pub(crate) fn wsum_residue_base(ws: &PrimeWorkspace, t: u64, ctx: &ModCtx) -> u64 {
    let pk = ctx.modulus();
    let u = ws.window(&SequenceId::W, ws.p - 1);
    let mut acc = 0u64;
    let mut mp = 1u64;
    for k in 0..ws.p {
        let c = ctx.binom_mod(2 * k, k).residue(ctx).expect("p-integral");
        let t1 = mul_mod(c, ctx.reduce_bigint(&u[k as usize]), pk);
        acc = (acc + mul_mod(t1, mp, pk)) % pk;
        mp = mul_mod(mp, t, pk);
    }
    acc
}

/// W_n(x) mod p^k for a residue x; n < p keeps every binomial in range.
pub(crate) fn w_poly_mod(n: u64, x: u64, ctx: &ModCtx) -> u64 {
    let pk = ctx.modulus();
    let mut acc = 0u64;
    for k in 0..=n / 3 {
        let t = ctx
            .binom_mod(2 * k, k)
            .mul(&ctx.binom_mod(3 * k, k), ctx)
            .mul(&ctx.binom_mod(n, 3 * k), ctx)
            .residue(ctx)
            .expect("p-integral");
        acc = (acc + mul_mod(t, pow_mod(x % pk, n - 3 * k, pk), pk)) % pk;
    }
    acc
}

/// cx2 - 2p - p²/cx2 mod p^k; None when cx2 is not a unit.
pub(crate) fn quad_expr(cx2: u64, ctx: &ModCtx) -> Option<u64> {
    let pk = ctx.modulus();
    let p = ctx.p();
    let c = cx2 % pk;
    if c.is_multiple_of(p) {
        return None;
    }
    let mut r = (c + pk - 2 * p % pk) % pk;
    r = (r + pk - mul_mod(p * p % pk, ctx.inv_unit(c), pk)) % pk;
    Some(r)
}

/// C(a,b)^{-2} mod p^k; None when p divides the binomial.
pub(crate) fn binom_sq_inv(a: u64, b: u64, ctx: &ModCtx) -> Option<u64> {
    let pv = ctx.binom_mod(a, b);
    if pv.is_zero() || pv.val() > 0 {
        return None;
    }
    let i = ctx.inv_unit(pv.unit());
    Some(mul_mod(i, i, ctx.modulus()))
}

/// num/den as a residue mod p^k (den a p-unit).
pub(crate) fn frac_mod(num: i64, den: i64, ctx: &ModCtx) -> u64 {
    let pk = ctx.modulus();
    mul_mod(
        reduce_signed(num, pk),
        ctx.inv_unit(reduce_signed(den, pk)),
        pk,
    )
}
