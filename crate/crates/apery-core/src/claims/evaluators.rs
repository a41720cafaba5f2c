//! Per-prime evaluators for the lemma/theorem/corollary claims (weighted
//! W-sums against quadratic forms, sampled-x chain identities, reflection
//! and Lucas congruences, and the bilinear-sum tail).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::arith::{jacobi, mul_mod, pow_mod, reduce_signed};
use crate::sequences::{RecurrenceSpec, SequenceId, RECURRENT};
use crate::special::{cubic_char_sum, legendre_poly_mod, quad_rep, BinomKind, QuadForm};

use super::chain::Chain;
use super::workspace::{
    csum36_cubed, csum_residue_base, seq_sum, seq_sum_residue_base, w_poly_mod, wsum_central,
    wsum_residue_base, PrimeWorkspace,
};
use super::{Eval, Status};

fn red_i128(v: i128, m: u64) -> u64 {
    v.rem_euclid(m as i128) as u64
}

// --- weighted W-sums against the order-27 form -------------------------

fn thm_2_1_sides(ws: &PrimeWorkspace, lhs: u64, square: bool) -> Eval {
    let p = ws.p;
    if p % 3 == 1 {
        let rep = quad_rep(p, &QuadForm::new(4, 1, 27)).expect("4p = L^2 + 27M^2 exists");
        let rhs = if square {
            red_i128((rep.x as i128) * (rep.x as i128), p)
        } else {
            red_i128(-(rep.x as i128), p)
        };
        Eval::compare(lhs, rhs, Some(format!("(L,M)=({},{})", rep.x, rep.y)))
    } else {
        Eval::compare(lhs, 0, None)
    }
}

pub(crate) fn thm_2_1_a(ws: &PrimeWorkspace) -> Eval {
    let lhs = seq_sum(ws, &SequenceId::W, -3, 1, 1);
    thm_2_1_sides(ws, lhs, false)
}

pub(crate) fn thm_2_1_b(ws: &PrimeWorkspace) -> Eval {
    let lhs = seq_sum(ws, &SequenceId::W, -9, 1, 1);
    thm_2_1_sides(ws, lhs, false)
}

pub(crate) fn thm_2_1_c(ws: &PrimeWorkspace) -> Eval {
    let lhs = wsum_central(ws, &SequenceId::W, -12, 0, 1, 1);
    thm_2_1_sides(ws, lhs, true)
}

fn cong_2x(ws: &PrimeWorkspace, m: i64, a: i64, b: i64) -> Eval {
    let p = ws.p;
    let lhs = seq_sum(ws, &SequenceId::W, m, 1, 1);
    let rhs = red_i128(
        -(jacobi(-6, p) as i128) * cubic_char_sum(a, b, p) as i128,
        p,
    );
    Eval::compare(lhs, rhs, None)
}

pub(crate) fn cong_2_1(ws: &PrimeWorkspace) -> Eval {
    cong_2x(ws, 1, -840, 9074)
}

pub(crate) fn cong_2_2(ws: &PrimeWorkspace) -> Eval {
    cong_2x(ws, -1, -336, 2522)
}

// --- sampled-x chains ---------------------------------------------------

pub(crate) fn lem_2_2(ws: &PrimeWorkspace) -> Eval {
    let p = ws.p;
    let ctx = ws.ctx(1);
    let xs: Vec<u64> = (1..p).take(10).collect();
    for &x in &xs {
        let mut ch = Chain::new(&ctx);
        // shifted sum at m = 1
        let mut acc = 0u64;
        for k in 0..p {
            acc = (acc + w_poly_mod(k, (x + 1) % p, &ctx)) % p;
        }
        ch.add("sum W_k(x+1)", acc);
        ch.add("W_{p-1}(x)", w_poly_mod(p - 1, x, &ctx));
        // Σ C(2k,k)C(3k,k)/(-x)^(3k)
        let base = ctx.inv_unit(pow_mod(red_i128(-(x as i128), p), 3, p));
        let mut acc = 0u64;
        let mut mp = 1u64;
        for k in 0..p {
            let t = ctx
                .binom_mod(2 * k, k)
                .mul(&ctx.binom_mod(3 * k, k), &ctx)
                .residue(&ctx)
                .expect("p-integral");
            acc = (acc + mul_mod(t, mp, p)) % p;
            mp = mul_mod(mp, base, p);
        }
        ch.add("sum cc/( -x)^3k", acc);
        let arg = (1 + mul_mod(54 % p, ctx.inv_unit(pow_mod(x, 3, p)), p)) % p;
        ch.add("P_[p/3]", legendre_poly_mod(p / 3, arg, &ctx));
        // quadratic character of the cubic resolvent, sign (p/3)
        let x = x as i64;
        let a = -3 * x * (x * x * x - 216);
        let b = -2 * x.pow(6) - 1080 * x.pow(3) + 108 * 108;
        let s = cubic_char_sum(a, b, p);
        ch.add(
            "char sum",
            red_i128(-(jacobi(p as i64, 3) as i128) * s as i128, p),
        );
        let out = ch.eval(Some(format!("x={}", x)));
        if out.status != Status::Verified {
            return out;
        }
    }
    sampled_ok("x", &xs)
}

// Verified result for a sampled-x claim, recording the sample for
// reproducibility.
fn sampled_ok(var: &str, xs: &[u64]) -> Eval {
    let list = xs
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",");
    Eval {
        status: Status::Verified,
        lhs: format!("ok({})", xs.len()),
        rhs: format!("ok({})", xs.len()),
        witness: Some(format!("{}={}", var, list)),
    }
}

pub(crate) fn lem_2_4(ws: &PrimeWorkspace) -> Eval {
    let p = ws.p;
    let ctx = ws.ctx(1);
    // first 10 pairs along diagonals n + x = const with the two
    // non-degeneracy conditions p ∤ n and p ∤ (n + 4x)
    let mut pairs: Vec<(u64, u64)> = Vec::new();
    let mut d = 1u64;
    while pairs.len() < 10 {
        for n in 1..=d {
            let x = d + 1 - n;
            if n % p != 0 && !(n + 4 * x).is_multiple_of(p) && pairs.len() < 10 {
                pairs.push((n, x));
            }
        }
        d += 1;
    }
    for &(n, x) in &pairs {
        let mut ch = Chain::new(&ctx);
        let m1 = (n + 4 * x) % p;
        // Σ C(2k,k) W_k(x)/m1^k, scaled by (m1/p)
        let minv = ctx.inv_unit(m1);
        let mut acc = 0u64;
        let mut mp = 1u64;
        for k in 0..p {
            let c = ctx.binom_mod(2 * k, k).residue(&ctx).expect("p-integral");
            acc = (acc + mul_mod(mul_mod(c, w_poly_mod(k, x % p, &ctx), p), mp, p)) % p;
            mp = mul_mod(mp, minv, p);
        }
        ch.add(
            "jac*sum C W_k(x)",
            red_i128(jacobi(m1 as i64, p) as i128 * acc as i128, p),
        );
        let arg = mul_mod(red_i128(-(n as i128), p), ctx.inv_unit(4 % p), p);
        let sign = if ((p - 1) / 2).is_multiple_of(2) { 1i128 } else { -1 };
        ch.add(
            "(-1)^.. W_mid(-n/4)",
            red_i128(sign * w_poly_mod((p - 1) / 2, arg, &ctx) as i128, p),
        );
        let s3 = csum36_cubed((n % p) as i64, &ctx);
        ch.add(
            "jac*sum c36/n^3k",
            red_i128(jacobi(n as i64, p) as i128 * s3 as i128, p),
        );
        let out = ch.eval(Some(format!("(n,x)=({},{})", n, x)));
        if out.status != Status::Verified {
            return out;
        }
    }
    let w = pairs
        .iter()
        .map(|(n, x)| format!("({},{})", n, x))
        .collect::<Vec<_>>()
        .join(",");
    Eval {
        status: Status::Verified,
        lhs: format!("ok({})", pairs.len()),
        rhs: format!("ok({})", pairs.len()),
        witness: Some(format!("(n,x)={}", w)),
    }
}

// --- middle-value and weighted-sum theorems ----------------------------

pub(crate) fn thm_2_2(ws: &PrimeWorkspace) -> Eval {
    let p = ws.p;
    let u = ws.window(&SequenceId::W, (p - 1) / 2);
    let ctx = ws.ctx(1);
    let lhs = ctx.reduce_bigint(&u[(p as usize - 1) / 2]);
    if p % 4 == 1 {
        let rep = quad_rep(p, &QuadForm::new(1, 1, 1)).expect("p = x^2 + y^2 exists");
        let rhs = red_i128(4 * (rep.x as i128) * (rep.x as i128), p);
        Eval::compare(lhs, rhs, Some(format!("(x,y)=({},{})", rep.x, rep.y)))
    } else {
        Eval::compare(lhs, 0, None)
    }
}

struct WsumThm {
    ms: &'static [i64],
    jac: Option<i64>,
    form: (u64, u64, u64),
    crit: fn(u64) -> bool,
    // rhs when the criterion holds: factor * x^2 (factor 4 or 1), with an
    // optional extra (p/3) character
    factor: i64,
    extra_jac3: bool,
}

fn wsum_thm(ws: &PrimeWorkspace, t: &WsumThm) -> Eval {
    let p = ws.p;
    let ctx = ws.ctx(1);
    let mut ch = Chain::new(&ctx);
    for &m in t.ms {
        let mut s = wsum_central(ws, &SequenceId::W, m, 0, 1, 1);
        if let Some(j) = t.jac {
            s = red_i128(jacobi(j, p) as i128 * s as i128, p);
        }
        ch.add(&format!("sum C W_k/({})^k", m), s);
    }
    let (witness, rhs) = if (t.crit)(p) {
        let rep = quad_rep(p, &QuadForm::new(t.form.0, t.form.1, t.form.2))
            .expect("criterion guarantees a representation");
        let mut r = t.factor as i128 * (rep.x as i128) * (rep.x as i128);
        if t.extra_jac3 {
            r *= jacobi(p as i64, 3) as i128;
        }
        (
            Some(format!("(x,y)=({},{})", rep.x, rep.y)),
            red_i128(r, p),
        )
    } else {
        (None, 0)
    };
    ch.add("rhs", rhs);
    ch.eval(witness)
}

pub(crate) fn thm_2_3(ws: &PrimeWorkspace) -> Eval {
    wsum_thm(
        ws,
        &WsumThm {
            ms: &[54],
            jac: None,
            form: (1, 1, 4),
            crit: |p| p % 4 == 1,
            factor: 4,
            extra_jac3: true,
        },
    )
}

pub(crate) fn thm_2_4(ws: &PrimeWorkspace) -> Eval {
    wsum_thm(
        ws,
        &WsumThm {
            ms: &[8],
            jac: None,
            form: (1, 1, 2),
            crit: |p| matches!(p % 8, 1 | 3),
            factor: 4,
            extra_jac3: false,
        },
    )
}

pub(crate) fn thm_2_5(ws: &PrimeWorkspace) -> Eval {
    wsum_thm(
        ws,
        &WsumThm {
            ms: &[-27, 243],
            jac: Some(-3),
            form: (1, 1, 7),
            crit: |p| matches!(p % 7, 1 | 2 | 4),
            factor: 4,
            extra_jac3: false,
        },
    )
}

pub(crate) fn thm_2_6(ws: &PrimeWorkspace) -> Eval {
    wsum_thm(
        ws,
        &WsumThm {
            ms: &[-44],
            jac: None,
            form: (4, 1, 11),
            crit: |p| jacobi(p as i64, 11) == 1,
            factor: 1,
            extra_jac3: false,
        },
    )
}

pub(crate) fn thm_2_7(ws: &PrimeWorkspace) -> Eval {
    wsum_thm(
        ws,
        &WsumThm {
            ms: &[-108],
            jac: Some(-3),
            form: (4, 1, 19),
            crit: |p| jacobi(p as i64, 19) == 1,
            factor: 1,
            extra_jac3: false,
        },
    )
}

pub(crate) fn thm_2_8(ws: &PrimeWorkspace) -> Eval {
    wsum_thm(
        ws,
        &WsumThm {
            ms: &[-972],
            jac: Some(-3),
            form: (4, 1, 43),
            crit: |p| jacobi(p as i64, 43) == 1,
            factor: 1,
            extra_jac3: false,
        },
    )
}

pub(crate) fn thm_2_9(ws: &PrimeWorkspace) -> Eval {
    wsum_thm(
        ws,
        &WsumThm {
            ms: &[-5292],
            jac: Some(-3),
            form: (4, 1, 67),
            crit: |p| jacobi(p as i64, 67) == 1,
            factor: 1,
            extra_jac3: false,
        },
    )
}

pub(crate) fn thm_2_10(ws: &PrimeWorkspace) -> Eval {
    wsum_thm(
        ws,
        &WsumThm {
            ms: &[-640332],
            jac: Some(-3),
            form: (4, 1, 163),
            crit: |p| jacobi(p as i64, 163) == 1,
            factor: 1,
            extra_jac3: false,
        },
    )
}

pub(crate) fn thm_2_11(ws: &PrimeWorkspace) -> Eval {
    let p = ws.p;
    let ctx = ws.ctx(1);
    let ok = |x: u64| -> bool {
        let x3 = pow_mod(x, 3, p);
        let f1 = x;
        let f2 = (x3 + 27) % p;
        let f3 = (x3 + p - 216 % p) % p;
        let f4 = (mul_mod(x, x, p) + 6 * x % p + p - 18 % p) % p;
        mul_mod(mul_mod(f1, f2, p), mul_mod(f3, f4, p), p) != 0
    };
    let xs: Vec<u64> = (1..p).filter(|&x| ok(x)).take(10).collect();
    if xs.is_empty() {
        return Eval::skipped("no admissible x below p");
    }
    for &x in &xs {
        let mut ch = Chain::new(&ctx);
        let x3 = pow_mod(x, 3, p);
        let w = w_poly_mod(p - 1, x, &ctx);
        ch.add("W_{p-1}(x)^2", mul_mod(w, w, p));
        let s = seq_sum_residue_base(
            ws,
            &SequenceId::W,
            ctx.inv_unit(red_i128(-(x as i128) - 3, p)),
            &ctx,
        );
        ch.add("(sum W_k/(-x-3)^k)^2", mul_mod(s, s, p));
        let neg = red_i128(-((x3 + 27) as i128), p);
        let t = mul_mod(neg, ctx.inv_unit(pow_mod(x, 6, p)), p);
        ch.add("sum cc3 t^k", csum_residue_base(BinomKind::CC3, t, &ctx));
        let n4 = mul_mod(x, (x3 + p - 216 % p) % p, p);
        let t2 = pow_mod(mul_mod(neg, ctx.inv_unit(n4), p), 3, p);
        ch.add(
            "jac sum c36",
            red_i128(
                jacobi(n4 as i64, p) as i128
                    * csum_residue_base(BinomKind::C36, t2, &ctx) as i128,
                p,
            ),
        );
        let arg = mul_mod(n4, ctx.inv_unit(mul_mod(4, (x3 + 27) % p, p)), p);
        ch.add(
            "jac W_mid",
            red_i128(
                jacobi(((x3 + 27) % p) as i64, p) as i128
                    * w_poly_mod((p - 1) / 2, arg, &ctx) as i128,
                p,
            ),
        );
        let q = (mul_mod(x, x, p) + 6 * x % p + p - 18 % p) % p;
        let t3 = mul_mod(neg, ctx.inv_unit(mul_mod(q, q, p)), p);
        ch.add("sum C t^k W_k", wsum_residue_base(ws, t3, &ctx));
        let out = ch.eval(Some(format!("x={}", x)));
        if out.status != Status::Verified {
            return out;
        }
    }
    sampled_ok("x", &xs)
}

pub(crate) fn cor_2_1(ws: &PrimeWorkspace) -> Eval {
    let p = ws.p;
    let ctx = ws.ctx(1);
    let ok = |x: u64| -> bool {
        let x2 = mul_mod(x, x, p);
        let f1 = (x + 3) % p;
        let f2 = (1 + 9 * x % p + 27 * x2 % p) % p;
        let f3 = (1 + 9 * x % p) % p;
        let f4 = (1 + 27 * x2 % p) % p;
        let f5 = (1 + p - 27 * x2 % p) % p;
        mul_mod(
            mul_mod(f1, f2, p),
            mul_mod(mul_mod(f3, f4, p), f5, p),
            p,
        ) != 0
    };
    let xs: Vec<u64> = (1..p).filter(|&x| ok(x)).take(10).collect();
    if xs.is_empty() {
        return Eval::skipped("no admissible x below p");
    }
    for &x in &xs {
        let s = seq_sum_residue_base(ws, &SequenceId::W, x % p, &ctx);
        let x2 = mul_mod(x, x, p);
        let num = mul_mod(x, (1 + 9 * x % p + 27 * x2 % p) % p, p);
        let den = pow_mod((1 + p - 27 * x2 % p) % p, 2, p);
        let t = mul_mod(num, ctx.inv_unit(den), p);
        let lhs = mul_mod(s, s, p);
        let rhs = wsum_residue_base(ws, t, &ctx);
        if lhs != rhs {
            return Eval {
                status: Status::Failed,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                witness: Some(format!("x={}", x)),
            };
        }
    }
    sampled_ok("x", &xs)
}

// --- reflection, Lucas, bilinear tail ----------------------------------

/// Reflection check for one recurrence: u_n ≡ ε·c^n·u_{p-1-n} mod p with
/// ε = (c/p) or (c/p)(-1)^(r-1) according to whether p divides the middle
/// value, plus the endpoint u_{p-1} ≡ ε.
pub fn reflection_residues(u: &[u64], r: u32, c: i64, p: u64) -> Option<(usize, u64, u64)> {
    let eps = if u[(p as usize - 1) / 2] != 0 {
        jacobi(c, p) as i128
    } else {
        jacobi(c, p) as i128 * if (r - 1).is_multiple_of(2) { 1 } else { -1 }
    };
    let cp = red_i128(c as i128, p);
    let mut cn = 1u64;
    for n in 0..p as usize {
        let rhs = mul_mod(red_i128(eps, p), mul_mod(cn, u[p as usize - 1 - n], p), p);
        if u[n] != rhs {
            return Some((n, u[n], rhs));
        }
        cn = mul_mod(cn, cp, p);
    }
    if u[p as usize - 1] != red_i128(eps, p) {
        return Some((p as usize - 1, u[p as usize - 1], red_i128(eps, p)));
    }
    None
}

pub(crate) fn thm_3_1(ws: &PrimeWorkspace) -> Eval {
    let p = ws.p;
    let ctx = ws.ctx(1);
    let mut checked = 0;
    for id in &RECURRENT {
        let spec = RecurrenceSpec::for_sequence(id).expect("recurrent");
        let c = id.recurrence_c().expect("recurrent");
        if reduce_signed(c, p) == 0 {
            continue;
        }
        let win = ws.window(id, p - 1);
        let u: Vec<u64> = win.iter().map(|v| ctx.reduce_bigint(v)).collect();
        if let Some((n, l, r)) = reflection_residues(&u, spec.r, c, p) {
            return Eval {
                status: Status::Failed,
                lhs: l.to_string(),
                rhs: r.to_string(),
                witness: Some(format!("{} at n={}", id.tag(), n)),
            };
        }
        checked += 1;
    }
    Eval::verified_note(format!("ok({} sequences)", checked))
}

pub(crate) fn cor_3_1(ws: &PrimeWorkspace) -> Eval {
    let p = ws.p;
    let ctx = ws.ctx(1);
    // the explicit instances: (sequence, base, character)
    let rows: [(SequenceId, u64, bool); 6] = [
        (SequenceId::Apery, 1, false),
        (SequenceId::Domb, 64, false),
        (SequenceId::AZ, 81, false),
        (SequenceId::T, 16, false),
        (SequenceId::W, 27, true),
        (SequenceId::Q, 72, true),
    ];
    for (id, base, with_char) in rows {
        if base % p == 0 {
            continue;
        }
        let win = ws.window(&id, p - 1);
        let u: Vec<u64> = win.iter().map(|v| ctx.reduce_bigint(v)).collect();
        let eps = if with_char {
            red_i128(jacobi(p as i64, 3) as i128, p)
        } else {
            1
        };
        let mut bn = 1u64;
        for n in 0..p as usize {
            let rhs = mul_mod(eps, mul_mod(bn, u[p as usize - 1 - n], p), p);
            if u[n] != rhs {
                return Eval {
                    status: Status::Failed,
                    lhs: u[n].to_string(),
                    rhs: rhs.to_string(),
                    witness: Some(format!("{} at n={}", id.tag(), n)),
                };
            }
            bn = mul_mod(bn, base % p, p);
        }
    }
    // Legendre instance at sampled x: P_n(x) ≡ P_{p-1-n}(x) mod p
    for x in 0..10u64 {
        let mut table = Vec::with_capacity(p as usize);
        let (mut prev, mut cur) = (1u64, x % p);
        table.push(prev);
        if p > 1 {
            table.push(cur);
        }
        for j in 1..p - 1 {
            let a = mul_mod(mul_mod((2 * j + 1) % p, x % p, p), cur, p);
            let b = mul_mod(j % p, prev, p);
            let next = mul_mod((a + p - b) % p, ctx.inv_unit(j + 1), p);
            prev = cur;
            cur = next;
            table.push(cur);
        }
        for n in 0..p as usize {
            if table[n] != table[p as usize - 1 - n] {
                return Eval {
                    status: Status::Failed,
                    lhs: table[n].to_string(),
                    rhs: table[p as usize - 1 - n].to_string(),
                    witness: Some(format!("P at x={}, n={}", x, n)),
                };
            }
        }
    }
    Eval::verified_note("ok(6 sequences + P at 10 x)".to_string())
}

pub(crate) fn thm_3_2(ws: &PrimeWorkspace) -> Eval {
    let p = ws.p;
    let ctx = ws.ctx(1);
    let n_max = 3 * p * p;
    for id in &RECURRENT {
        let win = ws.window(id, n_max);
        let u: Vec<u64> = win.iter().map(|v| ctx.reduce_bigint(v)).collect();
        for k in 1..(n_max / p) as usize {
            for n in 0..p as usize {
                let i = k * p as usize + n;
                if i > n_max as usize {
                    break;
                }
                let rhs = mul_mod(u[k * p as usize], u[n], p);
                if u[i] != rhs {
                    return Eval {
                        status: Status::Failed,
                        lhs: u[i].to_string(),
                        rhs: rhs.to_string(),
                        witness: Some(format!("{} at n={}", id.tag(), i)),
                    };
                }
            }
        }
    }
    Eval::verified_note("ok(10 sequences)".to_string())
}

/// Digit-product (Lucas) congruence for one sequence, conditional on the
/// hypothesis u_{mp} ≡ u_m mod p for every digit boundary in range.
pub fn lucas_residues(u: &[u64], p: u64, n_max: u64) -> Result<Option<(u64, u64, u64)>, String> {
    for m in 1..=(n_max / p) as usize {
        if u[m * p as usize] != u[m] {
            return Err(format!("hypothesis fails at m={}", m));
        }
    }
    for n in 0..=n_max {
        let mut prod = 1u64;
        let mut t = n;
        loop {
            prod = mul_mod(prod, u[(t % p) as usize], p);
            t /= p;
            if t == 0 {
                break;
            }
        }
        if u[n as usize] != prod {
            return Ok(Some((n, u[n as usize], prod)));
        }
    }
    Ok(None)
}

pub(crate) fn cor_3_2(ws: &PrimeWorkspace) -> Eval {
    let p = ws.p;
    let ctx = ws.ctx(1);
    let n_max = 3 * p * p;
    let mut notes: Vec<String> = Vec::new();
    let mut checked = 0;
    for id in &RECURRENT {
        let win = ws.window(id, n_max);
        let u: Vec<u64> = win.iter().map(|v| ctx.reduce_bigint(v)).collect();
        match lucas_residues(&u, p, n_max) {
            Err(note) => notes.push(format!("{}: {}", id.tag(), note)),
            Ok(Some((n, l, r))) => {
                return Eval {
                    status: Status::Failed,
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                    witness: Some(format!("{} at n={}", id.tag(), n)),
                }
            }
            Ok(None) => checked += 1,
        }
    }
    if checked == 0 {
        return Eval::skipped(format!("all hypotheses failed: {}", notes.join("; ")));
    }
    let mut note = format!("ok({} sequences)", checked);
    if !notes.is_empty() {
        note = format!("{}; skipped: {}", note, notes.join("; "));
    }
    Eval::verified_note(note)
}

pub(crate) fn thm_3_3(ws: &PrimeWorkspace) -> Eval {
    let p = ws.p;
    for id in &RECURRENT {
        let spec = RecurrenceSpec::for_sequence(id).expect("recurrent");
        let c = id.recurrence_c().expect("recurrent");
        if reduce_signed(c, p) == 0 {
            continue;
        }
        let ctx = ws.ctx(spec.r);
        let pk = ctx.modulus();
        let win = ws.window(id, p - 1);
        let ci = ctx.inv_unit(red_i128(-(c as i128), pk));
        let mut acc = 0u64;
        let mut mp = 1u64;
        for k in 0..p as i128 {
            let bk = bval(id, k);
            let uk = ctx.reduce_bigint(&win[k as usize]);
            let t = mul_mod(red_i128(bk, pk), mul_mod(uk, uk, pk), pk);
            acc = (acc + mul_mod(t, mp, pk)) % pk;
            mp = mul_mod(mp, ci, pk);
        }
        if acc != 0 {
            return Eval {
                status: Status::Failed,
                lhs: acc.to_string(),
                rhs: "0".to_string(),
                witness: Some(format!("{} mod p^{}", id.tag(), spec.r)),
            };
        }
    }
    Eval::verified_note("ok(tail vanishes mod p^r)".to_string())
}

// b(n) of the named sequences in integer arithmetic.
fn bval(id: &SequenceId, n: i128) -> i128 {
    let spec = RecurrenceSpec::for_sequence(id).expect("recurrent");
    let mut acc: i128 = 0;
    for c in spec.bpoly.iter().rev() {
        let ci = c.to_integer();
        let digits = i64::try_from(&ci).expect("small coefficient");
        acc = acc * n + digits as i128;
    }
    acc
}
