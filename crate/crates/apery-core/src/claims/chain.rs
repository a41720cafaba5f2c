//! Chains of residues that must all agree up to fixed rational constants.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::arith::{mul_mod, ModCtx};

use super::{Eval, Status};

/// A member states: my residue equals (num/den) times the chain's common
/// value. Adjacent members are compared by cross-multiplication, so a
/// constant with p in its denominator (or numerator) stays well-defined.
struct Member {
    label: String,
    num: i64,
    den: i64,
    value: u64,
}

pub(crate) struct Chain<'a> {
    ctx: &'a ModCtx,
    members: Vec<Member>,
}

fn red_i128(v: i128, m: u64) -> u64 {
    v.rem_euclid(m as i128) as u64
}

impl<'a> Chain<'a> {
    pub fn new(ctx: &'a ModCtx) -> Chain<'a> {
        Chain {
            ctx,
            members: Vec::new(),
        }
    }

    pub fn add(&mut self, label: &str, value: u64) {
        self.add_scaled(label, value, 1, 1);
    }

    pub fn add_scaled(&mut self, label: &str, value: u64, num: i64, den: i64) {
        let p = self.ctx.p() as i64;
        assert!(
            num % p != 0 || den % p != 0,
            "chain constant must be p-reduced"
        );
        self.members.push(Member {
            label: label.to_string(),
            num,
            den,
            value: value % self.ctx.modulus(),
        });
    }

    // value_i * num_j * den_i-free comparison: v1·n1·d2 ≡ v2·n2·d1.
    fn cross(&self, i: usize) -> (u64, u64) {
        let pk = self.ctx.modulus();
        let (a, b) = (&self.members[i], &self.members[i + 1]);
        let l = mul_mod(red_i128(a.num as i128 * b.den as i128, pk), a.value, pk);
        let r = mul_mod(red_i128(b.num as i128 * a.den as i128, pk), b.value, pk);
        (l, r)
    }

    /// Verifies all adjacent pairs; the first bad link decides the result.
    pub fn eval(self, witness: Option<String>) -> Eval {
        if self.members.len() < 2 {
            return Eval::skipped("chain degenerate after member drops");
        }
        for i in 0..self.members.len() - 1 {
            let (l, r) = self.cross(i);
            if l != r {
                let mut w = format!(
                    "link {} vs {}",
                    self.members[i].label,
                    self.members[i + 1].label
                );
                if let Some(extra) = witness {
                    w = format!("{}; {}", w, extra);
                }
                return Eval {
                    status: Status::Failed,
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                    witness: Some(w),
                };
            }
        }
        let (l, r) = self.cross(0);
        Eval {
            status: Status::Verified,
            lhs: l.to_string(),
            rhs: r.to_string(),
            witness,
        }
    }
}
