//! Exact arithmetic for Apéry-like sequences and congruence verification
//! modulo prime powers.
//!
//! The crate is split along the data it owns:
//!
//! - [`arith`]: residues mod p^k with tracked p-adic valuations, Jacobi
//!   symbols, binomial coefficients whose factorials contain factors of p.
//! - [`sequences`]: the named integer sequences (Apéry, Domb, Franel, ...),
//!   generated both from closed binomial sums and from the shared
//!   three-term recurrence, plus the exact polynomial identities they obey.
//! - [`special`]: Bernoulli/Euler numbers mod p, Legendre polynomials,
//!   cubic character sums, and binary quadratic form representations.
//! - [`claims`]: a registry of executable per-prime congruence checks built
//!   from the three layers above, with batch evaluation and reporting.
//!
//! Everything is exact: big integers, big rationals, or residues in
//! Z/p^k. There are no floating point numbers anywhere.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod claims;
pub mod sequences;
pub mod special;

pub use arith::{jacobi, mod_inv, ModCtx, PValued, PrimeRange};
pub use claims::{
    evaluate, lucas_check, reflection_check, registry, run_range, select, weighted_sum, Claim,
    ClaimResult, Report, Status,
};
pub use sequences::{seq_exact, SequenceId};
