//! Exact arithmetic for generalized cubic and overcubic partitions.
//!
//! The crate is layered bottom-up:
//!
//! - [`series`]: truncated power series over ℤ or ℤ/mℤ.
//! - [`qfunctions`]: Euler products `f_k`, the theta functions ψ and φ, and
//!   eta-quotient expansions.
//! - [`partitions`]: the counting functions `a_c(n)` and `ā_c(n)` plus the
//!   identities they satisfy.
//! - [`arith`]: quadratic residues, the Kronecker symbol and modular inverses.
//! - [`modform`]: eta-quotient metadata, cusp orders, Sturm bounds and Hecke
//!   operators.
//! - [`engine`]: congruence verification, Sturm certificates and search.

pub mod arith;
pub mod engine;
pub mod modform;
pub mod partitions;
pub mod qfunctions;
pub mod series;

pub use series::{Modulus, Ring, SeriesError, TruncatedSeries};
