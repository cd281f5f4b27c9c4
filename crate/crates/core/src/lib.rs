//! Exact computer algebra for the bigraded Lie algebras `lq` and `ls`.
//!
//! The crate works with non-commutative polynomials over four tagged
//! alphabets (`b_s`, `x_0/x_1`, `y_k` and `D_{k,m} = ad(b_0)^m(b_k)`) with
//! arbitrary-precision rational coefficients. On top of the ambient algebra it
//! provides
//!
//! - the concatenation, shuffle and balanced quasi-shuffle products
//!   ([`ncpoly`]),
//! - the involution `tau`, the projection `pi0`, its section `sec`, the
//!   antipodes and the conversion between the `b` and `D` alphabets
//!   ([`hopfmaps`]),
//! - the derivations `d^w_A`, the bracket `{-,-}_A`, its zero-projected
//!   variant, the Ihara bracket and the weight-raising derivation `delta`
//!   ([`brackets`]),
//! - the embedding `theta` of `ls` into `lq` ([`embedding`]),
//! - bimoulds with `mu`, `arit`, `ari` and `swap` ([`bimould`]),
//! - exact linear algebra, Lyndon bases, membership tests and the bigraded
//!   dimension tables of `lq` and `ls` ([`spaces`]).
//!
//! Everything is exact; no floating point is involved anywhere.

pub mod bimould;
pub mod brackets;
pub mod embedding;
pub mod error;
pub mod hopfmaps;
pub mod ncpoly;
pub mod rational;
pub mod spaces;

pub use error::{Error, Result};
pub use ncpoly::{Alphabet, Letter, NcPoly, Word};
pub use rational::Q;
