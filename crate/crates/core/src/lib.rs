//! Exact computation and exhaustive verification for vertex isoperimetry and
//! independent-set stability on tensor powers of complete graphs.
//!
//! The graph `K_t^n` has vertex set `[t]^n`; two strings are adjacent exactly
//! when they differ in every coordinate. This crate provides:
//!
//! * dense vertex sets over `[t]^n` with exact rational densities and a
//!   word-parallel vertex-boundary transform ([`cube`]);
//! * coordinate compressions, label sorting, and the fill/fold pipeline that
//!   canonicalizes extremal sets toward dictator form ([`compress`]);
//! * the isoperimetric-profile recursion with rigorous rational enclosures,
//!   the exponent `eta(t)`, and high-precision inequality checks ([`profile`]);
//! * brute-force oracles over order ideals and independent sets ([`oracle`]);
//! * named extremal families with closed-form validation ([`constructions`]);
//! * stability reports for near-maximum independent sets ([`stability`]);
//! * named verification suites wiring everything together ([`verify`]).

#![forbid(unsafe_code)]

pub mod bits;
pub mod compress;
pub mod constructions;
pub mod cube;
pub mod error;
pub mod io;
pub mod oracle;
pub mod profile;
pub mod real;
pub mod stability;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
