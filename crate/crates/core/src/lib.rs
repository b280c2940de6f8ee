//! Exact arithmetic over small finite fields, univariate polynomial
//! factorization, and the statistics machinery for studying how parametric
//! polynomial families factor as their coefficients sweep over the field.
//!
//! The crate is organized bottom-up:
//!
//! - [`field`] — prime fields `F_p` and extensions `F_{p^ν}` with explicit,
//!   deterministically chosen moduli.
//! - [`poly`] — dense univariate polynomials: arithmetic, resultants and
//!   discriminants, complete factorization, irreducibility, factorization
//!   types, and the Morse-condition check.
//! - [`family`] — parametric composition families `F(t, Φ(a, t))`, their
//!   iterates, specialization at coefficient tuples, and the Capelli-route
//!   irreducibility test.
//! - [`group`] — exact reference distributions of cycle types: symmetric
//!   groups, iterated wreath powers, closures of generated permutation
//!   groups, and total-variation distance.
//! - [`experiment`] — sweep plans, factorization-type histograms, density
//!   counts, independence tests, symmetric-group certification, and
//!   reproducible report emission.
//!
//! Everything is `no_std` + `alloc`; IO, parallel drivers, and the command
//! line live in the companion `cyclotype` crate.

#![no_std]

extern crate alloc;

pub mod cycle_type;
pub mod error;
pub mod experiment;
pub mod family;
pub mod field;
pub mod group;
pub mod perm;
pub mod poly;
pub mod rng;

mod coeff;

pub use cycle_type::CycleType;
pub use error::Error;
pub use field::{FieldDescriptor, FieldElem};
pub use poly::{Factorization, Poly};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
