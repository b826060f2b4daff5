//! Exact symmetric-function engine for higher-order Bell functions.
//!
//! The crate computes the Bell symmetric functions `B_n^(m)` (the graded
//! pieces of iterated plethystic exponential towers) by several independent
//! routes, checks them against a brute-force count of hyper-partitions under
//! symmetric-group actions, and derives restriction series `R_lambda(z)` with
//! their stable limits. All arithmetic is exact.
//!
//! Module map:
//! - [`partition`]: integer partitions, `z_lambda`, splits, enumeration
//! - [`symfunc`]: graded symmetric functions, bases, Hall pairing, Kostka data
//! - [`plethysm`]: plethystic substitution, `Omega`, the `psi` specialization
//! - [`bell`]: Bell functions by tower, plethystic, monomial, powersum and
//!   convolution routes; `H_n`; higher-order Bell numbers
//! - [`species`]: hyper-partition enumeration, fixed points and orbit counts
//! - [`vector`]: vector partitions and the polynomials `f_mu(z)`
//! - [`restriction`]: restriction series, residues and Cesàro checks
//! - [`verify`]: the cross-route verification matrix

pub mod bell;
pub mod error;
pub mod exec;
pub mod partition;
pub mod plethysm;
pub mod restriction;
pub mod series;
pub mod species;
pub mod symfunc;
pub mod vector;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
pub use partition::Partition;
pub use series::{TruncPoly, UniPoly};
pub use symfunc::{Basis, SymFunc};

/// Exact rational numbers used for every coefficient.
pub type Rational = num_rational::BigRational;
