//! Exact characters of level-k standard modules, principal subspaces and
//! parafermionic spaces for the twisted affine Lie algebra of type A(2l)^(2).
//!
//! The crate evaluates fermionic sum formulas as truncated q-series and checks
//! them against two independent sources: brute-force enumeration of the
//! quasi-particle bases, and the Freudenthal multiplicity recursion on the
//! affine Cartan matrix.
//!
//! ```
//! use fermionic_characters::{characters, oracle, ModelParams};
//!
//! let params = ModelParams::new(1, 1, "3".parse().unwrap()).unwrap();
//! let formula = characters::char_principal(&params);
//! let counted = oracle::oracle_principal(&params);
//! assert_eq!(formula, counted);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod characters;
pub mod cli;
pub mod cocycle;
pub mod ellipsoid;
pub mod error;
pub mod kacmoody;
pub mod linalg;
pub mod model;
pub mod oracle;
pub mod qseries;
pub mod quasiparticle;
pub mod rational;

pub use error::{Error, Result};
pub use model::{FoldedVector, LatticeVector, ModelParams, RootInterval};
pub use qseries::MultiSeries;
pub use rational::Rational;
