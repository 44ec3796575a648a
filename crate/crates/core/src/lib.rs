//! Simplices in the endomorphism semiring of a finite chain.
//!
//! The endomorphisms of the chain `C_n = {0 < 1 < ... < n-1}` form a
//! semiring under pointwise maximum and composition. Fixing a vertex set
//! `A = {a_0 < ... < a_{k-1}}`, the maps with image inside `A` form a
//! subsemiring, the simplex `sigma^(n)(A)`, whose vertices are the constant
//! maps. This crate models those simplices together with their faces,
//! layers, discrete neighborhoods and type-lifting partition, and ships a
//! brute-force engine ([`verify`]) that sweeps every small simplex and
//! checks the structural claims with counterexample witnesses.
//!
//! ```
//! use endosimplex::{Endo, Simplex};
//!
//! let s = Simplex::new(10, vec![0, 2, 3, 5, 8]).unwrap();
//! let alpha = Endo::parse("0_4 2_2 8_4", 10).unwrap();
//! assert!(s.contains(&alpha).unwrap());
//! assert_eq!(alpha.power(2).unwrap().to_string(), "0_6 8_4");
//! ```

pub mod chain;
pub mod combinatorics;
pub mod error;
pub mod exec;
pub mod simplex;
pub mod strata;
pub mod typemap;
pub mod verify;

pub use chain::{Endo, Nilpotency, NotationStyle};
pub use error::{Error, Result};
pub use exec::Execution;
pub use simplex::{EndoSet, Simplex, DEFAULT_CAP};
pub use strata::{ClosureReport, Law, Witness};
pub use typemap::{BlockLabel, PartitionReport, TypeSignature};
