//! Exact computations with Cayley (octonion) algebras over the rationals and
//! prime fields: derivation algebras, local and 2-local derivations, and
//! the Malcev and Jordan algebras attached to an octonion algebra.
//!
//! Everything is exact. Rationals are arbitrary precision, residues live in
//! `GF(p)`, and subspaces are compared through their canonical row-reduced
//! bases, so every equality claim is literal matrix equality.
//!
//! Layers, bottom up:
//!
//! - [`field`]: scalars in `Q` and `GF(p)`.
//! - [`linalg`]: matrices, RREF, nullspaces, solving, and a subspace calculus.
//! - [`algebra`]: algebras by structure constants, quadratic forms read off a
//!   multiplication table, identity checks.
//! - [`construct`]: the split octonions on the canonical basis `e1, e2, u1,
//!   u2, u3, v1, v2, v3`, the Cayley-Dickson tower, isotropy classification.
//! - [`derivation`]: `Der(C)`, `so(C,n)`, local derivations, `so(C0,n)`,
//!   stabilizers and orbits `{d(x)}`.
//! - [`suite`]: verification suites producing [`check::CheckOutcome`]s.
//! - [`report`]: JSON for algebras and verification reports.
//!
//! The `examples/` directory has one runnable program per capability:
//!
//! ```text
//! cargo run --example field_arithmetic
//! cargo run --example subspace_calculus
//! cargo run --example split_octonions
//! cargo run --example cayley_dickson
//! cargo run --example derivation_spaces
//! cargo run --example local_derivations
//! cargo run --example split_two_local
//! cargo run --example division_two_local
//! cargo run --example malcev_jordan
//! cargo run --example verification_report
//! ```
//!
//! ```
//! use cayley_core::construct::split_cayley;
//! use cayley_core::derivation::DerivationSpaces;
//! use cayley_core::field::FieldSpec;
//!
//! let c = split_cayley(FieldSpec::prime(3).unwrap());
//! let s = DerivationSpaces::compute(&c);
//! assert_eq!((s.der.dim(), s.skew.dim(), s.locder.dim()), (14, 28, 21));
//! ```

pub mod algebra;
pub mod check;
pub mod construct;
pub mod derivation;
pub mod error;
pub mod field;
pub mod linalg;
pub mod report;
pub mod sample;
pub mod suite;

pub use error::{Error, Result};
