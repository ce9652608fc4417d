//! Exact-arithmetic catalog of the four-dimensional nonunimodular Lie
//! algebras, their simply connected matrix-group realizations, their
//! left-invariant metric representatives, and the computation of the
//! isometric-automorphism groups behind the semidirect isometry
//! decomposition Isom(G, g) = G x| Aut(G)_g.
//!
//! The crate is organized bottom-up:
//! - [`linalg`]: exact rational / float matrices, Sturm sequences, Cholesky,
//!   matrix exponentials;
//! - [`expr`]: the tiny symbolic expression language the catalog is stored in;
//! - [`catalog`]: the sixteen algebras, automorphism templates, metric
//!   families, expected groups;
//! - [`lietheory`]: brackets, ad operators, type (R), automorphism and
//!   derivation machinery;
//! - [`metrics`]: the Tsup4 <-> S4 bijection and metric pullback;
//! - [`stabilizer`]: the isometric-automorphism group engine;
//! - [`realization`]: concrete matrix models of the groups and the
//!   sigma-action similarity checks;
//! - [`sample`]: deterministic admissible-parameter sampling;
//! - [`cli`]: the command-line front end and the verify-all harness.

pub mod catalog;
pub mod cli;
pub mod expr;
pub mod lietheory;
pub mod linalg;
pub mod metrics;
pub mod realization;
pub mod sample;
pub mod stabilizer;
