//! Equilateral polygons on planar integral lattices.
//!
//! A lattice with rational Gram matrix is classified by its square-free invariant `ν`.
//! Explicit polygons live in `Λ(m) = Z(1, 0) + Z(0, √m)`; a vector `(x, y)` of this crate
//! always stands for `(x, y·√m)`.

pub mod arith;
pub mod certificate;
pub mod error;
pub mod io;
pub mod polygon;
pub mod rational;
pub mod repgen;
pub mod search;
pub mod wide;

pub use arith::{classify_lattice, classify_nu, nu_of_gram, ClassificationResult, GramMatrix, Reason, Verdict};
pub use certificate::Certificate;
pub use error::{Error, Result};
pub use polygon::{assemble_convex, verify_certificate, Polygon, VerificationReport};
pub use rational::Rational;
pub use repgen::{enumerate_reps, unit_set, LatticeVector, Representation, UnitVector};
pub use search::{
    canonicalize, find_zero_sum, find_zero_sum_general, find_zero_sum_symmetric, sort_canonically, Mode, SearchBudget,
    SearchOutcome,
};
pub use wide::Wide;
