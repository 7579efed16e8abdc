//! Exact-arithmetic structures of boson and fermion Fock spaces realized on the
//! graded ring of symmetric functions.
//!
//! Everything is computed over exact scalars: arbitrary-precision rationals, or
//! rational functions in two formal parameters `q`, `t` kept in canonical reduced
//! form. The main pieces:
//!
//! - [`scalar`]: the coefficient field and projective normalization constants
//!   (squared determinants and formal exponents).
//! - [`partition`]: Young diagrams in partition, multiplicity, Maya and Frobenius
//!   notation, with conversions and enumeration.
//! - [`symfun`]: the degree-truncated ring of symmetric functions in the power-sum,
//!   monomial and Schur bases, with exact basis conversions.
//! - [`inner`]: the Kerov family of scalar products (classical, Jack,
//!   Hall-Littlewood, Macdonald) and per-degree Gram matrices.
//! - [`kernel`]: bisymmetric kernels as linear operators - application,
//!   composition, matrix elements, reproducing (identity) kernels.
//! - [`gauss`]: Gauss vectors and Gauss operator kernels, their inner products,
//!   the composition semigroup, Heisenberg operators, and the map from the
//!   symplectic group (Weil representation parameters).
//! - [`relation`]: finite-dimensional linear relations, their composition, and the
//!   symplectic/Lagrangian geometry checks mirroring the Gauss semigroup.
//! - [`wedge`]: the charge-zero semi-infinite wedge space - normalized monomials,
//!   decomposable vectors, inner products, the GL action, skew-series expansions.
//! - [`bosonfermion`]: the dictionary between symmetric functions and the wedge
//!   space (classical scalar product), images of multiplicative vectors, and two
//!   inversion formulas.
//! - [`characters`]: symmetric-group character values with a Murnaghan-Nakayama
//!   oracle and determinant generating functions.
//! - [`selftest`]: the acceptance suite run by `symfock selftest` and the
//!   `acceptance` integration test.
//!
//! Compiled with the default `parallel` feature, data-parallel loops (character
//! table columns, kernel blocks, minor expansions, sample sweeps) run on rayon;
//! `--no-default-features` selects the sequential fallback.

pub mod scalar;
pub mod partition;
pub mod symfun;
pub mod inner;
pub mod kernel;
pub mod gauss;
pub mod relation;
pub mod wedge;
pub mod bosonfermion;
pub mod characters;
pub mod json;
pub mod selftest;

pub(crate) mod minors;
pub(crate) mod par;
pub(crate) mod series;
pub(crate) mod zring;

use thiserror::Error;

/// Errors surfaced by the exact-arithmetic operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("denominator vanishes at the requested (q, t) point")]
    Pole,
    #[error("parse error in `{input}`: {message}")]
    Parse { input: String, message: String },
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("window mismatch: {0}")]
    WindowMismatch(String),
    #[error("matrix is singular: {0}")]
    Singular(String),
    #[error("matrix is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("operation requires the classical weight")]
    NonClassicalWeight,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input in field `{field}`: {message}")]
    Invalid { field: String, message: String },
    #[error("stabilization failed: {0}")]
    Stabilization(String),
}

impl Error {
    pub(crate) fn invalid(field: &str, message: impl Into<String>) -> Self {
        Error::Invalid {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
