//! Exact-arithmetic toolkit for generalized Cesàro operators of integer order
//! on ℓ².
//!
//! Everything on the exact path is computed over arbitrary-precision rationals:
//! matrix entries, interrupter pairs (the diagonal `P` and corner `Q` witnessing
//! supraposinormality), telescoping closed forms for the series entries of
//! `M*PM`, determinant/minor polynomials in the parameter α, and the α-range
//! extraction for posinormality and the hyponormality sufficient condition.
//! Floating point appears only in the quarantined finite-section evidence path
//! and in the real-order entry evaluator.
//!
//! Module map:
//! - [`exactnum`]: rationals, multivariate polynomials over {α, i, j, t},
//!   rational functions, univariate polynomials and real-root isolation.
//! - [`cesaro`]: the operator matrices, truncations, and structured products.
//! - [`telescope`]: series summands, telescoping ansatz solver, closed forms,
//!   and partial-sum brackets.
//! - [`interrupters`]: the diagonal/corner interrupter pair, the printed
//!   order-3 corner, and the general-order corner solver.
//! - [`analysis`]: identity verification, minor polynomials, α-range reports,
//!   and finite-section defect evidence.
//! - [`cli`]: the `cesaro-lab` command-line tool.

pub mod analysis;
pub mod cesaro;
pub mod cli;
pub mod exactnum;
pub mod interrupters;
pub mod telescope;

use thiserror::Error;

/// Errors shared by every module on the exact path.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A parameter left its mathematical domain (for example α ≤ −1).
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),
    /// An operation received the zero polynomial where a nonzero one is required.
    #[error("zero polynomial rejected: {0}")]
    ZeroPolynomial(String),
    /// The telescoping ansatz at the recorded shape did not reproduce the summand.
    #[error(
        "telescoping ansatz failed for order {order} \
         (numerator degree {numerator_degree}, {denominator_factors} denominator factors)"
    )]
    AnsatzFailure {
        order: u32,
        numerator_degree: usize,
        denominator_factors: usize,
    },
    /// Rational-function interpolation of a solved corner could not be validated.
    #[error("symbolic corner interpolation failed for order {order}: {detail}")]
    InterpolationFailure { order: u32, detail: String },
    /// A structurally invalid argument (sizes, index order, malformed input).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Convenient result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
