//! Exact scalars and polynomial algebra: the substrate every other module
//! computes on.
//!
//! - [`rational`]: parsing/formatting of exact rationals and a safe `f64`
//!   conversion for arbitrarily large numerators and denominators.
//! - [`multipoly`]: multivariate polynomials over the fixed variable universe
//!   {α, i, j, t} with canonical term ordering.
//! - [`ratfun`]: quotients of multivariate polynomials with factored
//!   denominators; equality decided by cross-multiplication.
//! - [`unipoly`]: dense univariate polynomials over ℚ (always in α here),
//!   Euclidean algorithms, and square-free decomposition.
//! - [`roots`]: Sturm-sequence real-root isolation and sign partitioning.

pub mod multipoly;
pub mod ratfun;
pub mod rational;
pub mod roots;
pub mod unipoly;

pub use multipoly::{poly_equal, MultiPoly, Var};
pub use ratfun::{ratfun_identity, RationalFunction};
pub use rational::{format_rational, parse_rational, rational_to_f64, BigRational, RawRational};
pub use roots::{isolate_roots, sign_between_roots, Domain, RootIsolation, Sign, SignRegion};
pub use unipoly::{UniPoly, UniRat};
