//! Exact-arithmetic toolkit for free Novikov algebras realized inside the
//! differential polynomial algebra F{X}.
//!
//! The algebra F{X} is the commutative polynomial algebra on derivative
//! symbols `x_k^(i)` over arbitrary-precision rationals, equipped with the
//! derivation `D` that raises orders via the Leibniz rule. Setting
//! `a · b = D(a) b` makes F{X} a Novikov algebra, and the subalgebra
//! generated by the `x_k` is the free Novikov algebra on those generators.
//!
//! On top of that embedding the crate provides:
//!
//! - [`diffpoly`]: the ambient algebra (monomials, polynomials, `D`,
//!   formal partials, degrees and multidegrees);
//! - [`novikov`]: Novikov/symmetrized/commutator products, the differential
//!   monomial basis, multilinear dimensions, and identity verification;
//! - [`variational`]: Euler operators (variational derivatives), exact
//!   antiderivatives, null-Lagrangian detection, and the basis of the
//!   subspace closed under the symmetrized product;
//! - [`gd`]: the generalized Gel'fand–Dikii transform into slot-symmetrized
//!   tensor polynomials and the transformed Euler operator;
//! - [`repr`]: partitions, Kostka numbers, Specht dimensions, and the full
//!   symmetric-group decomposition of the multilinear symmetric subspace.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod coeff;
pub mod diffpoly;
pub mod error;
pub mod gd;
pub mod linalg;
pub mod novikov;
pub mod repr;
pub mod sample;
pub mod variational;

pub use coeff::Coeff;
pub use diffpoly::{DiffMonomial, DiffPoly, DiffVar, Multidegree};
pub use error::{Error, Result};
