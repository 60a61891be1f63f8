//! Exact models of one-dimensional Zariski-Riemann spaces.
//!
//! The library works over four base pairs `(K, A)`: `(Q, Z)`, `(Q(x), Q[x])`,
//! `(F_p(x), F_p[x])`, and `(F_p(x), F_p)`. For each pair the space of
//! valuation rings of `K` containing `A` consists of one point per prime
//! (or monic irreducible polynomial, plus the degree valuation when `A` is
//! the constant field) together with the generic point `K` itself. On top of
//! that space the crate provides:
//!
//! * the Zariski, inverse, and constructible closures, ultrafilter limit
//!   points, and quasi-compactness predicates ([`space`]);
//! * finite spectral spaces as finite posets, with the same closure
//!   operators and principal-ultrafilter limits ([`poset`]);
//! * exact field arithmetic, valuations, and factorization-backed supports
//!   ([`field`]), including Gauss extensions to `K(T)` ([`tpoly`]);
//! * Kronecker function rings: membership, defining axioms, content
//!   formula, and the pullback of principal opens ([`kronecker`]);
//! * semistar operations of finite type induced by subsets of the space:
//!   ideal images, e.a.b. checks, completions, and vacancy ([`semistar`]).
//!
//! Everything is computed exactly; no floating point is involved. The crate
//! is `no_std` (with `alloc`) so the algorithmic core stays independent of
//! IO concerns, which live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod field;
pub mod fp;
pub mod kronecker;
pub mod poset;
pub mod poly;
pub mod polyfactor;
pub mod semistar;
pub mod space;
pub mod tpoly;

pub use error::Error;
pub use field::{Base, FieldElem, Place, SpacePoint};
pub use space::ZarSubset;

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
