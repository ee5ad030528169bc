//! Exact algebra for describing the exceptional specializations of a
//! bivariate polynomial `P(T, X)` over the rationals.
//!
//! A rational `t` is exceptional when `P(t, X)` is reducible or its Galois
//! group differs from the generic group of `P` over `Q(T)`. Outside a finite
//! exclusion set `D`, this happens exactly when one of finitely many
//! auxiliary polynomials `f_i(t, X)` has a rational root. This crate provides
//! the pieces needed to compute `D`, identify specialized Galois groups, and
//! check that equivalence pointwise:
//!
//! * [`arith`]: rationals, heights, valuations, primality.
//! * [`poly`]: dense univariate/bivariate polynomials, resultants,
//!   discriminants, arithmetic mod p, and a text grammar.
//! * [`factor`]: rational roots and Zassenhaus factorization over `Q`.
//! * [`perm`]: permutation groups, subgroup classes, maximal subgroups.
//! * [`galois`]: Galois group identification in degrees 2 to 6.
//! * [`hit`]: exclusion sets, exceptional tests, and equivalence sweeps.
//! * [`local`]: Hilbert symbols and conic solvability.
//! * [`curves`]: parametrizations, elliptic curves, bounded point search.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod curves;
mod error;
pub mod factor;
pub mod galois;
pub mod hit;
pub mod local;
pub mod perm;
pub mod poly;
pub mod ring;

pub use arith::Rational;
pub use error::{Error, Result};
pub use poly::{BiPoly, Poly, UniPoly};
