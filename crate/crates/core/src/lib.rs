//! Exact construction and verification of q-Eulerian polynomials.
//!
//! The crate builds Carlitz's q-Eulerian polynomials `A_n(t,q)`, the type-B
//! q-Eulerian polynomials `B_n(t,q)` of Chow and Gessel, and the triangles
//! `a_{n,k}(q)`, `b_{n,k}(q)` of coefficients of their expansions in the
//! q-deformed gamma basis. On top of these it derives the q-tangent and
//! q-secant families and checks the identities relating them.
//!
//! All arithmetic is exact. Polynomial types are generic over their
//! coefficient ring (see [`Coeff`]); the aliases below fix the ring to
//! arbitrary-precision integers, which is what every computation in the
//! higher modules uses.

pub mod doubloon;
pub mod error;
pub mod eulerian;
pub mod qring;
pub mod scalar;
pub mod special;
pub mod unimodality;

pub use error::{Error, Result};
pub use eulerian::{Family, Triangle};
pub use qring::{BiPoly, Laurent, Poly, Sign};
pub use scalar::Coeff;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Exact rational number with arbitrary-precision parts.
pub type Rat = num_rational::BigRational;
/// Polynomial in `q` with integer coefficients.
pub type QPoly = Poly<Int>;
/// Laurent polynomial in `q` with integer coefficients.
pub type QLaurent = Laurent<Int>;
/// Polynomial in `t` whose coefficients are integer Laurent polynomials in `q`.
pub type TQPoly = BiPoly<Int>;
/// Triangle of integer polynomials.
pub type QTriangle = Triangle<Int>;
