//! The four triangles, their bivariate polynomials, the defining-series
//! oracles and the gamma-basis change formulas.

pub mod brackets;
pub mod classical;
mod triangle;
pub mod type_a;
pub mod type_b;

pub use triangle::{Family, Triangle};
pub use type_a::{
    basis_change_a, carlitz_poly, carlitz_series_oracle, carlitz_triangle, gamma_a_triangle, gamma_expand_a,
};
pub use type_b::{
    basis_change_b, gamma_b_triangle, gamma_expand_b, type_b_poly, type_b_series_oracle, type_b_triangle,
};
