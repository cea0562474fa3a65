//! Families derived from the q-Eulerian polynomials by special
//! substitutions: q-tangent numbers, q-secant numbers and the quotients
//! whose integrality the gamma expansions explain.

pub mod conjecture;
mod points;
pub mod secant;
pub mod tangent;

pub use conjecture::{conjecture_scan_gstar, ConjectureReport, GStarRow, Verdict};
pub use points::admissible_points;
pub use secant::{
    b_central, b_odd_vanish, e_q_secant, e_star, f_star_eval, g_star, g_star_rhs, secant_numbers, verify_gstar_identity,
};
pub use tangent::{a_star, d_identity_rhs, d_poly, even_quotient, f_eval, q_tangent, verify_d_identity};
