//! Exact arithmetic: rationals, polynomials, linear systems.

pub mod linear;
pub mod poly;
pub mod rational;

pub use linear::{apply, solve_linear, LinearSystem, LinearValue, Solution};
pub use poly::{poly_equal, poly_eval, Poly};
pub use rational::{q, Rational};
