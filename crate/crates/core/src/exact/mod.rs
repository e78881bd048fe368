//! Exact arithmetic substrate: rationals, dense matrices, sparse
//! multivariate polynomials, rational functions and their log extension.

mod logpoly;
mod matrix;
mod poly;
mod ratfunc;
mod rational;
mod vector_field;

pub use logpoly::LogPolynomial;
pub use matrix::{QMatrix, Rref};
pub use poly::{default_labels, Monomial, Polynomial};
pub use ratfunc::RationalFunction;
pub use rational::{factorial, frac, int, parse_rational, powi, rational_root, Rational};
pub use vector_field::VectorField;
