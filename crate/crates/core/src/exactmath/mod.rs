//! Exact arithmetic and linear algebra over ℚ and ℚ[T1, ..., Tk].

pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod textfmt;

pub use linalg::{
    image_basis, inverse, is_invertible, kernel_basis, lagrange_projector, rank, rref, Subspace,
};
pub use matrix::{Matrix, PolyMatrix, QMatrix, Ring};
pub use poly::{Assignment, MPoly, Monomial};
pub use rational::{factorial, Rat};
pub use textfmt::{matrix_to_json, parse_matrix, parse_rat_matrix, RMatrix};

/// Entrywise specialisation of a polynomial, `substitute(p, assignment)`.
pub fn substitute(p: &MPoly, assignment: &Assignment) -> crate::error::Result<Rat> {
    p.substitute(assignment)
}
