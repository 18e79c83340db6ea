//! Exact symmetric linear algebra over ℚ. No floating point anywhere: every
//! eigenvalue-sign question is answered through inertia, and kernels come
//! from fraction-free elimination.

mod inertia;
mod matrix;
mod singular;

pub use inertia::{inertia, Inertia};
pub use matrix::{normalize_vector, RatMatrix, SymRatMatrix};
pub use singular::{is_supersingular, is_weakly_singular, DEFAULT_SUBSET_CAP};

/// Exact basis of `ker A`, one normalized integer vector per free column.
pub fn kernel_basis(a: &SymRatMatrix) -> Vec<Vec<crate::rational::Rational>> {
    a.kernel_basis()
}
