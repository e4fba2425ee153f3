//! Dense complex linear-algebra backbone.
//!
//! Matrices are stored row-major. Bipartite indexing is system-major
//! throughout: a basis label on `H_S ⊗ H_E` is `s * d_e + e`.

mod density;
mod eig;
mod matrix;
pub mod operators;
mod orth;
mod partial;
mod random;
mod state;

pub use density::DensityOperator;
pub use eig::{eigh, polar_decompose, psd_sqrt, Eigh};
pub use matrix::{anticommutator, commutator, linear_combination, ComplexMatrix};
pub use orth::{orthonormalize_columns, orthonormalize_rows};
pub use partial::{partial_trace, Subsystem};
pub use random::{
    sample_density, sample_general, sample_hermitian, sample_semi_unitary, sample_unit_state,
    RandomSeed,
};
pub use state::StateVector;

pub use num_complex::Complex64;
