//! Dense complex linear algebra for small composite quantum systems.
//!
//! Composite indices follow one convention everywhere: factor 0 is the
//! leftmost tensor factor and the most significant index block (see
//! [`SubsystemShape`]). Trace distances are un-halved, `‖ρ − σ‖₁`.

mod density;
mod matrix;
mod ops;
pub mod random;
mod shape;

pub use density::{concurrence, validate_density, von_neumann_entropy, DensityMatrix, ValidationReport};
pub(crate) use density::check_normalized;
pub use matrix::ComplexMatrix;
pub use ops::{
    basis_ket, embed, hermitian_eig, kron, partial_trace, pauli_x, pauli_y, pauli_z, tensor,
    trace_distance, trace_norm, unitary_from_hamiltonian, HermitianEigen,
};
pub use shape::SubsystemShape;
