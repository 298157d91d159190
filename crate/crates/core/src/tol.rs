//! Numerical tolerances used across the crate.
//!
//! Everything that compares floating-point quantities against a threshold
//! pulls its default from here.

/// Structural validation of density matrices (Hermiticity, trace, smallest eigenvalue).
pub const DENSITY: f64 = 1e-10;

/// Validation applied to channel outputs, which accumulate round-off.
pub const CHANNEL_OUTPUT: f64 = 1e-8;

/// Input Hermiticity check for eigensolvers.
pub const HERMITIAN: f64 = 1e-10;

/// Largest eigenvalue excursion outside `[0, 1]` that entropy clips silently.
pub const ENTROPY_CLIP: f64 = 1e-9;

/// Unitarity of joint collision unitaries and Kraus completeness.
pub const UNITARITY: f64 = 1e-9;

/// Normalization of pure state vectors.
pub const NORMALIZATION: f64 = 1e-10;

/// Distance from the unit circle below which an eigenvalue counts as peripheral.
pub const PERIPHERAL: f64 = 1e-8;

/// Maximum `‖E(ρ*) − ρ*‖₁` accepted for a spectral fixed point.
pub const FIXED_POINT_RESIDUAL: f64 = 1e-8;

/// Positivity check applied to the symmetrized fixed-point eigenvector.
pub const FIXED_POINT_POSITIVITY: f64 = 1e-8;

/// Eigenvalues of a Hermitian operator closer than this form one eigenspace.
pub const EIGENSPACE_GROUPING: f64 = 1e-8;

/// Singular-value / eigenvalue cutoff for numerical rank.
pub const RANK: f64 = 1e-8;

/// Entropies below this are treated as zero when forming ratios.
pub const ENTROPY_FLOOR: f64 = 1e-12;

/// Ancilla eigenvalues below this are dropped from the Kraus dilation.
pub const KRAUS_WEIGHT: f64 = 1e-14;

/// Largest system dimension for which a dense superoperator is built.
pub const SUPEROPERATOR_MAX_DIM: usize = 64;
