use num_complex::Complex64;

use super::ops::{hermitian_eig, kron, pauli_y, trace_norm};
use super::{ComplexMatrix, SubsystemShape};
use crate::error::{Error, Result};
use crate::tol;

/// Outcome of [`validate_density`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValidationReport {
    /// `max |ρ_ij − conj(ρ_ji)|`
    pub hermiticity_defect: f64,
    /// `|Tr ρ − 1|`
    pub trace_defect: f64,
    /// Smallest eigenvalue of the Hermitian part.
    pub min_eigenvalue: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl ValidationReport {
    fn failure_reason(&self) -> String {
        let mut parts = Vec::new();
        if !(self.hermiticity_defect <= self.tolerance) {
            parts.push(format!("Hermiticity defect {:.3e}", self.hermiticity_defect));
        }
        if !(self.trace_defect <= self.tolerance) {
            parts.push(format!("trace defect {:.3e}", self.trace_defect));
        }
        if !(self.min_eigenvalue >= -self.tolerance) {
            parts.push(format!("negative eigenvalue {:.3e}", self.min_eigenvalue));
        }
        format!("{} (tolerance {:.1e})", parts.join(", "), self.tolerance)
    }
}

/// Checks Hermiticity, unit trace and positivity. Never fails; non-square
/// input is reported with infinite defects.
pub fn validate_density(m: &ComplexMatrix, tolerance: f64) -> ValidationReport {
    if !m.is_square() {
        return ValidationReport {
            hermiticity_defect: f64::INFINITY,
            trace_defect: f64::INFINITY,
            min_eigenvalue: f64::NEG_INFINITY,
            tolerance,
            passed: false,
        };
    }
    let hermiticity_defect = m.hermiticity_defect();
    let trace_defect = (m.trace() - Complex64::new(1.0, 0.0)).norm();
    let min_eigenvalue = hermitian_eig(&m.hermitian_part())
        .map(|e| e.values[0])
        .unwrap_or(f64::NAN);
    let passed = hermiticity_defect <= tolerance
        && trace_defect <= tolerance
        && min_eigenvalue >= -tolerance;
    ValidationReport {
        hermiticity_defect,
        trace_defect,
        min_eigenvalue,
        tolerance,
        passed,
    }
}

/// Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates at [`tol::DENSITY`].
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(matrix, tol::DENSITY)
    }

    pub fn with_tolerance(matrix: ComplexMatrix, tolerance: f64) -> Result<Self> {
        let report = validate_density(&matrix, tolerance);
        if !report.passed {
            return Err(Error::Argument(format!(
                "not a density matrix: {}",
                report.failure_reason()
            )));
        }
        Ok(Self { matrix })
    }

    pub(crate) fn new_unchecked(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    /// `|ψ⟩⟨ψ|` for a normalized `ψ`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        check_normalized(psi)?;
        Ok(Self {
            matrix: ComplexMatrix::outer(psi, psi),
        })
    }

    /// Diagonal state with the given populations.
    pub fn from_populations(populations: &[f64]) -> Result<Self> {
        if populations.len() < 2 {
            return Err(Error::Argument("need at least two populations".into()));
        }
        Self::new(ComplexMatrix::real_diag(populations))
    }

    pub fn maximally_mixed(d: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(d).scale_real(1.0 / d as f64),
        }
    }

    /// `p·a + (1−p)·b`
    pub fn mix(p: f64, a: &Self, b: &Self) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Argument(format!("mixing weight {p} outside [0, 1]")));
        }
        if a.dim() != b.dim() {
            return Err(Error::Shape("mixing states of different dimension".into()));
        }
        Ok(Self {
            matrix: &a.matrix.scale_real(p) + &b.matrix.scale_real(1.0 - p),
        })
    }

    pub fn tensor(states: &[&Self]) -> Result<Self> {
        let (first, rest) = states
            .split_first()
            .ok_or_else(|| Error::Argument("tensor of an empty list".into()))?;
        let matrix = rest
            .iter()
            .fold(first.matrix.clone(), |acc, s| kron(&acc, &s.matrix));
        Ok(Self { matrix })
    }

    /// `state^{⊗n}`
    pub fn power(&self, n: usize) -> Result<Self> {
        Self::tensor(&vec![self; n])
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `⟨i|ρ|i⟩`
    pub fn population(&self, i: usize) -> f64 {
        self.matrix[(i, i)].re
    }

    pub fn purity(&self) -> f64 {
        self.matrix.matmul(&self.matrix).trace().re
    }

    /// Reduced state on `keep`; see [`super::partial_trace`].
    pub fn reduce(&self, shape: &SubsystemShape, keep: &[usize]) -> Result<Self> {
        let m = super::partial_trace(&self.matrix, shape, keep)?;
        Ok(Self::new_unchecked(m.hermitian_part()))
    }

    /// Un-halved trace distance `‖self − other‖₁`.
    pub fn trace_distance(&self, other: &Self) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::Shape("trace distance between states of different dimension".into()));
        }
        trace_norm(&(&self.matrix - &other.matrix))
    }
}

pub(crate) fn check_normalized(psi: &[Complex64]) -> Result<()> {
    if psi.len() < 2 {
        return Err(Error::Argument("state vector needs dimension ≥ 2".into()));
    }
    let norm_sq: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
    if (norm_sq - 1.0).abs() > tol::NORMALIZATION {
        return Err(Error::Argument(format!(
            "state vector is not normalized (‖ψ‖² = {norm_sq})"
        )));
    }
    Ok(())
}

/// Eigenvalues clipped to `[0, 1]`, failing on excursions above
/// [`tol::ENTROPY_CLIP`].
fn clipped_spectrum(rho: &DensityMatrix) -> Result<Vec<f64>> {
    let values = hermitian_eig(&rho.matrix.hermitian_part())?.values;
    values
        .into_iter()
        .map(|x| {
            if x < -tol::ENTROPY_CLIP || x > 1.0 + tol::ENTROPY_CLIP {
                Err(Error::Argument(format!(
                    "eigenvalue {x:.3e} outside [0, 1] beyond clipping tolerance"
                )))
            } else {
                Ok(x.clamp(0.0, 1.0))
            }
        })
        .collect()
}

/// `S(ρ) = −Tr ρ log₂ ρ` in bits, with `0 log 0 = 0`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let s: f64 = clipped_spectrum(rho)?
        .into_iter()
        .filter(|&x| x > 0.0)
        .map(|x| -x * x.log2())
        .sum();
    Ok(s.max(0.0))
}

/// Wootters concurrence of a two-qubit state.
///
/// The `μ_i` are the square roots of the eigenvalues of `ρ ρ̃`, computed as
/// the eigenvalues of the Hermitian `√ρ ρ̃ √ρ`, with
/// `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::Shape(format!(
            "concurrence needs a two-qubit state, got dimension {}",
            rho.dim()
        )));
    }
    let yy = kron(&pauli_y(), &pauli_y());
    let flipped = yy.matmul(&rho.matrix.conj()).matmul(&yy);
    let sqrt_rho = hermitian_eig(&rho.matrix.hermitian_part())?
        .map_spectrum(|x| Complex64::new(x.max(0.0).sqrt(), 0.0));
    let r = sqrt_rho.matmul(&flipped).matmul(&sqrt_rho).hermitian_part();
    let mut mu: Vec<f64> = hermitian_eig(&r)?
        .values
        .into_iter()
        .map(|x| x.max(0.0).sqrt())
        .collect();
    mu.sort_by(|a, b| b.total_cmp(a));
    Ok((mu[0] - mu[1] - mu[2] - mu[3]).clamp(0.0, 1.0))
}
