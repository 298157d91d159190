//! Convergence analysis of collision channels: relaxing verdicts, spectral
//! and iterative fixed points, convex mixtures, the forgetting metric,
//! invariance of candidate fixed points and entropy ratios.

use num_complex::Complex64;
use serde::Serialize;

use crate::collision::{CollisionChannel, Superoperator};
use crate::error::{Error, Result};
use crate::qmath::{
    hermitian_eig, kron, trace_distance, validate_density, von_neumann_entropy,
    ComplexMatrix, DensityMatrix, SubsystemShape,
};
use crate::tol;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Relaxing,
    /// The number of eigenvalues within tolerance of the unit circle is not one.
    PeripheralSpectrum { count: usize },
    /// A unique peripheral eigenvalue exists but no valid fixed state could be
    /// extracted from it.
    FixedPointFailure { message: String },
}

impl Verdict {
    pub fn is_relaxing(&self) -> bool {
        matches!(self, Verdict::Relaxing)
    }

    /// Short tag for tables and logs.
    pub fn label(&self) -> String {
        match self {
            Verdict::Relaxing => "relaxing".into(),
            Verdict::PeripheralSpectrum { count } => format!("peripheral_spectrum({count})"),
            Verdict::FixedPointFailure { .. } => "fixed_point_failure".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub verdict: Verdict,
    pub fixed_point: Option<DensityMatrix>,
    /// `1 − |λ₂|`, with `|λ₂|` the second-largest eigenvalue modulus.
    pub spectral_gap: f64,
    pub peripheral_count: usize,
    pub iterations_used: usize,
    /// `‖E(ρ*) − ρ*‖₁` for the reported fixed point, `NaN` when there is none.
    pub residual: f64,
    pub diagnostics: Vec<String>,
}

impl ConvergenceReport {
    pub fn is_relaxing(&self) -> bool {
        self.verdict.is_relaxing()
    }
}

/// Spectral relaxing test.
///
/// Relaxing iff exactly one eigenvalue has `|λ| > 1 − tol`. On success the
/// fixed point is extracted from the corresponding eigenvector.
pub fn is_relaxing(s: &Superoperator, tol: f64) -> Result<ConvergenceReport> {
    let (values, vectors) = s.eigen()?;
    let mut moduli: Vec<f64> = values.iter().map(|z| z.norm()).collect();
    moduli.sort_by(|a, b| b.total_cmp(a));
    let spectral_gap = 1.0 - moduli.get(1).copied().unwrap_or(0.0);
    let peripheral_count = moduli.iter().filter(|&&m| m > 1.0 - tol).count();

    let mut report = ConvergenceReport {
        verdict: Verdict::PeripheralSpectrum {
            count: peripheral_count,
        },
        fixed_point: None,
        spectral_gap,
        peripheral_count,
        iterations_used: 0,
        residual: f64::NAN,
        diagnostics: Vec::new(),
    };
    if peripheral_count != 1 {
        report.diagnostics.push(format!(
            "{peripheral_count} eigenvalues within {tol:.1e} of the unit circle"
        ));
        return Ok(report);
    }
    match fixed_point_from_eigen(s, &values, &vectors) {
        Ok((rho, residual)) => {
            report.verdict = Verdict::Relaxing;
            report.fixed_point = Some(rho);
            report.residual = residual;
        }
        Err(e) => {
            report.verdict = Verdict::FixedPointFailure {
                message: e.to_string(),
            };
            report.diagnostics.push(e.to_string());
        }
    }
    Ok(report)
}

/// Fixed point from the eigenvector of the eigenvalue closest to 1.
pub fn spectral_fixed_point(s: &Superoperator) -> Result<DensityMatrix> {
    let (values, vectors) = s.eigen()?;
    fixed_point_from_eigen(s, &values, &vectors).map(|(rho, _)| rho)
}

fn fixed_point_from_eigen(
    s: &Superoperator,
    values: &[Complex64],
    vectors: &ComplexMatrix,
) -> Result<(DensityMatrix, f64)> {
    let one = Complex64::new(1.0, 0.0);
    let multiplicity = values
        .iter()
        .filter(|z| (**z - one).norm() <= tol::PERIPHERAL)
        .count();
    if multiplicity > 1 {
        return Err(Error::Degenerate { multiplicity });
    }
    let index = values
        .iter()
        .enumerate()
        .filter(|(_, z)| z.norm() >= 1.0 - tol::PERIPHERAL)
        .max_by(|a, b| a.1.re.total_cmp(&b.1.re))
        .map(|(i, _)| i)
        .ok_or_else(|| Error::Numerical("no eigenvalue on the unit circle".into()))?;

    let d = s.dim();
    let mut x = ComplexMatrix::from_fn(d, d, |i, j| vectors[(i * d + j, index)]);
    let trace = x.trace();
    if trace.norm() < tol::RANK {
        return Err(Error::Numerical(
            "fixed-point eigenvector is traceless and cannot be normalized".into(),
        ));
    }
    x = x.scale(one / trace).hermitian_part();
    let report = validate_density(&x, tol::FIXED_POINT_POSITIVITY);
    if !report.passed {
        return Err(Error::Numerical(format!(
            "symmetrized fixed-point eigenvector is not a state (min eigenvalue {:.3e})",
            report.min_eigenvalue
        )));
    }
    let tr = x.trace().re;
    let rho = DensityMatrix::with_tolerance(x.scale_real(1.0 / tr), tol::FIXED_POINT_POSITIVITY)?;
    let residual = trace_distance(&s.apply(rho.matrix())?, rho.matrix())?;
    if residual > tol::FIXED_POINT_RESIDUAL {
        return Err(Error::Numerical(format!(
            "spectral fixed point has residual {residual:.3e}"
        )));
    }
    Ok((rho, residual))
}

/// Iterates `E` from `ρ₀` until `‖ρ⁽ⁿ⁾ − ρ⁽ⁿ⁻¹⁾‖₁ ≤ tol`.
///
/// Returns the first such `ρ⁽ⁿ⁾` and `n`.
pub fn iterative_fixed_point(
    ch: &CollisionChannel,
    rho0: &DensityMatrix,
    tol: f64,
    max_iter: usize,
) -> Result<(DensityMatrix, usize)> {
    iterative_fixed_point_periodic(std::slice::from_ref(ch), rho0, tol, max_iter)
}

/// Like [`iterative_fixed_point`] for a periodic schedule: one iteration
/// applies every channel of `period` in order.
pub fn iterative_fixed_point_periodic(
    period: &[CollisionChannel],
    rho0: &DensityMatrix,
    tol: f64,
    max_iter: usize,
) -> Result<(DensityMatrix, usize)> {
    if !(tol > 0.0) {
        return Err(Error::Argument(format!("tolerance {tol} must be positive")));
    }
    if period.is_empty() {
        return Err(Error::Argument("empty channel schedule".into()));
    }
    let mut current = rho0.clone();
    let mut residual = f64::INFINITY;
    for n in 1..=max_iter {
        let mut next = current.clone();
        for ch in period {
            next = ch.apply(&next)?;
        }
        residual = next.trace_distance(&current)?;
        current = next;
        if residual <= tol {
            return Ok((current, n));
        }
    }
    Err(Error::NotConverged {
        iterations: max_iter,
        residual,
    })
}

/// Number of independent vectors `|E⟩ ⊗ |φ⟩` (φ on the last factor of
/// `shape`) that are eigenvectors of `h_total`.
///
/// Each eigenspace projector `P` is compressed to `(I ⊗ ⟨φ|) P (I ⊗ |φ⟩)`;
/// its eigenvalues equal to one mark exactly the factorized vectors in the
/// eigenspace.
pub fn factorized_eigenvector_count(
    h_total: &ComplexMatrix,
    shape: &SubsystemShape,
    phi: &[Complex64],
) -> Result<usize> {
    shape.check_operator(h_total.rows(), h_total.cols())?;
    crate::qmath::check_normalized(phi)?;
    let da = *shape.dims().last().expect("non-empty shape");
    if phi.len() != da {
        return Err(Error::Shape(format!(
            "φ has dimension {} but the last factor has dimension {da}",
            phi.len()
        )));
    }
    let d = shape.total() / da;
    let eig = hermitian_eig(h_total)?;
    let n = eig.values.len();

    // Rows of V restricted to ⟨φ| on the last factor: W[e, k] = Σ_b conj(φ_b) V[e·da + b, k].
    let w = ComplexMatrix::from_fn(d, n, |e, k| {
        (0..da)
            .map(|b| phi[b].conj() * eig.vectors[(e * da + b, k)])
            .sum()
    });

    let mut count = 0;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && eig.values[end] - eig.values[end - 1] <= tol::EIGENSPACE_GROUPING {
            end += 1;
        }
        let block = ComplexMatrix::from_fn(d, end - start, |e, k| w[(e, start + k)]);
        let compressed = block.matmul(&block.adjoint());
        count += hermitian_eig(&compressed.hermitian_part())?
            .values
            .iter()
            .filter(|&&v| v > 1.0 - tol::RANK)
            .count();
        start = end;
    }
    Ok(count)
}

/// Analyzes `p·S_relaxing + (1 − p)·S_other`, which must be relaxing for any
/// `p ∈ (0, 1]`. A non-relaxing verdict is flagged in the diagnostics.
pub fn haag_mixture_check(
    s_relaxing: &Superoperator,
    s_other: &Superoperator,
    p: f64,
) -> Result<ConvergenceReport> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::Argument(format!("mixing weight {p} outside (0, 1]")));
    }
    let mixture = Superoperator::convex_combination(p, s_relaxing, s_other)?;
    let mut report = is_relaxing(&mixture, tol::PERIPHERAL)?;
    if !report.is_relaxing() {
        report.diagnostics.push(format!(
            "convex mixture with weight {p} on a relaxing channel is not relaxing; \
             this contradicts the mixture theorem and indicates a numerical problem \
             or a non-relaxing base channel"
        ));
    }
    Ok(report)
}

/// `f_n = ‖M_n(ρ₁) − M_n(ρ₂)‖₁` for `n = 0, …, len(seq)`, where `M_n` is the
/// composition of the first `n` channels.
pub fn forgetting_metric(
    seq: &[CollisionChannel],
    rho1: &DensityMatrix,
    rho2: &DensityMatrix,
) -> Result<Vec<f64>> {
    if seq.is_empty() {
        return Err(Error::Argument("empty channel sequence".into()));
    }
    if rho1.dim() != rho2.dim() {
        return Err(Error::Shape(format!(
            "states of dimension {} and {}",
            rho1.dim(),
            rho2.dim()
        )));
    }
    let mut a = rho1.clone();
    let mut b = rho2.clone();
    let mut out = Vec::with_capacity(seq.len() + 1);
    out.push(a.trace_distance(&b)?);
    for ch in seq {
        a = ch.apply(&a)?;
        b = ch.apply(&b)?;
        out.push(a.trace_distance(&b)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InvarianceCheck {
    /// Largest entry modulus of `[U, ρ* ⊗ ω]`.
    pub commutator_norm: f64,
    pub passed: bool,
}

/// `[U, ρ* ⊗ ω] = 0` implies `E(ρ*) = ρ*`.
pub fn check_invariance(
    u: &ComplexMatrix,
    rho_star: &DensityMatrix,
    omega: &DensityMatrix,
    tol: f64,
) -> Result<InvarianceCheck> {
    let joint = rho_star.dim() * omega.dim();
    if u.rows() != joint || u.cols() != joint {
        return Err(Error::Shape(format!(
            "unitary is {}x{}, states give dimension {joint}",
            u.rows(),
            u.cols()
        )));
    }
    let commutator_norm = u
        .commutator(&kron(rho_star.matrix(), omega.matrix()))
        .max_abs();
    Ok(InvarianceCheck {
        commutator_norm,
        passed: commutator_norm <= tol,
    })
}

/// `S(ρ*) / S(ω)`.
pub fn entropy_ratio(rho_star: &DensityMatrix, omega: &DensityMatrix) -> Result<f64> {
    let reference = von_neumann_entropy(omega)?;
    if reference <= tol::ENTROPY_FLOOR {
        return Err(Error::UndefinedRatio { entropy: reference });
    }
    Ok(von_neumann_entropy(rho_star)? / reference)
}
