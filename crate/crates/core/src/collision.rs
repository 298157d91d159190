//! Collision channels `E(ρ) = Tr_anc[U (ρ ⊗ ω) U†]` with
//! `U = exp[−i (H_A ⊗ I + H_I) t]`, their iteration, Kraus and superoperator
//! forms, and sequences built from imperfectly prepared controllers.
//!
//! The system is always the leftmost tensor factor; ancilla factors follow
//! in the order of the ancilla shape. Superoperators act on row-major
//! vectorized matrices, `vec(ρ)[i·D + j] = ρ_ij`, so that
//! `vec(A X B) = (A ⊗ Bᵀ) vec(X)`.

use faer::Mat;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qmath::{
    hermitian_eig, kron, partial_trace, unitary_from_hamiltonian, ComplexMatrix, DensityMatrix,
    SubsystemShape,
};
use crate::tol;

#[derive(Clone, Debug)]
pub struct CollisionChannel {
    system_dim: usize,
    ancilla_shape: SubsystemShape,
    joint_unitary: ComplexMatrix,
    ancilla_state: DensityMatrix,
    interaction_time: f64,
}

impl CollisionChannel {
    /// Channel from an explicit joint unitary on `system ⊗ ancilla`.
    pub fn from_unitary(
        system_dim: usize,
        joint_unitary: ComplexMatrix,
        ancilla_shape: SubsystemShape,
        ancilla_state: DensityMatrix,
        interaction_time: f64,
    ) -> Result<Self> {
        if system_dim < 2 {
            return Err(Error::Shape(format!("system dimension {system_dim} < 2")));
        }
        let joint = system_dim * ancilla_shape.total();
        if joint_unitary.rows() != joint || joint_unitary.cols() != joint {
            return Err(Error::Shape(format!(
                "joint unitary is {}x{}, expected {joint}x{joint}",
                joint_unitary.rows(),
                joint_unitary.cols()
            )));
        }
        if ancilla_state.dim() != ancilla_shape.total() {
            return Err(Error::Shape(format!(
                "ancilla state has dimension {} but the ancilla shape totals {}",
                ancilla_state.dim(),
                ancilla_shape.total()
            )));
        }
        let defect = joint_unitary
            .adjoint()
            .matmul(&joint_unitary)
            .max_abs_diff(&ComplexMatrix::identity(joint));
        if defect > tol::UNITARITY {
            return Err(Error::Argument(format!(
                "joint operator is not unitary (defect {defect:.3e})"
            )));
        }
        Ok(Self {
            system_dim,
            ancilla_shape,
            joint_unitary,
            ancilla_state,
            interaction_time,
        })
    }

    /// Same joint unitary with a different ancilla state.
    pub fn with_ancilla_state(&self, ancilla_state: DensityMatrix) -> Result<Self> {
        if ancilla_state.dim() != self.ancilla_shape.total() {
            return Err(Error::Shape(format!(
                "ancilla state has dimension {}, channel expects {}",
                ancilla_state.dim(),
                self.ancilla_shape.total()
            )));
        }
        Ok(Self {
            ancilla_state,
            ..self.clone()
        })
    }

    pub fn system_dim(&self) -> usize {
        self.system_dim
    }

    pub fn ancilla_shape(&self) -> &SubsystemShape {
        &self.ancilla_shape
    }

    pub fn joint_unitary(&self) -> &ComplexMatrix {
        &self.joint_unitary
    }

    pub fn ancilla_state(&self) -> &DensityMatrix {
        &self.ancilla_state
    }

    pub fn interaction_time(&self) -> f64 {
        self.interaction_time
    }

    fn joint_shape(&self) -> SubsystemShape {
        let mut dims = vec![self.system_dim];
        dims.extend_from_slice(self.ancilla_shape.dims());
        SubsystemShape::new(dims).expect("validated dimensions")
    }

    fn check_input(&self, rho: &DensityMatrix) -> Result<()> {
        if rho.dim() != self.system_dim {
            return Err(Error::Shape(format!(
                "state has dimension {}, channel acts on dimension {}",
                rho.dim(),
                self.system_dim
            )));
        }
        Ok(())
    }

    /// `U (ρ ⊗ ω) U†` before any trace.
    pub fn joint_output(&self, rho: &DensityMatrix) -> Result<ComplexMatrix> {
        self.check_input(rho)?;
        let joint_in = kron(rho.matrix(), self.ancilla_state.matrix());
        Ok(self.joint_unitary.conjugate(&joint_in))
    }

    /// One collision: `Tr_anc[U (ρ ⊗ ω) U†]`.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let joint = self.joint_output(rho)?;
        let reduced = partial_trace(&joint, &self.joint_shape(), &[0])?;
        DensityMatrix::with_tolerance(reduced.hermitian_part(), tol::CHANNEL_OUTPUT)
    }

    /// State of the outgoing ancilla(s) after one collision with `ρ`.
    pub fn ancilla_output(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let joint = self.joint_output(rho)?;
        let keep: Vec<usize> = (1..=self.ancilla_shape.len()).collect();
        let reduced = partial_trace(&joint, &self.joint_shape(), &keep)?;
        DensityMatrix::with_tolerance(reduced.hermitian_part(), tol::CHANNEL_OUTPUT)
    }

    /// `[ρ₀, E(ρ₀), …, Eⁿ(ρ₀)]`
    pub fn iterate(&self, rho0: &DensityMatrix, n: usize) -> Result<Vec<DensityMatrix>> {
        self.check_input(rho0)?;
        let mut out = Vec::with_capacity(n + 1);
        out.push(rho0.clone());
        for _ in 0..n {
            let next = self.apply(out.last().expect("non-empty"))?;
            out.push(next);
        }
        Ok(out)
    }

    /// Kraus operators of the Stinespring dilation,
    /// `K_{jk} = √μ_k (I ⊗ ⟨j|) U (I ⊗ |χ_k⟩)` with `ω = Σ μ_k |χ_k⟩⟨χ_k|`.
    ///
    /// Zero-weight components and vanishing operators are dropped.
    pub fn kraus_operators(&self) -> Result<Vec<ComplexMatrix>> {
        let d = self.system_dim;
        let da = self.ancilla_shape.total();
        let omega = hermitian_eig(self.ancilla_state.matrix())?;
        let u = &self.joint_unitary;
        let mut out = Vec::new();
        for (k, &mu) in omega.values.iter().enumerate() {
            if mu <= tol::KRAUS_WEIGHT {
                continue;
            }
            let chi = omega.vector(k);
            let weight = mu.sqrt();
            for j in 0..da {
                let op = ComplexMatrix::from_fn(d, d, |r, c| {
                    let row = r * da + j;
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (m, &x) in chi.iter().enumerate() {
                        acc += u[(row, c * da + m)] * x;
                    }
                    acc * weight
                });
                if op.frobenius_norm() > tol::KRAUS_WEIGHT {
                    out.push(op);
                }
            }
        }
        Ok(out)
    }

    /// Dense superoperator; fails for `D > tol::SUPEROPERATOR_MAX_DIM`.
    pub fn superoperator(&self) -> Result<Superoperator> {
        check_superoperator_dim(self.system_dim)?;
        Superoperator::from_kraus(&self.kraus_operators()?)
    }
}

/// `E(ρ) = Tr_anc[U (ρ ⊗ ω) U†]` for `U = exp[−i (H_A ⊗ I + H_I) t]`.
///
/// `h_interaction` acts on `system ⊗ ancilla`; `t = 0` is allowed and gives
/// the identity map.
pub fn build_channel(
    h_system: &ComplexMatrix,
    h_interaction: &ComplexMatrix,
    omega: &DensityMatrix,
    t: f64,
) -> Result<CollisionChannel> {
    let shape = SubsystemShape::new(vec![omega.dim()])?;
    build_with_shape(h_system, h_interaction, shape, omega.clone(), t)
}

/// Two independent baths coupled simultaneously: one joint unitary
/// `exp[−i (H_A + H_IB + H_IC) t]` on `system ⊗ B ⊗ C` and ancilla state
/// `ω_B ⊗ ν_C`.
pub fn build_two_bath_channel(
    h_system: &ComplexMatrix,
    h_interaction_b: &ComplexMatrix,
    h_interaction_c: &ComplexMatrix,
    omega_b: &DensityMatrix,
    nu_c: &DensityMatrix,
    t: f64,
) -> Result<CollisionChannel> {
    if (h_interaction_b.rows(), h_interaction_b.cols())
        != (h_interaction_c.rows(), h_interaction_c.cols())
    {
        return Err(Error::Shape("bath interaction Hamiltonians differ in size".into()));
    }
    build_multi_bath_channel(h_system, &(h_interaction_b + h_interaction_c), &[omega_b, nu_c], t)
}

/// Any number of baths colliding at once. `h_interaction` acts on
/// `system ⊗ bath₀ ⊗ bath₁ ⊗ …` and the ancilla state is `⊗_k states[k]`.
pub fn build_multi_bath_channel(
    h_system: &ComplexMatrix,
    h_interaction: &ComplexMatrix,
    states: &[&DensityMatrix],
    t: f64,
) -> Result<CollisionChannel> {
    let shape = SubsystemShape::new(states.iter().map(|s| s.dim()).collect())?;
    let ancilla = DensityMatrix::tensor(states)?;
    build_with_shape(h_system, h_interaction, shape, ancilla, t)
}

fn build_with_shape(
    h_system: &ComplexMatrix,
    h_interaction: &ComplexMatrix,
    ancilla_shape: SubsystemShape,
    ancilla_state: DensityMatrix,
    t: f64,
) -> Result<CollisionChannel> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::Argument(format!("interaction time {t} must be finite and ≥ 0")));
    }
    if !h_system.is_square() {
        return Err(Error::Shape("system Hamiltonian is not square".into()));
    }
    let d = h_system.rows();
    let da = ancilla_shape.total();
    if h_interaction.rows() != d * da || h_interaction.cols() != d * da {
        return Err(Error::Shape(format!(
            "interaction Hamiltonian is {}x{}, expected {}x{}",
            h_interaction.rows(),
            h_interaction.cols(),
            d * da,
            d * da
        )));
    }
    let total = &kron(h_system, &ComplexMatrix::identity(da)) + h_interaction;
    let u = unitary_from_hamiltonian(&total, t)?;
    CollisionChannel::from_unitary(d, u, ancilla_shape, ancilla_state, t)
}

/// `[ρ₀, E₁(ρ₀), (E₂∘E₁)(ρ₀), …]`
pub fn apply_sequence(seq: &[CollisionChannel], rho0: &DensityMatrix) -> Result<Vec<DensityMatrix>> {
    let mut out = Vec::with_capacity(seq.len() + 1);
    out.push(rho0.clone());
    for ch in seq {
        let next = ch.apply(out.last().expect("non-empty"))?;
        out.push(next);
    }
    Ok(out)
}

fn check_superoperator_dim(d: usize) -> Result<()> {
    if d > tol::SUPEROPERATOR_MAX_DIM {
        return Err(Error::Capacity {
            dim: d,
            limit: tol::SUPEROPERATOR_MAX_DIM,
        });
    }
    Ok(())
}

/// Row-major stacking of a square matrix.
pub fn vectorize(m: &ComplexMatrix) -> Vec<Complex64> {
    m.as_slice().to_vec()
}

pub fn unvectorize(v: &[Complex64], d: usize) -> Result<ComplexMatrix> {
    ComplexMatrix::from_vec(d, d, v.to_vec())
}

/// `D² × D²` matrix of a linear map on `D × D` matrices, in the row-major
/// vectorization convention.
#[derive(Clone, Debug, PartialEq)]
pub struct Superoperator {
    dim: usize,
    matrix: ComplexMatrix,
}

impl Superoperator {
    pub fn from_matrix(dim: usize, matrix: ComplexMatrix) -> Result<Self> {
        check_superoperator_dim(dim)?;
        if matrix.rows() != dim * dim || matrix.cols() != dim * dim {
            return Err(Error::Shape(format!(
                "superoperator for dimension {dim} must be {0}x{0}",
                dim * dim
            )));
        }
        Ok(Self { dim, matrix })
    }

    /// `Σ_k K_k ⊗ conj(K_k)`
    pub fn from_kraus(ops: &[ComplexMatrix]) -> Result<Self> {
        let first = ops
            .first()
            .ok_or_else(|| Error::Argument("empty Kraus set".into()))?;
        let d = first.rows();
        check_superoperator_dim(d)?;
        let mut matrix = ComplexMatrix::zeros(d * d, d * d);
        for k in ops {
            if k.rows() != d || k.cols() != d {
                return Err(Error::Shape("Kraus operators differ in size".into()));
            }
            matrix += &kron(k, &k.conj());
        }
        Ok(Self { dim: d, matrix })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::from_matrix(dim, ComplexMatrix::identity(dim * dim))
    }

    /// Conjugation by a unitary, `ρ ↦ U ρ U†`.
    pub fn unitary(u: &ComplexMatrix) -> Result<Self> {
        Self::from_kraus(std::slice::from_ref(u))
    }

    /// `p·a + (1−p)·b`
    pub fn convex_combination(p: f64, a: &Self, b: &Self) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Argument(format!("mixing weight {p} outside [0, 1]")));
        }
        if a.dim != b.dim {
            return Err(Error::Shape("mixing superoperators of different dimension".into()));
        }
        Ok(Self {
            dim: a.dim,
            matrix: &a.matrix.scale_real(p) + &b.matrix.scale_real(1.0 - p),
        })
    }

    /// `next ∘ self`
    pub fn then(&self, next: &Self) -> Result<Self> {
        if self.dim != next.dim {
            return Err(Error::Shape("composing superoperators of different dimension".into()));
        }
        Ok(Self {
            dim: self.dim,
            matrix: next.matrix.matmul(&self.matrix),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.rows() != self.dim || x.cols() != self.dim {
            return Err(Error::Shape(format!(
                "operand is {}x{}, superoperator acts on dimension {}",
                x.rows(),
                x.cols(),
                self.dim
            )));
        }
        let v = ComplexMatrix::from_vec(self.dim * self.dim, 1, vectorize(x))?;
        unvectorize(self.matrix.matmul(&v).as_slice(), self.dim)
    }

    pub fn apply_state(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let out = self.apply(rho.matrix())?;
        DensityMatrix::with_tolerance(out.hermitian_part(), tol::CHANNEL_OUTPUT)
    }

    pub fn eigenvalues(&self) -> Result<Vec<Complex64>> {
        self.matrix
            .view()
            .eigenvalues()
            .map_err(|e| Error::Numerical(format!("eigenvalue solver failed: {e:?}")))
    }

    /// Eigenvalues and right eigenvectors (as columns).
    pub fn eigen(&self) -> Result<(Vec<Complex64>, ComplexMatrix)> {
        let evd = self
            .matrix
            .view()
            .eigen()
            .map_err(|e| Error::Numerical(format!("eigen solver failed: {e:?}")))?;
        let values: Vec<Complex64> = evd.S().column_vector().iter().copied().collect();
        let vectors: Mat<Complex64> = evd.U().to_owned();
        Ok((values, ComplexMatrix::from_faer(vectors.as_ref())))
    }

    pub fn spectral_radius(&self) -> Result<f64> {
        Ok(self.eigenvalues()?.iter().map(|z| z.norm()).fold(0.0, f64::max))
    }
}

/// Imperfect controller preparation: step `ℓ` uses
/// `p_ℓ ω + (1 − p_ℓ) ϱ^(ℓ)` with `p_ℓ ≥ p_min > 0`.
#[derive(Clone, Debug)]
pub struct ControllerSequence {
    base_state: DensityMatrix,
    steps: Vec<ControllerStep>,
    min_weight: f64,
}

#[derive(Clone, Debug)]
pub struct ControllerStep {
    pub weight: f64,
    pub perturbation: DensityMatrix,
}

impl ControllerSequence {
    pub fn new(base_state: DensityMatrix, steps: Vec<ControllerStep>, min_weight: f64) -> Result<Self> {
        if !(min_weight > 0.0 && min_weight <= 1.0) {
            return Err(Error::Argument(format!("minimum weight {min_weight} outside (0, 1]")));
        }
        for (l, step) in steps.iter().enumerate() {
            if !(step.weight > 0.0 && step.weight <= 1.0) {
                return Err(Error::Argument(format!(
                    "step {l}: weight {} outside (0, 1]",
                    step.weight
                )));
            }
            if step.weight < min_weight {
                return Err(Error::Argument(format!(
                    "step {l}: weight {} below the declared minimum {min_weight}",
                    step.weight
                )));
            }
            if step.perturbation.dim() != base_state.dim() {
                return Err(Error::Shape(format!("step {l}: perturbation dimension mismatch")));
            }
        }
        Ok(Self {
            base_state,
            steps,
            min_weight,
        })
    }

    pub fn base_state(&self) -> &DensityMatrix {
        &self.base_state
    }

    pub fn steps(&self) -> &[ControllerStep] {
        &self.steps
    }

    pub fn min_weight(&self) -> f64 {
        self.min_weight
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Actual ancilla state prepared at each step.
    pub fn ancilla_states(&self) -> Result<Vec<DensityMatrix>> {
        self.steps
            .iter()
            .map(|s| DensityMatrix::mix(s.weight, &self.base_state, &s.perturbation))
            .collect()
    }
}

/// Fixed Hamiltonians and collision time, reused with varying ancilla states.
#[derive(Clone, Debug)]
pub struct ChannelTemplate {
    pub h_system: ComplexMatrix,
    pub h_interaction: ComplexMatrix,
    pub t: f64,
}

impl ChannelTemplate {
    pub fn build(&self, omega: &DensityMatrix) -> Result<CollisionChannel> {
        build_channel(&self.h_system, &self.h_interaction, omega, self.t)
    }
}

/// One channel per controller step, each built from its actual ancilla state.
pub fn imperfect_controller_sequence(
    template: &ChannelTemplate,
    seq: &ControllerSequence,
) -> Result<Vec<CollisionChannel>> {
    let base = template.build(seq.base_state())?;
    seq.ancilla_states()?
        .into_iter()
        .map(|omega| base.with_ancilla_state(omega))
        .collect()
}
