use faer::Side;
use num_complex::Complex64;

use super::{ComplexMatrix, SubsystemShape};
use crate::error::{Error, Result};
use crate::tol;

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
}

pub fn pauli_y() -> ComplexMatrix {
    let i = Complex64::i();
    ComplexMatrix::from_rows(&[vec![0.0.into(), -i], vec![i, 0.0.into()]]).unwrap()
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::real_diag(&[1.0, -1.0])
}

/// Computational basis vector `|index⟩` of dimension `d`.
pub fn basis_ket(d: usize, index: usize) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); d];
    v[index] = Complex64::new(1.0, 0.0);
    v
}

/// Kronecker product of the factors, in list order.
pub fn tensor(ops: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    let (first, rest) = ops
        .split_first()
        .ok_or_else(|| Error::Argument("tensor of an empty list".into()))?;
    Ok(rest.iter().fold(first.clone(), |acc, op| kron(&acc, op)))
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (br, bc) = (b.rows(), b.cols());
    let mut out = ComplexMatrix::zeros(a.rows() * br, a.cols() * bc);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let aij = a[(i, j)];
            if aij == Complex64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Reduced operator on the factors listed in `keep`.
///
/// The kept factors appear in ascending index order in the result.
pub fn partial_trace(
    op: &ComplexMatrix,
    shape: &SubsystemShape,
    keep: &[usize],
) -> Result<ComplexMatrix> {
    shape.check_operator(op.rows(), op.cols())?;
    if keep.is_empty() {
        return Err(Error::Shape("partial trace must keep at least one factor".into()));
    }
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    for &k in &keep {
        shape.check_factor(k).map_err(|e| Error::Shape(e.to_string()))?;
    }

    let dims = shape.dims();
    let kept_dims: Vec<usize> = keep.iter().map(|&k| dims[k]).collect();
    let traced: Vec<usize> = (0..dims.len()).filter(|k| !keep.contains(k)).collect();
    let kept_total: usize = kept_dims.iter().product();
    let traced_total: usize = traced.iter().map(|&k| dims[k]).product();

    // Group full indices by their traced coordinate; only pairs within a
    // group contribute.
    let mut groups: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(kept_total); traced_total];
    for full in 0..shape.total() {
        let digits = shape.digits(full);
        let kept_idx = keep.iter().fold(0, |acc, &k| acc * dims[k] + digits[k]);
        let traced_idx = traced.iter().fold(0, |acc, &k| acc * dims[k] + digits[k]);
        groups[traced_idx].push((full, kept_idx));
    }

    let mut out = ComplexMatrix::zeros(kept_total, kept_total);
    for group in &groups {
        for &(r, kr) in group {
            for &(c, kc) in group {
                out[(kr, kc)] += op[(r, c)];
            }
        }
    }
    Ok(out)
}

/// Eigendecomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors as columns, matching `values`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// Rebuilds `V f(Λ) V†`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let v = &self.vectors;
        let n = v.rows();
        let scaled = ComplexMatrix::from_fn(n, n, |i, j| v[(i, j)] * f(self.values[j]));
        scaled.matmul(&v.adjoint())
    }

    pub fn vector(&self, j: usize) -> Vec<Complex64> {
        (0..self.vectors.rows()).map(|i| self.vectors[(i, j)]).collect()
    }
}

pub fn hermitian_eig(h: &ComplexMatrix) -> Result<HermitianEigen> {
    if !h.is_square() {
        return Err(Error::Argument(format!(
            "hermitian_eig needs a square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let defect = h.hermiticity_defect();
    if defect > tol::HERMITIAN {
        return Err(Error::Argument(format!(
            "matrix is not Hermitian (defect {defect:.3e})"
        )));
    }
    let sym = h.hermitian_part();
    let evd = sym
        .view()
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Numerical(format!("Hermitian eigensolver failed: {e:?}")))?;
    let values: Vec<f64> = evd.S().column_vector().iter().map(|z| z.re).collect();
    let vectors = ComplexMatrix::from_faer(evd.U());
    Ok(HermitianEigen { values, vectors })
}

/// `exp(−i H t)` through the eigendecomposition of `H`.
pub fn unitary_from_hamiltonian(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(h)?;
    Ok(eig.map_spectrum(|lambda| Complex64::new(0.0, -lambda * t).exp()))
}

/// `‖A‖₁ = Tr √(A†A)`, the sum of singular values (no factor ½).
pub fn trace_norm(a: &ComplexMatrix) -> Result<f64> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "trace norm of a non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let sv = a
        .view()
        .singular_values()
        .map_err(|e| Error::Numerical(format!("SVD failed: {e:?}")))?;
    Ok(sv.iter().sum())
}

/// Un-halved trace distance `‖a − b‖₁`.
pub fn trace_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::Shape("trace distance between differently shaped operators".into()));
    }
    trace_norm(&(a - b))
}

/// `I ⊗ … ⊗ op_k ⊗ … ⊗ I` with single-factor operators placed at the given
/// factor indices.
pub fn embed(shape: &SubsystemShape, locals: &[(usize, &ComplexMatrix)]) -> Result<ComplexMatrix> {
    let dims = shape.dims();
    let mut factors: Vec<ComplexMatrix> = dims.iter().map(|&d| ComplexMatrix::identity(d)).collect();
    for &(k, op) in locals {
        shape.check_factor(k)?;
        if op.rows() != dims[k] || op.cols() != dims[k] {
            return Err(Error::Shape(format!(
                "local operator is {}x{} but factor {k} has dimension {}",
                op.rows(),
                op.cols(),
                dims[k]
            )));
        }
        factors[k] = op.clone();
    }
    tensor(&factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::random::{ginibre, random_hermitian, random_unitary};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::FRAC_PI_2;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn tensor_of_identities_and_paulis() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(tensor(&[i2.clone(), i2]).unwrap(), ComplexMatrix::identity(4));
        let zz = tensor(&[pauli_z(), pauli_z()]).unwrap();
        assert_eq!(zz, ComplexMatrix::real_diag(&[1.0, -1.0, -1.0, 1.0]));
        assert!(matches!(tensor(&[]), Err(Error::Argument(_))));
    }

    #[test]
    fn tensor_matches_index_oracle() {
        let mut r = rng(3);
        let a = ginibre(&mut r, 2, 2);
        let b = ginibre(&mut r, 3, 3);
        let ab = tensor(&[a.clone(), b.clone()]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..3 {
                    for l in 0..3 {
                        let want = a[(i, j)] * b[(k, l)];
                        assert!((ab[(i * 3 + k, j * 3 + l)] - want).norm() <= 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn partial_trace_of_product_and_bell_state() {
        let mut r = rng(4);
        let rho = crate::qmath::random::random_density(&mut r, 2);
        let sigma = crate::qmath::random::random_density(&mut r, 3);
        let joint = tensor(&[rho.matrix().clone(), sigma.matrix().clone()]).unwrap();
        let shape = SubsystemShape::new(vec![2, 3]).unwrap();
        let reduced = partial_trace(&joint, &shape, &[0]).unwrap();
        assert!(reduced.max_abs_diff(rho.matrix()) < 1e-12);

        let s = 1.0 / 2f64.sqrt();
        let phi_plus: Vec<Complex64> = [s, 0.0, 0.0, s].iter().map(|&x| x.into()).collect();
        let bell = ComplexMatrix::outer(&phi_plus, &phi_plus);
        let shape = SubsystemShape::uniform(2, 2).unwrap();
        let marginal = partial_trace(&bell, &shape, &[0]).unwrap();
        assert!(marginal.max_abs_diff(&ComplexMatrix::real_diag(&[0.5, 0.5])) < 1e-15);
    }

    #[test]
    fn partial_trace_matches_index_summation_oracle() {
        let mut r = rng(5);
        let op = ginibre(&mut r, 8, 8);
        let shape = SubsystemShape::uniform(3, 2).unwrap();
        let reduced = partial_trace(&op, &shape, &[0, 2]).unwrap();
        for a in 0..2 {
            for c in 0..2 {
                for a2 in 0..2 {
                    for c2 in 0..2 {
                        let mut want = Complex64::new(0.0, 0.0);
                        for b in 0..2 {
                            want += op[(a * 4 + b * 2 + c, a2 * 4 + b * 2 + c2)];
                        }
                        assert!((reduced[(a * 2 + c, a2 * 2 + c2)] - want).norm() <= 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn partial_trace_rejects_bad_arguments() {
        let shape = SubsystemShape::uniform(2, 2).unwrap();
        let op = ComplexMatrix::identity(8);
        assert!(matches!(partial_trace(&op, &shape, &[0]), Err(Error::Shape(_))));
        let op = ComplexMatrix::identity(4);
        assert!(matches!(partial_trace(&op, &shape, &[]), Err(Error::Shape(_))));
        assert!(matches!(partial_trace(&op, &shape, &[2]), Err(Error::Shape(_))));
    }

    #[test]
    fn eig_of_paulis() {
        let ez = hermitian_eig(&pauli_z()).unwrap();
        assert!((ez.values[0] + 1.0).abs() < 1e-14 && (ez.values[1] - 1.0).abs() < 1e-14);

        let ex = hermitian_eig(&pauli_x()).unwrap();
        assert!((ex.values[0] + 1.0).abs() < 1e-14 && (ex.values[1] - 1.0).abs() < 1e-14);
        let s = 1.0 / 2f64.sqrt();
        let minus = ex.vector(0);
        let overlap = (minus[0] * s - minus[1] * s).norm();
        assert!((overlap - 1.0).abs() < 1e-12, "eigenvector for -1 is |−⟩ up to phase");
        let plus = ex.vector(1);
        assert!(((plus[0] * s + plus[1] * s).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(hermitian_eig(&m), Err(Error::Argument(_))));
    }

    #[test]
    fn eig_reconstructs_random_hermitian() {
        let h = random_hermitian(&mut rng(6), 8);
        let eig = hermitian_eig(&h).unwrap();
        let rebuilt = eig.map_spectrum(Complex64::from);
        assert!(rebuilt.max_abs_diff(&h) <= 1e-9);
        let vtv = eig.vectors.adjoint().matmul(&eig.vectors);
        assert!(vtv.max_abs_diff(&ComplexMatrix::identity(8)) <= 1e-9);
        assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn unitary_closed_forms() {
        let h = random_hermitian(&mut rng(7), 3);
        let u0 = unitary_from_hamiltonian(&h, 0.0).unwrap();
        assert!(u0.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-12);

        let u = unitary_from_hamiltonian(&pauli_z(), FRAC_PI_2).unwrap();
        let want = ComplexMatrix::diag(&[Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0)]);
        assert!(u.max_abs_diff(&want) < 1e-14);
    }

    #[test]
    fn unitary_matches_taylor_series_oracle() {
        let h = random_hermitian(&mut rng(8), 4);
        let t = 0.3;
        let generator = h.scale(Complex64::new(0.0, -t));
        let mut term = ComplexMatrix::identity(4);
        let mut sum = term.clone();
        for k in 1..=30 {
            term = term.matmul(&generator).scale_real(1.0 / k as f64);
            sum += &term;
        }
        let u = unitary_from_hamiltonian(&h, t).unwrap();
        assert!(u.max_abs_diff(&sum) <= 1e-8);
        assert!(u.adjoint().matmul(&u).max_abs_diff(&ComplexMatrix::identity(4)) <= 1e-9);
    }

    #[test]
    fn trace_norm_cases() {
        let rho = crate::qmath::random::random_density(&mut rng(9), 4);
        assert!((trace_norm(rho.matrix()).unwrap() - 1.0).abs() < 1e-12);
        assert!((trace_norm(&pauli_z()).unwrap() - 2.0).abs() < 1e-14);
        assert!(matches!(trace_norm(&ComplexMatrix::zeros(2, 3)), Err(Error::Shape(_))));
    }

    #[test]
    fn trace_norm_matches_gram_eigenvalue_oracle() {
        let a = ginibre(&mut rng(10), 5, 5);
        let gram = a.adjoint().matmul(&a);
        let oracle: f64 = hermitian_eig(&gram)
            .unwrap()
            .values
            .iter()
            .map(|&x| x.max(0.0).sqrt())
            .sum();
        assert!((trace_norm(&a).unwrap() - oracle).abs() < 1e-9);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn tensor_is_associative(seed in any::<u64>()) {
            let mut r = rng(seed);
            let a = ginibre(&mut r, 2, 2);
            let b = ginibre(&mut r, 3, 2);
            let c = ginibre(&mut r, 2, 3);
            let left = tensor(&[a.clone(), tensor(&[b.clone(), c.clone()]).unwrap()]).unwrap();
            let right = tensor(&[tensor(&[a, b]).unwrap(), c]).unwrap();
            prop_assert!(left.max_abs_diff(&right) <= 1e-12);
        }

        #[test]
        fn partial_trace_of_product_scales_by_trace(seed in any::<u64>()) {
            let mut r = rng(seed);
            let x = ginibre(&mut r, 3, 3);
            let y = ginibre(&mut r, 2, 2);
            let xy = tensor(&[x.clone(), y.clone()]).unwrap();
            let shape = SubsystemShape::new(vec![3, 2]).unwrap();
            let reduced = partial_trace(&xy, &shape, &[0]).unwrap();
            prop_assert!(reduced.max_abs_diff(&x.scale(y.trace())) <= 1e-12);
        }

        #[test]
        fn partial_trace_preserves_trace(seed in any::<u64>(), keep in 0usize..3) {
            let op = ginibre(&mut rng(seed), 12, 12);
            let shape = SubsystemShape::new(vec![2, 3, 2]).unwrap();
            let reduced = partial_trace(&op, &shape, &[keep]).unwrap();
            prop_assert!((reduced.trace() - op.trace()).norm() <= 1e-12);
        }

        #[test]
        fn unitary_group_property(seed in any::<u64>(), t in -2.0f64..2.0, s in -2.0f64..2.0) {
            let h = random_hermitian(&mut rng(seed), 4);
            let ut = unitary_from_hamiltonian(&h, t).unwrap();
            let us = unitary_from_hamiltonian(&h, s).unwrap();
            let uts = unitary_from_hamiltonian(&h, t + s).unwrap();
            prop_assert!(ut.matmul(&us).max_abs_diff(&uts) <= 1e-8);
        }

        #[test]
        fn trace_norm_is_unitarily_invariant(seed in any::<u64>()) {
            let mut r = rng(seed);
            let a = ginibre(&mut r, 4, 4);
            let u = random_unitary(&mut r, 4);
            let v = random_unitary(&mut r, 4);
            let rotated = u.matmul(&a).matmul(&v);
            prop_assert!((trace_norm(&rotated).unwrap() - trace_norm(&a).unwrap()).abs() <= 1e-9);
        }
    }
}
