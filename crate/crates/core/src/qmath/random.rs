//! Random operators and states for tests, sweeps and examples.
//!
//! All generators take an explicit RNG so that seeded runs are reproducible.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::{unitary_from_hamiltonian, ComplexMatrix, DensityMatrix};

fn gaussian(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Complex Ginibre matrix with i.i.d. standard normal real and imaginary parts.
pub fn ginibre(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

pub fn random_hermitian(rng: &mut impl Rng, d: usize) -> ComplexMatrix {
    ginibre(rng, d, d).hermitian_part()
}

pub fn random_unitary(rng: &mut impl Rng, d: usize) -> ComplexMatrix {
    let h = random_hermitian(rng, d);
    unitary_from_hamiltonian(&h, 1.0).expect("Hermitian by construction")
}

pub fn random_pure_state(rng: &mut impl Rng, d: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..d).map(|_| gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// Full-rank (almost surely) density matrix `G G† / Tr(G G†)`.
pub fn random_density(rng: &mut impl Rng, d: usize) -> DensityMatrix {
    random_density_with_rank(rng, d, d)
}

pub fn random_density_with_rank(rng: &mut impl Rng, d: usize, rank: usize) -> DensityMatrix {
    let g = ginibre(rng, d, rank.max(1));
    let m = g.matmul(&g.adjoint());
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_real(1.0 / tr).hermitian_part()).expect("positive by construction")
}

/// Qubit state `p|0⟩⟨0| + (1−p)|1⟩⟨1|` with `p` uniform in `[lo, hi]`.
pub fn random_diagonal_qubit(rng: &mut impl Rng, lo: f64, hi: f64) -> DensityMatrix {
    let p = rng.random_range(lo..=hi);
    DensityMatrix::from_populations(&[p, 1.0 - p]).expect("valid populations")
}
