//! Two ways to tell whether a collision model relaxes: the spectrum of the
//! channel, and counting eigenvectors of the joint Hamiltonian of the form
//! |E⟩ ⊗ |φ⟩. A chain with the bath at its end passes both; a graph with a
//! component the bath cannot reach fails both.
//!
//! ```text
//! cargo run --release --example relaxing_criteria
//! ```

use mediahom::collision::build_channel;
use mediahom::convergence::{factorized_eigenvector_count, is_relaxing};
use mediahom::network::{interaction_hamiltonian, CouplingGraph, Model, NetworkSpec};
use mediahom::qmath::{basis_ket, kron, ComplexMatrix, DensityMatrix, SubsystemShape};
use mediahom::tol;

fn analyze(name: &str, graph: CouplingGraph, bath_site: usize) -> mediahom::Result<()> {
    let n = graph.n_sites();
    let spec = NetworkSpec::new(graph, 2, Model::SwapNetwork, vec![])?;
    let h_a = spec.hamiltonian()?;
    let shape = SubsystemShape::uniform(n + 1, 2)?;
    let h_i = interaction_hamiltonian(&shape, &[(n, bath_site)])?;
    let h_total = &kron(&h_a, &ComplexMatrix::identity(2)) + &h_i;
    let count = factorized_eigenvector_count(&h_total, &shape, &basis_ket(2, 0))?;

    let omega = DensityMatrix::from_populations(&[0.8, 0.2])?;
    let report = is_relaxing(&build_channel(&h_a, &h_i, &omega, 0.5)?.superoperator()?, tol::PERIPHERAL)?;
    println!(
        "{name:<28} factorized eigenvectors {count}   verdict {:<24} gap {:.4}",
        report.verdict.label(),
        report.spectral_gap.max(0.0)
    );
    Ok(())
}

fn main() -> mediahom::Result<()> {
    analyze("open chain, bath at end", CouplingGraph::new(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)])?, 3)?;
    analyze("ring", CouplingGraph::new(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])?, 3)?;
    analyze("two disconnected pairs", CouplingGraph::new(4, [(0, 1, 1.0), (2, 3, 1.0)])?, 3)?;
    Ok(())
}
