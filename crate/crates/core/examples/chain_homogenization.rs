//! A swap-network chain whose last site collides with a bath of identical
//! qubits in state ω. Every site ends up in ω, although only one site ever
//! touches the bath.
//!
//! ```text
//! cargo run --release --example chain_homogenization
//! ```

use mediahom::collision::build_channel;
use mediahom::convergence::{is_relaxing, iterative_fixed_point};
use mediahom::network::{chain_graph, interaction_hamiltonian, Model, NetworkSpec};
use mediahom::qmath::random::random_density;
use mediahom::qmath::{basis_ket, DensityMatrix, SubsystemShape};
use mediahom::tol;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> mediahom::Result<()> {
    let n = 3;
    let t = 0.5;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let omega = random_density(&mut rng, 2);

    let spec = NetworkSpec::new(chain_graph(n, 1.0)?, 2, Model::SwapNetwork, vec![])?;
    let h_a = spec.hamiltonian()?;
    let h_i = interaction_hamiltonian(&SubsystemShape::uniform(n + 1, 2)?, &[(n, n - 1)])?;
    let channel = build_channel(&h_a, &h_i, &omega, t)?;

    let report = is_relaxing(&channel.superoperator()?, tol::PERIPHERAL)?;
    println!("verdict        {}", report.verdict.label());
    println!("spectral gap   {:.6}", report.spectral_gap);

    let target = omega.power(n)?;
    let rho0 = DensityMatrix::pure(&basis_ket(1 << n, 0))?;
    println!("\n{:>6}  {:>12}", "step", "‖ρ − ω⊗ω⊗ω‖₁");
    let trajectory = channel.iterate(&rho0, 400)?;
    for (step, rho) in trajectory.iter().enumerate().step_by(50) {
        println!("{step:>6}  {:>12.3e}", rho.trace_distance(&target)?);
    }

    let (rho, steps) = iterative_fixed_point(&channel, &rho0, 1e-12, 100_000)?;
    let spectral = report.fixed_point.expect("relaxing channel");
    println!("\niterative solver stopped after {steps} collisions");
    println!("iterative vs spectral   {:.3e}", rho.trace_distance(&spectral)?);
    println!("spectral vs ω⊗ω⊗ω      {:.3e}", spectral.trace_distance(&target)?);

    let shape = SubsystemShape::uniform(n, 2)?;
    for k in 0..n {
        let site = spectral.reduce(&shape, &[k])?;
        println!("site {k}: ‖ρ_k − ω‖₁ = {:.3e}", site.trace_distance(&omega)?);
    }
    Ok(())
}
