//! Convex mixtures p·E + (1 − p)·F of a relaxing collision channel E with a
//! unitary conjugation F, which alone is not relaxing.
//!
//! ```text
//! cargo run --release --example haag_mixture
//! ```

use mediahom::collision::{build_channel, Superoperator};
use mediahom::convergence::{haag_mixture_check, is_relaxing};
use mediahom::network::{chain_graph, interaction_hamiltonian, Model, NetworkSpec};
use mediahom::qmath::random::{random_density, random_unitary};
use mediahom::qmath::SubsystemShape;
use mediahom::tol;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> mediahom::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let spec = NetworkSpec::new(chain_graph(2, 1.0)?, 2, Model::SwapNetwork, vec![])?;
    let h_i = interaction_hamiltonian(&SubsystemShape::uniform(3, 2)?, &[(2, 1)])?;
    let relaxing = build_channel(&spec.hamiltonian()?, &h_i, &random_density(&mut rng, 2), 0.5)?
        .superoperator()?;
    let unitary = Superoperator::unitary(&random_unitary(&mut rng, 4))?;

    let alone = is_relaxing(&unitary, tol::PERIPHERAL)?;
    println!("unitary channel alone: {} ({} peripheral eigenvalues)", alone.verdict.label(), alone.peripheral_count);

    println!("\n{:>6}  {:>20}  {:>10}", "p", "verdict", "gap");
    for p in [1.0, 0.5, 0.2, 0.1, 0.05, 0.01] {
        let report = haag_mixture_check(&relaxing, &unitary, p)?;
        println!("{p:6.2}  {:>20}  {:10.3e}", report.verdict.label(), report.spectral_gap);
        for d in &report.diagnostics {
            println!("        {d}");
        }
    }
    Ok(())
}
