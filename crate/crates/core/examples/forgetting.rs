//! Two different initial states driven by the same sequence of imperfectly
//! prepared controllers. Their trace distance never grows and decays to
//! zero, even though no two collisions are identical.
//!
//! ```text
//! cargo run --release --example forgetting
//! ```

use mediahom::collision::{imperfect_controller_sequence, ChannelTemplate, ControllerSequence, ControllerStep};
use mediahom::convergence::forgetting_metric;
use mediahom::network::swap_operator;
use mediahom::qmath::random::random_density;
use mediahom::qmath::{ComplexMatrix, SubsystemShape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> mediahom::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let template = ChannelTemplate {
        h_system: ComplexMatrix::zeros(2, 2),
        h_interaction: swap_operator(&SubsystemShape::uniform(2, 2)?, 0, 1)?,
        t: 0.5,
    };
    let p_min = 0.5;
    let steps = (0..500)
        .map(|_| ControllerStep {
            weight: rng.random_range(p_min..=1.0),
            perturbation: random_density(&mut rng, 2),
        })
        .collect();
    let sequence = ControllerSequence::new(random_density(&mut rng, 2), steps, p_min)?;
    let channels = imperfect_controller_sequence(&template, &sequence)?;

    let f = forgetting_metric(&channels, &random_density(&mut rng, 2), &random_density(&mut rng, 2))?;
    println!("{:>5}  {:>12}", "n", "f_n");
    for n in [0, 1, 2, 5, 10, 20, 50, 100, 200, 500] {
        println!("{n:>5}  {:>12.4e}", f[n]);
    }
    let monotone = f.windows(2).all(|w| w[1] <= w[0] + 1e-10);
    println!("non-increasing: {monotone}");
    Ok(())
}
