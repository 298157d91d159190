//! Steady-state entropy of an XX chain relative to the entropy of its bath,
//! for baths p|0⟩⟨0| + (1 − p)|−⟩⟨−|. The ratio tends to the number of
//! sites as the bath becomes pure, while at p = 0 it is undefined and the
//! chain stays mixed.
//!
//! ```text
//! cargo run --release --example entropy_ratio_sweep
//! ```

use mediahom::convergence::entropy_ratio;
use mediahom::qmath::von_neumann_entropy;
use mediahom::scenario::{linspace, Scenario, ScenarioConfig};
use mediahom::Error;
use serde_json::json;

fn main() -> mediahom::Result<()> {
    println!("{:>7}  {:>9}  {:>9}  {:>9}  {:>8}", "p", "S_A", "S_B", "R", "gap");
    let mut grid = linspace(0.0, 0.95, 20);
    grid.extend([0.99, 0.999]);
    for p in grid {
        let cfg = ScenarioConfig::from_value(json!({
            "model": "xxz", "n": 4, "delta": 0.0, "t": 0.5,
            "baths": [{"site": 3, "state": {"mix": {"p": p, "a": "zero", "b": "minus"}}}]
        }))?;
        let scenario = Scenario::new(&cfg)?;
        let summary = scenario.fixed_point()?;
        let rho = summary.state.expect("relaxing for every p");
        let omega = &scenario.bath_states()[0];
        let ratio = match entropy_ratio(&rho, omega) {
            Ok(r) => format!("{r:9.4}"),
            Err(Error::UndefinedRatio { .. }) => format!("{:>9}", "undefined"),
            Err(e) => return Err(e),
        };
        println!(
            "{p:7.3}  {:9.4}  {:9.4}  {ratio}  {:8.5}",
            von_neumann_entropy(&rho)?,
            von_neumann_entropy(omega)?,
            summary.gap
        );
    }
    Ok(())
}
