//! Heisenberg chain of five qubits between two baths with different ground
//! populations. Prints the steady-state population of |0⟩ along the chain,
//! with the bath inputs at the ends, for two collision times.
//!
//! ```text
//! cargo run --release --example two_bath_equilibrium
//! ```

use mediahom::scenario::{Cell, Scenario, ScenarioConfig};
use serde_json::json;

fn main() -> mediahom::Result<()> {
    for t in [0.5, 1.0] {
        let cfg = ScenarioConfig::from_value(json!({
            "model": "xxz", "n": 5, "delta": 1.0, "t": t,
            "baths": [
                {"site": 4, "state": {"diag": 0.9}, "label": "B"},
                {"site": 0, "state": {"diag": 0.4}, "label": "C"}
            ],
            "analysis": "profile",
            "solver": "spectral"
        }))?;
        let table = Scenario::new(&cfg)?.run()?;
        println!("t = {t}");
        for row in table.rows() {
            let label = match &row[2] {
                Cell::Text(s) => s.as_str(),
                _ => "?",
            };
            let p0 = row[4].as_f64().unwrap_or(f64::NAN);
            println!("  {label:>3}  {p0:.4}  {}", "#".repeat((p0 * 40.0).round() as usize));
        }
    }

    // Both baths in |0⟩: the chain is cooled to |0…0⟩.
    let cfg = ScenarioConfig::from_value(json!({
        "model": "xxz", "n": 5, "delta": 1.0, "t": 0.5,
        "baths": [{"site": 4, "state": "zero"}, {"site": 0, "state": "zero"}]
    }))?;
    let rho = Scenario::new(&cfg)?.fixed_point()?.state.expect("relaxing");
    println!("cooling: population of |00000⟩ = {:.10}", rho.population(0));
    Ok(())
}
