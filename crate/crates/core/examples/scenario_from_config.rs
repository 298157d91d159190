//! Loads a JSON scenario, runs it and prints the CSV, or runs the sweep
//! stored in the config when `--sweep` is given.
//!
//! ```text
//! cargo run --release --example scenario_from_config -- configs/swap_chain_homogenization.json
//! cargo run --release --example scenario_from_config -- configs/anisotropy_sweep.json --sweep
//! ```

use std::path::PathBuf;

use mediahom::scenario::{run_scenario, sweep, ScenarioConfig};

fn main() -> mediahom::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args.next().map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs/swap_chain_homogenization.json")
    });
    let run_sweep = args.any(|a| a == "--sweep");
    let cfg = ScenarioConfig::load(&path)?;

    let table = match (&cfg.sweep, run_sweep) {
        (Some(spec), true) => sweep(&cfg.to_value(), &spec.param, &spec.values.values(), 4)?,
        _ => run_scenario(&cfg)?,
    };
    print!("{}", table.to_csv_string());
    Ok(())
}
