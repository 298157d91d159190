use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use mediahom::scenario::{
    emit_csv, parse_values, sweep, Analysis, Overrides, ResultTable, Scenario, ScenarioConfig,
};

#[derive(Parser)]
#[command(name = "mediahom", version, about = "Collision-model scenarios for spin networks coupled to baths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a single scenario.
    Run(Common),
    /// Run a scenario once per value of one config parameter.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Dot-separated config path, e.g. `baths.0.state.mix.p`.
        #[arg(long)]
        param: Option<String>,
        /// JSON array, `linspace(a, b, n)` or comma-separated numbers.
        #[arg(long)]
        values: Option<String>,
        /// Worker threads.
        #[arg(long, env = "MEDIAHOM_JOBS")]
        jobs: Option<usize>,
    },
    /// Dump the eigenvalues of one collision step's superoperator.
    Spectrum(Common),
    /// Validate a config and print a summary.
    Check(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    config: PathBuf,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    max_iter: Option<usize>,
    /// Iterative-solver stopping tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

impl Common {
    fn document(&self) -> Result<serde_json::Value> {
        let text = std::fs::read_to_string(&self.config)
            .with_context(|| format!("reading {}", self.config.display()))?;
        let mut doc: serde_json::Value = serde_json::from_str(&text)
            .with_context(|| format!("parsing {}", self.config.display()))?;
        Overrides {
            seed: self.seed,
            max_iter: self.max_iter,
            tol: self.tol,
        }
        .apply(&mut doc)?;
        Ok(doc)
    }

    fn scenario(&self, doc: serde_json::Value) -> Result<Scenario> {
        let cfg = ScenarioConfig::from_value(doc)?;
        Ok(Scenario::new(&cfg)?)
    }

    fn write(&self, table: &ResultTable) -> Result<()> {
        match &self.out {
            Some(path) => emit_csv(table, path)?,
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                table.write_csv(&mut lock)?;
                lock.flush()?;
            }
        }
        Ok(())
    }
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Run(common) => {
            let table = common.scenario(common.document()?)?.run()?;
            common.write(&table)
        }
        Command::Spectrum(common) => {
            let mut doc = common.document()?;
            doc["analysis"] = serde_json::json!("spectrum");
            let table = common.scenario(doc)?.run()?;
            common.write(&table)
        }
        Command::Check(common) => {
            let scenario = common.scenario(common.document()?)?;
            let cfg = scenario.config();
            println!("ok: {}", common.config.display());
            println!("  model        {:?}, n = {}, d = {}", cfg.model, cfg.n, cfg.d);
            println!("  system dim   {}", scenario.network().system_dim());
            println!("  baths        {}", cfg.baths.len());
            println!("  analysis     {}", analysis_name(&cfg.analysis));
            println!("  config hash  {}", cfg.digest());
            Ok(())
        }
        Command::Sweep { common, param, values, jobs } => {
            let doc = common.document()?;
            let cfg = ScenarioConfig::from_value(doc.clone())?;
            let (param, values) = match (param, values, &cfg.sweep) {
                (Some(p), Some(v), _) => (p, parse_values(&v)?),
                (p, v, Some(spec)) => (
                    p.unwrap_or_else(|| spec.param.clone()),
                    match v {
                        Some(v) => parse_values(&v)?,
                        None => spec.values.values(),
                    },
                ),
                _ => bail!("sweep needs --param and --values, or a `sweep` section in the config"),
            };
            let jobs = jobs.unwrap_or_else(|| {
                std::thread::available_parallelism().map_or(1, |n| n.get())
            });
            let table = sweep(&doc, &param, &values, jobs)?;
            common.write(&table)
        }
    }
}

fn analysis_name(a: &Analysis) -> String {
    match a {
        Analysis::FixedPoint => "fixed_point".into(),
        Analysis::Trajectory { steps } => format!("trajectory({steps})"),
        Analysis::Spectrum => "spectrum".into(),
        Analysis::Profile => "profile".into(),
    }
}
