//! Turning a config into channels and running its analysis.

use std::time::Instant;

use rayon::prelude::*;

use crate::collision::{build_channel, build_multi_bath_channel, CollisionChannel, Superoperator};
use crate::convergence::{entropy_ratio, is_relaxing, iterative_fixed_point_periodic};
use crate::error::{Error, Result};
use crate::network::{chain_graph, BathAttachment, CouplingGraph, Model, NetworkSpec};
use crate::qmath::random::random_density;
use crate::qmath::{concurrence, von_neumann_entropy, DensityMatrix};
use crate::tol;

use super::config::{
    Analysis, BathColumns, BathMode, Couplings, InitialState, ModelKind, ScenarioConfig, StateSpec,
};
use super::table::{Cell, ResultTable};

/// Largest joint (system plus baths) dimension accepted by a scenario.
pub const MAX_JOINT_DIM: usize = 1024;

/// A validated config with its Hamiltonian, states and channels built.
#[derive(Clone, Debug)]
pub struct Scenario {
    config: ScenarioConfig,
    network: NetworkSpec,
    bath_states: Vec<DensityMatrix>,
    initial_state: DensityMatrix,
    /// One step applies these in order.
    channels: Vec<CollisionChannel>,
}

impl Scenario {
    pub fn new(config: &ScenarioConfig) -> Result<Self> {
        let cfg = config;
        if cfg.n == 0 {
            return Err(Error::config("n", "at least one site is required"));
        }
        if cfg.d < 2 {
            return Err(Error::config("d", format!("local dimension {} < 2", cfg.d)));
        }
        if !cfg.t.is_finite() || cfg.t < 0.0 {
            return Err(Error::config("t", format!("interaction time {} must be finite and ≥ 0", cfg.t)));
        }
        let model = match (cfg.model, cfg.delta) {
            (ModelKind::Swap, None) => Model::SwapNetwork,
            (ModelKind::Swap, Some(_)) => {
                return Err(Error::config("delta", "only the xxz model takes an anisotropy"))
            }
            (ModelKind::Xxz, None) => return Err(Error::config("delta", "required by the xxz model")),
            (ModelKind::Xxz, Some(delta)) => {
                if cfg.d != 2 {
                    return Err(Error::config("d", "the xxz model needs qubits (d = 2)"));
                }
                if !delta.is_finite() {
                    return Err(Error::config("delta", format!("{delta} is not finite")));
                }
                Model::Xxz { delta }
            }
        };
        let graph = match &cfg.couplings {
            Couplings::Chain { j } => {
                if !j.is_finite() {
                    return Err(Error::config("couplings.chain.j", format!("{j} is not finite")));
                }
                chain_graph(cfg.n, *j)
                    .map_err(|e| Error::config("couplings.chain", e.to_string()))?
            }
            Couplings::Edges(edges) => CouplingGraph::new(cfg.n, edges.iter().copied())
                .map_err(|e| Error::config("couplings.edges", e.to_string()))?,
        };

        if cfg.baths.is_empty() {
            return Err(Error::config("baths", "at least one bath is required"));
        }
        let mut attachments = Vec::new();
        let mut bath_states = Vec::new();
        for (i, bath) in cfg.baths.iter().enumerate() {
            if bath.site >= cfg.n {
                return Err(Error::config(
                    format!("baths[{i}].site"),
                    format!("site {} outside 0..{}", bath.site, cfg.n),
                ));
            }
            if cfg.baths[..i].iter().any(|b| b.site == bath.site) {
                return Err(Error::config(
                    format!("baths[{i}].site"),
                    format!("site {} already has a bath", bath.site),
                ));
            }
            attachments.push(BathAttachment {
                label: bath.label.clone().unwrap_or_else(|| default_bath_label(i)),
                site: bath.site,
            });
            bath_states.push(bath.state.build(cfg.d, &format!("baths[{i}].state"), cfg.bath_seed(i))?);
        }

        let system_dim = (cfg.d as u128).checked_pow(cfg.n as u32).unwrap_or(u128::MAX);
        let ancilla_dim = match cfg.bath_mode {
            BathMode::Simultaneous => (cfg.d as u128).pow(cfg.baths.len() as u32),
            BathMode::Alternating => cfg.d as u128,
        };
        if system_dim.saturating_mul(ancilla_dim) > MAX_JOINT_DIM as u128 {
            return Err(Error::config(
                "n",
                format!("joint dimension d^(n + baths) exceeds {MAX_JOINT_DIM}"),
            ));
        }
        let system_dim = system_dim as usize;
        let needs_superoperator = cfg.solver.spectral()
            || matches!(cfg.analysis, Analysis::Spectrum);
        if needs_superoperator && system_dim > tol::SUPEROPERATOR_MAX_DIM {
            return Err(Error::config(
                "solver",
                format!(
                    "system dimension {system_dim} is above {} for spectral analysis; use \"iterative\"",
                    tol::SUPEROPERATOR_MAX_DIM
                ),
            ));
        }

        let t = &cfg.tolerances;
        if !(t.peripheral > 0.0 && t.peripheral < 1.0) {
            return Err(Error::config("tolerances.peripheral", "must lie in (0, 1)"));
        }
        if !(t.iteration > 0.0) {
            return Err(Error::config("tolerances.iteration", "must be positive"));
        }
        if t.max_iter == 0 {
            return Err(Error::config("tolerances.max_iter", "must be at least 1"));
        }

        let initial_state = match &cfg.initial_state {
            InitialState::Ground => DensityMatrix::from_populations(
                &(0..system_dim).map(|i| if i == 0 { 1.0 } else { 0.0 }).collect::<Vec<_>>(),
            )?,
            InitialState::Explicit(spec) => StateSpec::Matrix(spec.clone())
                .build(system_dim, "initial_state.explicit", 0)
                .map_err(|e| match e {
                    Error::Config { message, .. } => Error::config("initial_state.explicit", message),
                    other => other,
                })?,
            InitialState::Random { seed } => {
                use rand::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.unwrap_or(cfg.initial_seed()));
                random_density(&mut rng, system_dim)
            }
        };

        let network = NetworkSpec::new(graph, cfg.d, model, attachments)
            .map_err(|e| Error::config("model", e.to_string()))?;
        let h_a = network.hamiltonian()?;
        let channels = match cfg.bath_mode {
            BathMode::Simultaneous if bath_states.len() == 1 => {
                vec![build_channel(&h_a, &network.single_bath_interaction(0)?, &bath_states[0], cfg.t)?]
            }
            BathMode::Simultaneous => {
                let mut h_i = network.bath_interaction(0)?;
                for i in 1..bath_states.len() {
                    h_i += &network.bath_interaction(i)?;
                }
                let states: Vec<&DensityMatrix> = bath_states.iter().collect();
                vec![build_multi_bath_channel(&h_a, &h_i, &states, cfg.t)?]
            }
            BathMode::Alternating => bath_states
                .iter()
                .enumerate()
                .map(|(i, omega)| build_channel(&h_a, &network.single_bath_interaction(i)?, omega, cfg.t))
                .collect::<Result<_>>()?,
        };

        Ok(Self {
            config: cfg.clone(),
            network,
            bath_states,
            initial_state,
            channels,
        })
    }

    pub fn config(&self) -> &ScenarioConfig {
        &self.config
    }

    pub fn network(&self) -> &NetworkSpec {
        &self.network
    }

    pub fn bath_states(&self) -> &[DensityMatrix] {
        &self.bath_states
    }

    pub fn initial_state(&self) -> &DensityMatrix {
        &self.initial_state
    }

    pub fn channels(&self) -> &[CollisionChannel] {
        &self.channels
    }

    /// Superoperator of one full step.
    pub fn superoperator(&self) -> Result<Superoperator> {
        let mut s = self.channels[0].superoperator()?;
        for ch in &self.channels[1..] {
            s = s.then(&ch.superoperator()?)?;
        }
        Ok(s)
    }

    /// Applies one full step.
    pub fn step(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let mut out = rho.clone();
        for ch in &self.channels {
            out = ch.apply(&out)?;
        }
        Ok(out)
    }

    pub fn columns(&self) -> Vec<String> {
        let fixed = |names: &[&str]| names.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        match self.config.analysis {
            Analysis::FixedPoint => fixed(&[
                "S_A", "S_B", "R", "C12", "purity", "gap", "peripheral", "residual", "iterations",
                "solver_distance", "status",
            ]),
            Analysis::Trajectory { .. } => {
                let mut cols = fixed(&["step", "S_A", "purity", "C12", "residual"]);
                cols.extend((0..self.config.n).map(|k| format!("p0_site{k}")));
                cols.push("status".into());
                cols
            }
            Analysis::Spectrum => fixed(&["index", "re", "im", "modulus", "status"]),
            Analysis::Profile => fixed(&["position", "kind", "label", "site", "p0", "status"]),
        }
    }

    /// Steady state and the fixed-point summary row.
    pub fn fixed_point(&self) -> Result<FixedPointSummary> {
        let cfg = &self.config;
        let tols = &cfg.tolerances;
        let mut out = FixedPointSummary::default();
        let mut spectral_state = None;
        if cfg.solver.spectral() {
            let report = is_relaxing(&self.superoperator()?, tols.peripheral)?;
            out.gap = report.spectral_gap;
            out.peripheral = report.peripheral_count;
            out.residual = report.residual;
            out.relaxing = Some(report.is_relaxing());
            if !report.is_relaxing() {
                out.status.push(report.verdict.label());
            }
            spectral_state = report.fixed_point;
        }
        let mut iterative_state = None;
        if cfg.solver.iterative() {
            match iterative_fixed_point_periodic(&self.channels, &self.initial_state, tols.iteration, tols.max_iter) {
                Ok((rho, n)) => {
                    out.iterations = Some(n);
                    iterative_state = Some(rho);
                }
                Err(Error::NotConverged { iterations, .. }) => {
                    out.iterations = Some(iterations);
                    out.status.push("not_converged".into());
                }
                Err(e) => return Err(e),
            }
        }
        if let (Some(a), Some(b)) = (&spectral_state, &iterative_state) {
            out.solver_distance = a.trace_distance(b)?;
        }
        out.state = spectral_state.or(iterative_state);
        if let Some(rho) = &out.state {
            if out.residual.is_nan() {
                out.residual = self.step(rho)?.trace_distance(rho)?;
            }
        }
        Ok(out)
    }

    pub fn run(&self) -> Result<ResultTable> {
        let started = Instant::now();
        let mut table = ResultTable::new(self.columns());
        match &self.config.analysis {
            Analysis::FixedPoint => self.fixed_point_rows(&mut table)?,
            Analysis::Trajectory { steps } => self.trajectory_rows(*steps, &mut table)?,
            Analysis::Spectrum => self.spectrum_rows(&mut table)?,
            Analysis::Profile => self.profile_rows(&mut table)?,
        }
        table.set_metadata("config_sha256", self.config.digest());
        table.set_metadata("version", env!("CARGO_PKG_VERSION"));
        table.set_metadata("wall_time_s", format!("{:.3}", started.elapsed().as_secs_f64()));
        Ok(table)
    }

    fn fixed_point_rows(&self, table: &mut ResultTable) -> Result<()> {
        let summary = self.fixed_point()?;
        let mut status = summary.status.clone();
        let s_b = von_neumann_entropy(&self.bath_states[0])?;
        let (s_a, ratio, c12, purity) = match &summary.state {
            Some(rho) => {
                let ratio = match entropy_ratio(rho, &self.bath_states[0]) {
                    Ok(r) => r,
                    Err(Error::UndefinedRatio { .. }) => {
                        status.push("undefined_ratio".into());
                        f64::NAN
                    }
                    Err(e) => return Err(e),
                };
                (von_neumann_entropy(rho)?, ratio, self.pair_concurrence(rho)?, rho.purity())
            }
            None => (f64::NAN, f64::NAN, f64::NAN, f64::NAN),
        };
        table.push_row(vec![
            s_a.into(),
            s_b.into(),
            ratio.into(),
            c12.into(),
            purity.into(),
            summary.gap.into(),
            summary.peripheral_cell(),
            summary.residual.into(),
            summary.iterations.map_or(Cell::Real(f64::NAN), Cell::from),
            summary.solver_distance.into(),
            status_cell(&status),
        ])
    }

    fn trajectory_rows(&self, steps: usize, table: &mut ResultTable) -> Result<()> {
        let shape = self.network.system_shape();
        let mut rho = self.initial_state.clone();
        let mut residual = f64::NAN;
        for step in 0..=steps {
            if step > 0 {
                let next = self.step(&rho)?;
                residual = next.trace_distance(&rho)?;
                rho = next;
            }
            let mut row = vec![
                step.into(),
                von_neumann_entropy(&rho)?.into(),
                rho.purity().into(),
                self.pair_concurrence(&rho)?.into(),
                residual.into(),
            ];
            for k in 0..self.config.n {
                row.push(rho.reduce(&shape, &[k])?.population(0).into());
            }
            row.push("ok".into());
            table.push_row(row)?;
        }
        Ok(())
    }

    fn spectrum_rows(&self, table: &mut ResultTable) -> Result<()> {
        let mut values = self.superoperator()?.eigenvalues()?;
        values.sort_by(|a, b| b.norm().total_cmp(&a.norm()).then(b.re.total_cmp(&a.re)));
        for (i, z) in values.iter().enumerate() {
            table.push_row(vec![i.into(), z.re.into(), z.im.into(), z.norm().into(), "ok".into()])?;
        }
        Ok(())
    }

    fn profile_rows(&self, table: &mut ResultTable) -> Result<()> {
        let summary = self.fixed_point()?;
        let rho = summary.state.as_ref().ok_or_else(|| {
            Error::Numerical(format!("no steady state ({})", summary.status.join(";")))
        })?;
        let status = status_cell(&summary.status);
        let shape = self.network.system_shape();
        let n = self.config.n;
        let bath_p0 = self.bath_populations(rho)?;

        let mut entries: Vec<(Cell, Cell, usize, f64)> = Vec::new();
        let bath_entry = |i: usize| {
            let b = &self.network.baths()[i];
            (Cell::from("bath"), Cell::from(b.label.clone()), b.site, bath_p0[i])
        };
        let before: Vec<usize> = (0..self.bath_states.len())
            .filter(|&i| 2 * self.network.baths()[i].site < n - 1)
            .collect();
        for &i in &before {
            entries.push(bath_entry(i));
        }
        for k in 0..n {
            let p0 = rho.reduce(&shape, &[k])?.population(0);
            entries.push((Cell::from("site"), Cell::from(format!("A{}", k + 1)), k, p0));
        }
        for i in (0..self.bath_states.len()).filter(|i| !before.contains(i)) {
            entries.push(bath_entry(i));
        }
        for (position, (kind, label, site, p0)) in entries.into_iter().enumerate() {
            table.push_row(vec![position.into(), kind, label, site.into(), p0.into(), status.clone()])?;
        }
        Ok(())
    }

    /// Ground-state population of each bath: prepared state, or outgoing
    /// bath qudit at the steady state.
    fn bath_populations(&self, rho: &DensityMatrix) -> Result<Vec<f64>> {
        let nb = self.bath_states.len();
        match self.config.bath_columns {
            BathColumns::Input => Ok(self.bath_states.iter().map(|w| w.population(0)).collect()),
            BathColumns::PostCollision => {
                if self.channels.len() == 1 {
                    let out = self.channels[0].ancilla_output(rho)?;
                    let shape = self.channels[0].ancilla_shape().clone();
                    (0..nb).map(|i| Ok(out.reduce(&shape, &[i])?.population(0))).collect()
                } else {
                    let mut state = rho.clone();
                    let mut pops = Vec::with_capacity(nb);
                    for ch in &self.channels {
                        pops.push(ch.ancilla_output(&state)?.population(0));
                        state = ch.apply(&state)?;
                    }
                    Ok(pops)
                }
            }
        }
    }

    /// Concurrence of sites 0 and 1; `NaN` unless the system has two or
    /// more qubits.
    fn pair_concurrence(&self, rho: &DensityMatrix) -> Result<f64> {
        if self.config.d != 2 || self.config.n < 2 {
            return Ok(f64::NAN);
        }
        concurrence(&rho.reduce(&self.network.system_shape(), &[0, 1])?)
    }
}

fn default_bath_label(i: usize) -> String {
    // B, C, D, … as bath names.
    match u8::try_from(i).ok().filter(|&i| i < 24) {
        Some(i) => char::from(b'B' + i).to_string(),
        None => format!("bath{i}"),
    }
}

fn status_cell(status: &[String]) -> Cell {
    if status.is_empty() {
        Cell::from("ok")
    } else {
        Cell::from(status.join(";"))
    }
}

/// Outcome of the fixed-point solvers configured for a scenario.
#[derive(Clone, Debug)]
pub struct FixedPointSummary {
    pub state: Option<DensityMatrix>,
    pub relaxing: Option<bool>,
    pub gap: f64,
    pub peripheral: usize,
    pub residual: f64,
    pub iterations: Option<usize>,
    pub solver_distance: f64,
    pub status: Vec<String>,
}

impl Default for FixedPointSummary {
    fn default() -> Self {
        Self {
            state: None,
            relaxing: None,
            gap: f64::NAN,
            peripheral: 0,
            residual: f64::NAN,
            iterations: None,
            solver_distance: f64::NAN,
            status: Vec::new(),
        }
    }
}

impl FixedPointSummary {
    fn peripheral_cell(&self) -> Cell {
        match self.relaxing {
            Some(_) => self.peripheral.into(),
            None => Cell::Real(f64::NAN),
        }
    }
}

/// Parses, validates and runs a config.
pub fn run_scenario(config: &ScenarioConfig) -> Result<ResultTable> {
    Scenario::new(config)?.run()
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// Parses `--values`: a JSON array, `linspace(a, b, n)`, or a comma list of
/// numbers.
pub fn parse_values(text: &str) -> Result<Vec<serde_json::Value>> {
    let text = text.trim();
    let bad = |m: String| Error::config("values", m);
    if text.starts_with('[') {
        return serde_json::from_str(text).map_err(|e| bad(e.to_string()));
    }
    if let Some(inner) = text.strip_prefix("linspace(").and_then(|s| s.strip_suffix(')')) {
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(bad("linspace takes (start, stop, count)".into()));
        }
        let a: f64 = parts[0].parse().map_err(|_| bad(format!("bad start `{}`", parts[0])))?;
        let b: f64 = parts[1].parse().map_err(|_| bad(format!("bad stop `{}`", parts[1])))?;
        let n: usize = parts[2].parse().map_err(|_| bad(format!("bad count `{}`", parts[2])))?;
        return Ok(linspace(a, b, n).into_iter().map(serde_json::Value::from).collect());
    }
    text.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<f64>()
                .map(serde_json::Value::from)
                .map_err(|_| bad(format!("`{s}` is not a number")))
        })
        .collect()
}

fn pointer(param: &str) -> String {
    param
        .split('.')
        .map(|seg| format!("/{}", seg.replace('~', "~0").replace('/', "~1")))
        .collect()
}

/// Column name for a swept parameter: its last non-index segment.
pub fn param_column(param: &str) -> String {
    param
        .rsplit('.')
        .find(|s| s.parse::<usize>().is_err())
        .unwrap_or(param)
        .to_string()
}

/// Writes `value` at `param` in a config document. The parent must exist;
/// an existing leaf must have the same JSON type.
pub fn set_param(doc: &mut serde_json::Value, param: &str, value: serde_json::Value) -> Result<()> {
    let slot = param_slot(doc, param)?;
    let same_kind = std::mem::discriminant(&*slot) == std::mem::discriminant(&value);
    if !slot.is_null() && !same_kind {
        return Err(Error::config(param, format!("cannot replace {slot} with {value}")));
    }
    *slot = value;
    Ok(())
}

/// Resolves `param`, creating a `null` leaf on an existing object if needed.
fn param_slot<'a>(doc: &'a mut serde_json::Value, param: &str) -> Result<&'a mut serde_json::Value> {
    let bad = |m: String| Error::config(param, m);
    if param.is_empty() || param.split('.').any(str::is_empty) {
        return Err(bad("empty path segment".into()));
    }
    let ptr = pointer(param);
    let (parent_ptr, leaf) = ptr.rsplit_once('/').expect("pointer starts with /");
    let leaf = leaf.replace("~1", "/").replace("~0", "~");
    let parent = doc
        .pointer_mut(parent_ptr)
        .ok_or_else(|| bad("no such path in the config".into()))?;
    match parent {
        serde_json::Value::Object(map) => Ok(map.entry(leaf).or_insert(serde_json::Value::Null)),
        serde_json::Value::Array(items) => {
            let i: usize = leaf.parse().map_err(|_| bad(format!("`{leaf}` is not an array index")))?;
            items.get_mut(i).ok_or_else(|| bad(format!("index {i} out of range")))
        }
        _ => Err(bad("path goes through a scalar".into())),
    }
}

fn value_cell(v: &serde_json::Value) -> Cell {
    match v.as_f64() {
        Some(x) => Cell::Real(x),
        None => Cell::Text(v.to_string()),
    }
}

/// Runs `doc` once per value of `param` and stacks the results, with the
/// swept value as the first column. Rows follow the order of `values`.
/// Per-point failures become rows with `NaN` cells and the error in
/// `status`.
pub fn sweep(
    doc: &serde_json::Value,
    param: &str,
    values: &[serde_json::Value],
    jobs: usize,
) -> Result<ResultTable> {
    let started = Instant::now();
    let base = ScenarioConfig::from_value(doc.clone())?;
    let columns = Scenario::new(&base)?.columns();
    param_slot(&mut doc.clone(), param)?;
    let name = param_column(param);

    // Schema errors (unknown keys, wrong types) abort the sweep; errors from
    // building or running a point are recorded in its row.
    let points: Vec<(Cell, ScenarioConfig)> = values
        .iter()
        .map(|value| {
            let mut point = doc.clone();
            set_param(&mut point, param, value.clone())?;
            Ok((value_cell(value), ScenarioConfig::from_value(point)?))
        })
        .collect::<Result<_>>()?;

    let run_point = |(value, cfg): &(Cell, ScenarioConfig)| -> ResultTable {
        match Scenario::new(cfg).and_then(|s| s.run()) {
            Ok(t) => t.with_leading_column(&name, value.clone()),
            Err(e) => {
                let mut t = ResultTable::new(columns.iter().cloned());
                let row = columns
                    .iter()
                    .map(|c| {
                        if c == "status" {
                            Cell::from(format!("error: {e}"))
                        } else {
                            Cell::Real(f64::NAN)
                        }
                    })
                    .collect();
                t.push_row(row).expect("row matches columns");
                t.with_leading_column(&name, value.clone())
            }
        }
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Argument(format!("thread pool: {e}")))?;
    let parts: Vec<ResultTable> = pool.install(|| points.par_iter().map(run_point).collect());

    let mut all_columns = vec![name.clone()];
    all_columns.extend(columns);
    let mut table = ResultTable::new(all_columns);
    for part in parts {
        table.extend_rows(part)?;
    }
    table.set_metadata("config_sha256", base.digest());
    table.set_metadata("version", env!("CARGO_PKG_VERSION"));
    table.set_metadata("sweep_param", param);
    table.set_metadata("wall_time_s", format!("{:.3}", started.elapsed().as_secs_f64()));
    Ok(table)
}

/// Command-line overrides applied to a config document before parsing.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub max_iter: Option<usize>,
    pub tol: Option<f64>,
}

impl Overrides {
    pub fn apply(&self, doc: &mut serde_json::Value) -> Result<()> {
        let obj = doc
            .as_object_mut()
            .ok_or_else(|| Error::config("<document>", "expected a JSON object"))?;
        if let Some(seed) = self.seed {
            obj.insert("seed".into(), seed.into());
        }
        if self.max_iter.is_some() || self.tol.is_some() {
            let tols = obj
                .entry("tolerances")
                .or_insert_with(|| serde_json::json!({}));
            let tols = tols
                .as_object_mut()
                .ok_or_else(|| Error::config("tolerances", "expected an object"))?;
            if let Some(m) = self.max_iter {
                tols.insert("max_iter".into(), m.into());
            }
            if let Some(t) = self.tol {
                tols.insert("iteration".into(), t.into());
            }
        }
        Ok(())
    }
}
