//! Declarative scenarios: JSON configs, runners for the fixed-point,
//! trajectory, spectrum and profile analyses, parameter sweeps and CSV
//! output.

mod config;
mod runner;
mod table;

pub use config::{
    Analysis, BathColumns, BathConfig, BathMode, Couplings, InitialState, MatrixSpec, ModelKind,
    ScenarioConfig, Solver, StateSpec, SweepSpec, SweepValues, Tolerances,
};
pub use runner::{
    linspace, param_column, parse_values, run_scenario, set_param, sweep, FixedPointSummary,
    Overrides, Scenario, MAX_JOINT_DIM,
};
pub use table::{emit_csv, format_real, Cell, ResultTable};
