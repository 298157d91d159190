//! JSON scenario configs.
//!
//! A config names the network (model, size, couplings), the baths and their
//! states, the collision time, the initial system state and the analysis to
//! run. Parsing rejects unknown fields; every error names the offending
//! field path.

use std::path::Path;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::qmath::random::random_density;
use crate::qmath::{basis_ket, ComplexMatrix, DensityMatrix};
use crate::tol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Swap,
    Xxz,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Couplings {
    /// Nearest-neighbour open chain with uniform coupling.
    Chain { j: f64 },
    /// `[a, b, J]` triples.
    Edges(Vec<(usize, usize, f64)>),
}

impl Default for Couplings {
    fn default() -> Self {
        Couplings::Chain { j: 1.0 }
    }
}

/// Real part and optional imaginary part of a square matrix, row by row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<f64>>>,
}

impl MatrixSpec {
    fn to_matrix(&self, field: &str) -> Result<ComplexMatrix> {
        let n = self.re.len();
        let ragged = |m: &Vec<Vec<f64>>| m.len() != n || m.iter().any(|r| r.len() != n);
        if n == 0 || ragged(&self.re) {
            return Err(Error::config(format!("{field}.re"), "expected a non-empty square matrix"));
        }
        if let Some(im) = &self.im {
            if ragged(im) {
                return Err(Error::config(format!("{field}.im"), "must have the same shape as `re`"));
            }
        }
        Ok(ComplexMatrix::from_fn(n, n, |i, j| {
            let im = self.im.as_ref().map_or(0.0, |m| m[i][j]);
            Complex64::new(self.re[i][j], im)
        }))
    }
}

/// Named, explicit and composite single-site states.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum StateSpec {
    /// `|0⟩⟨0|`
    Zero,
    /// `|1⟩⟨1|`
    One,
    /// `|+⟩⟨+|`, qubits only.
    Plus,
    /// `|−⟩⟨−|` with `|−⟩ = (|0⟩ − |1⟩)/√2`, qubits only.
    Minus,
    /// `p|0⟩⟨0| + (1 − p)|1⟩⟨1|`
    Diag(f64),
    /// Diagonal state with the given populations.
    Populations(Vec<f64>),
    Matrix(MatrixSpec),
    /// `p·a + (1 − p)·b`
    Mix {
        p: f64,
        a: Box<StateSpec>,
        b: Box<StateSpec>,
    },
    /// Random mixed state; without a seed, derived from the scenario seed.
    Random {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
}

impl StateSpec {
    /// Builds the state on a `d`-dimensional site. `fallback_seed` is used by
    /// `random` without an explicit seed.
    pub fn build(&self, d: usize, field: &str, fallback_seed: u64) -> Result<DensityMatrix> {
        let qubit_only = |name: &str| {
            if d != 2 {
                Err(Error::config(field, format!("`{name}` needs local dimension 2, got {d}")))
            } else {
                Ok(())
            }
        };
        let bad = |e: Error| Error::config(field, e.to_string());
        match self {
            StateSpec::Zero => DensityMatrix::pure(&basis_ket(d, 0)).map_err(bad),
            StateSpec::One => DensityMatrix::pure(&basis_ket(d, 1)).map_err(bad),
            StateSpec::Plus | StateSpec::Minus => {
                let name = if *self == StateSpec::Plus { "plus" } else { "minus" };
                qubit_only(name)?;
                let s = std::f64::consts::FRAC_1_SQRT_2;
                let sign = if *self == StateSpec::Plus { 1.0 } else { -1.0 };
                DensityMatrix::pure(&[Complex64::new(s, 0.0), Complex64::new(sign * s, 0.0)]).map_err(bad)
            }
            StateSpec::Diag(p) => {
                if !(0.0..=1.0).contains(p) {
                    return Err(Error::config(format!("{field}.diag"), format!("{p} outside [0, 1]")));
                }
                let mut pops = vec![0.0; d];
                pops[0] = *p;
                pops[1] = 1.0 - p;
                DensityMatrix::from_populations(&pops).map_err(bad)
            }
            StateSpec::Populations(pops) => {
                if pops.len() != d {
                    return Err(Error::config(
                        format!("{field}.populations"),
                        format!("expected {d} entries, got {}", pops.len()),
                    ));
                }
                DensityMatrix::from_populations(pops)
                    .map_err(|e| Error::config(format!("{field}.populations"), e.to_string()))
            }
            StateSpec::Matrix(spec) => {
                let field = format!("{field}.matrix");
                let m = spec.to_matrix(&field)?;
                if m.rows() != d {
                    return Err(Error::config(field, format!("expected {d}x{d}, got {0}x{0}", m.rows())));
                }
                DensityMatrix::new(m).map_err(|e| Error::config(field, e.to_string()))
            }
            StateSpec::Mix { p, a, b } => {
                if !(0.0..=1.0).contains(p) {
                    return Err(Error::config(format!("{field}.mix.p"), format!("{p} outside [0, 1]")));
                }
                let a = a.build(d, &format!("{field}.mix.a"), fallback_seed)?;
                let b = b.build(d, &format!("{field}.mix.b"), fallback_seed.wrapping_add(1))?;
                DensityMatrix::mix(*p, &a, &b).map_err(bad)
            }
            StateSpec::Random { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(fallback_seed));
                Ok(random_density(&mut rng, d))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BathConfig {
    /// System site the bath collides with.
    pub site: usize,
    pub state: StateSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// How several baths collide with the system in one step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BathMode {
    /// One joint unitary couples every bath at once.
    #[default]
    Simultaneous,
    /// One collision per bath, in list order.
    Alternating,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialState {
    /// `|0…0⟩`
    #[default]
    Ground,
    /// Full system density matrix.
    Explicit(MatrixSpec),
    /// Random mixed system state.
    Random {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Analysis {
    /// One row describing the steady state.
    #[default]
    FixedPoint,
    /// One row per collision, `0..=steps`.
    Trajectory { steps: usize },
    /// Superoperator eigenvalues by decreasing modulus.
    Spectrum,
    /// Ground-state population of every site and bath, in chain order.
    Profile,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Solver {
    #[default]
    Spectral,
    Iterative,
    /// Both, reporting their trace distance.
    Both,
}

impl Solver {
    pub fn spectral(self) -> bool {
        matches!(self, Solver::Spectral | Solver::Both)
    }

    pub fn iterative(self) -> bool {
        matches!(self, Solver::Iterative | Solver::Both)
    }
}

/// Whether profile rows for baths show their prepared state or the state of
/// the outgoing bath qudit at the steady state.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BathColumns {
    #[default]
    Input,
    PostCollision,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Distance from the unit circle for peripheral eigenvalues.
    pub peripheral: f64,
    /// Stopping threshold on `‖ρ⁽ⁿ⁾ − ρ⁽ⁿ⁻¹⁾‖₁` for the iterative solver.
    pub iteration: f64,
    pub max_iter: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            peripheral: tol::PERIPHERAL,
            iteration: 1e-12,
            max_iter: 200_000,
        }
    }
}

/// Values for a sweep: an explicit list or an inclusive uniform grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SweepValues {
    Linspace { linspace: (f64, f64, usize) },
    List(Vec<serde_json::Value>),
}

impl SweepValues {
    pub fn values(&self) -> Vec<serde_json::Value> {
        match self {
            SweepValues::List(v) => v.clone(),
            SweepValues::Linspace { linspace: (a, b, n) } => {
                super::runner::linspace(*a, *b, *n).into_iter().map(serde_json::Value::from).collect()
            }
        }
    }
}

/// Parameter sweep stored alongside a config under the `sweep` key.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    /// Dot-separated path into the config, e.g. `baths.0.state.mix.p`.
    pub param: String,
    pub values: SweepValues,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub model: ModelKind,
    pub n: usize,
    #[serde(default = "default_local_dim")]
    pub d: usize,
    /// XXZ anisotropy.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(default)]
    pub couplings: Couplings,
    pub t: f64,
    pub baths: Vec<BathConfig>,
    #[serde(default)]
    pub bath_mode: BathMode,
    #[serde(default)]
    pub initial_state: InitialState,
    #[serde(default)]
    pub analysis: Analysis,
    #[serde(default)]
    pub solver: Solver,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default)]
    pub bath_columns: BathColumns,
    /// Default sweep for the `sweep` subcommand.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSpec>,
}

fn default_local_dim() -> usize {
    2
}

impl ScenarioConfig {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::config("<document>", e.to_string()))?;
        Self::from_value(value)
    }

    pub fn from_value(value: serde_json::Value) -> Result<Self> {
        serde_path_to_error::deserialize(value).map_err(|e| {
            let path = e.path().to_string();
            let field = if path == "." { "<document>".to_string() } else { path };
            Error::config(field, e.into_inner().to_string())
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json_str(&text)
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("configs serialize")
    }

    /// SHA-256 of the canonical JSON form.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_string(self).expect("configs serialize");
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }

    /// Seed for random bath `index` when it has none of its own.
    pub(crate) fn bath_seed(&self, index: usize) -> u64 {
        self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64 + 1)
    }

    pub(crate) fn initial_seed(&self) -> u64 {
        self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0xA5A5)
    }
}
