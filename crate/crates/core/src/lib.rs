//! Repeated-interaction ("collision model") dynamics of spin networks
//! coupled to ancilla baths.
//!
//! The crate is organized bottom-up:
//!
//! - [`qmath`]: dense complex matrices, partial traces, Hermitian
//!   eigendecomposition, entropy and concurrence.
//! - [`network`]: swap-network and XXZ Hamiltonians on coupling graphs, bath
//!   couplings and the excitation-number observable.
//! - [`collision`]: collision channels, their Kraus and superoperator forms,
//!   and sequences with imperfectly prepared controllers.
//! - [`convergence`]: relaxing checks, fixed-point solvers, convex-mixture
//!   and forgetting diagnostics.
//! - [`scenario`]: JSON scenario configs, parameter sweeps and CSV output,
//!   driven by the `mediahom` binary.

pub mod collision;
pub mod convergence;
mod error;
pub mod network;
pub mod qmath;
pub mod scenario;
pub mod tol;

pub use error::{Error, Result};
pub use num_complex::Complex64;
