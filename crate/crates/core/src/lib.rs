//! Gate-set calibration toolkit.
//!
//! Constructs measurement sequences that extract every coherent error
//! generator of a multi-qubit gate set, and iteratively nulls those errors
//! against simulated backends.
//!
//! The crate is organized around five subsystems:
//!
//! - [`linalg`], [`pauli`], [`metrics`]: complex dense linear algebra,
//!   Pauli bases, propagators, fidelity/leakage metrics and pivoted QR.
//! - [`errmodel`], [`channel`]: coherent error operators, sequence
//!   unitaries, measurement responses (with SPAM extensions), Pauli
//!   channels and closed-form error bounds.
//! - [`synth`], [`table`]: candidate sequence enumeration, sensitivity
//!   matrices, rank-revealing subset selection and table emission.
//! - [`engine`], [`synthetic`]: residuals, finite-difference Jacobians,
//!   the bounded Levenberg-Marquardt loop and calibration campaigns.
//! - [`stq`]: pulse-level simulation of two exchange-coupled
//!   singlet-triplet qubits.

pub mod channel;
pub mod engine;
pub mod errmodel;
pub mod error;
pub mod gateset;
pub mod linalg;
pub mod metrics;
pub mod pauli;
pub mod plan_io;
pub mod reference;
pub mod stq;
pub mod synth;
pub mod synthetic;
pub mod table;

pub use error::GscError;
pub type Result<T> = std::result::Result<T, GscError>;
