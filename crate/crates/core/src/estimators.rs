//! Trotter resource estimate for collective neutrino oscillations.
//!
//! Assumes one qubit per neutrino mode and a unit big-O constant, so the
//! numbers are a conservative bound rather than a compiled circuit count.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::PVector;
use crate::numeric::ceil_tol;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EstimatorError {
    #[error("{name} must be finite and positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("n_modes must be >= 1")]
    NoModes,
    #[error("estimate overflows: {0}")]
    Overflow(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NeutrinoParams {
    pub n_modes: u64,
    pub error_budget: f64,
    pub coupling: f64,
    pub sim_time: f64,
    pub freq_spread: f64,
    pub constant: f64,
}

impl NeutrinoParams {
    /// Defaults at unit coupling: `eps = 0.01`, `t = 1/mu`,
    /// `delta_omega = 100 mu`, `c = 1`.
    pub fn new(n_modes: u64) -> Self {
        Self::with_coupling(n_modes, 1.0)
    }

    pub fn with_coupling(n_modes: u64, coupling: f64) -> Self {
        NeutrinoParams {
            n_modes,
            error_budget: 0.01,
            coupling,
            sim_time: 1.0 / coupling,
            freq_spread: 100.0 * coupling,
            constant: 1.0,
        }
    }

    /// All reals must be positive. The error budget is not capped at 1 so
    /// that degenerate single-step cases can be expressed.
    pub fn validate(&self) -> Result<(), EstimatorError> {
        if self.n_modes == 0 {
            return Err(EstimatorError::NoModes);
        }
        for (name, value) in [
            ("error_budget", self.error_budget),
            ("coupling", self.coupling),
            ("sim_time", self.sim_time),
            ("freq_spread", self.freq_spread),
            ("constant", self.constant),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(EstimatorError::NonPositive { name, value });
            }
        }
        Ok(())
    }
}

/// `ceil(c t^2 mu N (delta_omega + mu) / eps)`.
pub fn trotter_steps(p: &NeutrinoParams) -> Result<u64, EstimatorError> {
    p.validate()?;
    let raw = p.constant * p.sim_time * p.sim_time * p.coupling * p.n_modes as f64 * (p.freq_spread + p.coupling)
        / p.error_budget;
    let steps = ceil_tol(raw);
    if !steps.is_finite() || steps >= u64::MAX as f64 {
        return Err(EstimatorError::Overflow(steps));
    }
    Ok((steps as u64).max(1))
}

/// T gates per Trotter step, `50 (N + N(N-1)/2) = 25 N (N+1)`.
pub fn gates_per_step(n_modes: u64) -> u64 {
    25 * n_modes * (n_modes + 1)
}

pub fn neutrino_pvector(p: &NeutrinoParams) -> Result<PVector, EstimatorError> {
    let steps = trotter_steps(p)?;
    let gates = steps as f64 * gates_per_step(p.n_modes) as f64;
    PVector::new(p.n_modes, gates).map_err(|_| EstimatorError::Overflow(gates))
}
