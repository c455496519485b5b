//! PEC sampling overhead and the extended-capability regions obtained by
//! adding error mitigation on top of a machine's nominal P-vector.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{self, CodeError, CodeModel};
use crate::gates::{check_error_rate, GateError};
use crate::model::PVector;

/// Sampling-overhead cap for combined QEC + QEM.
pub const QEC_QEM_MAX_OVERHEAD: f64 = 100.0;

/// Distance change QEM buys on top of QEC at fixed logical error.
pub const DISTANCE_SHIFT: u32 = 5;

/// Default PEC sampling-overhead cap, `e^8`.
pub fn default_pec_cap() -> f64 {
    8f64.exp()
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MitigationError {
    #[error("fault rate {0} must be finite and non-negative")]
    InvalidFaultRate(f64),
    #[error("sampling overhead cap {0} must be >= 1")]
    InvalidOverheadCap(f64),
    #[error("distance {0} too small to reduce by {DISTANCE_SHIFT}")]
    DistanceTooSmall(u32),
    #[error(transparent)]
    Gate(#[from] GateError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PecBudget {
    pub max_sampling_overhead: f64,
}

impl Default for PecBudget {
    fn default() -> Self {
        PecBudget {
            max_sampling_overhead: default_pec_cap(),
        }
    }
}

impl PecBudget {
    pub fn new(max_sampling_overhead: f64) -> Result<Self, MitigationError> {
        if max_sampling_overhead.is_finite() && max_sampling_overhead >= 1.0 {
            Ok(PecBudget { max_sampling_overhead })
        } else {
            Err(MitigationError::InvalidOverheadCap(max_sampling_overhead))
        }
    }

    pub fn gate_budget(&self, gate_error: f64) -> Result<f64, MitigationError> {
        pec_gate_budget(self.max_sampling_overhead, gate_error)
    }
}

/// PEC sampling overhead `exp(4 * fault_rate)`.
pub fn pec_overhead(fault_rate: f64) -> Result<f64, MitigationError> {
    if !(fault_rate.is_finite() && fault_rate >= 0.0) {
        return Err(MitigationError::InvalidFaultRate(fault_rate));
    }
    Ok((4.0 * fault_rate).exp())
}

/// Gates runnable under PEC with the given overhead cap: `ln(cap) / (4 eps)`.
pub fn pec_gate_budget(overhead_cap: f64, gate_error: f64) -> Result<f64, MitigationError> {
    if !(overhead_cap.is_finite() && overhead_cap >= 1.0) {
        return Err(MitigationError::InvalidOverheadCap(overhead_cap));
    }
    check_error_rate(gate_error)?;
    Ok(overhead_cap.ln() / (4.0 * gate_error))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mechanism {
    NisqQem,
    FtqcQemQubits,
    FtqcQemGates,
}

impl Mechanism {
    pub fn as_str(self) -> &'static str {
        match self {
            Mechanism::NisqQem => "nisq-qem",
            Mechanism::FtqcQemQubits => "ftqc-qem-qubits",
            Mechanism::FtqcQemGates => "ftqc-qem-gates",
        }
    }
}

/// A base P-vector and what it extends to under a mitigation mechanism.
/// `sampling_overhead` is the cost attached to using the extension; it is
/// not folded into shot counts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtendedRegion {
    pub base: PVector,
    pub extended: PVector,
    pub mechanism: Mechanism,
    pub sampling_overhead: f64,
}

/// NISQ + QEM: at most twice the gates, no change in qubits.
pub fn nisq_extended(base: PVector) -> ExtendedRegion {
    let extended = PVector::new(base.n_qubits(), 2.0 * base.n_gates()).expect("doubling keeps n_gates >= 1");
    ExtendedRegion {
        base,
        extended,
        mechanism: Mechanism::NisqQem,
        sampling_overhead: default_pec_cap(),
    }
}

/// Both QEC + QEM extensions of a fault-tolerant milestone.
#[derive(Debug, Clone, PartialEq)]
pub struct FtqcExtension {
    /// More logical qubits at distance `d - 5`; fails for `d <= 5`.
    pub qubits: Result<ExtendedRegion, MitigationError>,
    /// More gates at the logical error of distance `d + 5`.
    pub gates: ExtendedRegion,
}

pub fn ftqc_extended(
    base: PVector,
    code: CodeModel,
    d: u32,
    n_physical: u64,
) -> Result<FtqcExtension, MitigationError> {
    ftqc_extended_with_overhead(base, code, d, n_physical, 1.0)
}

/// As [`ftqc_extended`] with an explicit routing/factory overhead factor
/// for the qubit recount. An even reduced distance is rounded up to the
/// next odd value, which never overstates the recount.
pub fn ftqc_extended_with_overhead(
    base: PVector,
    code: CodeModel,
    d: u32,
    n_physical: u64,
    overhead: f64,
) -> Result<FtqcExtension, MitigationError> {
    if overhead.is_nan() || overhead < 1.0 {
        return Err(CodeError::InvalidOverhead(overhead).into());
    }
    let improved_error = codes::logical_error(code, d + DISTANCE_SHIFT)?;
    let gates_hat = (1.0 / improved_error).max(base.n_gates());
    let gates = ExtendedRegion {
        base,
        extended: PVector::new(base.n_qubits(), gates_hat).expect("max with a valid base"),
        mechanism: Mechanism::FtqcQemGates,
        sampling_overhead: QEC_QEM_MAX_OVERHEAD,
    };

    let qubits = if d <= DISTANCE_SHIFT {
        Err(MitigationError::DistanceTooSmall(d))
    } else {
        let mut reduced = d - DISTANCE_SHIFT;
        if reduced.is_multiple_of(2) {
            reduced += 1;
        }
        codes::logical_count_at(n_physical, code, reduced, overhead)
            .map_err(MitigationError::from)
            .map(|n_hat| ExtendedRegion {
                base,
                extended: PVector::new(n_hat.max(base.n_qubits()), base.n_gates()).expect("max with a valid base"),
                mechanism: Mechanism::FtqcQemQubits,
                sampling_overhead: QEC_QEM_MAX_OVERHEAD,
            })
    };

    Ok(FtqcExtension { qubits, gates })
}
