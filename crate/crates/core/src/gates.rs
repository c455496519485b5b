//! T-equivalent gate counts and circuit fault rates.

use std::ops::Add;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// T gates per Toffoli gate.
pub const TOFFOLI_T_RATIO: f64 = 4.0;
/// T gates per continuous-angle rotation.
pub const ROTATION_T_RATIO: f64 = 100.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GateError {
    #[error("gate error rate {0} outside (0, 1]")]
    ErrorRateOutOfRange(f64),
    #[error("gate count {0} must be finite and non-negative")]
    InvalidGateCount(f64),
    #[error("no T-equivalent ratio for gate kind '{0}'")]
    UnsupportedGate(String),
}

/// Conversion ratios into T gates. Defaults follow the usual Toffoli = 4 T
/// and rotation = 100 T convention.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateRatios {
    pub toffoli: f64,
    pub rotation: f64,
}

impl Default for GateRatios {
    fn default() -> Self {
        GateRatios {
            toffoli: TOFFOLI_T_RATIO,
            rotation: ROTATION_T_RATIO,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateInventory {
    pub t_count: u64,
    pub toffoli_count: u64,
    pub rotation_count: u64,
}

impl GateInventory {
    pub fn new(t_count: u64, toffoli_count: u64, rotation_count: u64) -> Self {
        GateInventory {
            t_count,
            toffoli_count,
            rotation_count,
        }
    }

    /// Builds an inventory from `(gate kind, count)` pairs. Accepted kinds
    /// are `t`/`tdg`, `toffoli`/`ccx`/`ccz` and `rotation`/`rz`/`rx`/`ry`
    /// (case-insensitive); anything else, in particular multi-controlled
    /// gates beyond Toffoli, is rejected.
    pub fn from_named_counts<'a, I>(counts: I) -> Result<Self, GateError>
    where
        I: IntoIterator<Item = (&'a str, u64)>,
    {
        let mut inv = GateInventory::default();
        for (kind, n) in counts {
            match kind.to_ascii_lowercase().as_str() {
                "t" | "tdg" => inv.t_count += n,
                "toffoli" | "ccx" | "ccz" => inv.toffoli_count += n,
                "rotation" | "rz" | "rx" | "ry" => inv.rotation_count += n,
                _ => return Err(GateError::UnsupportedGate(kind.to_string())),
            }
        }
        Ok(inv)
    }
}

impl Add for GateInventory {
    type Output = GateInventory;

    fn add(self, rhs: Self) -> Self::Output {
        GateInventory {
            t_count: self.t_count + rhs.t_count,
            toffoli_count: self.toffoli_count + rhs.toffoli_count,
            rotation_count: self.rotation_count + rhs.rotation_count,
        }
    }
}

/// T-equivalent count with the default ratios.
pub fn t_equivalent(inv: GateInventory) -> f64 {
    t_equivalent_with(inv, GateRatios::default())
}

pub fn t_equivalent_with(inv: GateInventory, ratios: GateRatios) -> f64 {
    inv.t_count as f64 + ratios.toffoli * inv.toffoli_count as f64 + ratios.rotation * inv.rotation_count as f64
}

/// Overall circuit fault rate `n_gates * gate_error`.
pub fn circuit_fault_rate(n_gates: f64, gate_error: f64) -> Result<f64, GateError> {
    check_error_rate(gate_error)?;
    if !(n_gates.is_finite() && n_gates >= 0.0) {
        return Err(GateError::InvalidGateCount(n_gates));
    }
    Ok(n_gates * gate_error)
}

pub(crate) fn check_error_rate(e: f64) -> Result<(), GateError> {
    if e > 0.0 && e <= 1.0 {
        Ok(())
    } else {
        Err(GateError::ErrorRateOutOfRange(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn t_equivalent_examples() {
        assert_eq!(t_equivalent(GateInventory::new(0, 1, 0)), 4.0);
        assert_eq!(t_equivalent(GateInventory::new(5, 0, 0)), 5.0);
        // 10 + 3*4 + 2*100
        assert_eq!(t_equivalent(GateInventory::new(10, 3, 2)), 222.0);
    }

    #[test]
    fn custom_ratios() {
        let r = GateRatios {
            toffoli: 1.0,
            rotation: 50.0,
        };
        assert_eq!(t_equivalent_with(GateInventory::new(1, 1, 1), r), 52.0);
    }

    #[test]
    fn named_counts() {
        let inv = GateInventory::from_named_counts([("T", 3), ("ccx", 2), ("rz", 1), ("tdg", 1)]).unwrap();
        assert_eq!(inv, GateInventory::new(4, 2, 1));
        let err = GateInventory::from_named_counts([("c3x", 1)]).unwrap_err();
        assert_eq!(err, GateError::UnsupportedGate("c3x".into()));
    }

    #[test]
    fn fault_rate_examples() {
        assert!((circuit_fault_rate(1e3, 1e-3).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(circuit_fault_rate(1.0, 1e-6).unwrap(), 1e-6);
        assert!((circuit_fault_rate(2000.0, 1e-3).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn fault_rate_rejects_bad_error() {
        assert!(circuit_fault_rate(10.0, 0.0).is_err());
        assert!(circuit_fault_rate(10.0, 1.5).is_err());
        assert!(circuit_fault_rate(10.0, -1e-3).is_err());
        assert!(circuit_fault_rate(10.0, 1.0).is_ok());
        assert!(circuit_fault_rate(-1.0, 0.1).is_err());
    }

    fn arb_inv() -> impl Strategy<Value = GateInventory> {
        (0u64..1_000_000, 0u64..1_000_000, 0u64..1_000_000).prop_map(|(a, b, c)| GateInventory::new(a, b, c))
    }

    proptest! {
        #[test]
        fn t_equivalent_is_linear(a in arb_inv(), b in arb_inv()) {
            prop_assert_eq!(t_equivalent(a + b), t_equivalent(a) + t_equivalent(b));
        }

        #[test]
        fn fault_rate_monotone(g1 in 0.0f64..1e9, g2 in 0.0f64..1e9, e1 in 1e-9f64..1.0, e2 in 1e-9f64..1.0) {
            let (glo, ghi) = if g1 <= g2 { (g1, g2) } else { (g2, g1) };
            let (elo, ehi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
            prop_assert!(circuit_fault_rate(glo, elo).unwrap() <= circuit_fault_rate(ghi, elo).unwrap());
            prop_assert!(circuit_fault_rate(glo, elo).unwrap() <= circuit_fault_rate(glo, ehi).unwrap());
        }
    }
}
