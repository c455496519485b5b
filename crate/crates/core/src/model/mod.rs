//! Core domain types and the bundled datasets.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

mod bundled;

pub use bundled::{bundled_milestones, bundled_systems, bundled_workload};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("{entity}: {field} {message}")]
    Invalid {
        entity: String,
        field: &'static str,
        message: String,
    },
}

impl ModelError {
    fn invalid(entity: impl Into<String>, field: &'static str, message: impl Into<String>) -> Self {
        ModelError::Invalid {
            entity: entity.into(),
            field,
            message: message.into(),
        }
    }
}

/// Space-time figure of merit: qubit count and T-equivalent gate count.
///
/// Ordering is componentwise, so two P-vectors may be incomparable
/// (`partial_cmp` returns `None`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPVector", into = "RawPVector")]
pub struct PVector {
    n_qubits: u64,
    n_gates: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPVector {
    n_qubits: u64,
    n_gates: f64,
}

impl TryFrom<RawPVector> for PVector {
    type Error = ModelError;

    fn try_from(raw: RawPVector) -> Result<Self, Self::Error> {
        PVector::new(raw.n_qubits, raw.n_gates)
    }
}

impl From<PVector> for RawPVector {
    fn from(p: PVector) -> Self {
        RawPVector {
            n_qubits: p.n_qubits,
            n_gates: p.n_gates,
        }
    }
}

impl PVector {
    pub fn new(n_qubits: u64, n_gates: f64) -> Result<Self, ModelError> {
        if n_qubits < 1 {
            return Err(ModelError::invalid("pvec", "n_qubits", "must be >= 1"));
        }
        if !(n_gates.is_finite() && n_gates >= 1.0) {
            return Err(ModelError::invalid(
                "pvec",
                "n_gates",
                format!("must be a finite value >= 1, got {n_gates}"),
            ));
        }
        Ok(PVector { n_qubits, n_gates })
    }

    pub fn n_qubits(&self) -> u64 {
        self.n_qubits
    }

    pub fn n_gates(&self) -> f64 {
        self.n_gates
    }

    /// `self <= other` componentwise.
    pub fn fits_within(&self, other: &PVector) -> bool {
        self.n_qubits <= other.n_qubits && self.n_gates <= other.n_gates
    }
}

impl PartialOrd for PVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.fits_within(other), other.fits_within(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for PVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:e})", self.n_qubits, self.n_gates)
    }
}

/// NISQ, early fault-tolerant, or fault-tolerant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SystemType {
    N,
    EF,
    F,
}

impl SystemType {
    pub fn as_str(self) -> &'static str {
        match self {
            SystemType::N => "N",
            SystemType::EF => "EF",
            SystemType::F => "F",
        }
    }
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Closed frequency interval in Hz.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClockRange {
    pub low: f64,
    pub high: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Technology {
    Superconducting,
    TrappedIon,
    NeutralAtom,
    Photonic,
    Other,
}

impl Technology {
    /// Typical logical clock speeds for the technology; `None` for `Other`.
    pub fn clock_range(self) -> Option<ClockRange> {
        let (low, high) = match self {
            Technology::Superconducting => (1e5, 1e7),
            Technology::TrappedIon => (1e3, 1e6),
            Technology::NeutralAtom => (1e1, 1e5),
            Technology::Photonic => (1e8, 1e10),
            Technology::Other => return None,
        };
        Some(ClockRange { low, high })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Technology::Superconducting => "superconducting",
            Technology::TrappedIon => "trapped-ion",
            Technology::NeutralAtom => "neutral-atom",
            Technology::Photonic => "photonic",
            Technology::Other => "other",
        }
    }
}

/// Milestone fields that can carry a provenance flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MilestoneField {
    Year,
    Name,
    DeclaredType,
    NPhysical,
    NLogical,
    ErrorRate,
    NGates,
    CircuitDepth,
    ClockHz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    #[default]
    VendorStated,
    ReportInferred,
}

/// One vendor roadmap entry as reported, plus provenance flags.
///
/// Fields absent from `provenance` are vendor-stated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Milestone {
    pub id: String,
    pub vendor: String,
    pub technology: Technology,
    pub year: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_type: Option<SystemType>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_physical: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_logical: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error_rate: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_gates: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuit_depth: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clock_hz: Option<f64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub provenance: BTreeMap<MilestoneField, Provenance>,
}

impl Milestone {
    pub fn new(id: &str, vendor: &str, technology: Technology, year: i32) -> Self {
        Milestone {
            id: id.to_string(),
            vendor: vendor.to_string(),
            technology,
            year,
            name: None,
            declared_type: None,
            n_physical: None,
            n_logical: None,
            error_rate: None,
            n_gates: None,
            circuit_depth: None,
            clock_hz: None,
            provenance: BTreeMap::new(),
        }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn typed(mut self, t: SystemType) -> Self {
        self.declared_type = Some(t);
        self
    }

    pub fn physical(mut self, n: u64) -> Self {
        self.n_physical = Some(n);
        self
    }

    pub fn logical(mut self, n: u64) -> Self {
        self.n_logical = Some(n);
        self
    }

    pub fn error(mut self, e: f64) -> Self {
        self.error_rate = Some(e);
        self
    }

    pub fn gates(mut self, g: f64) -> Self {
        self.n_gates = Some(g);
        self
    }

    pub fn depth(mut self, d: f64) -> Self {
        self.circuit_depth = Some(d);
        self
    }

    pub fn clock(mut self, hz: f64) -> Self {
        self.clock_hz = Some(hz);
        self
    }

    pub fn inferred(mut self, fields: &[MilestoneField]) -> Self {
        for f in fields {
            self.provenance.insert(*f, Provenance::ReportInferred);
        }
        self
    }

    pub fn provenance_of(&self, field: MilestoneField) -> Provenance {
        self.provenance.get(&field).copied().unwrap_or_default()
    }

    /// True when the milestone carries at least one gate-related metric.
    pub fn is_normalizable(&self) -> bool {
        self.error_rate.is_some() || self.n_gates.is_some() || self.circuit_depth.is_some()
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        let entity = format!("milestone '{}'", self.id);
        if self.id.is_empty() {
            return Err(ModelError::invalid(entity, "id", "must not be empty"));
        }
        if self.n_physical.is_none() && self.n_logical.is_none() {
            return Err(ModelError::invalid(
                entity,
                "n_physical",
                "or n_logical must be present",
            ));
        }
        if self.n_physical == Some(0) {
            return Err(ModelError::invalid(entity, "n_physical", "must be >= 1"));
        }
        if self.n_logical == Some(0) {
            return Err(ModelError::invalid(entity, "n_logical", "must be >= 1"));
        }
        if let Some(e) = self.error_rate {
            if !(e > 0.0 && e <= 1.0) {
                return Err(ModelError::invalid(
                    entity,
                    "error_rate",
                    format!("= {e} outside (0, 1]"),
                ));
            }
        }
        for (field, value) in [
            ("n_gates", self.n_gates),
            ("circuit_depth", self.circuit_depth),
            ("clock_hz", self.clock_hz),
        ] {
            if let Some(v) = value {
                if !(v.is_finite() && v > 0.0) {
                    return Err(ModelError::invalid(entity, field, format!("= {v} must be positive")));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DomainTag {
    CondensedMatter,
    Chemistry,
    Hep,
    Other,
}

/// A benchmark workload item.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Application {
    pub id: String,
    pub label: String,
    pub pvec: PVector,
    pub shots: u64,
    pub domain_tag: DomainTag,
}

impl Application {
    pub fn validate(&self) -> Result<(), ModelError> {
        if self.id.is_empty() {
            return Err(ModelError::invalid("application ''", "id", "must not be empty"));
        }
        if self.shots < 1 {
            return Err(ModelError::invalid(
                format!("application '{}'", self.id),
                "shots",
                "must be >= 1",
            ));
        }
        Ok(())
    }
}

/// A machine configuration for throughput analysis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSpec {
    pub id: String,
    pub max_gates: f64,
    pub clock_hz: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_qubits: Option<u64>,
}

impl SystemSpec {
    pub fn validate(&self) -> Result<(), ModelError> {
        let entity = format!("system '{}'", self.id);
        if self.id.is_empty() {
            return Err(ModelError::invalid(entity, "id", "must not be empty"));
        }
        if !(self.max_gates.is_finite() && self.max_gates >= 1.0) {
            return Err(ModelError::invalid(
                entity,
                "max_gates",
                format!("= {} must be >= 1", self.max_gates),
            ));
        }
        if !(self.clock_hz.is_finite() && self.clock_hz > 0.0) {
            return Err(ModelError::invalid(
                entity,
                "clock_hz",
                format!("= {} must be positive", self.clock_hz),
            ));
        }
        if self.max_qubits == Some(0) {
            return Err(ModelError::invalid(entity, "max_qubits", "must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UseCaseKind {
    GseeQpe,
    Observable,
    MultiConfigDynamics,
}

/// Shot counts per prototypical use case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingProfile {
    pub gsee_qpe: u64,
    pub observable: u64,
    pub multi_config_dynamics: u64,
}

impl Default for SamplingProfile {
    fn default() -> Self {
        SamplingProfile {
            gsee_qpe: 10,
            observable: 1_000,
            multi_config_dynamics: 100_000,
        }
    }
}

impl SamplingProfile {
    pub fn shots(&self, kind: UseCaseKind) -> u64 {
        match kind {
            UseCaseKind::GseeQpe => self.gsee_qpe,
            UseCaseKind::Observable => self.observable,
            UseCaseKind::MultiConfigDynamics => self.multi_config_dynamics,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(q: u64, g: f64) -> PVector {
        PVector::new(q, g).unwrap()
    }

    #[test]
    fn pvector_rejects_zero() {
        assert!(PVector::new(0, 10.0).is_err());
        assert!(PVector::new(1, 0.5).is_err());
        assert!(PVector::new(1, f64::NAN).is_err());
        assert!(PVector::new(1, 1.0).is_ok());
    }

    #[test]
    fn pvector_componentwise_order() {
        assert!(p(10, 100.0) <= p(10, 100.0));
        assert!(p(10, 100.0) < p(20, 100.0));
        assert_eq!(p(10, 1e6).partial_cmp(&p(20, 1e3)), None);
        assert!(!p(10, 1e6).fits_within(&p(20, 1e3)));
    }

    #[test]
    fn pvector_serde_validates() {
        let ok: PVector = serde_json::from_str(r#"{"n_qubits":5,"n_gates":100.0}"#).unwrap();
        assert_eq!(ok, p(5, 100.0));
        assert!(serde_json::from_str::<PVector>(r#"{"n_qubits":0,"n_gates":100.0}"#).is_err());
        assert!(serde_json::from_str::<PVector>(r#"{"n_qubits":1,"n_gates":1,"x":1}"#).is_err());
    }

    #[test]
    fn technology_clock_ranges() {
        let sc = Technology::Superconducting.clock_range().unwrap();
        assert_eq!((sc.low, sc.high), (1e5, 1e7));
        let na = Technology::NeutralAtom.clock_range().unwrap();
        assert_eq!((na.low, na.high), (1e1, 1e5));
        for t in [
            Technology::Superconducting,
            Technology::TrappedIon,
            Technology::NeutralAtom,
            Technology::Photonic,
        ] {
            let r = t.clock_range().unwrap();
            assert!(r.low <= r.high);
        }
        assert!(Technology::Other.clock_range().is_none());
    }

    #[test]
    fn sampling_profile_defaults() {
        let s = SamplingProfile::default();
        assert_eq!(s.shots(UseCaseKind::GseeQpe), 10);
        assert_eq!(s.shots(UseCaseKind::Observable), 1_000);
        assert_eq!(s.shots(UseCaseKind::MultiConfigDynamics), 100_000);
    }

    #[test]
    fn milestone_validation_names_field() {
        let m = Milestone::new("x", "V", Technology::Other, 2030).physical(5).error(2.0);
        let err = m.validate().unwrap_err().to_string();
        assert!(err.contains("error_rate"), "{err}");
        let m = Milestone::new("y", "V", Technology::Other, 2030).error(1e-3);
        assert!(m.validate().unwrap_err().to_string().contains("n_physical"));
    }

    fn arb_pvec() -> impl Strategy<Value = PVector> {
        (1u64..20, 1u32..20).prop_map(|(q, g)| p(q, g as f64))
    }

    proptest! {
        #[test]
        fn partial_order_laws(a in arb_pvec(), b in arb_pvec(), c in arb_pvec()) {
            prop_assert!(a <= a);
            if a <= b && b <= a {
                prop_assert_eq!(a, b);
            }
            if a <= b && b <= c {
                prop_assert!(a <= c);
            }
        }
    }
}
