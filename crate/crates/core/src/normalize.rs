//! Milestone normalization into P-vectors, capability frontiers and the
//! named regions of the (qubits, gates) plane.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{self, CodeModel};
use crate::mitigation::{self, ExtendedRegion, MitigationError};
use crate::model::{Milestone, PVector, SystemType};
use crate::numeric::snap;

/// Gate counts at or below this are NISQ when no type is declared.
pub const NISQ_MAX_GATES: f64 = 1e4;
/// Gate counts at or below this (and above [`NISQ_MAX_GATES`]) are early FTQC.
pub const EARLY_FT_MAX_GATES: f64 = 1e6;

pub const ADVANTAGE_MIN_QUBITS: u64 = 50;
pub const ADVANTAGE_MIN_GATES: f64 = 1e6;
pub const IMPRACTICAL_MIN_GATES: f64 = 1e14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NormalizeError {
    #[error("milestone '{0}' has no error rate, gate count or circuit depth")]
    NotNormalizable(String),
    #[error("milestone '{id}' is type {system_type} but has no {field}")]
    MissingQubitField {
        id: String,
        system_type: SystemType,
        field: &'static str,
    },
    #[error("milestone '{id}': {message}")]
    InvalidMetric { id: String, message: String },
    #[error("error rate {0} outside (0, 1]")]
    ErrorRateOutOfRange(f64),
    #[error("circuit depth {depth} and qubit count {n_qubits} must both be positive")]
    InvalidDepth { n_qubits: u64, depth: f64 },
    #[error("no normalized milestone dated on or before {0}")]
    EmptyHorizon(i32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GatesRule {
    VendorStated,
    FromError,
    FromDepth,
}

impl GatesRule {
    pub fn as_str(self) -> &'static str {
        match self {
            GatesRule::VendorStated => "vendor-stated",
            GatesRule::FromError => "from-error",
            GatesRule::FromDepth => "from-depth",
        }
    }
}

/// How a circuit depth turns into a gate count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DepthConvention {
    /// `n_Q * d_C / 2`
    #[default]
    HalfQubits,
    /// `3 n_Q / 4` gates per layer, `d_C` layers.
    DenseLayers,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct NormalizeOptions {
    pub depth_convention: DepthConvention,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalizedMilestone {
    pub source: Milestone,
    pub pvec: PVector,
    pub effective_type: SystemType,
    pub gates_rule: GatesRule,
}

pub fn gates_from_error(error_rate: f64) -> Result<f64, NormalizeError> {
    if error_rate > 0.0 && error_rate <= 1.0 {
        Ok(snap(1.0 / error_rate))
    } else {
        Err(NormalizeError::ErrorRateOutOfRange(error_rate))
    }
}

pub fn gates_from_depth(n_qubits: u64, depth: f64) -> Result<f64, NormalizeError> {
    gates_from_depth_with(n_qubits, depth, DepthConvention::HalfQubits)
}

pub fn gates_from_depth_with(n_qubits: u64, depth: f64, convention: DepthConvention) -> Result<f64, NormalizeError> {
    if n_qubits == 0 || !(depth.is_finite() && depth > 0.0) {
        return Err(NormalizeError::InvalidDepth { n_qubits, depth });
    }
    let q = n_qubits as f64;
    Ok(match convention {
        DepthConvention::HalfQubits => q * depth / 2.0,
        DepthConvention::DenseLayers => 0.75 * q * depth,
    })
}

/// Declared type wins; otherwise threshold on the gate count.
pub fn classify(n_gates: f64, declared: Option<SystemType>) -> SystemType {
    if let Some(t) = declared {
        return t;
    }
    if n_gates <= NISQ_MAX_GATES {
        SystemType::N
    } else if n_gates <= EARLY_FT_MAX_GATES {
        SystemType::EF
    } else {
        SystemType::F
    }
}

pub fn normalize_milestone(m: &Milestone) -> Result<NormalizedMilestone, NormalizeError> {
    normalize_milestone_with(m, NormalizeOptions::default())
}

pub fn normalize_milestone_with(m: &Milestone, opts: NormalizeOptions) -> Result<NormalizedMilestone, NormalizeError> {
    let (n_gates, rule) = if let Some(g) = m.n_gates {
        (g, GatesRule::VendorStated)
    } else if let Some(e) = m.error_rate {
        (gates_from_error(e)?, GatesRule::FromError)
    } else if let Some(depth) = m.circuit_depth {
        // Depth needs the qubit count the P-vector will use; without a
        // declared type, prefer logical qubits when they are reported.
        let n_q = match m.declared_type {
            Some(SystemType::N) => m.n_physical,
            Some(_) => m.n_logical,
            None => m.n_logical.or(m.n_physical),
        }
        .ok_or_else(|| missing_for_depth(m))?;
        (gates_from_depth_with(n_q, depth, opts.depth_convention)?, GatesRule::FromDepth)
    } else {
        return Err(NormalizeError::NotNormalizable(m.id.clone()));
    };

    let effective_type = classify(n_gates, m.declared_type);
    let (n_qubits, field) = match effective_type {
        SystemType::N => (m.n_physical, "n_physical"),
        SystemType::EF | SystemType::F => (m.n_logical, "n_logical"),
    };
    let n_qubits = n_qubits.ok_or_else(|| NormalizeError::MissingQubitField {
        id: m.id.clone(),
        system_type: effective_type,
        field,
    })?;
    let pvec = PVector::new(n_qubits, n_gates).map_err(|e| NormalizeError::InvalidMetric {
        id: m.id.clone(),
        message: e.to_string(),
    })?;
    Ok(NormalizedMilestone {
        source: m.clone(),
        pvec,
        effective_type,
        gates_rule: rule,
    })
}

fn missing_for_depth(m: &Milestone) -> NormalizeError {
    let (system_type, field) = match m.declared_type {
        Some(SystemType::N) => (SystemType::N, "n_physical"),
        Some(t) => (t, "n_logical"),
        None => (SystemType::N, "n_physical"),
    };
    NormalizeError::MissingQubitField {
        id: m.id.clone(),
        system_type,
        field,
    }
}

/// Normalizes every milestone that carries a gate metric, in input order.
/// Non-normalizable milestones are skipped; other failures are returned.
pub fn normalize_all(ms: &[Milestone], opts: NormalizeOptions) -> Result<Vec<NormalizedMilestone>, NormalizeError> {
    ms.iter()
        .filter(|m| m.is_normalizable())
        .map(|m| normalize_milestone_with(m, opts))
        .collect()
}

/// Pareto-maximal milestones dated on or before `horizon_year`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Frontier {
    pub horizon_year: i32,
    /// Sorted by qubit count ascending; gate counts then strictly descend.
    pub corners: Vec<PVector>,
}

impl Frontier {
    /// True when some corner covers `q` componentwise.
    pub fn contains(&self, q: &PVector) -> bool {
        self.corners.iter().any(|c| q.fits_within(c))
    }
}

/// Pareto-maximal subset of `points` under componentwise order, duplicates
/// collapsed, sorted by qubit count ascending.
pub fn pareto_front<I: IntoIterator<Item = PVector>>(points: I) -> Vec<PVector> {
    let mut pts: Vec<PVector> = points.into_iter().collect();
    pts.sort_by(|a, b| {
        b.n_qubits()
            .cmp(&a.n_qubits())
            .then(b.n_gates().total_cmp(&a.n_gates()))
    });
    let mut front = Vec::new();
    let mut best_gates = f64::NEG_INFINITY;
    for p in pts {
        if p.n_gates() > best_gates {
            best_gates = p.n_gates();
            front.push(p);
        }
    }
    front.reverse();
    front
}

pub fn frontier(ms: &[NormalizedMilestone], horizon_year: i32) -> Result<Frontier, NormalizeError> {
    let corners = pareto_front(ms.iter().filter(|m| m.source.year <= horizon_year).map(|m| m.pvec));
    if corners.is_empty() {
        return Err(NormalizeError::EmptyHorizon(horizon_year));
    }
    Ok(Frontier { horizon_year, corners })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegionKind {
    ClassicallySimulable,
    Advantage,
    Impractical,
}

impl RegionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RegionKind::ClassicallySimulable => "classically-simulable",
            RegionKind::Advantage => "advantage",
            RegionKind::Impractical => "impractical",
        }
    }
}

/// Axis-aligned bounds of a plot region. The simulable region is the
/// complement of the advantage box below the impractical floor; its bounds
/// describe the enclosing band.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionAnnotation {
    pub kind: RegionKind,
    pub label: &'static str,
    pub min_qubits: u64,
    pub min_gates: f64,
    pub max_gates: Option<f64>,
}

pub fn region_annotations() -> Vec<RegionAnnotation> {
    vec![
        RegionAnnotation {
            kind: RegionKind::ClassicallySimulable,
            label: "classically simulable",
            min_qubits: 1,
            min_gates: 1.0,
            max_gates: Some(IMPRACTICAL_MIN_GATES),
        },
        RegionAnnotation {
            kind: RegionKind::Advantage,
            label: "scientific quantum advantage",
            min_qubits: ADVANTAGE_MIN_QUBITS,
            min_gates: ADVANTAGE_MIN_GATES,
            max_gates: Some(IMPRACTICAL_MIN_GATES),
        },
        RegionAnnotation {
            kind: RegionKind::Impractical,
            label: "impractical execution time",
            min_qubits: 1,
            min_gates: IMPRACTICAL_MIN_GATES,
            max_gates: None,
        },
    ]
}

pub fn classify_region(p: &PVector) -> RegionKind {
    if p.n_gates() > IMPRACTICAL_MIN_GATES {
        RegionKind::Impractical
    } else if p.n_qubits() >= ADVANTAGE_MIN_QUBITS && p.n_gates() >= ADVANTAGE_MIN_GATES {
        RegionKind::Advantage
    } else {
        RegionKind::ClassicallySimulable
    }
}

/// Error-correction scheme assumed for a vendor's fault-tolerant
/// milestones when sketching extended regions.
pub fn assumed_code(m: &Milestone) -> CodeModel {
    let vendor = m.vendor.to_ascii_lowercase();
    if vendor.starts_with("alice") {
        return CodeModel::cat_default();
    }
    let code = if vendor.starts_with("ibm") {
        CodeModel::qldpc(1e-3)
    } else if vendor.starts_with("google") && m.year > 2030 {
        CodeModel::surface(5e-4)
    } else {
        CodeModel::surface(1e-3)
    };
    code.expect("fixed parameters are valid")
}

/// Extended-capability regions for a normalized milestone: QEM doubling
/// for NISQ, both QEC + QEM directions otherwise. The code distance is the
/// smallest one reaching a logical error of `1 / n_G`; when only logical
/// qubits are reported, the physical count is inferred at that distance.
pub fn extended_regions(
    nm: &NormalizedMilestone,
    code: CodeModel,
    overhead: f64,
) -> Result<Vec<ExtendedRegion>, MitigationError> {
    if nm.effective_type == SystemType::N {
        return Ok(vec![mitigation::nisq_extended(nm.pvec)]);
    }
    let target = (1.0 / nm.pvec.n_gates()).min(0.5);
    let d = codes::min_distance(code, target)?;
    let n_physical = match nm.source.n_physical {
        Some(n) => n,
        None => codes::infer_physical_count(nm.pvec.n_qubits(), code, target, overhead)?,
    };
    let ext = mitigation::ftqc_extended_with_overhead(nm.pvec, code, d, n_physical, overhead)?;
    let mut out = Vec::with_capacity(2);
    if let Ok(q) = ext.qubits {
        out.push(q);
    }
    out.push(ext.gates);
    Ok(out)
}
