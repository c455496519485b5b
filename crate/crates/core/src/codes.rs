//! Logical-error and qubit-overhead models for the surface code, the
//! cat-qubit repetition code and a qLDPC code modelled as a surface code
//! with a reduced physical-to-logical ratio.
//!
//! Formula evaluation accepts any distance `d >= 1`, including even ones.
//! The solvers ([`min_distance`], [`infer_logical_count`],
//! [`infer_physical_count`]) only return odd distances `>= 3`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::{ceil_tol, floor_tol, le_tol};

/// Largest distance the solvers try before giving up.
pub const MAX_DISTANCE: u32 = 1001;

/// Default qLDPC physical-to-logical improvement over the surface code.
pub const QLDPC_RATIO_DIVISOR: f64 = 10.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CodeError {
    #[error("physical error {physical_error} is at or above the surface code threshold (100*eps_P >= 1)")]
    AboveThreshold { physical_error: f64 },
    #[error("cat code suppression base {base} >= 1, the code does not suppress errors")]
    Divergent { base: f64 },
    #[error("no odd distance <= {cap} reaches logical error {target}")]
    NoConvergence { target: f64, cap: u32 },
    #[error("code distance must be >= 1, got {0}")]
    InvalidDistance(u32),
    #[error("target logical error {0} outside (0, 1)")]
    InvalidTarget(f64),
    #[error("overhead factor {0} must be >= 1")]
    InvalidOverhead(f64),
    #[error("invalid code parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceCodeParams {
    pub physical_error: f64,
}

impl SurfaceCodeParams {
    pub fn new(physical_error: f64) -> Result<Self, CodeError> {
        if physical_error > 0.0 && physical_error < 1.0 {
            Ok(SurfaceCodeParams { physical_error })
        } else {
            Err(CodeError::InvalidParameter(format!(
                "physical error {physical_error} outside (0, 1)"
            )))
        }
    }

    fn base(&self) -> f64 {
        100.0 * self.physical_error
    }

    pub fn below_threshold(&self) -> bool {
        self.base() < 1.0
    }
}

/// Cat-qubit parameters: mean photon number and single-photon loss to
/// two-photon dissipation ratio `k1/k2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CatCodeParams {
    pub nbar: f64,
    pub loss_ratio: f64,
}

impl Default for CatCodeParams {
    fn default() -> Self {
        CatCodeParams {
            nbar: 11.0,
            loss_ratio: 1e-4,
        }
    }
}

impl CatCodeParams {
    /// `nbar^0.86 * (k1/k2) / 0.013`, the per-order phase-flip suppression.
    pub fn suppression_base(&self) -> f64 {
        self.nbar.powf(0.86) * self.loss_ratio / 0.013
    }

    /// Per-distance bit-flip contribution `exp(-2 nbar)`.
    pub fn floor_per_distance(&self) -> f64 {
        (-2.0 * self.nbar).exp()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CodeModel {
    Surface(SurfaceCodeParams),
    RepetitionCat(CatCodeParams),
    QldpcScaled {
        surface: SurfaceCodeParams,
        ratio_divisor: f64,
    },
}

impl CodeModel {
    pub fn surface(physical_error: f64) -> Result<Self, CodeError> {
        Ok(CodeModel::Surface(SurfaceCodeParams::new(physical_error)?))
    }

    pub fn cat_default() -> Self {
        CodeModel::RepetitionCat(CatCodeParams::default())
    }

    /// qLDPC with the default 10x ratio reduction.
    pub fn qldpc(physical_error: f64) -> Result<Self, CodeError> {
        Self::qldpc_with_divisor(physical_error, QLDPC_RATIO_DIVISOR)
    }

    pub fn qldpc_with_divisor(physical_error: f64, ratio_divisor: f64) -> Result<Self, CodeError> {
        if !(ratio_divisor.is_finite() && ratio_divisor > 0.0) {
            return Err(CodeError::InvalidParameter(format!(
                "ratio divisor {ratio_divisor} must be positive"
            )));
        }
        Ok(CodeModel::QldpcScaled {
            surface: SurfaceCodeParams::new(physical_error)?,
            ratio_divisor,
        })
    }
}

fn half_exponent(d: u32) -> f64 {
    (f64::from(d) + 1.0) / 2.0
}

/// `0.1 * (100 eps_P)^((d+1)/2)`.
pub fn surface_logical_error(p: SurfaceCodeParams, d: u32) -> Result<f64, CodeError> {
    if d < 1 {
        return Err(CodeError::InvalidDistance(d));
    }
    if !p.below_threshold() {
        return Err(CodeError::AboveThreshold {
            physical_error: p.physical_error,
        });
    }
    Ok(0.1 * p.base().powf(half_exponent(d)))
}

/// Logical phase-flip rate of a `[[2d-1, 1, d]]` repetition code of cat
/// qubits: `0.056 * base^((d+1)/2) + (d-1) exp(-2 nbar)`. The logical
/// bit-flip rate is assumed negligible.
pub fn cat_logical_error(p: CatCodeParams, d: u32) -> Result<f64, CodeError> {
    if d < 1 {
        return Err(CodeError::InvalidDistance(d));
    }
    let base = p.suppression_base();
    if base.is_nan() || base >= 1.0 {
        return Err(CodeError::Divergent { base });
    }
    Ok(0.056 * base.powf(half_exponent(d)) + f64::from(d - 1) * p.floor_per_distance())
}

pub fn logical_error(code: CodeModel, d: u32) -> Result<f64, CodeError> {
    match code {
        CodeModel::Surface(p) | CodeModel::QldpcScaled { surface: p, .. } => surface_logical_error(p, d),
        CodeModel::RepetitionCat(p) => cat_logical_error(p, d),
    }
}

pub fn physical_per_logical(code: CodeModel, d: u32) -> Result<f64, CodeError> {
    if d < 1 {
        return Err(CodeError::InvalidDistance(d));
    }
    let d = f64::from(d);
    let surface = 2.0 * d * d - 1.0;
    Ok(match code {
        CodeModel::Surface(_) => surface,
        CodeModel::RepetitionCat(_) => 2.0 * d - 1.0,
        CodeModel::QldpcScaled { ratio_divisor, .. } => surface / ratio_divisor,
    })
}

/// Smallest odd distance `d >= 3` with `logical_error(code, d) <= target`.
pub fn min_distance(code: CodeModel, target: f64) -> Result<u32, CodeError> {
    if !(target > 0.0 && target < 1.0) {
        return Err(CodeError::InvalidTarget(target));
    }
    let no_conv = CodeError::NoConvergence {
        target,
        cap: MAX_DISTANCE,
    };
    match code {
        CodeModel::Surface(p) | CodeModel::QldpcScaled { surface: p, .. } => {
            if !p.below_threshold() {
                return Err(no_conv);
            }
            surface_min_distance(p, target).ok_or(no_conv)
        }
        CodeModel::RepetitionCat(p) => {
            let base = p.suppression_base();
            if base.is_nan() || base >= 1.0 {
                return Err(no_conv);
            }
            cat_min_distance(p, target).ok_or(no_conv)
        }
    }
}

// Inverts 0.1 * b^k <= target for k = (d+1)/2, then nudges by +-2 so the
// answer agrees with direct evaluation under round-off.
fn surface_min_distance(p: SurfaceCodeParams, target: f64) -> Option<u32> {
    let meets = |d: u32| le_tol(0.1 * p.base().powf(half_exponent(d)), target);
    let k = ((10.0 * target).ln() / p.base().ln()).max(0.0);
    let guess = 2.0 * k.ceil() - 1.0;
    if !guess.is_finite() || guess > f64::from(MAX_DISTANCE) + 2.0 {
        return None;
    }
    let mut d = (guess as u32).max(3);
    if d.is_multiple_of(2) {
        d += 1;
    }
    while d > 3 && meets(d - 2) {
        d -= 2;
    }
    while !meets(d) {
        d += 2;
        if d > MAX_DISTANCE {
            return None;
        }
    }
    (d <= MAX_DISTANCE).then_some(d)
}

// The bit-flip term grows linearly in d, so once it alone exceeds the
// target no larger distance can succeed.
fn cat_min_distance(p: CatCodeParams, target: f64) -> Option<u32> {
    let floor = p.floor_per_distance();
    for d in (3..=MAX_DISTANCE).step_by(2) {
        if !le_tol(f64::from(d - 1) * floor, target) {
            return None;
        }
        if le_tol(cat_logical_error(p, d).ok()?, target) {
            return Some(d);
        }
    }
    None
}

fn check_overhead(overhead: f64) -> Result<(), CodeError> {
    if overhead.is_finite() && overhead >= 1.0 {
        Ok(())
    } else {
        Err(CodeError::InvalidOverhead(overhead))
    }
}

/// Logical qubits obtainable from `n_physical` at the distance needed for
/// `target`, with `overhead` >= 1 physical qubits per data-patch qubit.
pub fn infer_logical_count(n_physical: u64, code: CodeModel, target: f64, overhead: f64) -> Result<u64, CodeError> {
    check_overhead(overhead)?;
    let d = min_distance(code, target)?;
    logical_count_at(n_physical, code, d, overhead)
}

pub(crate) fn logical_count_at(n_physical: u64, code: CodeModel, d: u32, overhead: f64) -> Result<u64, CodeError> {
    let per = physical_per_logical(code, d)?;
    Ok(floor_tol(n_physical as f64 / (overhead * per)) as u64)
}

/// Physical qubits needed for `n_logical` logical qubits at the distance
/// needed for `target`.
pub fn infer_physical_count(n_logical: u64, code: CodeModel, target: f64, overhead: f64) -> Result<u64, CodeError> {
    check_overhead(overhead)?;
    let d = min_distance(code, target)?;
    let per = physical_per_logical(code, d)?;
    Ok(ceil_tol(n_logical as f64 * overhead * per) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn surface(e: f64) -> CodeModel {
        CodeModel::surface(e).unwrap()
    }

    #[test]
    fn surface_error_examples() {
        let p = SurfaceCodeParams::new(1e-3).unwrap();
        assert_relative_eq!(surface_logical_error(p, 9).unwrap(), 1e-6, max_relative = 1e-12);
        assert_relative_eq!(surface_logical_error(p, 1).unwrap(), 1e-2, max_relative = 1e-12);
        let p = SurfaceCodeParams::new(5e-4).unwrap();
        assert_relative_eq!(surface_logical_error(p, 7).unwrap(), 6.25e-7, max_relative = 1e-12);
    }

    #[test]
    fn surface_above_threshold() {
        let p = SurfaceCodeParams::new(1e-2).unwrap();
        assert!(matches!(surface_logical_error(p, 3), Err(CodeError::AboveThreshold { .. })));
        assert!(matches!(
            surface_logical_error(SurfaceCodeParams::new(1e-3).unwrap(), 0),
            Err(CodeError::InvalidDistance(0))
        ));
    }

    #[test]
    fn cat_error_examples() {
        let p = CatCodeParams::default();
        assert_relative_eq!(cat_logical_error(p, 7).unwrap(), 7.5123e-7, max_relative = 1e-4);
        assert_relative_eq!(cat_logical_error(p, 1).unwrap(), 3.3872e-3, max_relative = 1e-4);
        assert_relative_eq!(cat_logical_error(p, 25).unwrap(), 6.6947e-9, max_relative = 1e-4);
        // d=1 has no bit-flip floor
        assert_relative_eq!(
            cat_logical_error(p, 1).unwrap(),
            0.056 * p.suppression_base(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn cat_divergent() {
        let p = CatCodeParams {
            nbar: 11.0,
            loss_ratio: 0.01,
        };
        assert!(matches!(cat_logical_error(p, 3), Err(CodeError::Divergent { .. })));
        assert!(matches!(
            min_distance(CodeModel::RepetitionCat(p), 1e-6),
            Err(CodeError::NoConvergence { .. })
        ));
    }

    #[test]
    fn cat_decreases_until_floor_dominates() {
        let p = CatCodeParams::default();
        let errs: Vec<f64> = (1..=21).step_by(2).map(|d| cat_logical_error(p, d).unwrap()).collect();
        // odd d = 1..13 decreasing, 15.. increasing
        for w in errs[..7].windows(2) {
            assert!(w[1] < w[0]);
        }
        for w in errs[6..].windows(2) {
            assert!(w[1] > w[0]);
        }
    }

    #[test]
    fn physical_per_logical_examples() {
        assert_eq!(physical_per_logical(surface(1e-3), 5).unwrap(), 49.0);
        assert_eq!(physical_per_logical(CodeModel::cat_default(), 1).unwrap(), 1.0);
        assert_relative_eq!(
            physical_per_logical(CodeModel::qldpc(1e-3).unwrap(), 13).unwrap(),
            33.7,
            max_relative = 1e-15
        );
        assert!(physical_per_logical(surface(1e-3), 0).is_err());
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(min_distance(surface(1e-3), 1e-6).unwrap(), 9);
        assert_eq!(min_distance(surface(5e-4), 1e-6).unwrap(), 7);
        assert!(matches!(
            min_distance(surface(1e-2), 1e-6),
            Err(CodeError::NoConvergence { .. })
        ));
        assert_eq!(min_distance(surface(1e-3), 0.5).unwrap(), 3);
        assert_eq!(min_distance(CodeModel::cat_default(), 1e-6).unwrap(), 7);
        assert!(matches!(min_distance(surface(1e-3), 0.0), Err(CodeError::InvalidTarget(_))));
        assert!(matches!(min_distance(surface(1e-3), 1.0), Err(CodeError::InvalidTarget(_))));
    }

    #[test]
    fn min_distance_cap() {
        // 100 * eps = 0.999 needs an enormous distance
        assert!(matches!(
            min_distance(surface(9.99e-3), 1e-12),
            Err(CodeError::NoConvergence { cap: MAX_DISTANCE, .. })
        ));
        // below the cat bit-flip floor
        assert!(matches!(
            min_distance(CodeModel::cat_default(), 1e-10),
            Err(CodeError::NoConvergence { .. })
        ));
    }

    #[test]
    fn infer_examples() {
        let s = surface(1e-3);
        assert_eq!(infer_logical_count(1_000, s, 1e-6, 1.0).unwrap(), 6);
        assert_eq!(infer_logical_count(161, s, 1e-6, 1.0).unwrap(), 1);
        assert_eq!(infer_logical_count(10_000, s, 1e-6, 1.0).unwrap(), 62);
        assert_eq!(infer_physical_count(1, s, 1e-6, 1.0).unwrap(), 161);
        let q = CodeModel::qldpc(1e-3).unwrap();
        assert_eq!(infer_physical_count(200, q, 1e-8, 1.0).unwrap(), 6_740);
        assert_eq!(infer_physical_count(100, CodeModel::cat_default(), 1e-6, 1.0).unwrap(), 1_300);
        assert!(matches!(
            infer_logical_count(100, s, 1e-6, 0.5),
            Err(CodeError::InvalidOverhead(_))
        ));
        assert!(matches!(
            infer_physical_count(100, surface(1e-2), 1e-6, 1.0),
            Err(CodeError::NoConvergence { .. })
        ));
    }

    #[test]
    fn qldpc_serde_shape() {
        let q = CodeModel::qldpc(1e-3).unwrap();
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"{"kind":"qldpc-scaled","surface":{"physical_error":0.001},"ratio_divisor":10.0}"#);
        assert_eq!(serde_json::from_str::<CodeModel>(&json).unwrap(), q);
    }

    proptest! {
        #[test]
        fn surface_strictly_decreasing(eps in 1e-5f64..9e-3, d in 1u32..100) {
            let p = SurfaceCodeParams::new(eps).unwrap();
            prop_assert!(surface_logical_error(p, d + 1).unwrap() < surface_logical_error(p, d).unwrap());
        }

        #[test]
        fn min_distance_is_minimal(eps in 1e-5f64..5e-3, log_t in -12.0f64..-2.0) {
            let target = 10f64.powf(log_t);
            let code = surface(eps);
            let d = min_distance(code, target).unwrap();
            prop_assert!(d % 2 == 1 && d >= 3);
            prop_assert!(le_tol(logical_error(code, d).unwrap(), target));
            if d > 3 {
                prop_assert!(!le_tol(logical_error(code, d - 2).unwrap(), target));
            }
        }

        #[test]
        fn recount_round_trip(k in 1u64..100_000, eps in 1e-5f64..5e-3, log_t in -12.0f64..-2.0) {
            let target = 10f64.powf(log_t);
            for code in [surface(eps), CodeModel::qldpc(eps).unwrap()] {
                let phys = infer_physical_count(k, code, target, 1.0).unwrap();
                prop_assert!(infer_logical_count(phys, code, target, 1.0).unwrap() >= k);
            }
        }

        #[test]
        fn qldpc_ratio_is_exact(eps in 1e-5f64..5e-3, d in 1u32..500, div in 1.0f64..50.0) {
            let q = CodeModel::qldpc_with_divisor(eps, div).unwrap();
            prop_assert_eq!(
                physical_per_logical(q, d).unwrap(),
                physical_per_logical(surface(eps), d).unwrap() / div
            );
        }
    }
}
