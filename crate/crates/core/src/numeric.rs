//! Floating-point helpers shared by the solvers.

/// Relative slack used when a computed quantity is compared against a
/// threshold or rounded to an integer. Formula evaluations such as
/// `0.1 * 0.1^5` land a few ulps away from the exact decimal value.
pub(crate) const REL_TOL: f64 = 1e-12;

/// `value <= bound`, allowing `value` to exceed `bound` by [`REL_TOL`].
pub(crate) fn le_tol(value: f64, bound: f64) -> bool {
    value <= bound * (1.0 + REL_TOL)
}

/// Rounds to the nearest integer when within [`REL_TOL`] of it.
pub(crate) fn snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= REL_TOL * x.abs().max(1.0) {
        r
    } else {
        x
    }
}

/// Floor that treats values within round-off of an integer as that integer.
pub(crate) fn floor_tol(x: f64) -> f64 {
    snap(x).floor()
}

/// Ceiling that treats values within round-off of an integer as that integer.
pub(crate) fn ceil_tol(x: f64) -> f64 {
    snap(x).ceil()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_absorbs_roundoff() {
        assert_eq!(ceil_tol(200.0 * 33.7), 6740.0);
        assert_eq!(ceil_tol(6740.5), 6741.0);
        assert_eq!(floor_tol(0.999_999_999_999_999_9), 1.0);
        assert_eq!(floor_tol(6.21), 6.0);
        assert!(le_tol(0.1 * 0.1f64.powi(5), 1e-6));
        assert!(!le_tol(1.01e-6, 1e-6));
    }
}
