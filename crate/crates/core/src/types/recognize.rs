//! Numeric inversion of `beta = -4 sin^2(q pi / n)` and of `cosh u`,
//! `cosh^2 u` over the half-length set.
//!
//! The candidate sets accumulate (e.g. `cos(pi / p) -> 1`), so every scan
//! runs up to an explicit bound. Values that fall between the last
//! candidate at the bound and the accumulation point are reported as
//! [`Recognition::BeyondBound`] rather than as a miss.

use super::element::valid_rotation;
use super::half_length::cos_pi_over;
use super::HalfLength;
use crate::math;
use crate::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;
/// Default for `n_max` and `p_max`.
pub const DEFAULT_BOUND: u32 = 200;

/// Outcome of a bounded scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Recognition<T> {
    Found(T),
    Absent,
    /// No match, but the value sits inside the accumulation gap above the
    /// bound, where a match of higher order may exist.
    BeyondBound,
}

impl<T> Recognition<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Recognition::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Recognition<U> {
        match self {
            Recognition::Found(t) => Recognition::Found(f(t)),
            Recognition::Absent => Recognition::Absent,
            Recognition::BeyondBound => Recognition::BeyondBound,
        }
    }
}

/// Which function of `u` the scanned value represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoshFamily {
    Cosh,
    CoshSquared,
}

impl CoshFamily {
    fn elliptic_value(self, p: u32) -> f64 {
        let c = cos_pi_over(p);
        match self {
            CoshFamily::Cosh => c,
            CoshFamily::CoshSquared => c * c,
        }
    }
}

/// Finds the smallest `n <= n_max` and the coprime `q` (`1 <= q < n/2`, or
/// `q = 1` for `n = 2`) with `|beta + 4 sin^2(q pi / n)| <= tol`.
pub fn scan_elliptic_beta(beta: f64, n_max: u32, tol: f64) -> Result<Recognition<(u32, u32)>> {
    if !(beta >= -4.0 - tol && beta <= tol) {
        return Err(Error::OutOfRange { what: "elliptic beta", value: beta });
    }
    let ratio = (-beta / 4.0).clamp(0.0, 1.0);
    let x = math::asin(math::sqrt(ratio)) / math::PI;
    for n in 2..=n_max {
        let q0 = math::round(x * n as f64) as i64;
        for q in (q0 - 1).max(1)..=q0 + 1 {
            let q = q as u32;
            if valid_rotation(q, n) && (beta + 4.0 * math::sin_sq_frac(q, n)).abs() <= tol {
                return Ok(Recognition::Found((n, q)));
            }
        }
    }
    let last = -4.0 * math::sin_sq_frac(1, n_max.max(2));
    if beta > last + tol && beta < -tol {
        Ok(Recognition::BeyondBound)
    } else {
        Ok(Recognition::Absent)
    }
}

/// Optional-valued form of [`scan_elliptic_beta`].
pub fn recognize_elliptic_beta(beta: f64, n_max: u32, tol: f64) -> Result<Option<(u32, u32)>> {
    scan_elliptic_beta(beta, n_max, tol).map(Recognition::found)
}

/// Finds `u` with `cosh u = x` (or `cosh^2 u = x`) among
/// `{ i pi / p : min_p <= p <= p_max } U [0, inf)`.
///
/// Elliptic candidates are tried first, then `|x - 1| <= tol` gives the
/// parabolic `u = 0`, then `x > 1 + tol` a hyperbolic `u`.
pub fn scan_half_length(
    x: f64,
    family: CoshFamily,
    min_p: u32,
    p_max: u32,
    tol: f64,
) -> Result<Recognition<HalfLength>> {
    if x.is_nan() {
        return Err(Error::OutOfRange { what: "half-length value", value: x });
    }
    if x < -tol {
        return match family {
            CoshFamily::CoshSquared => Err(Error::OutOfRange { what: "cosh^2 u", value: x }),
            CoshFamily::Cosh => Ok(Recognition::Absent),
        };
    }
    let min_p = min_p.max(2);
    let y = match family {
        CoshFamily::Cosh => x,
        CoshFamily::CoshSquared => math::sqrt(x.max(0.0)),
    };
    if y < 1.0 && min_p <= p_max {
        let p_est = if y <= 0.0 { 2.0 } else { math::PI / math::acos(y) };
        let lo = (math::floor(p_est) as i64 - 1).max(min_p as i64);
        let hi = (math::ceil(p_est) as i64 + 1).min(p_max as i64);
        for p in lo..=hi {
            let p = p as u32;
            if (x - family.elliptic_value(p)).abs() <= tol {
                return Ok(Recognition::Found(HalfLength::Elliptic(p)));
            }
        }
    }
    if (x - 1.0).abs() <= tol {
        return Ok(Recognition::Found(HalfLength::Parabolic));
    }
    if x > 1.0 {
        return Ok(Recognition::Found(HalfLength::Hyperbolic(math::acosh(y))));
    }
    if min_p <= p_max && x > family.elliptic_value(p_max) + tol {
        return Ok(Recognition::BeyondBound);
    }
    Ok(Recognition::Absent)
}

/// Optional-valued form of [`scan_half_length`] over all of the half-length
/// set (`p >= 2`).
pub fn recognize_half_length(x: f64, family: CoshFamily, p_max: u32, tol: f64) -> Result<Option<HalfLength>> {
    scan_half_length(x, family, 2, p_max, tol).map(Recognition::found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_elliptic(beta: f64, n_max: u32, tol: f64) -> Option<(u32, u32)> {
        for n in 2..=n_max {
            for q in 1..n {
                if valid_rotation(q, n) {
                    let s = (q as f64 * core::f64::consts::PI / n as f64).sin();
                    if (beta + 4.0 * s * s).abs() <= tol {
                        return Some((n, q));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn elliptic_examples() {
        assert_eq!(recognize_elliptic_beta(-3.0, 10, DEFAULT_TOL).unwrap(), Some((3, 1)));
        let s = (2.0 * core::f64::consts::PI / 5.0).sin();
        let beta = -4.0 * s * s;
        assert!((beta + 3.618_034).abs() < 1e-6);
        assert_eq!(recognize_elliptic_beta(beta, 10, DEFAULT_TOL).unwrap(), Some((5, 2)));
        assert_eq!(recognize_elliptic_beta(-4.0, 10, DEFAULT_TOL).unwrap(), Some((2, 1)));
        assert_eq!(recognize_elliptic_beta(-1.234567, 50, 1e-9).unwrap(), None);
        assert_eq!(brute_force_elliptic(-1.234567, 50, 1e-9), None);
    }

    #[test]
    fn elliptic_rejects_outside_strip() {
        assert!(recognize_elliptic_beta(-4.5, 10, DEFAULT_TOL).is_err());
        assert!(recognize_elliptic_beta(0.5, 10, DEFAULT_TOL).is_err());
    }

    #[test]
    fn elliptic_agrees_with_brute_force() {
        for n in 2..=60u32 {
            for q in 1..n {
                if !valid_rotation(q, n) {
                    continue;
                }
                let beta = -4.0 * math::sin_sq_frac(q, n);
                let fast = recognize_elliptic_beta(beta, 60, DEFAULT_TOL).unwrap();
                assert_eq!(fast, brute_force_elliptic(beta, 60, DEFAULT_TOL));
                assert_eq!(fast, Some((n, q)));
            }
        }
    }

    #[test]
    fn elliptic_beyond_bound_near_zero() {
        let beta = -4.0 * math::sin_sq_frac(1, 300);
        assert_eq!(scan_elliptic_beta(beta, 200, DEFAULT_TOL).unwrap(), Recognition::BeyondBound);
        assert_eq!(scan_elliptic_beta(beta, 300, DEFAULT_TOL).unwrap(), Recognition::Found((300, 1)));
    }

    #[test]
    fn half_length_examples() {
        assert_eq!(
            recognize_half_length(0.25, CoshFamily::CoshSquared, 10, DEFAULT_TOL).unwrap(),
            Some(HalfLength::Elliptic(3))
        );
        for fam in [CoshFamily::Cosh, CoshFamily::CoshSquared] {
            assert_eq!(recognize_half_length(1.0, fam, 10, DEFAULT_TOL).unwrap(), Some(HalfLength::Parabolic));
        }
        match recognize_half_length(2.5, CoshFamily::Cosh, 10, DEFAULT_TOL).unwrap() {
            Some(HalfLength::Hyperbolic(d)) => assert!((d.cosh() - 2.5).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            recognize_half_length(0.0, CoshFamily::Cosh, 10, DEFAULT_TOL).unwrap(),
            Some(HalfLength::Elliptic(2))
        );
        assert!(recognize_half_length(-0.1, CoshFamily::CoshSquared, 10, DEFAULT_TOL).is_err());
        assert_eq!(recognize_half_length(-0.1, CoshFamily::Cosh, 10, DEFAULT_TOL).unwrap(), None);
        assert_eq!(recognize_half_length(0.3, CoshFamily::Cosh, 10, DEFAULT_TOL).unwrap(), None);
    }

    #[test]
    fn half_length_min_order() {
        // cos^2(pi/2) = 0 is excluded when t(u) >= 3 is required
        assert_eq!(scan_half_length(0.0, CoshFamily::CoshSquared, 3, 200, DEFAULT_TOL).unwrap(), Recognition::Absent);
    }

    #[test]
    fn half_length_beyond_bound() {
        let c = (core::f64::consts::PI / 500.0).cos();
        assert_eq!(scan_half_length(c, CoshFamily::Cosh, 2, 200, DEFAULT_TOL).unwrap(), Recognition::BeyondBound);
    }

    #[test]
    fn half_length_round_trip() {
        for fam in [CoshFamily::Cosh, CoshFamily::CoshSquared] {
            for p in 2..=200 {
                let u = HalfLength::Elliptic(p);
                let x = if fam == CoshFamily::Cosh { u.cosh() } else { u.cosh_sq() };
                assert_eq!(recognize_half_length(x, fam, 200, 1e-9).unwrap(), Some(u));
            }
        }
    }
}
