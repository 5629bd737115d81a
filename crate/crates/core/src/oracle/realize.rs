//! Normalized generator pairs realizing a parameter point.

use num_complex::Complex64;

use super::Mobius;
use crate::math;
use crate::types::valid_rotation;
use crate::{Error, Result};

type C = Complex64;

/// Which normalization produced a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Elliptic `f` fixing `+-i`, `g(z) = z - tau`.
    Strip,
    /// `f` with fixed points `+-1`, `g(z) = z + tau`.
    Hyperbolic,
    /// pi-loxodromic `f` with fixed points `+-1`, `g(z) = z + tau`.
    Loxodromic,
    /// As `Loxodromic`, with `-8 <= beta < -4` so that the diagonal entry
    /// has modulus at most 1.
    LoxodromicSmall,
    /// Parabolic `f` fixing `0`, `g` fixing `inf`.
    Parabolic,
    /// Upper-triangular `g = [[1, 1], [0, 1]]` and `f` solved from traces.
    General,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusPair {
    pub f: Mobius,
    pub g: Mobius,
    pub provenance: Provenance,
}

/// `(beta, beta', gamma) = (tr^2 f - 4, tr^2 g - 4, tr[f, g] - 2)`.
pub fn params_of(pair: &MobiusPair) -> (C, C, C) {
    let (f, g) = (pair.f, pair.g);
    let commutator = f * g * f.inv() * g.inv();
    (f.beta(), g.beta(), commutator.trace() - 2.0)
}

fn real_sqrt_c(x: f64) -> C {
    C::new(x, 0.0).sqrt()
}

/// Elliptic `f` of order `n` rotating through `2 q pi / n` about the axis
/// through `+-i`, and `g(z) = z - tau`. Then `gamma = tau^2 sin^2(q pi / n)`.
pub fn realize_strip(n: u32, q: u32, tau: f64) -> Result<MobiusPair> {
    if !(tau > 0.0) {
        return Err(Error::OutOfRange { what: "tau", value: tau });
    }
    strip_pair(n, q, C::new(tau, 0.0))
}

/// [`realize_strip`] solved for `gamma`; `tau` is imaginary when `gamma < 0`.
pub fn realize_strip_gamma(n: u32, q: u32, gamma: f64) -> Result<MobiusPair> {
    if !valid_rotation(q, n) {
        return Err(Error::InvalidRotation { q, n });
    }
    let s = math::sin(q as f64 * math::PI / n as f64);
    strip_pair(n, q, real_sqrt_c(gamma) / s)
}

fn strip_pair(n: u32, q: u32, tau: C) -> Result<MobiusPair> {
    if !valid_rotation(q, n) {
        return Err(Error::InvalidRotation { q, n });
    }
    let theta = q as f64 * math::PI / n as f64;
    let (c, s) = (math::cos(theta), math::sin(theta));
    let f = Mobius::real(-c, s, -s, -c);
    let g = Mobius::new(C::new(-1.0, 0.0), tau, C::new(0.0, 0.0), C::new(-1.0, 0.0));
    Ok(MobiusPair { f, g, provenance: Provenance::Strip })
}

/// Hyperbolic `f = [[a, b], [b, a]]` with `a = sqrt(beta + 4) / 2`,
/// `b = -sqrt(a^2 - 1)`, and `g = [[1, tau], [0, 1]]` with `b tau = -sqrt(gamma)`.
pub fn realize_hyp(beta: f64, gamma: f64) -> Result<MobiusPair> {
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::OutOfRange { what: "beta for a hyperbolic f", value: beta });
    }
    nonzero_gamma(gamma)?;
    let a = math::sqrt(beta + 4.0) / 2.0;
    let b = -math::sqrt(a * a - 1.0);
    let tau = real_sqrt_c(gamma) / -b;
    let f = Mobius::real(a, b, b, a);
    Ok(MobiusPair { f, g: translation(tau), provenance: Provenance::Hyperbolic })
}

/// pi-loxodromic `f = i [[a, b], [b, a]]` with `a = sqrt(-beta - 4) / 2`,
/// `b = -sqrt(a^2 + 1)`, and `g = [[1, tau], [0, 1]]` with
/// `b tau = -sqrt(-gamma)`.
pub fn realize_lox(beta: f64, gamma: f64) -> Result<MobiusPair> {
    if !(beta < -4.0) || !beta.is_finite() {
        return Err(Error::OutOfRange { what: "beta for a pi-loxodromic f", value: beta });
    }
    nonzero_gamma(gamma)?;
    let a = math::sqrt(-beta - 4.0) / 2.0;
    let b = -math::sqrt(a * a + 1.0);
    let tau = real_sqrt_c(-gamma) / -b;
    let i = C::new(0.0, 1.0);
    let f = Mobius::new(i * a, i * b, i * b, i * a);
    let provenance = if a > 1.0 { Provenance::Loxodromic } else { Provenance::LoxodromicSmall };
    Ok(MobiusPair { f, g: translation(tau), provenance })
}

/// `f = [[-1, 0], [-1, -1]]`, `g = [[-1, tau], [0, -1]]`, `gamma = tau^2`.
pub fn realize_parabolic_pair(gamma: f64) -> Result<MobiusPair> {
    nonzero_gamma(gamma)?;
    let f = Mobius::real(-1.0, 0.0, -1.0, -1.0);
    let m1 = C::new(-1.0, 0.0);
    let g = Mobius::new(m1, real_sqrt_c(gamma), C::new(0.0, 0.0), m1);
    Ok(MobiusPair { f, g, provenance: Provenance::Parabolic })
}

/// Any `(beta, gamma)` with `gamma != 0`: `g = [[1, 1], [0, 1]]`,
/// `f = [[t/2, b], [c, t/2]]` with `t = sqrt(beta + 4)`, `c = sqrt(gamma)`.
pub fn realize_general(beta: f64, gamma: f64) -> Result<MobiusPair> {
    nonzero_gamma(gamma)?;
    if !beta.is_finite() {
        return Err(Error::OutOfRange { what: "beta", value: beta });
    }
    let half = real_sqrt_c(beta + 4.0) / 2.0;
    let c = real_sqrt_c(gamma);
    let b = (half * half - 1.0) / c;
    let f = Mobius::new(half, b, c, half);
    Ok(MobiusPair { f, g: translation(C::new(1.0, 0.0)), provenance: Provenance::General })
}

/// Picks the normalization matching the quadrant of `(beta, gamma)`.
pub fn realize(beta: f64, gamma: f64) -> Result<MobiusPair> {
    if beta > 0.0 {
        realize_hyp(beta, gamma)
    } else if beta < -4.0 {
        realize_lox(beta, gamma)
    } else if beta == 0.0 {
        realize_parabolic_pair(gamma)
    } else {
        realize_general(beta, gamma)
    }
}

fn translation(tau: C) -> Mobius {
    Mobius::new(C::new(1.0, 0.0), tau, C::new(0.0, 0.0), C::new(1.0, 0.0))
}

fn nonzero_gamma(gamma: f64) -> Result<()> {
    if gamma == 0.0 || !gamma.is_finite() {
        Err(Error::OutOfRange { what: "gamma", value: gamma })
    } else {
        Ok(())
    }
}
