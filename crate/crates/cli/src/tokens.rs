//! Numeric or symbolic `beta` / `gamma` arguments.

use std::f64::consts::PI;

use anyhow::{bail, Context, Result};
use rpslice_core::classifier::Hints;
use rpslice_core::HalfLength;

/// Parses `pi/p`, `par` or `hyp:d`.
pub fn parse_half_length(s: &str) -> Result<HalfLength> {
    let s = s.trim();
    if s == "par" {
        return Ok(HalfLength::Parabolic);
    }
    if let Some(p) = s.strip_prefix("pi/") {
        let p: u32 = p.parse().with_context(|| format!("bad order in {s:?}"))?;
        if p < 2 {
            bail!("elliptic half-length needs p >= 2, got {p}");
        }
        return Ok(HalfLength::Elliptic(p));
    }
    if let Some(d) = s.strip_prefix("hyp:") {
        let d: f64 = d.parse().with_context(|| format!("bad length in {s:?}"))?;
        if !(d > 0.0) || !d.is_finite() {
            bail!("hyperbolic half-length must be positive, got {d}");
        }
        return Ok(HalfLength::Hyperbolic(d));
    }
    bail!("expected pi/p, par or hyp:d, got {s:?}")
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A real number, or `ell:n/q` for `beta = -4 sin^2(q pi / n)`.
pub fn parse_beta(s: &str, hints: &mut Hints) -> Result<f64> {
    let s = s.trim();
    let Some(rest) = s.strip_prefix("ell:") else {
        return parse_real(s);
    };
    let (n, q) = match rest.split_once('/') {
        Some((n, q)) => (n, q),
        None => (rest, "1"),
    };
    let n: u32 = n.parse().with_context(|| format!("bad order in {s:?}"))?;
    let q: u32 = q.parse().with_context(|| format!("bad rotation index in {s:?}"))?;
    if n < 2 || q < 1 || 2 * q > n || gcd(n, q) != 1 {
        bail!("ell:{n}/{q} needs n >= 2, 1 <= q <= n/2 and gcd(n, q) = 1");
    }
    hints.beta_rotation = Some((n, q));
    let s = (q as f64 * PI / n as f64).sin();
    Ok(if 2 * q == n { -4.0 } else { -4.0 * s * s })
}

/// A real number, or `u=<half-length>` for `gamma = 4 cosh^2 u` and
/// `-u=<half-length>` for `gamma = -4 cosh^2 u`.
pub fn parse_gamma(s: &str, hints: &mut Hints) -> Result<f64> {
    let s = s.trim();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) if rest.starts_with("u=") => (-1.0, rest),
        _ => (1.0, s),
    };
    let Some(token) = body.strip_prefix("u=") else {
        return parse_real(s);
    };
    let u = parse_half_length(token)?;
    hints.gamma_half_length = Some(u);
    Ok(sign * 4.0 * u.cosh_sq())
}

pub fn parse_real(s: &str) -> Result<f64> {
    let x: f64 = s.trim().parse().with_context(|| format!("not a number: {s:?}"))?;
    if !x.is_finite() {
        bail!("not a finite number: {s:?}");
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_lengths() {
        assert_eq!(parse_half_length("pi/5").unwrap(), HalfLength::Elliptic(5));
        assert_eq!(parse_half_length("par").unwrap(), HalfLength::Parabolic);
        assert_eq!(parse_half_length("hyp:0.5").unwrap(), HalfLength::Hyperbolic(0.5));
        for bad in ["pi/1", "pi/x", "hyp:-1", "hyp:0", "u"] {
            assert!(parse_half_length(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn beta_tokens() {
        let mut h = Hints::default();
        assert_eq!(parse_beta("-4.5", &mut h).unwrap(), -4.5);
        assert_eq!(h.beta_rotation, None);
        let b = parse_beta("ell:3", &mut h).unwrap();
        assert!((b + 3.0).abs() < 1e-15);
        assert_eq!(h.beta_rotation, Some((3, 1)));
        assert_eq!(parse_beta("ell:2/1", &mut h).unwrap(), -4.0);
        assert!(parse_beta("ell:6/2", &mut h).is_err());
        assert!(parse_beta("ell:5/3", &mut h).is_err());
    }

    #[test]
    fn gamma_tokens() {
        let mut h = Hints::default();
        assert!((parse_gamma("u=pi/4", &mut h).unwrap() - 2.0).abs() < 1e-15);
        assert_eq!(h.gamma_half_length, Some(HalfLength::Elliptic(4)));
        assert_eq!(parse_gamma("-u=par", &mut h).unwrap(), -4.0);
        assert_eq!(parse_gamma("-2.5", &mut h).unwrap(), -2.5);
        assert!(parse_gamma("inf", &mut h).is_err());
        assert!(parse_gamma("u=pi/0", &mut h).is_err());
    }
}
