//! Closed free regions of the slice and the bands between them.
//!
//! All boundaries are written in `beta` as a function of `gamma`. The
//! `C_k` and `Sigma_k` boundaries come from one helper so that shared
//! edges compare equal bit for bit.

use core::fmt;

use crate::math;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionTag {
    A,
    B,
    C(u32),
    D(u32),
    SigmaBand(u32),
}

impl RegionTag {
    /// Short id used in SVG and JSON output: `A`, `B`, `C3`, `D1`, `S2`.
    pub fn id(self) -> alloc::string::String {
        match self {
            RegionTag::A => "A".into(),
            RegionTag::B => "B".into(),
            RegionTag::C(k) => alloc::format!("C{k}"),
            RegionTag::D(k) => alloc::format!("D{k}"),
            RegionTag::SigmaBand(k) => alloc::format!("S{k}"),
        }
    }
}

impl fmt::Display for RegionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// `(m sqrt(gamma) + shift)^2 - 4`.
fn shifted_parabola(m: f64, gamma: f64, shift: f64) -> f64 {
    let t = m * math::sqrt(gamma) + shift;
    t * t - 4.0
}

/// Lower `beta` boundary of `C_k`: `((k - 1) sqrt(gamma) + 2)^2 - 4`.
pub fn c_lower(k: u32, gamma: f64) -> f64 {
    shifted_parabola((k - 1) as f64, gamma, 2.0)
}

/// Upper `beta` boundary of `C_k`: `(k sqrt(gamma) - 2)^2 - 4`.
pub fn c_upper(k: u32, gamma: f64) -> f64 {
    shifted_parabola(k as f64, gamma, -2.0)
}

/// Lower boundary of `Sigma_k`, equal to [`c_upper`].
pub fn sigma_lower(k: u32, gamma: f64) -> f64 {
    shifted_parabola(k as f64, gamma, -2.0)
}

/// Upper boundary of `Sigma_k`, equal to `c_lower(k + 1, gamma)`.
pub fn sigma_upper(k: u32, gamma: f64) -> f64 {
    shifted_parabola(k as f64, gamma, 2.0)
}

/// `-((2k - 1) s + shift sqrt(s^2 - 16))^2 / 4 - 4` with `s = sqrt(-gamma)`.
fn d_bound(k: u32, gamma: f64, shift: f64) -> f64 {
    let s = math::sqrt(-gamma);
    let r = math::sqrt((s * s - 16.0).max(0.0));
    let t = (2 * k - 1) as f64 * s + shift * r;
    -t * t / 4.0 - 4.0
}

pub fn d_lower(k: u32, gamma: f64) -> f64 {
    d_bound(k, gamma, 1.0)
}

pub fn d_upper(k: u32, gamma: f64) -> f64 {
    d_bound(k, gamma, -1.0)
}

/// Closed membership test.
pub fn region_contains(tag: RegionTag, beta: f64, gamma: f64) -> bool {
    match tag {
        RegionTag::A => gamma <= -4.0 && beta >= 0.0,
        RegionTag::B => gamma >= 4.0 && beta + 4.0 <= -4.0 / gamma,
        RegionTag::C(k) => k >= 1 && gamma >= 16.0 && c_lower(k, gamma) <= beta && beta <= c_upper(k, gamma),
        RegionTag::D(k) => k >= 1 && gamma <= -16.0 && d_lower(k, gamma) <= beta && beta <= d_upper(k, gamma),
        RegionTag::SigmaBand(k) => {
            k >= 1 && gamma >= 0.0 && sigma_lower(k, gamma) <= beta && beta <= sigma_upper(k, gamma)
        }
    }
}

/// The free region containing the point, trying `A`, `B`, then `C_k` and
/// `D_k` for ascending `k <= k_max`.
pub fn free_region(beta: f64, gamma: f64, k_max: u32) -> Option<RegionTag> {
    if region_contains(RegionTag::A, beta, gamma) {
        return Some(RegionTag::A);
    }
    if region_contains(RegionTag::B, beta, gamma) {
        return Some(RegionTag::B);
    }
    if gamma >= 16.0 {
        return (1..=k_max).map(RegionTag::C).find(|&t| region_contains(t, beta, gamma));
    }
    if gamma <= -16.0 {
        return (1..=k_max).map(RegionTag::D).find(|&t| region_contains(t, beta, gamma));
    }
    None
}
