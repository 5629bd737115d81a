use alloc::vec;

use super::{decide, half_length, half_length_sq, rotation_of, CaseTag, Config, Hints, ItemMatch, Verdict, WitnessSet};
use crate::math;
use crate::types::{c_constant, ExtendedOrder, HalfLength, Recognition};
use crate::Result;

/// Elliptic or parabolic `f`: `-4 <= beta <= 0`.
///
/// With `beta = -4 sin^2(q pi / n)` and `C = C(q, n)`, the group is
/// discrete iff
/// 1. `gamma = -4 C cosh^2 u`, `t(u) >= 3`;
/// 2. `gamma = 4 C (cos(pi / n) + cosh u)^2`;
/// 3. `beta = 0` and `gamma = 4 (1 + cos(2 pi / k))^2`, `k >= 3` odd.
///
/// An elliptic `f` of infinite order never generates a discrete group.
pub fn check_ell_strip(beta: f64, gamma: f64, cfg: &Config) -> Result<Verdict> {
    check_ell_strip_hinted(beta, gamma, cfg, &Hints::default())
}

pub(crate) fn check_ell_strip_hinted(beta: f64, gamma: f64, cfg: &Config, hints: &Hints) -> Result<Verdict> {
    let tol = cfg.tol;
    let parabolic = beta.abs() <= tol && hints.beta_rotation.is_none();
    let (order, q, numeric_beta) = if parabolic {
        (ExtendedOrder::Omega, 1, beta != 0.0)
    } else {
        match rotation_of(beta.clamp(-4.0, 0.0), cfg, hints.beta_rotation)? {
            Recognition::Found(((n, q), numeric)) => (ExtendedOrder::Finite(n), q, numeric),
            Recognition::Absent => return Ok(Verdict::NotDiscrete),
            Recognition::BeyondBound => {
                return Ok(Verdict::Indeterminate {
                    reason: alloc::format!("beta is closer to 0 than -4 sin^2(pi/{})", cfg.n_max),
                })
            }
        }
    };
    let c = c_constant(q, order)?;
    let cos_n = match order {
        ExtendedOrder::Finite(2) => 0.0,
        ExtendedOrder::Finite(n) => math::cos(math::PI / n as f64),
        _ => 1.0,
    };
    let base = WitnessSet {
        n: match order {
            ExtendedOrder::Finite(n) => Some(n),
            _ => None,
        },
        q: order.is_finite().then_some(q),
        ..WitnessSet::default()
    };

    let mut items = vec![];
    if gamma < 0.0 {
        let item1 = half_length_sq(-gamma / (4.0 * c), 3, cfg, hints.gamma_half_length)?
            .map(|(u, numeric)| ItemMatch::new(WitnessSet { u: Some(u), ..base }, numeric || numeric_beta));
        items.push((CaseTag::EllStrip1, item1));
    } else {
        let y = math::sqrt(gamma / (4.0 * c)) - cos_n;
        let item2 = half_length(y, 2, cfg)?.map(|u| {
            let mut m = ItemMatch::new(WitnessSet { u: Some(u), ..base }, true);
            if u == HalfLength::Elliptic(2) {
                m.notes.push("order-two half-length witness (t(u) = 2)");
            }
            m
        });
        items.push((CaseTag::EllStrip2, item2));
        if parabolic {
            items.push((CaseTag::EllStrip3, odd_rotation_item(gamma, cfg)));
        }
    }
    Ok(decide(items))
}

/// `gamma = 4 (1 + cos(2 pi / k))^2` for odd `3 <= k <= p_max`.
fn odd_rotation_item(gamma: f64, cfg: &Config) -> Recognition<ItemMatch> {
    let value = |k: u32| {
        let t = 1.0 + math::cos(2.0 * math::PI / k as f64);
        4.0 * t * t
    };
    let z = math::sqrt(gamma) / 2.0 - 1.0;
    if z > -1.0 && z < 1.0 {
        let k_est = 2.0 * math::PI / math::acos(z);
        let lo = (math::floor(k_est) as i64 - 2).max(3);
        let hi = (math::ceil(k_est) as i64 + 2).min(cfg.p_max as i64);
        for k in lo..=hi {
            let k = k as u32;
            if k % 2 == 1 && math::close(value(k), gamma, cfg.tol) {
                let w = WitnessSet { p: Some(k), ..WitnessSet::default() };
                return Recognition::Found(ItemMatch::new(w, true));
            }
        }
    }
    let last_odd = if cfg.p_max % 2 == 1 { cfg.p_max } else { cfg.p_max - 1 };
    if last_odd >= 3 && gamma > value(last_odd) + cfg.tol && gamma < 16.0 - cfg.tol {
        Recognition::BeyondBound
    } else {
        Recognition::Absent
    }
}

/// The two accumulation values of the strip line `beta = -4 sin^2(q pi / n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripStructure {
    /// `-4 C(q, n)`: end of the ray `(-inf, gamma1]`.
    pub gamma1: f64,
    /// `4 C(q, n) (cos(pi / n) + 1)^2`: start of the ray `[gamma2, inf)`.
    pub gamma2: f64,
}

pub fn strip_gamma_structure(n: u32, q: u32) -> Result<StripStructure> {
    let c = c_constant(q, ExtendedOrder::Finite(n))?;
    let cos_n = if n == 2 { 0.0 } else { math::cos(math::PI / n as f64) };
    Ok(StripStructure { gamma1: -4.0 * c, gamma2: 4.0 * c * (cos_n + 1.0) * (cos_n + 1.0) })
}
