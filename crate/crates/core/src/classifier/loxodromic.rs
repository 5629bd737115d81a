use alloc::vec;

use super::{decide, half_length, half_length_sq, CaseTag, Config, Hints, ItemMatch, Sign, Verdict, WitnessSet};
use crate::math;
use crate::types::{HalfLength, Recognition};
use crate::Result;

/// `ceil(sqrt(-beta - 4) / sqrt(-gamma))`, evaluated as written.
pub fn lox_ceiling_index(beta: f64, gamma: f64) -> i64 {
    math::ceil(math::sqrt(-beta - 4.0) / math::sqrt(-gamma)) as i64
}

/// The least `k >= 1` with `k s >= a`, the comparison widened by `tol`.
fn lox_index(a: f64, s: f64, tol: f64) -> u32 {
    let mut k = math::ceil((a - tol) / s).max(1.0) as u32;
    while k > 1 && (k - 1) as f64 * s >= a - tol {
        k -= 1;
    }
    while (k as f64) * s < a - tol {
        k += 1;
    }
    k
}

/// pi-loxodromic `f`, `gamma < 0`. Write `s = sqrt(-gamma)`,
/// `a = sqrt(-beta - 4)`, `k = ceil(a / s)`, `P = a - (k - 1) s` and
/// `Q = k s - a`, so `P + Q = s`. The group is discrete iff
/// 1. `Q > 0` and `PQ / 2 - 1 = cosh u` for some `u`; equivalently
///    `2a = (2k - 1) s +- sqrt(s^2 - 8 (1 + cosh u))`;
/// 2. `P = Q` and `s / 4 = cos(pi / p)`, `p >= 3` odd;
/// 3. `Q = 0` and `s^2 / 4 = cosh^2 u`, `t(u) >= 3`.
pub fn check_lox_inv(beta: f64, gamma: f64, cfg: &Config) -> Result<Verdict> {
    check_lox_inv_hinted(beta, gamma, cfg, &Hints::default())
}

pub(crate) fn check_lox_inv_hinted(beta: f64, gamma: f64, cfg: &Config, hints: &Hints) -> Result<Verdict> {
    let s = math::sqrt(-gamma);
    let a = math::sqrt(-beta - 4.0);
    let tol_len = cfg.tol * a.max(s).max(1.0);
    let k = lox_index(a, s, tol_len);
    let p_len = a - (k - 1) as f64 * s;
    let q_len = (k as f64 * s - a).max(0.0);
    let base = WitnessSet { k: Some(k), ..WitnessSet::default() };

    let mut items = vec![];
    if q_len > tol_len {
        let c = p_len * q_len / 2.0 - 1.0;
        let sign = if p_len - q_len >= -tol_len { Sign::Plus } else { Sign::Minus };
        let item1 =
            half_length(c, 2, cfg)?.map(|u| ItemMatch::new(WitnessSet { u: Some(u), sign: Some(sign), ..base }, true));
        items.push((CaseTag::LoxNeg1, item1));
        if (p_len - q_len).abs() <= tol_len {
            items.push((CaseTag::LoxNeg2, odd_cos_item(s / 4.0, cfg, base)));
        }
    } else {
        let item3 = half_length_sq(s * s / 4.0, 3, cfg, hints.gamma_half_length)?
            .map(|(u, numeric)| ItemMatch::new(WitnessSet { u: Some(u), ..base }, numeric));
        items.push((CaseTag::LoxNeg3, item3));
    }
    Ok(decide(items))
}

/// `x = cos(pi / p)` with `p >= 3` odd.
fn odd_cos_item(x: f64, cfg: &Config, base: WitnessSet) -> Recognition<ItemMatch> {
    match half_length(x, 3, cfg) {
        Ok(Recognition::Found(HalfLength::Elliptic(p))) if p % 2 == 1 => {
            Recognition::Found(ItemMatch::new(WitnessSet { p: Some(p), ..base }, true))
        }
        Ok(Recognition::BeyondBound) => Recognition::BeyondBound,
        _ => Recognition::Absent,
    }
}

/// pi-loxodromic `f`, `gamma > 0`: discrete iff `gamma = 4 cosh^2 u` with
/// `t(u) >= 3` and
/// 1. `t(u)` even or infinite, and `-gamma (beta + 4) / 4 = cosh^2 v`,
///    `t(v) >= 3`;
/// 2. `t(u)` odd, and `-(beta + 4) / 4 = cosh^2 v`, `t(v) >= 3`.
pub fn check_criterion_par(beta: f64, gamma: f64, cfg: &Config) -> Result<Verdict> {
    check_criterion_par_hinted(beta, gamma, cfg, &Hints::default())
}

pub(crate) fn check_criterion_par_hinted(beta: f64, gamma: f64, cfg: &Config, hints: &Hints) -> Result<Verdict> {
    let (u, numeric_u) = match half_length_sq(gamma / 4.0, 3, cfg, hints.gamma_half_length)? {
        Recognition::Found(found) => found,
        Recognition::Absent => return Ok(Verdict::NotDiscrete),
        Recognition::BeyondBound => return Ok(decide(vec![(CaseTag::LoxPosEven, Recognition::BeyondBound)])),
    };
    let odd = u.order().is_odd();
    let (case, x) = if odd {
        (CaseTag::LoxPosOdd, -(beta + 4.0) / 4.0)
    } else {
        (CaseTag::LoxPosEven, -gamma * (beta + 4.0) / 4.0)
    };
    let item = half_length_sq(x, 3, cfg, None)?.map(|(v, numeric_v)| {
        let w = WitnessSet { u: Some(u), v: Some(v), ..WitnessSet::default() };
        ItemMatch::new(w, numeric_u || numeric_v)
    });
    Ok(decide(vec![(case, item)]))
}
