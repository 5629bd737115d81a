use alloc::vec;

use super::{decide, half_length, half_length_sq, CaseTag, Config, Hints, ItemMatch, Sign, Verdict, WitnessSet};
use crate::math;
use crate::types::{c_constant, scan_elliptic_beta, ExtendedOrder, HalfLength, Recognition};
use crate::Result;

/// Hyperbolic `f`, `gamma < 0`: discrete iff `gamma = -4 cosh^2 u` with
/// `t(u) >= 3`. `beta` is unconstrained.
pub fn check_hyp_neg(beta: f64, gamma: f64, cfg: &Config) -> Result<Verdict> {
    check_hyp_neg_hinted(beta, gamma, cfg, &Hints::default())
}

pub(crate) fn check_hyp_neg_hinted(_beta: f64, gamma: f64, cfg: &Config, hints: &Hints) -> Result<Verdict> {
    let item = half_length_sq(-gamma / 4.0, 3, cfg, hints.gamma_half_length)?
        .map(|(u, numeric)| ItemMatch::new(WitnessSet { u: Some(u), ..WitnessSet::default() }, numeric));
    Ok(decide(vec![(CaseTag::HypNegGamma, item)]))
}

/// `ceil((sqrt(beta + 4) - 2) / sqrt(gamma))`, evaluated as written.
pub fn fuchsian_ceiling_index(beta: f64, gamma: f64) -> i64 {
    math::ceil((math::sqrt(beta + 4.0) - 2.0) / math::sqrt(gamma)) as i64
}

/// The least `k >= 1` with `tr(f g^k) = sqrt(beta + 4) - k sqrt(gamma) <= 2`,
/// with the comparison widened by `tol` so that points on the `tr = 2`
/// parabolas keep their index.
fn fuchsian_index(tr_f: f64, sqrt_gamma: f64, tol: f64) -> u32 {
    let mut k = math::ceil((tr_f - 2.0 - tol) / sqrt_gamma).max(1.0) as u32;
    while k > 1 && tr_f - (k - 1) as f64 * sqrt_gamma <= 2.0 + tol {
        k -= 1;
    }
    while tr_f - k as f64 * sqrt_gamma > 2.0 + tol {
        k += 1;
    }
    k
}

/// Hyperbolic `f`, `gamma > 0`. With `k` the least index for which
/// `x = tr(f g^k) <= 2`, so that `tr f = k sqrt(gamma) + x`:
/// 1. `x = 2` and `gamma = 16 cosh^4 u`, `t(u) >= 3`;
/// 2. `x = +-2 cos(q pi / n)` and `gamma = 4 C(q, n) (cos(pi / n) + cosh u)^2`,
///    including `n = 2` (`x = 0`);
/// 3. `x = -2 cosh u` with `u >= 0` real (then `gamma > 4 (1 + cosh u)^2`
///    holds automatically).
pub fn check_hyp_fuchsian(beta: f64, gamma: f64, cfg: &Config) -> Result<Verdict> {
    let tr_f = math::sqrt(beta + 4.0);
    let sqrt_gamma = math::sqrt(gamma);
    let tol_x = cfg.tol * tr_f.max(1.0);
    let k = fuchsian_index(tr_f, sqrt_gamma, tol_x);
    let x = tr_f - k as f64 * sqrt_gamma;
    let base = WitnessSet { k: Some(k), ..WitnessSet::default() };

    let mut items = vec![];
    if (x - 2.0).abs() <= tol_x {
        let item1 = half_length_sq(sqrt_gamma / 4.0, 3, cfg, None)?
            .map(|(u, numeric)| ItemMatch::new(WitnessSet { u: Some(u), ..base }, numeric));
        items.push((CaseTag::HypPos1, item1));
    } else if x > -2.0 + tol_x {
        items.push((CaseTag::HypPos2, elliptic_power_item(x, gamma, cfg, base)?));
    } else {
        let c = -x / 2.0;
        let u = HalfLength::from_cosh_at_least_one(if c <= 1.0 + cfg.tol { 1.0 } else { c });
        let bound = 2.0 + 2.0 * u.cosh();
        let item3 = if sqrt_gamma > bound - tol_x {
            Recognition::Found(ItemMatch::new(WitnessSet { u: Some(u), ..base }, true))
        } else {
            Recognition::Absent
        };
        items.push((CaseTag::HypPos3, item3));
    }
    Ok(decide(items))
}

/// Item 2: `f g^k` elliptic with trace `x` in `(-2, 2)`.
fn elliptic_power_item(x: f64, gamma: f64, cfg: &Config, base: WitnessSet) -> Result<Recognition<ItemMatch>> {
    let beta_power = (x * x - 4.0).max(-4.0);
    let (n, q) = match scan_elliptic_beta(beta_power, cfg.n_max, cfg.tol)? {
        Recognition::Found(nq) => nq,
        Recognition::Absent => return Ok(Recognition::Absent),
        Recognition::BeyondBound => return Ok(Recognition::BeyondBound),
    };
    let sign = if n == 2 || x >= 0.0 { Sign::Plus } else { Sign::Minus };
    let c = c_constant(q, ExtendedOrder::Finite(n))?;
    let cos_n = if n == 2 { 0.0 } else { math::cos(math::PI / n as f64) };
    let y = math::sqrt(gamma / (4.0 * c)) - cos_n;
    Ok(half_length(y, 2, cfg)?.map(|u| {
        let w = WitnessSet { u: Some(u), n: Some(n), q: Some(q), sign: Some(sign), ..base };
        let mut m = ItemMatch::new(w, true);
        if u == HalfLength::Elliptic(2) {
            m.notes.push("order-two half-length witness (t(u) = 2)");
        }
        m
    }))
}
