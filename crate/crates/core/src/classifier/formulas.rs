use super::{CaseTag, Sign, WitnessSet};
use crate::math;
use crate::types::{c_constant, cos_pi_over, ExtendedOrder};
use crate::{Error, Result};

/// Evaluates the case formula on the witnesses and returns `(beta, gamma)`.
///
/// Some families leave one coordinate free (`beta` for `HypNegGamma`,
/// `gamma` for `HypPos3` and `LoxNeg1`); that coordinate is taken from the
/// arguments unchanged.
pub fn reproduce(case: CaseTag, w: &WitnessSet, beta: f64, gamma: f64) -> Result<(f64, f64)> {
    let u = || w.u.ok_or(Error::InvalidWitness("missing u"));
    let v = || w.v.ok_or(Error::InvalidWitness("missing v"));
    let k = || w.k.map(|k| k as f64).ok_or(Error::InvalidWitness("missing k"));
    let p = || w.p.ok_or(Error::InvalidWitness("missing p"));
    let sign = || w.sign.map(Sign::factor).ok_or(Error::InvalidWitness("missing sign"));
    let sq = |x: f64| x * x;

    Ok(match case {
        CaseTag::EllStrip1 | CaseTag::EllStrip2 => {
            let (order, q) = match (w.n, w.q) {
                (Some(n), Some(q)) => (ExtendedOrder::Finite(n), q),
                (None, None) => (ExtendedOrder::Omega, 1),
                _ => return Err(Error::InvalidWitness("n and q must be given together")),
            };
            let c = c_constant(q, order)?;
            let b = match order {
                ExtendedOrder::Finite(n) => -4.0 * math::sin_sq_frac(q, n),
                _ => 0.0,
            };
            let g = if case == CaseTag::EllStrip1 {
                -4.0 * c * u()?.cosh_sq()
            } else {
                let cos_n = match order {
                    ExtendedOrder::Finite(n) => cos_pi_over(n),
                    _ => 1.0,
                };
                4.0 * c * sq(cos_n + u()?.cosh())
            };
            (b, g)
        }
        CaseTag::EllStrip3 => (0.0, 4.0 * sq(1.0 + math::cos(2.0 * math::PI / p()? as f64))),
        CaseTag::HypNegGamma => (beta, -4.0 * u()?.cosh_sq()),
        CaseTag::HypPos1 => {
            let g = 16.0 * sq(u()?.cosh_sq());
            (sq(k()? * math::sqrt(g) + 2.0) - 4.0, g)
        }
        CaseTag::HypPos2 => {
            let n = w.n.ok_or(Error::InvalidWitness("missing n"))?;
            let q = w.q.ok_or(Error::InvalidWitness("missing q"))?;
            let c = c_constant(q, ExtendedOrder::Finite(n))?;
            let g = 4.0 * c * sq(cos_pi_over(n) + u()?.cosh());
            let x = if n == 2 { 0.0 } else { 2.0 * math::cos(q as f64 * math::PI / n as f64) };
            (sq(k()? * math::sqrt(g) + sign()? * x) - 4.0, g)
        }
        CaseTag::HypPos3 => (sq(k()? * math::sqrt(gamma) - 2.0 * u()?.cosh()) - 4.0, gamma),
        CaseTag::LoxNeg1 => {
            let s = math::sqrt(-gamma);
            let r = math::sqrt((s * s - 8.0 * (1.0 + u()?.cosh())).max(0.0));
            let a = ((2.0 * k()? - 1.0) * s + sign()? * r) / 2.0;
            (-a * a - 4.0, gamma)
        }
        CaseTag::LoxNeg2 => {
            let s = 4.0 * cos_pi_over(p()?);
            let a = (2.0 * k()? - 1.0) * s / 2.0;
            (-a * a - 4.0, -s * s)
        }
        CaseTag::LoxNeg3 => {
            let g = -4.0 * u()?.cosh_sq();
            (k()? * k()? * g - 4.0, g)
        }
        CaseTag::LoxPosEven => {
            let g = 4.0 * u()?.cosh_sq();
            (-4.0 * v()?.cosh_sq() / g - 4.0, g)
        }
        CaseTag::LoxPosOdd => (-4.0 * v()?.cosh_sq() - 4.0, 4.0 * u()?.cosh_sq()),
    })
}
