//! Trace identities for a pair `(f, g)` with `g` parabolic.
//!
//! Traces are complex: a pi-loxodromic `f` has a purely imaginary trace.

use num_complex::Complex64;

use crate::{Error, Result};

/// Traces of `f`, `g` and `fg`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceTriple {
    pub tr_f: Complex64,
    pub tr_g: Complex64,
    pub tr_fg: Complex64,
}

impl TraceTriple {
    pub fn new(tr_f: Complex64, tr_g: Complex64, tr_fg: Complex64) -> Self {
        Self { tr_f, tr_g, tr_fg }
    }

    pub fn real(tr_f: f64, tr_g: f64, tr_fg: f64) -> Self {
        Self::new(tr_f.into(), tr_g.into(), tr_fg.into())
    }
}

/// `tr[f,g] - 2` by the Fricke identity:
/// `tr^2 f + tr^2 g + tr^2 fg - tr f tr g tr fg - 4`.
pub fn fricke_commutator_gamma(t: TraceTriple) -> Complex64 {
    t.tr_f * t.tr_f + t.tr_g * t.tr_g + t.tr_fg * t.tr_fg - t.tr_f * t.tr_g * t.tr_fg - 4.0
}

/// `gamma = (tr fg - sign(tr g) tr f)^2`, valid when `g` is parabolic.
pub fn gamma_parabolic(t: TraceTriple) -> Result<Complex64> {
    let sign = parabolic_sign(t.tr_g)?;
    let d = t.tr_fg - t.tr_f * sign;
    Ok(d * d)
}

/// Sign of a parabolic trace, which must be `+2` or `-2` up to rounding.
fn parabolic_sign(tr_g: Complex64) -> Result<f64> {
    const TOL: f64 = 1e-9;
    if (tr_g - 2.0).norm() <= TOL {
        Ok(1.0)
    } else if (tr_g + 2.0).norm() <= TOL {
        Ok(-1.0)
    } else {
        Err(Error::NotParabolicTrace)
    }
}

/// `tr(f g^k) = k (tr fg - tr f) + tr f`, for `tr g = 2`.
pub fn tr_fg_pow(tr_f: Complex64, tr_fg: Complex64, k: i64) -> Complex64 {
    (tr_fg - tr_f) * k as f64 + tr_f
}

/// One step of `tr(f g^k) = tr(f g^(k-1)) tr g - tr(f g^(k-2))`.
pub fn trace_recursion_step(tr_prev: Complex64, tr_g: Complex64, tr_prev2: Complex64) -> Complex64 {
    tr_prev * tr_g - tr_prev2
}

/// `gamma(f^r, g) = (beta(f^r) / beta(f)) gamma(f, g)`.
pub fn gamma_rescale_primitive(beta_f: f64, beta_fr: f64, gamma: f64) -> Result<f64> {
    if beta_f == 0.0 {
        return Err(Error::ZeroDivisor("beta(f)"));
    }
    Ok(beta_fr / beta_f * gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{c_constant, ExtendedOrder};
    use num_complex::Complex64 as C;
    use proptest::prelude::*;

    #[test]
    fn fricke_examples() {
        assert_eq!(fricke_commutator_gamma(TraceTriple::real(2.0, 2.0, 2.0)), C::new(0.0, 0.0));
        assert_eq!(fricke_commutator_gamma(TraceTriple::real(2.0, 2.0, 5.0)), C::new(9.0, 0.0));
        assert_eq!(fricke_commutator_gamma(TraceTriple::real(0.0, 2.0, 2.0)), C::new(4.0, 0.0));
    }

    #[test]
    fn gamma_parabolic_examples() {
        assert_eq!(gamma_parabolic(TraceTriple::real(3.0, 2.0, 5.0)).unwrap(), C::new(4.0, 0.0));
        assert_eq!(gamma_parabolic(TraceTriple::real(3.0, -2.0, 5.0)).unwrap(), C::new(64.0, 0.0));
        assert_eq!(gamma_parabolic(TraceTriple::real(3.0, 1.9, 5.0)), Err(Error::NotParabolicTrace));
    }

    #[test]
    fn power_law_examples() {
        let (f, fg) = (C::new(3.0, 0.0), C::new(5.0, 0.0));
        assert_eq!(tr_fg_pow(f, fg, 0), f);
        assert_eq!(tr_fg_pow(f, fg, 2), C::new(7.0, 0.0));
        assert_eq!(tr_fg_pow(f, fg, -1), C::new(1.0, 0.0));
        assert_eq!(trace_recursion_step(C::new(5.0, 0.0), C::new(2.0, 0.0), f), C::new(7.0, 0.0));
        assert_eq!(trace_recursion_step(C::new(2.0, 0.0), C::new(2.0, 0.0), C::new(2.0, 0.0)), C::new(2.0, 0.0));
    }

    #[test]
    fn rescale_examples() {
        let s = |q: f64| (q * core::f64::consts::PI / 5.0).sin().powi(2);
        let g = gamma_rescale_primitive(-4.0 * s(2.0), -4.0 * s(1.0), 1.0).unwrap();
        let inv_c = 1.0 / c_constant(2, ExtendedOrder::Finite(5)).unwrap();
        assert!((g - inv_c).abs() < 1e-12);
        assert!((g - 0.381966).abs() < 1e-6);
        assert_eq!(gamma_rescale_primitive(-2.0, -2.0, 3.5).unwrap(), 3.5);
        assert!(gamma_rescale_primitive(0.0, -1.0, 1.0).is_err());
    }

    fn complex() -> impl Strategy<Value = C> {
        (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(re, im)| C::new(re, im))
    }

    proptest! {
        #[test]
        fn parabolic_gamma_matches_fricke(f in complex(), fg in complex(), plus in any::<bool>()) {
            let g = if plus { C::new(2.0, 0.0) } else { C::new(-2.0, 0.0) };
            let t = TraceTriple::new(f, g, fg);
            let a = gamma_parabolic(t).unwrap();
            let b = fricke_commutator_gamma(t);
            prop_assert!((a - b).norm() <= 1e-9 * a.norm().max(1.0));
        }

        #[test]
        fn power_law_satisfies_recursion(f in complex(), fg in complex(), k in -10i64..20) {
            let two = C::new(2.0, 0.0);
            let next = trace_recursion_step(tr_fg_pow(f, fg, k + 1), two, tr_fg_pow(f, fg, k));
            let direct = tr_fg_pow(f, fg, k + 2);
            prop_assert!((next - direct).norm() <= 1e-9 * direct.norm().max(1.0));
        }
    }
}
