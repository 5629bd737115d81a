use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::{params_of, Mobius, MobiusPair};
use crate::classifier::{CaseTag, Certificate, Config, Verdict, WitnessSet};
use crate::types::{scan_elliptic_beta, ElementClass, EllipticOrder, HalfLength, Recognition};
use crate::{Error, Result};

type C = Complex64;

/// Classifies `m` by `beta = tr^2 m - 4`, resolving elliptic orders up to
/// `n_max`. Non-real `beta` is strictly loxodromic.
pub fn classify_mobius(m: &Mobius, n_max: u32, tol: f64) -> ElementClass {
    if m.is_identity(tol) {
        return ElementClass::Identity;
    }
    let beta = m.beta();
    let scale = beta.norm().max(1.0);
    if beta.im.abs() > tol * scale {
        return ElementClass::StrictlyLoxodromic;
    }
    let b = beta.re;
    if b.abs() <= tol * scale {
        ElementClass::Parabolic
    } else if b > 0.0 {
        ElementClass::Hyperbolic
    } else if b < -4.0 - tol * scale {
        ElementClass::PiLoxodromic
    } else {
        let order = match scan_elliptic_beta(b.max(-4.0), n_max, tol * scale) {
            Ok(Recognition::Found((n, q))) => EllipticOrder::Finite { n, q },
            Ok(Recognition::BeyondBound) => EllipticOrder::BeyondBound,
            _ => EllipticOrder::Irrational,
        };
        ElementClass::Elliptic(order)
    }
}

/// All `h` in PSL(2, C) with `h^2 = m`: one for parabolic `m`, two otherwise.
///
/// With `T = tr m`, the roots are `(m + I) / sqrt(T + 2)` and
/// `(I - m) / sqrt(2 - T)`; the parabolic case loses the root whose
/// denominator vanishes.
pub fn sqrt_in_psl(m: &Mobius) -> Result<Vec<Mobius>> {
    let m = m.normalized();
    if m.is_identity(1e-12) {
        return Err(Error::IdentityMatrix);
    }
    let t = m.trace();
    let eps = 1e-9 * t.norm().max(1.0);
    let mut out = Vec::with_capacity(2);
    for sign in [1.0, -1.0] {
        let denom = t * sign + 2.0;
        if denom.norm() > eps {
            let s = denom.sqrt().inv();
            let sm = m.scale(C::new(sign, 0.0));
            out.push(Mobius::new((sm.a + 1.0) * s, sm.b * s, sm.c * s, (sm.d + 1.0) * s));
        }
    }
    Ok(out)
}

/// The square root `h` of `w` that makes `h x` an involution, that is
/// `tr(h x) = 0`. Returns the root and its residual `|tr(h x)|`, scaled by
/// the entry sizes.
fn involution_root(w: &Mobius, x: &Mobius, tol: f64) -> Result<(Mobius, f64)> {
    let mut best: Option<(Mobius, f64)> = None;
    for h in sqrt_in_psl(w)? {
        let r = (h * *x).trace().norm() / (h.max_norm() * x.max_norm()).max(1.0);
        if best.is_none_or(|(_, b)| r < b) {
            best = Some((h, r));
        }
    }
    match best {
        Some((h, r)) if r <= tol => Ok((h, r)),
        Some((_, r)) => Err(Error::NoInvolutionRoot { best_residual: r }),
        None => Err(Error::NoInvolutionRoot { best_residual: f64::INFINITY }),
    }
}

/// The root `h1` of `f g^-1 f^-1 g^-1` with `(h1 g)^2 = 1`.
pub fn compute_h1(pair: &MobiusPair, tol: f64) -> Result<Mobius> {
    let (f, g) = (pair.f, pair.g);
    let w = f * g.inv() * f.inv() * g.inv();
    involution_root(&w, &g, tol).map(|(h, _)| h)
}

/// The root `h2` of `f^-1 g^-1 f^2 g f^-1` with `(h2 f g^-1 f^-1)^2 = 1`.
pub fn compute_h2(pair: &MobiusPair, tol: f64) -> Result<Mobius> {
    let (f, g) = (pair.f, pair.g);
    let (fi, gi) = (f.inv(), g.inv());
    let w = fi * gi * f * f * g * fi;
    let x = f * gi * fi;
    involution_root(&w, &x, tol).map(|(h, _)| h)
}

/// The half-length `u` with `tr^2 m = 4 cosh^2 u`, for the classes that
/// have one.
pub fn half_length_of(m: &Mobius, class: ElementClass) -> Option<HalfLength> {
    match class {
        ElementClass::Elliptic(EllipticOrder::Finite { n, q: 1 }) => Some(HalfLength::Elliptic(n)),
        ElementClass::Parabolic => Some(HalfLength::Parabolic),
        ElementClass::Hyperbolic => Some(HalfLength::from_cosh_at_least_one(m.trace().norm() / 2.0)),
        _ => None,
    }
}

enum Admissible {
    Yes(HalfLength),
    No,
    Unknown,
}

/// Hyperbolic, parabolic, or primitive elliptic of order at least `min`.
fn admissible(m: &Mobius, class: ElementClass, min: u32) -> Admissible {
    match class {
        ElementClass::Elliptic(EllipticOrder::BeyondBound) => Admissible::Unknown,
        _ => match half_length_of(m, class) {
            Some(u) if u.order().at_least(min) => Admissible::Yes(u),
            _ => Admissible::No,
        },
    }
}

/// Decides discreteness of `<f, g>` (with `beta < -4`, `gamma > 0`) from
/// the classes of `h1`, `h2`:
///
/// * `h1` hyperbolic, parabolic, or primitive elliptic of even order
///   `m >= 4`: discrete iff `h2` is hyperbolic, parabolic, or primitive
///   elliptic of order at least 3;
/// * `h1` primitive elliptic of odd order `m >= 3`: discrete iff `h2 h1`
///   is hyperbolic, parabolic, or primitive elliptic of order at least 3.
///
/// The certificate carries `u` from `h1` and `v` from `h2` (resp. `h2 h1`).
pub fn verify_criterion_psl(pair: &MobiusPair, cfg: &Config) -> Result<Verdict> {
    let (beta, _, gamma) = params_of(pair);
    let scale = beta.norm().max(gamma.norm()).max(1.0);
    if beta.im.abs() > 1e-9 * scale || gamma.im.abs() > 1e-9 * scale || !(beta.re < -4.0) || !(gamma.re > 0.0) {
        return Err(Error::OutOfRange { what: "pair outside beta < -4, gamma > 0", value: beta.re });
    }
    let tol = cfg.tol;
    let h1 = compute_h1(pair, tol.max(1e-9))?;
    let h2 = compute_h2(pair, tol.max(1e-9))?;
    let c1 = classify_mobius(&h1, cfg.n_max, tol);

    let (case, second) = match c1 {
        ElementClass::Elliptic(EllipticOrder::Finite { n, q: 1 }) if n % 2 == 1 && n >= 3 => {
            (CaseTag::LoxPosOdd, h2 * h1)
        }
        _ => (CaseTag::LoxPosEven, h2),
    };
    let u = match admissible(&h1, c1, 3) {
        Admissible::Yes(u) => u,
        Admissible::No => return Ok(Verdict::NotDiscrete),
        Admissible::Unknown => return Ok(indeterminate("h1")),
    };
    let c2 = classify_mobius(&second, cfg.n_max, tol);
    match admissible(&second, c2, 3) {
        Admissible::Yes(v) => Ok(Verdict::Discrete(Certificate {
            case,
            witnesses: WitnessSet { u: Some(u), v: Some(v), ..WitnessSet::default() },
            alternates: Vec::new(),
            within_tolerance: true,
            notes: Vec::new(),
        })),
        Admissible::No => Ok(Verdict::NotDiscrete),
        Admissible::Unknown => Ok(indeterminate(if case == CaseTag::LoxPosOdd { "h2 h1" } else { "h2" })),
    }
}

fn indeterminate(which: &str) -> Verdict {
    Verdict::Indeterminate { reason: alloc::format!("elliptic order of {which} exceeds the recognition bound") }
}

/// The Jorgensen necessary condition `|beta| + |gamma| >= 1` for a discrete
/// non-elementary group.
pub fn jorgensen_check(beta: C, gamma: C) -> bool {
    beta.norm() + gamma.norm() >= 1.0
}

/// Human-readable class name: `elliptic(4)`, `elliptic(5/2)`, `parabolic`.
pub fn class_name(class: ElementClass) -> String {
    match class {
        ElementClass::Identity => "identity".into(),
        ElementClass::Elliptic(EllipticOrder::Finite { n, q: 1 }) => alloc::format!("elliptic({n})"),
        ElementClass::Elliptic(EllipticOrder::Finite { n, q }) => alloc::format!("elliptic({n}/{q})"),
        ElementClass::Elliptic(EllipticOrder::Irrational) => "elliptic(irrational)".into(),
        ElementClass::Elliptic(EllipticOrder::BeyondBound) => "elliptic(beyond-bound)".into(),
        ElementClass::Elliptic(EllipticOrder::Unresolved) => "elliptic".into(),
        ElementClass::Parabolic => "parabolic".into(),
        ElementClass::Hyperbolic => "hyperbolic".into(),
        ElementClass::PiLoxodromic => "pi-loxodromic".into(),
        ElementClass::StrictlyLoxodromic => "loxodromic".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{realize_lox, realize_strip};
    use super::*;
    use crate::math;
    use proptest::prelude::*;

    const TOL: f64 = 1e-9;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn classify_examples() {
        let th = math::PI / 5.0;
        let rot = Mobius::real(math::cos(th), -math::sin(th), math::sin(th), math::cos(th));
        assert_eq!(classify_mobius(&rot, 200, TOL), ElementClass::Elliptic(EllipticOrder::Finite { n: 5, q: 1 }));
        let s = (math::cosh(1.0) * math::cosh(1.0) - 1.0).sqrt();
        let lox = Mobius::new(
            C::new(0.0, s + (s * s + 1.0).sqrt()),
            C::new(0.0, 0.0),
            C::new(0.0, 0.0),
            C::new(0.0, s - (s * s + 1.0).sqrt()),
        );
        assert!(((lox.trace()) - C::new(0.0, 2.0 * s)).norm() < 1e-12);
        assert_eq!(classify_mobius(&lox, 200, TOL), ElementClass::PiLoxodromic);
        assert_eq!(classify_mobius(&Mobius::IDENTITY, 200, TOL), ElementClass::Identity);
        assert_eq!(classify_mobius(&Mobius::real(1.0, 1.0, 0.0, 1.0), 200, TOL), ElementClass::Parabolic);
        let l = Mobius::new(C::new(2.0, 1.0), C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(2.0, 1.0).inv());
        assert_eq!(classify_mobius(&l, 200, TOL), ElementClass::StrictlyLoxodromic);
    }

    #[test]
    fn sqrt_examples() {
        let m = Mobius::real(4.0, 0.0, 0.0, 0.25);
        let roots = sqrt_in_psl(&m).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().any(|h| h.projectively_eq(&Mobius::real(2.0, 0.0, 0.0, 0.5), 1e-12)));
        for h in &roots {
            assert!((*h * *h).projectively_eq(&m, 1e-12));
        }
        let p = Mobius::real(1.0, 1.0, 0.0, 1.0);
        let roots = sqrt_in_psl(&p).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].projectively_eq(&Mobius::real(1.0, 0.5, 0.0, 1.0), 1e-12));
        assert_eq!(sqrt_in_psl(&Mobius::IDENTITY), Err(Error::IdentityMatrix));
    }

    #[test]
    fn h1_h2_for_ph_witness() {
        let pair = realize_lox(-4.5, 2.0).unwrap();
        let h1 = compute_h1(&pair, TOL).unwrap();
        let h2 = compute_h2(&pair, TOL).unwrap();
        assert_eq!(classify_mobius(&h1, 200, TOL), ElementClass::Elliptic(EllipticOrder::Finite { n: 4, q: 1 }));
        assert_eq!(classify_mobius(&h2, 200, TOL), ElementClass::Elliptic(EllipticOrder::Finite { n: 3, q: 1 }));
        let v = verify_criterion_psl(&pair, &cfg()).unwrap();
        assert_eq!(v.case(), Some(CaseTag::LoxPosEven));
    }

    #[test]
    fn h1_parabolic_at_gamma_four() {
        let pair = realize_lox(-6.0, 4.0).unwrap();
        let h1 = compute_h1(&pair, TOL).unwrap();
        assert_eq!(classify_mobius(&h1, 200, TOL), ElementClass::Parabolic);
    }

    #[test]
    fn h2_parabolic_witness() {
        // v = 0: -gamma (beta + 4) / 4 = 1.
        let pair = realize_lox(-4.8, 5.0).unwrap();
        let h2 = compute_h2(&pair, TOL).unwrap();
        assert_eq!(classify_mobius(&h2, 200, TOL), ElementClass::Parabolic);
    }

    #[test]
    fn verify_examples() {
        let v = verify_criterion_psl(&realize_lox(-4.7, 2.0).unwrap(), &cfg()).unwrap();
        assert_eq!(v, Verdict::NotDiscrete);
        let gamma = 4.0 * math::cos(math::PI / 5.0).powi(2);
        let v = verify_criterion_psl(&realize_lox(-5.0, gamma).unwrap(), &cfg()).unwrap();
        let c = v.certificate().unwrap();
        assert_eq!(c.case, CaseTag::LoxPosOdd);
        assert_eq!(c.witnesses.u, Some(HalfLength::Elliptic(5)));
        assert_eq!(c.witnesses.v, Some(HalfLength::Elliptic(3)));
        assert!(verify_criterion_psl(&realize_strip(3, 1, 1.0).unwrap(), &cfg()).is_err());
    }

    #[test]
    fn jorgensen_examples() {
        assert!(jorgensen_check(C::new(0.0, 0.0), C::new(16.0, 0.0)));
        assert!(!jorgensen_check(C::new(0.0, 0.0), C::new(0.5, 0.0)));
    }

    proptest! {
        #[test]
        fn defining_relations_hold(beta in -30.0f64..-4.05, gamma in 0.1f64..30.0) {
            let pair = realize_lox(beta, gamma).unwrap();
            let (f, g) = (pair.f, pair.g);
            let h1 = compute_h1(&pair, TOL).unwrap();
            let h2 = compute_h2(&pair, TOL).unwrap();
            prop_assert!((h1 * h1).projectively_eq(&(f * g.inv() * f.inv() * g.inv()), 1e-9));
            prop_assert!((h1 * g).pow(2).is_identity(1e-9));
            let w2 = f.inv() * g.inv() * f * f * g * f.inv();
            prop_assert!((h2 * h2).projectively_eq(&w2, 1e-9));
            prop_assert!((h2 * f * g.inv() * f.inv()).pow(2).is_identity(1e-9));
            // tr^2 h1 = gamma and tr^2 h2 = -gamma (beta + 4).
            prop_assert!(((h1.trace() * h1.trace()) - gamma).norm() < 1e-8 * gamma.max(1.0));
            let t2 = -gamma * (beta + 4.0);
            prop_assert!(((h2.trace() * h2.trace()) - t2).norm() < 1e-8 * t2.max(1.0));
        }

        #[test]
        fn sqrt_squares_back(re in -5.0f64..5.0, im in -5.0f64..5.0, c in -3.0f64..3.0) {
            let a = C::new(re, im);
            prop_assume!(a.norm() > 0.1);
            let m = Mobius::new(a, C::new(c, 0.0), C::new(0.0, 0.0), a.inv());
            prop_assume!(!m.is_identity(1e-6));
            for h in sqrt_in_psl(&m).unwrap() {
                prop_assert!((h * h).projectively_eq(&m, 1e-10));
            }
        }
    }
}
