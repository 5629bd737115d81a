use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{witness_key, CurveFamily, Geometry, Limits, Sample, Window};
use crate::classifier::{CaseTag, Sign, WitnessSet};
use crate::math;
use crate::types::{c_constant, cos_pi_over, valid_rotation, ExtendedOrder, HalfLength};

/// Scan resolution used to locate where a curve enters and leaves the window.
const SCAN: usize = 1024;

/// Samples `eval` on `[t0, t1]`, restricted to the parameter range whose
/// image lies in the window. Open ends drop the endpoint itself.
fn trace(w: &Window, t0: f64, t1: f64, open: (bool, bool), eval: impl Fn(f64) -> Option<(f64, f64)>) -> Vec<f64> {
    if !(t0.is_finite() && t1.is_finite()) || t1 < t0 {
        return Vec::new();
    }
    let inside = |t: f64| eval(t).is_some_and(|(g, b)| w.contains(g, b));
    let at = |i: usize| t0 + (t1 - t0) * i as f64 / SCAN as f64;
    let Some(first) = (0..=SCAN).find(|&i| inside(at(i))) else {
        return Vec::new();
    };
    let last = (0..=SCAN).rev().find(|&i| inside(at(i))).unwrap_or(first);
    let refine = |mut good: f64, mut bad: f64| {
        for _ in 0..80 {
            let mid = 0.5 * (good + bad);
            if inside(mid) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        good
    };
    let lo = if first == 0 { t0 } else { refine(at(first), at(first - 1)) };
    let hi = if last == SCAN { t1 } else { refine(at(last), at(last + 1)) };
    let n = w.samples;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let t = if n == 1 { lo } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 };
        if (open.0 && t <= t0) || (open.1 && t >= t1) {
            continue;
        }
        if inside(t) {
            out.push(t);
        }
    }
    out
}

struct Builder<'a> {
    w: &'a Window,
    out: Vec<CurveFamily>,
}

impl Builder<'_> {
    fn point(&mut self, case: CaseTag, indices: WitnessSet, gamma: f64, beta: f64) {
        if gamma.abs() > 1e-12 && self.w.contains(gamma, beta) {
            let samples = alloc::vec![Sample { gamma, beta, u: None, v: None }];
            self.out.push(CurveFamily { case, indices, geometry: Geometry::Point, samples });
        }
    }

    /// A curve with continuous parameter `t`; `eval` maps `t` to the point
    /// and the sampled half-lengths.
    #[allow(clippy::too_many_arguments)]
    fn curve(
        &mut self,
        case: CaseTag,
        indices: WitnessSet,
        geometry: Geometry,
        range: (f64, f64),
        open: (bool, bool),
        eval: impl Fn(f64) -> Option<Sample>,
    ) {
        let ts = trace(self.w, range.0, range.1, open, |t| eval(t).map(|s| (s.gamma, s.beta)));
        let samples: Vec<Sample> = ts.into_iter().filter_map(&eval).collect();
        if !samples.is_empty() {
            self.out.push(CurveFamily { case, indices, geometry, samples });
        }
    }
}

fn cosh_half_length(t: f64) -> HalfLength {
    HalfLength::from_cosh_at_least_one(t)
}

fn sq(x: f64) -> f64 {
    x * x
}

/// Admissible `(n, q)` with `n <= n_max`, in increasing `n` then `q`.
fn rotations(n_max: u32) -> impl Iterator<Item = (u32, u32)> {
    (2..=n_max).flat_map(|n| (1..=n / 2).filter(move |&q| valid_rotation(q, n)).map(move |q| (n, q)))
}

/// Lists every family that meets the window.
pub fn enumerate_families(w: &Window, limits: &Limits) -> Vec<CurveFamily> {
    let mut b = Builder { w, out: Vec::new() };
    strip_families(&mut b, limits);
    hyp_neg_families(&mut b, limits);
    hyp_pos_families(&mut b, limits);
    lox_neg_families(&mut b, limits);
    lox_pos_families(&mut b, limits);
    let mut fams = b.out;
    fams.sort_by(|a, b| {
        (a.case, witness_key(&a.indices), a.geometry).cmp(&(b.case, witness_key(&b.indices), b.geometry))
    });
    let mut seen = BTreeSet::new();
    fams.retain(|f| {
        let bits: Vec<(u64, u64)> = f.samples.iter().map(|s| (s.gamma.to_bits(), s.beta.to_bits())).collect();
        seen.insert((f.case, bits))
    });
    fams
}

/// `-4 <= beta <= 0`: for each rotation, two rays with isolated points
/// accumulating at their ends; `beta = 0` adds the odd points.
fn strip_families(b: &mut Builder<'_>, lim: &Limits) {
    let w = *b.w;
    let orders = rotations(lim.n_max).map(|(n, q)| (ExtendedOrder::Finite(n), q)).chain([(ExtendedOrder::Omega, 1)]);
    for (order, q) in orders {
        let (beta, cos_n, n) = match order {
            ExtendedOrder::Finite(n) => (-4.0 * math::sin_sq_frac(q, n), cos_pi_over(n), Some(n)),
            _ => (0.0, 1.0, None),
        };
        if beta < w.beta_min || beta > w.beta_max {
            continue;
        }
        let c = c_constant(q, order).unwrap_or(1.0);
        let base = WitnessSet { n, q: n.map(|_| q), ..WitnessSet::default() };

        for p in 3..=lim.p_max {
            let u = HalfLength::Elliptic(p);
            b.point(CaseTag::EllStrip1, WitnessSet { u: Some(u), ..base }, -4.0 * c * u.cosh_sq(), beta);
        }
        if w.gamma_min < 0.0 {
            let t1 = math::sqrt(-w.gamma_min / (4.0 * c));
            b.curve(CaseTag::EllStrip1, base, Geometry::Ray, (1.0, t1), (false, false), |t| {
                Some(Sample { gamma: -4.0 * c * t * t, beta, u: Some(cosh_half_length(t)), v: None })
            });
        }

        for p in 2..=lim.p_max {
            let u = HalfLength::Elliptic(p);
            b.point(CaseTag::EllStrip2, WitnessSet { u: Some(u), ..base }, 4.0 * c * sq(cos_n + u.cosh()), beta);
        }
        if w.gamma_max > 0.0 {
            let t1 = math::sqrt(w.gamma_max / (4.0 * c)) - cos_n;
            b.curve(CaseTag::EllStrip2, base, Geometry::Ray, (1.0, t1), (false, false), |t| {
                Some(Sample { gamma: 4.0 * c * sq(cos_n + t), beta, u: Some(cosh_half_length(t)), v: None })
            });
        }

        if n.is_none() {
            for k in (3..=lim.p_max).step_by(2) {
                let gamma = 4.0 * sq(1.0 + math::cos(2.0 * math::PI / k as f64));
                b.point(CaseTag::EllStrip3, WitnessSet { p: Some(k), ..WitnessSet::default() }, gamma, 0.0);
            }
        }
    }
}

/// `beta > 0`, `gamma < 0`: vertical lines at `gamma = -4 cosh^2 u` for
/// elliptic and parabolic `u`; hyperbolic `u` fills region `A`.
fn hyp_neg_families(b: &mut Builder<'_>, lim: &Limits) {
    let w = *b.w;
    if w.beta_max <= 0.0 {
        return;
    }
    let us = (3..=lim.p_max).map(HalfLength::Elliptic).chain([HalfLength::Parabolic]);
    for u in us {
        let gamma = -4.0 * u.cosh_sq();
        let indices = WitnessSet { u: Some(u), ..WitnessSet::default() };
        b.curve(CaseTag::HypNegGamma, indices, Geometry::Line, (0.0, w.beta_max), (true, false), |t| {
            Some(Sample { gamma, beta: t, u: None, v: None })
        });
    }
}

/// `beta > 0`, `gamma > 0`, for each `k`.
fn hyp_pos_families(b: &mut Builder<'_>, lim: &Limits) {
    let w = *b.w;
    if w.beta_max <= 0.0 || w.gamma_max <= 0.0 {
        return;
    }
    for k in 1..=lim.k_max {
        let kf = k as f64;
        let base = WitnessSet { k: Some(k), ..WitnessSet::default() };

        // tr(f g^k) = 2 and gamma = 16 cosh^4 u.
        let beta1 = |gamma: f64| sq(kf * math::sqrt(gamma) + 2.0) - 4.0;
        for p in 3..=lim.p_max {
            let u = HalfLength::Elliptic(p);
            let gamma = 16.0 * sq(u.cosh_sq());
            b.point(CaseTag::HypPos1, WitnessSet { u: Some(u), ..base }, gamma, beta1(gamma));
        }
        let t1 = math::pow(w.gamma_max / 16.0, 0.25);
        b.curve(CaseTag::HypPos1, base, Geometry::Parabola, (1.0, t1), (false, false), |t| {
            let gamma = 16.0 * sq(t * t);
            Some(Sample { gamma, beta: beta1(gamma), u: Some(cosh_half_length(t)), v: None })
        });

        // tr(f g^k) = +-2 cos(q pi / n).
        for (n, q) in rotations(lim.n_max) {
            let c = c_constant(q, ExtendedOrder::Finite(n)).unwrap_or(1.0);
            let cos_n = cos_pi_over(n);
            let signs: &[Sign] = if n == 2 { &[Sign::Plus] } else { &[Sign::Plus, Sign::Minus] };
            for &sign in signs {
                let x = if n == 2 { 0.0 } else { sign.factor() * 2.0 * math::cos(q as f64 * math::PI / n as f64) };
                let idx = WitnessSet { n: Some(n), q: Some(q), sign: Some(sign), ..base };
                // Least index: tr(f g^(k-1)) = x + sqrt(gamma) must exceed 2.
                let point_of = move |gamma: f64| {
                    let sg = math::sqrt(gamma);
                    (x + sg > 2.0 + 1e-6).then(|| sq(kf * sg + x) - 4.0)
                };
                for p in 2..=lim.p_max {
                    let u = HalfLength::Elliptic(p);
                    let gamma = 4.0 * c * sq(cos_n + u.cosh());
                    if let Some(beta) = point_of(gamma) {
                        b.point(CaseTag::HypPos2, WitnessSet { u: Some(u), ..idx }, gamma, beta);
                    }
                }
                let t1 = math::sqrt(w.gamma_max / (4.0 * c)) - cos_n;
                b.curve(CaseTag::HypPos2, idx, Geometry::Parabola, (1.0, t1), (false, false), |t| {
                    let gamma = 4.0 * c * sq(cos_n + t);
                    point_of(gamma).map(|beta| Sample { gamma, beta, u: Some(cosh_half_length(t)), v: None })
                });
            }
        }

        // tr(f g^k) = -2 cosh u with u = 0; larger u fills C_k.
        let idx = WitnessSet { u: Some(HalfLength::Parabolic), ..base };
        b.curve(CaseTag::HypPos3, idx, Geometry::Parabola, (16.0, w.gamma_max), (true, false), |gamma| {
            Some(Sample { gamma, beta: sq(kf * math::sqrt(gamma) - 2.0) - 4.0, u: None, v: None })
        });
    }
}

/// `beta` on the hyperbola `2 sqrt(-beta - 4) = (2k - 1) s +- sqrt(s^2 - 8 (1 + cosh u))`,
/// `s = sqrt(-gamma)`; `None` where the radicand is negative.
pub fn lox_neg1_beta(k: u32, u: HalfLength, sign: Sign, gamma: f64) -> Option<f64> {
    let s = math::sqrt(-gamma);
    let rad = s * s - 8.0 * (1.0 + u.cosh());
    if !(rad >= 0.0) {
        return None;
    }
    let a = ((2 * k - 1) as f64 * s + sign.factor() * math::sqrt(rad)) / 2.0;
    Some(-a * a - 4.0)
}

/// The two asymptotes `(slope, intercept)` of the `LoxNeg1` hyperbola with
/// indices `k`, `u`: the minus branch approaches
/// `beta = (k - 1)^2 gamma - 4 (k - 1)(1 + cosh u) - 4` and the plus branch
/// `beta = k^2 gamma + 4 k (1 + cosh u) - 4`.
pub fn asymptotes_of(k: u32, u: HalfLength) -> ((f64, f64), (f64, f64)) {
    let c = 1.0 + u.cosh();
    let km = (k - 1) as f64;
    let kf = k as f64;
    ((km * km, -4.0 * km * c - 4.0), (kf * kf, 4.0 * kf * c - 4.0))
}

/// `beta < -4`, `gamma < 0`, for each `k`.
fn lox_neg_families(b: &mut Builder<'_>, lim: &Limits) {
    let w = *b.w;
    if w.beta_min >= -4.0 || w.gamma_min >= 0.0 {
        return;
    }
    for k in 1..=lim.k_max {
        let kf = k as f64;
        let base = WitnessSet { k: Some(k), ..WitnessSet::default() };

        let us = (2..=lim.p_max).map(HalfLength::Elliptic).chain([HalfLength::Parabolic]);
        for u in us {
            let vertex = -8.0 * (1.0 + u.cosh());
            for sign in [Sign::Plus, Sign::Minus] {
                let idx = WitnessSet { u: Some(u), sign: Some(sign), ..base };
                let open_vertex = sign == Sign::Minus;
                b.curve(
                    CaseTag::LoxNeg1,
                    idx,
                    Geometry::Hyperbola,
                    (w.gamma_min, vertex),
                    (false, open_vertex),
                    |gamma| lox_neg1_beta(k, u, sign, gamma).map(|beta| Sample { gamma, beta, u: None, v: None }),
                );
            }
        }

        for p in (3..=lim.p_max).step_by(2) {
            let s = 4.0 * cos_pi_over(p);
            let a = (2.0 * kf - 1.0) * s / 2.0;
            b.point(CaseTag::LoxNeg2, WitnessSet { p: Some(p), ..base }, -s * s, -a * a - 4.0);
        }

        for p in 3..=lim.p_max {
            let u = HalfLength::Elliptic(p);
            let gamma = -4.0 * u.cosh_sq();
            b.point(CaseTag::LoxNeg3, WitnessSet { u: Some(u), ..base }, gamma, kf * kf * gamma - 4.0);
        }
        let t1 = math::sqrt(-w.gamma_min / 4.0);
        b.curve(CaseTag::LoxNeg3, base, Geometry::Ray, (1.0, t1), (false, false), |t| {
            let gamma = -4.0 * t * t;
            Some(Sample { gamma, beta: kf * kf * gamma - 4.0, u: Some(cosh_half_length(t)), v: None })
        });
    }
}

/// `beta < -4`, `gamma > 0`: `gamma = 4 cosh^2 u` and `v` through `beta`.
fn lox_pos_families(b: &mut Builder<'_>, lim: &Limits) {
    let w = *b.w;
    if w.beta_min >= -4.0 || w.gamma_max <= 0.0 {
        return;
    }
    let vs: Vec<HalfLength> = (3..=lim.p_max).map(HalfLength::Elliptic).chain([HalfLength::Parabolic]).collect();
    // Largest cosh v that keeps beta >= beta_min, for a given factor.
    let v_max = |scale: f64| math::sqrt(((-w.beta_min - 4.0) * scale / 4.0).max(0.0));

    // Even or infinite t(u).
    let even_us: Vec<HalfLength> = (4..=lim.p_max).step_by(2).map(HalfLength::Elliptic).collect();
    for &v in &vs {
        let idx = WitnessSet { v: Some(v), ..WitnessSet::default() };
        let cv = v.cosh_sq();
        let t1 = math::sqrt(w.gamma_max / 4.0);
        b.curve(CaseTag::LoxPosEven, idx, Geometry::Hyperbola, (1.0, t1), (false, false), |t| {
            let gamma = 4.0 * t * t;
            Some(Sample { gamma, beta: -4.0 * cv / gamma - 4.0, u: Some(cosh_half_length(t)), v: None })
        });
        for &u in &even_us {
            let gamma = 4.0 * u.cosh_sq();
            let idx = WitnessSet { u: Some(u), v: Some(v), ..WitnessSet::default() };
            b.point(CaseTag::LoxPosEven, idx, gamma, -4.0 * cv / gamma - 4.0);
        }
    }
    for &u in &even_us {
        let gamma = 4.0 * u.cosh_sq();
        let idx = WitnessSet { u: Some(u), ..WitnessSet::default() };
        b.curve(CaseTag::LoxPosEven, idx, Geometry::Ray, (1.0, v_max(gamma)), (false, false), |t| {
            Some(Sample { gamma, beta: -4.0 * t * t / gamma - 4.0, u: None, v: Some(cosh_half_length(t)) })
        });
    }

    // Odd t(u).
    for m in (3..=lim.p_max).step_by(2) {
        let u = HalfLength::Elliptic(m);
        let gamma = 4.0 * u.cosh_sq();
        for &v in &vs {
            let idx = WitnessSet { u: Some(u), v: Some(v), ..WitnessSet::default() };
            b.point(CaseTag::LoxPosOdd, idx, gamma, -4.0 * v.cosh_sq() - 4.0);
        }
        let idx = WitnessSet { u: Some(u), ..WitnessSet::default() };
        b.curve(CaseTag::LoxPosOdd, idx, Geometry::Ray, (1.0, v_max(1.0)), (false, false), |t| {
            Some(Sample { gamma, beta: -4.0 * t * t - 4.0, u: None, v: Some(cosh_half_length(t)) })
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::{classify_point, free_region, reproduce, Config, RegionTag, Verdict};

    fn window(g0: f64, g1: f64, b0: f64, b1: f64) -> Window {
        Window::new(g0, g1, b0, b1, 64).unwrap()
    }

    fn small() -> Limits {
        Limits { n_max: 7, p_max: 7, k_max: 3 }
    }

    #[test]
    fn every_sample_reclassifies() {
        let w = window(-40.0, 40.0, -40.0, 40.0);
        let fams = enumerate_families(&w, &small());
        assert!(fams.len() > 50);
        let cfg = Config::default();
        for f in &fams {
            for s in &f.samples {
                match classify_point(s.beta, s.gamma, &cfg) {
                    Verdict::Discrete(c) => {
                        assert!(
                            c.case == f.case || c.alternates.contains(&f.case),
                            "{} at ({}, {}) classified {:?}",
                            f.id(),
                            s.gamma,
                            s.beta,
                            c.case
                        );
                    }
                    other => panic!("{} at ({}, {}) gave {other:?}", f.id(), s.gamma, s.beta),
                }
            }
        }
    }

    #[test]
    fn samples_match_their_formulas() {
        let w = window(-30.0, 30.0, -30.0, 30.0);
        for f in enumerate_families(&w, &small()) {
            for s in &f.samples {
                let ws = s.witnesses(&f.indices);
                let (b, g) = reproduce(f.case, &ws, s.beta, s.gamma).unwrap();
                assert!(math::close(b, s.beta, 1e-9) && math::close(g, s.gamma, 1e-9), "{}", f.id());
            }
        }
    }

    #[test]
    fn lox_neg_window_has_hyperbolas() {
        let w = window(-20.0, -4.0, -10.0, -4.0);
        let fams = enumerate_families(&w, &Limits { n_max: 5, p_max: 5, k_max: 1 });
        assert!(fams.iter().any(|f| f.case == CaseTag::LoxNeg1 && f.geometry == Geometry::Hyperbola));
    }

    #[test]
    fn lox_pos_window_has_v_curves_and_b_edge() {
        let w = window(4.0, 25.0, -9.0, -4.1);
        let lim = Limits { n_max: 5, p_max: 6, k_max: 2 };
        let fams = enumerate_families(&w, &lim);
        for p in 3..=6 {
            let v = Some(HalfLength::Elliptic(p));
            assert!(fams.iter().any(|f| f.case == CaseTag::LoxPosEven && f.indices.v == v && f.indices.u.is_none()));
        }
        let edge =
            fams.iter().find(|f| f.indices.v == Some(HalfLength::Parabolic) && f.indices.u.is_none()).expect("B edge");
        for s in &edge.samples {
            assert!(math::close(s.beta, -4.0 / s.gamma - 4.0, 1e-12));
        }
    }

    #[test]
    fn enumeration_is_idempotent() {
        let w = window(-25.0, 25.0, -25.0, 25.0);
        assert_eq!(enumerate_families(&w, &small()), enumerate_families(&w, &small()));
    }

    #[test]
    fn isolated_points_avoid_free_interiors() {
        let w = window(-40.0, 40.0, -40.0, 40.0);
        for f in enumerate_families(&w, &small()) {
            if f.geometry != Geometry::Point {
                continue;
            }
            let s = f.samples[0];
            if let Some(tag) = free_region(s.beta, s.gamma, 8) {
                // Only region boundaries may carry isolated points.
                let eps = 1e-6;
                let interior = [(eps, 0.0), (-eps, 0.0), (0.0, eps), (0.0, -eps)]
                    .iter()
                    .all(|(dg, db)| free_region(s.beta + db, s.gamma + dg, 8) == Some(tag));
                assert!(!interior, "{} in interior of {tag:?}", f.id());
                let _ = RegionTag::A;
            }
        }
    }

    #[test]
    fn asymptote_examples() {
        let ((s1, i1), (s2, i2)) = asymptotes_of(1, HalfLength::Parabolic);
        assert_eq!((s1, i1, s2, i2), (0.0, -4.0, 1.0, 4.0));
        let gamma = -1e6;
        for k in 1..=4 {
            for p in 2..=10 {
                let u = HalfLength::Elliptic(p);
                let ((a1, b1), (a2, b2)) = asymptotes_of(k, u);
                let minus = lox_neg1_beta(k, u, Sign::Minus, gamma).unwrap();
                let plus = lox_neg1_beta(k, u, Sign::Plus, gamma).unwrap();
                assert!((minus - (a1 * gamma + b1)).abs() < 1e-3, "k={k} p={p}");
                assert!((plus - (a2 * gamma + b2)).abs() < 1e-3, "k={k} p={p}");
            }
        }
    }
}
