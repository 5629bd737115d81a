use alloc::vec::Vec;

use super::Window;
use crate::classifier::{c_lower, c_upper, d_lower, d_upper, sigma_lower, sigma_upper, RegionTag};

/// A region clipped to the window, as a closed polygon in `(gamma, beta)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionPolygon {
    pub tag: RegionTag,
    pub points: Vec<(f64, f64)>,
}

/// Sutherland-Hodgman clipping of `poly` to the window rectangle.
pub fn clip_polygon(poly: &[(f64, f64)], w: &Window) -> Vec<(f64, f64)> {
    type Edge = (fn(&(f64, f64), f64) -> bool, fn((f64, f64), (f64, f64), f64) -> (f64, f64), f64);
    fn at_gamma(a: (f64, f64), b: (f64, f64), g: f64) -> (f64, f64) {
        let t = (g - a.0) / (b.0 - a.0);
        (g, a.1 + t * (b.1 - a.1))
    }
    fn at_beta(a: (f64, f64), b: (f64, f64), be: f64) -> (f64, f64) {
        let t = (be - a.1) / (b.1 - a.1);
        (a.0 + t * (b.0 - a.0), be)
    }
    let edges: [Edge; 4] = [
        (|p, v| p.0 >= v, at_gamma, w.gamma_min),
        (|p, v| p.0 <= v, at_gamma, w.gamma_max),
        (|p, v| p.1 >= v, at_beta, w.beta_min),
        (|p, v| p.1 <= v, at_beta, w.beta_max),
    ];
    let mut out: Vec<(f64, f64)> = poly.to_vec();
    for (inside, cross, v) in edges {
        if out.is_empty() {
            break;
        }
        let input = core::mem::take(&mut out);
        let mut prev = *input.last().unwrap();
        for &cur in &input {
            match (inside(&cur, v), inside(&prev, v)) {
                (true, true) => out.push(cur),
                (true, false) => {
                    out.push(cross(prev, cur, v));
                    out.push(cur);
                }
                (false, true) => out.push(cross(prev, cur, v)),
                (false, false) => {}
            }
            prev = cur;
        }
    }
    out
}

fn area(poly: &[(f64, f64)]) -> f64 {
    let n = poly.len();
    let mut s = 0.0;
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        s += a.0 * b.1 - b.0 * a.1;
    }
    (s / 2.0).abs()
}

/// The band between `lower(gamma)` and `upper(gamma)` for `gamma` in
/// `[g0, g1]`, as a polygon.
fn band(g0: f64, g1: f64, n: usize, lower: impl Fn(f64) -> f64, upper: impl Fn(f64) -> f64) -> Vec<(f64, f64)> {
    if !(g0 < g1) {
        return Vec::new();
    }
    let at = |i: usize| g0 + (g1 - g0) * i as f64 / (n - 1) as f64;
    let mut poly: Vec<(f64, f64)> = (0..n).map(|i| (at(i), upper(at(i)))).collect();
    poly.extend((0..n).rev().map(|i| (at(i), lower(at(i)))));
    poly
}

/// Free regions `A`, `B`, `C_k`, `D_k` and the bands `Sigma_k`
/// (`k <= k_max`) that meet the window with positive area.
pub fn enumerate_regions(w: &Window, k_max: u32) -> Vec<RegionPolygon> {
    let n = w.samples.max(2);
    let pad_lo = w.beta_min - 1.0;
    let pad_hi = w.beta_max + 1.0;
    let mut raw: Vec<(RegionTag, Vec<(f64, f64)>)> = Vec::new();

    let a_hi = w.gamma_max.min(-4.0);
    if w.gamma_min < a_hi {
        raw.push((RegionTag::A, alloc::vec![(w.gamma_min, 0.0), (a_hi, 0.0), (a_hi, pad_hi), (w.gamma_min, pad_hi)]));
    }
    let b_lo = w.gamma_min.max(4.0);
    raw.push((RegionTag::B, band(b_lo, w.gamma_max, n, |_| pad_lo.min(-8.0), |g| -4.0 / g - 4.0)));
    let c_lo = w.gamma_min.max(16.0);
    for k in 1..=k_max {
        raw.push((RegionTag::C(k), band(c_lo, w.gamma_max, n, |g| c_lower(k, g), |g| c_upper(k, g))));
    }
    let d_hi = w.gamma_max.min(-16.0);
    for k in 1..=k_max {
        raw.push((RegionTag::D(k), band(w.gamma_min, d_hi, n, |g| d_lower(k, g), |g| d_upper(k, g))));
    }
    let s_lo = w.gamma_min.max(0.0);
    for k in 1..=k_max {
        raw.push((RegionTag::SigmaBand(k), band(s_lo, w.gamma_max, n, |g| sigma_lower(k, g), |g| sigma_upper(k, g))));
    }

    raw.into_iter()
        .filter_map(|(tag, poly)| {
            let points = clip_polygon(&poly, w);
            let scale = (w.gamma_max - w.gamma_min) * (w.beta_max - w.beta_min);
            (points.len() >= 3 && area(&points) > 1e-9 * scale).then_some(RegionPolygon { tag, points })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plot_window_regions() {
        let w = Window::new(-40.0, 40.0, -40.0, 40.0, 128).unwrap();
        let tags: Vec<RegionTag> = enumerate_regions(&w, 8)
            .into_iter()
            .map(|r| r.tag)
            .filter(|t| !matches!(t, RegionTag::SigmaBand(_)))
            .collect();
        assert_eq!(
            tags,
            [RegionTag::A, RegionTag::B, RegionTag::C(1), RegionTag::C(2), RegionTag::D(1), RegionTag::D(2)]
        );
    }

    #[test]
    fn a_is_a_rectangle() {
        let w = Window::new(-10.0, 10.0, -10.0, 10.0, 16).unwrap();
        let a = enumerate_regions(&w, 2).into_iter().find(|r| r.tag == RegionTag::A).unwrap();
        for p in &a.points {
            assert!((p.0 == -10.0 || p.0 == -4.0) && (p.1 == 0.0 || p.1 == 10.0), "{p:?}");
        }
    }

    #[test]
    fn b_edge_is_the_hyperbola() {
        let w = Window::new(0.0, 30.0, -10.0, 0.0, 32).unwrap();
        let b = enumerate_regions(&w, 1).into_iter().find(|r| r.tag == RegionTag::B).unwrap();
        let on_edge = b.points.iter().filter(|p| (p.1 - (-4.0 / p.0 - 4.0)).abs() < 1e-12).count();
        assert!(on_edge >= 32);
    }

    #[test]
    fn clip_square() {
        let w = Window::new(0.0, 1.0, 0.0, 1.0, 2).unwrap();
        let p = clip_polygon(&[(-1.0, -1.0), (2.0, -1.0), (2.0, 2.0), (-1.0, 2.0)], &w);
        assert!((area(&p) - 1.0).abs() < 1e-12);
        assert!(clip_polygon(&[(3.0, 3.0), (4.0, 3.0), (4.0, 4.0)], &w).is_empty());
    }
}
