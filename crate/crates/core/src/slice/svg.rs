use alloc::string::String;
use core::fmt::Write;

use super::{CurveFamily, Geometry, RegionPolygon, Window};
use crate::classifier::{CaseTag, RegionTag};

/// Layout of the emitted picture.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgStyle {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    /// Dashed lines `beta = k^2 gamma - 4` for `k = 1..=dashed_k_max`.
    pub dashed_k_max: u32,
    /// Also outline the `Sigma_k` bands.
    pub show_bands: bool,
}

impl Default for SvgStyle {
    fn default() -> Self {
        Self { width: 800.0, height: 800.0, margin: 40.0, dashed_k_max: 8, show_bands: false }
    }
}

fn region_fill(tag: RegionTag) -> &'static str {
    match tag {
        RegionTag::A => "#9ecae1",
        RegionTag::B => "#a1d99b",
        RegionTag::C(_) => "#fdae6b",
        RegionTag::D(_) => "#bcbddc",
        RegionTag::SigmaBand(_) => "none",
    }
}

fn case_stroke(case: CaseTag) -> &'static str {
    match case {
        CaseTag::EllStrip1 | CaseTag::EllStrip2 | CaseTag::EllStrip3 => "#6a3d9a",
        CaseTag::HypNegGamma => "#1f78b4",
        CaseTag::HypPos1 | CaseTag::HypPos2 | CaseTag::HypPos3 => "#e31a1c",
        CaseTag::LoxNeg1 | CaseTag::LoxNeg2 | CaseTag::LoxNeg3 => "#33a02c",
        CaseTag::LoxPosEven | CaseTag::LoxPosOdd => "#ff7f00",
    }
}

struct Frame {
    w: Window,
    style: SvgStyle,
}

impl Frame {
    fn x(&self, gamma: f64) -> f64 {
        let s = &self.style;
        s.margin + (gamma - self.w.gamma_min) / (self.w.gamma_max - self.w.gamma_min) * (s.width - 2.0 * s.margin)
    }

    fn y(&self, beta: f64) -> f64 {
        let s = &self.style;
        s.margin + (self.w.beta_max - beta) / (self.w.beta_max - self.w.beta_min) * (s.height - 2.0 * s.margin)
    }

    fn pt(&self, out: &mut String, gamma: f64, beta: f64) {
        let _ = write!(out, "{:.3},{:.3}", self.x(gamma), self.y(beta));
    }
}

/// Deterministic SVG: filled free regions, dashed lines, one group of
/// polylines and circles per case.
pub fn emit_svg(families: &[CurveFamily], regions: &[RegionPolygon], w: &Window, style: &SvgStyle) -> String {
    let fr = Frame { w: *w, style: *style };
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">",
        style.width, style.height
    );

    out.push_str("<g id=\"regions\">\n");
    for r in regions.iter().filter(|r| !matches!(r.tag, RegionTag::SigmaBand(_))) {
        let _ = write!(
            out,
            "<path id=\"region-{}\" fill=\"{}\" fill-opacity=\"0.6\" stroke=\"none\" d=\"",
            r.tag.id(),
            region_fill(r.tag)
        );
        path_data(&fr, &mut out, &r.points);
        out.push_str("\"/>\n");
    }
    out.push_str("</g>\n");

    if style.show_bands {
        out.push_str("<g id=\"bands\">\n");
        for r in regions.iter().filter(|r| matches!(r.tag, RegionTag::SigmaBand(_))) {
            let _ = write!(
                out,
                "<path id=\"band-{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.5\" d=\"",
                r.tag.id()
            );
            path_data(&fr, &mut out, &r.points);
            out.push_str("\"/>\n");
        }
        out.push_str("</g>\n");
    }

    axes(&fr, &mut out);

    out.push_str("<g id=\"dashed\">\n");
    for k in 1..=style.dashed_k_max {
        let kk = (k * k) as f64;
        let g0 = w.gamma_min.max((w.beta_min + 4.0) / kk);
        let g1 = w.gamma_max.min((w.beta_max + 4.0) / kk);
        if g0 < g1 {
            let _ = write!(out, "<polyline id=\"dashed-k{k}\" fill=\"none\" stroke=\"#555555\" stroke-dasharray=\"6 4\" stroke-width=\"0.8\" points=\"");
            fr.pt(&mut out, g0, kk * g0 - 4.0);
            out.push(' ');
            fr.pt(&mut out, g1, kk * g1 - 4.0);
            out.push_str("\"/>\n");
        }
    }
    out.push_str("</g>\n");

    let mut current: Option<CaseTag> = None;
    for f in families {
        if current != Some(f.case) {
            if current.is_some() {
                out.push_str("</g>\n");
            }
            let _ = writeln!(
                out,
                "<g id=\"case-{}\" stroke=\"{}\" fill=\"{}\">",
                f.case.name(),
                case_stroke(f.case),
                case_stroke(f.case)
            );
            current = Some(f.case);
        }
        let id = f.id();
        if f.geometry == Geometry::Point || f.samples.len() == 1 {
            for s in &f.samples {
                let _ = writeln!(
                    out,
                    "<circle id=\"{id}\" cx=\"{:.3}\" cy=\"{:.3}\" r=\"1.5\" stroke=\"none\"/>",
                    fr.x(s.gamma),
                    fr.y(s.beta)
                );
            }
        } else {
            let _ = write!(out, "<polyline id=\"{id}\" fill=\"none\" stroke-width=\"0.8\" points=\"");
            for (i, s) in f.samples.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                fr.pt(&mut out, s.gamma, s.beta);
            }
            out.push_str("\"/>\n");
        }
    }
    if current.is_some() {
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

fn path_data(fr: &Frame, out: &mut String, points: &[(f64, f64)]) {
    for (i, &(g, b)) in points.iter().enumerate() {
        out.push(if i == 0 { 'M' } else { 'L' });
        fr.pt(out, g, b);
        out.push(' ');
    }
    out.push('Z');
}

fn axes(fr: &Frame, out: &mut String) {
    let w = &fr.w;
    out.push_str("<g id=\"axes\" stroke=\"#000000\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"12\">\n");
    let (left, right) = (fr.x(w.gamma_min), fr.x(w.gamma_max));
    let (top, bottom) = (fr.y(w.beta_max), fr.y(w.beta_min));
    let _ = writeln!(out, "<polyline fill=\"none\" points=\"{left:.3},{top:.3} {right:.3},{top:.3} {right:.3},{bottom:.3} {left:.3},{bottom:.3} {left:.3},{top:.3}\"/>");
    if w.beta_min <= 0.0 && 0.0 <= w.beta_max {
        let y = fr.y(0.0);
        let _ =
            writeln!(out, "<polyline id=\"axis-gamma\" fill=\"none\" points=\"{left:.3},{y:.3} {right:.3},{y:.3}\"/>");
    }
    if w.gamma_min <= 0.0 && 0.0 <= w.gamma_max {
        let x = fr.x(0.0);
        let _ =
            writeln!(out, "<polyline id=\"axis-beta\" fill=\"none\" points=\"{x:.3},{top:.3} {x:.3},{bottom:.3}\"/>");
    }
    let _ = writeln!(out, "<text x=\"{:.3}\" y=\"{:.3}\" stroke=\"none\">gamma</text>", right - 40.0, bottom + 24.0);
    let _ = writeln!(out, "<text x=\"{:.3}\" y=\"{:.3}\" stroke=\"none\">beta</text>", left - 32.0, top - 8.0);
    out.push_str("</g>\n");
}

#[cfg(test)]
mod tests {
    use super::super::{enumerate_families, enumerate_regions, Limits};
    use super::*;

    #[test]
    fn empty_families_still_valid() {
        let w = Window::new(-1.0, 1.0, -1.0, 1.0, 4).unwrap();
        let svg = emit_svg(&[], &[], &w, &SvgStyle::default());
        assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("id=\"axes\""));
    }

    #[test]
    fn plot_window_is_deterministic() {
        let w = Window::new(-40.0, 40.0, -40.0, 40.0, 64).unwrap();
        let lim = Limits { n_max: 6, p_max: 6, k_max: 3 };
        let run = || {
            let f = enumerate_families(&w, &lim);
            let r = enumerate_regions(&w, lim.k_max);
            emit_svg(&f, &r, &w, &SvgStyle::default())
        };
        let a = run();
        assert_eq!(a, run());
        assert_eq!(a.matches("<path id=\"region-").count(), 6);
        assert!(a.contains("id=\"dashed-k1\""));
        assert!(a.contains("<g id=\"case-LoxNeg1\""));
    }
}
