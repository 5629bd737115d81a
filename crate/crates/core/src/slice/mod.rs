//! Enumeration of the discrete parameters inside a window of the
//! `(gamma, beta)` plane, with SVG and CSV output.
//!
//! Each case formula is split into families: the discrete indices
//! (`n`, `q`, `k`, `p`, sign, and any elliptic half-length) are fixed and at
//! most one half-length stays continuous. A family is then a curve sampled
//! in that continuous parameter, or a single isolated point. Parts of the
//! slice where two half-lengths vary together are the free regions and are
//! drawn as regions, see [`enumerate_regions`].

mod csv;
mod families;
mod regions;
mod svg;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

pub use csv::{emit_csv, format_sig, CSV_HEADER};
pub use families::{asymptotes_of, enumerate_families, lox_neg1_beta};
pub use regions::{clip_polygon, enumerate_regions, RegionPolygon};
pub use svg::{emit_svg, SvgStyle};

use crate::classifier::{CaseTag, WitnessSet};
use crate::types::HalfLength;
use crate::{Error, Result};

/// Rectangle `[gamma_min, gamma_max] x [beta_min, beta_max]` and the number
/// of samples per curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub gamma_min: f64,
    pub gamma_max: f64,
    pub beta_min: f64,
    pub beta_max: f64,
    pub samples: usize,
}

impl Window {
    pub fn new(gamma_min: f64, gamma_max: f64, beta_min: f64, beta_max: f64, samples: usize) -> Result<Self> {
        let finite = [gamma_min, gamma_max, beta_min, beta_max].iter().all(|x| x.is_finite());
        if !finite || !(gamma_min < gamma_max) || !(beta_min < beta_max) {
            return Err(Error::OutOfRange { what: "window bounds", value: gamma_min });
        }
        if samples < 2 {
            return Err(Error::OutOfRange { what: "samples per curve", value: samples as f64 });
        }
        Ok(Self { gamma_min, gamma_max, beta_min, beta_max, samples })
    }

    pub fn contains(&self, gamma: f64, beta: f64) -> bool {
        gamma >= self.gamma_min && gamma <= self.gamma_max && beta >= self.beta_min && beta <= self.beta_max
    }
}

/// Index bounds for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub n_max: u32,
    pub p_max: u32,
    pub k_max: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self { n_max: 12, p_max: 12, k_max: 8 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Geometry {
    Line,
    Ray,
    Parabola,
    Hyperbola,
    Point,
}

impl Geometry {
    pub fn name(self) -> &'static str {
        match self {
            Geometry::Line => "line",
            Geometry::Ray => "ray",
            Geometry::Parabola => "parabola",
            Geometry::Hyperbola => "hyperbola",
            Geometry::Point => "point",
        }
    }
}

/// One sampled point with the value of the continuous half-length, if any.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub gamma: f64,
    pub beta: f64,
    pub u: Option<HalfLength>,
    pub v: Option<HalfLength>,
}

impl Sample {
    /// Witnesses of this sample: the family indices plus the sampled
    /// half-lengths.
    pub fn witnesses(&self, indices: &WitnessSet) -> WitnessSet {
        WitnessSet { u: self.u.or(indices.u), v: self.v.or(indices.v), ..*indices }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveFamily {
    pub case: CaseTag,
    /// The fixed indices; the continuous half-length is `None`.
    pub indices: WitnessSet,
    pub geometry: Geometry,
    pub samples: Vec<Sample>,
}

impl CurveFamily {
    /// Stable identifier such as `HypPos2-n3-q1-k1-s+-u:cont`.
    pub fn id(&self) -> String {
        let mut s = String::from(self.case.name());
        let w = &self.indices;
        for (tag, val) in [("n", w.n), ("q", w.q), ("k", w.k), ("p", w.p)] {
            if let Some(x) = val {
                let _ = write!(s, "-{tag}{x}");
            }
        }
        if let Some(sign) = w.sign {
            let _ = write!(s, "-s{}", sign.symbol());
        }
        for (tag, val) in [("u", w.u), ("v", w.v)] {
            if let Some(h) = val {
                let _ = write!(s, "-{tag}:{}", half_length_token(h));
            }
        }
        if self.geometry == Geometry::Point {
            s.push_str("-pt");
        }
        s
    }
}

/// `pi/p`, `par` or `hyp:d` with `d` to 12 significant digits.
pub fn half_length_token(h: HalfLength) -> String {
    match h {
        HalfLength::Elliptic(p) => alloc::format!("pi/{p}"),
        HalfLength::Parabolic => "par".into(),
        HalfLength::Hyperbolic(d) => alloc::format!("hyp:{}", format_sig(d)),
    }
}

/// Ordering key over the discrete indices.
pub(crate) fn witness_key(w: &WitnessSet) -> [u64; 9] {
    let opt = |x: Option<u32>| x.map_or(0, |v| v as u64 + 1);
    let hl = |h: Option<HalfLength>| match h {
        None => (0, 0),
        Some(HalfLength::Elliptic(p)) => (1, p as u64),
        Some(HalfLength::Parabolic) => (2, 0),
        Some(HalfLength::Hyperbolic(d)) => (3, d.to_bits()),
    };
    let (ua, ub) = hl(w.u);
    let (va, vb) = hl(w.v);
    let sign = w.sign.map_or(0, |s| if s.factor() > 0.0 { 1 } else { 2 });
    [opt(w.n), opt(w.q), opt(w.k), opt(w.p), sign, ua, ub, va, vb]
}
