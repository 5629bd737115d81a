//! Discreteness of `<f, g>` with parameters `(beta, 0, gamma)`.
//!
//! The `(gamma, beta)` plane splits into five parts, each decided by its own
//! family of explicit formulas:
//!
//! | part                     | check                      |
//! |--------------------------|----------------------------|
//! | `-4 <= beta <= 0`        | [`check_ell_strip`]        |
//! | `beta > 0, gamma < 0`    | [`check_hyp_neg`]          |
//! | `beta > 0, gamma > 0`    | [`check_hyp_fuchsian`]     |
//! | `beta < -4, gamma < 0`   | [`check_lox_inv`]          |
//! | `beta < -4, gamma > 0`   | [`check_criterion_par`]    |
//!
//! Every check tries its items in order and reports the first match together
//! with the symbolic witnesses that reproduce the point, see [`reproduce`].
//! Matching is numeric with tolerance [`Config::tol`]; recognizers stop at
//! the order bounds `n_max` / `p_max`, and a point that fails only because
//! it sits in the accumulation gap beyond a bound is [`Verdict::Indeterminate`].

mod formulas;
mod hyperbolic;
mod loxodromic;
mod regions;
mod strip;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use formulas::reproduce;
pub use hyperbolic::{check_hyp_fuchsian, check_hyp_neg, fuchsian_ceiling_index};
pub use loxodromic::{check_criterion_par, check_lox_inv, lox_ceiling_index};
pub use regions::{
    c_lower, c_upper, d_lower, d_upper, free_region, region_contains, sigma_lower, sigma_upper, RegionTag,
};
pub use strip::{check_ell_strip, strip_gamma_structure, StripStructure};

use crate::types::{
    scan_elliptic_beta, scan_half_length, CoshFamily, HalfLength, Recognition, DEFAULT_BOUND, DEFAULT_TOL,
};
use crate::Result;

/// Tolerance and recognition bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    pub tol: f64,
    pub n_max: u32,
    pub p_max: u32,
    pub k_max: u32,
}

impl Default for Config {
    fn default() -> Self {
        Self { tol: DEFAULT_TOL, n_max: DEFAULT_BOUND, p_max: DEFAULT_BOUND, k_max: 8 }
    }
}

/// Which case item produced a discrete verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    EllStrip1,
    EllStrip2,
    EllStrip3,
    HypNegGamma,
    HypPos1,
    HypPos2,
    HypPos3,
    LoxNeg1,
    LoxNeg2,
    LoxNeg3,
    LoxPosEven,
    LoxPosOdd,
}

impl CaseTag {
    pub const ALL: [CaseTag; 12] = [
        CaseTag::EllStrip1,
        CaseTag::EllStrip2,
        CaseTag::EllStrip3,
        CaseTag::HypNegGamma,
        CaseTag::HypPos1,
        CaseTag::HypPos2,
        CaseTag::HypPos3,
        CaseTag::LoxNeg1,
        CaseTag::LoxNeg2,
        CaseTag::LoxNeg3,
        CaseTag::LoxPosEven,
        CaseTag::LoxPosOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::EllStrip1 => "EllStrip1",
            CaseTag::EllStrip2 => "EllStrip2",
            CaseTag::EllStrip3 => "EllStrip3",
            CaseTag::HypNegGamma => "HypNegGamma",
            CaseTag::HypPos1 => "HypPos1",
            CaseTag::HypPos2 => "HypPos2",
            CaseTag::HypPos3 => "HypPos3",
            CaseTag::LoxNeg1 => "LoxNeg1",
            CaseTag::LoxNeg2 => "LoxNeg2",
            CaseTag::LoxNeg3 => "LoxNeg3",
            CaseTag::LoxPosEven => "LoxPosEven",
            CaseTag::LoxPosOdd => "LoxPosOdd",
        }
    }

    pub fn from_name(s: &str) -> Option<CaseTag> {
        CaseTag::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Symbolic witnesses of a discrete verdict.
///
/// `n`, `q` hold the elliptic order and rotation index of `f` (or of
/// `f g^k` in the `HypPos2` family); `p` holds the odd order of the
/// `LoxNeg2` and `EllStrip3` items.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct WitnessSet {
    pub u: Option<HalfLength>,
    pub v: Option<HalfLength>,
    pub n: Option<u32>,
    pub q: Option<u32>,
    pub k: Option<u32>,
    pub p: Option<u32>,
    pub sign: Option<Sign>,
}

/// Everything a discrete verdict reports.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub case: CaseTag,
    pub witnesses: WitnessSet,
    /// Later items that the point also satisfies.
    pub alternates: Vec<CaseTag>,
    /// Set when some witness came from tolerance-bound numeric recognition
    /// rather than from an exact hint.
    pub within_tolerance: bool,
    pub notes: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Discrete(Certificate),
    NotDiscrete,
    Indeterminate { reason: String },
    OutOfDomain { reason: String },
}

impl Verdict {
    pub fn is_discrete(&self) -> bool {
        matches!(self, Verdict::Discrete(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Discrete(c) => Some(c),
            _ => None,
        }
    }

    pub fn case(&self) -> Option<CaseTag> {
        self.certificate().map(|c| c.case)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Discrete(_) => "Discrete",
            Verdict::NotDiscrete => "NotDiscrete",
            Verdict::Indeterminate { .. } => "Indeterminate",
            Verdict::OutOfDomain { .. } => "OutOfDomain",
        }
    }
}

/// Exact witnesses supplied by the caller, bypassing numeric recognition.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Hints {
    /// `beta = -4 sin^2(q pi / n)` with this `(n, q)`.
    pub beta_rotation: Option<(u32, u32)>,
    /// The half-length `u` of the case formula that fixes `gamma`; used
    /// only where it reproduces `gamma`.
    pub gamma_half_length: Option<HalfLength>,
}

/// Outcome of testing one case item.
pub(crate) struct ItemMatch {
    pub witnesses: WitnessSet,
    pub numeric: bool,
    pub notes: Vec<&'static str>,
}

impl ItemMatch {
    pub fn new(witnesses: WitnessSet, numeric: bool) -> Self {
        Self { witnesses, numeric, notes: Vec::new() }
    }
}

/// Picks the first matching item; falls back to `Indeterminate` when some
/// item could not be decided at the bound.
pub(crate) fn decide(items: Vec<(CaseTag, Recognition<ItemMatch>)>) -> Verdict {
    let mut first: Option<(CaseTag, ItemMatch)> = None;
    let mut alternates = Vec::new();
    let mut undecided = false;
    for (case, outcome) in items {
        match outcome {
            Recognition::Found(m) => {
                if first.is_none() {
                    first = Some((case, m));
                } else {
                    alternates.push(case);
                }
            }
            Recognition::BeyondBound => undecided = true,
            Recognition::Absent => {}
        }
    }
    match first {
        Some((case, m)) => Verdict::Discrete(Certificate {
            case,
            witnesses: m.witnesses,
            alternates,
            within_tolerance: m.numeric,
            notes: m.notes,
        }),
        None if undecided => Verdict::Indeterminate {
            reason: String::from("value lies in an accumulation gap beyond the recognition bound"),
        },
        None => Verdict::NotDiscrete,
    }
}

/// Decides discreteness of the group with parameters `(beta, 0, gamma)`.
pub fn classify_point(beta: f64, gamma: f64, cfg: &Config) -> Verdict {
    classify_point_hinted(beta, gamma, cfg, &Hints::default())
}

/// [`classify_point`] with caller-supplied exact witnesses.
pub fn classify_point_hinted(beta: f64, gamma: f64, cfg: &Config, hints: &Hints) -> Verdict {
    if !beta.is_finite() || !gamma.is_finite() {
        return Verdict::OutOfDomain { reason: String::from("non-finite input") };
    }
    if gamma.abs() <= cfg.tol {
        return Verdict::OutOfDomain { reason: String::from("gamma = 0 does not determine the pair") };
    }
    let tol = cfg.tol;
    let outcome = if beta >= -4.0 - tol && beta <= tol {
        check_ell_strip_hinted(beta, gamma, cfg, hints)
    } else if beta > 0.0 {
        if gamma < 0.0 {
            check_hyp_neg_hinted(beta, gamma, cfg, hints)
        } else {
            check_hyp_fuchsian(beta, gamma, cfg)
        }
    } else if gamma < 0.0 {
        check_lox_inv_hinted(beta, gamma, cfg, hints)
    } else {
        check_criterion_par_hinted(beta, gamma, cfg, hints)
    };
    outcome.unwrap_or_else(|e| Verdict::OutOfDomain { reason: alloc::format!("{e}") })
}

pub(crate) use hyperbolic::check_hyp_neg_hinted;
pub(crate) use loxodromic::{check_criterion_par_hinted, check_lox_inv_hinted};
pub(crate) use strip::check_ell_strip_hinted;

/// Recognizes `x = cosh^2 u` with `t(u) >= min_t`, preferring a hinted `u`
/// whose value matches `x`.
pub(crate) fn half_length_sq(
    x: f64,
    min_t: u32,
    cfg: &Config,
    hint: Option<HalfLength>,
) -> Result<Recognition<(HalfLength, bool)>> {
    if let Some(u) = hint {
        if u.order().at_least(min_t) && crate::math::close(u.cosh_sq(), x, cfg.tol) {
            return Ok(Recognition::Found((u, false)));
        }
    }
    let tol = cfg.tol * x.abs().max(1.0);
    Ok(scan_half_length(x, CoshFamily::CoshSquared, min_t, cfg.p_max, tol)?.map(|u| (u, true)))
}

/// Recognizes `x = cosh u` with `t(u) >= min_t`.
pub(crate) fn half_length(x: f64, min_t: u32, cfg: &Config) -> Result<Recognition<HalfLength>> {
    let tol = cfg.tol * x.abs().max(1.0);
    scan_half_length(x, CoshFamily::Cosh, min_t, cfg.p_max, tol)
}

/// `(n, q)` with `beta = -4 sin^2(q pi / n)`. A hint that does not match
/// `beta` is ignored.
pub(crate) fn rotation_of(
    beta: f64,
    cfg: &Config,
    hint: Option<(u32, u32)>,
) -> Result<Recognition<((u32, u32), bool)>> {
    if let Some((n, q)) = hint {
        if crate::types::valid_rotation(q, n)
            && crate::math::close(-4.0 * crate::math::sin_sq_frac(q, n), beta, cfg.tol)
        {
            return Ok(Recognition::Found(((n, q), false)));
        }
    }
    Ok(scan_elliptic_beta(beta, cfg.n_max, cfg.tol)?.map(|nq| (nq, true)))
}
