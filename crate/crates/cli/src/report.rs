//! JSON and text renderings of a classification.

use rpslice_core::classifier::{classify_point_hinted, Hints};
use rpslice_core::orbifold::{presentation_for, RenderMode};
use rpslice_core::slice::half_length_token;
use rpslice_core::{free_region, CaseTag, Config, Verdict, WitnessSet};
use serde_json::{json, Value};

/// Exit status for a verdict.
pub fn exit_code(v: &Verdict) -> i32 {
    match v {
        Verdict::Discrete(_) => 0,
        Verdict::NotDiscrete => 1,
        Verdict::Indeterminate { .. } => 2,
        Verdict::OutOfDomain { .. } => 3,
    }
}

pub struct Classification {
    pub beta: f64,
    pub gamma: f64,
    pub verdict: Verdict,
    pub k_max: u32,
}

impl Classification {
    pub fn run(beta: f64, gamma: f64, cfg: &Config, hints: &Hints) -> Self {
        Self { beta, gamma, verdict: classify_point_hinted(beta, gamma, cfg, hints), k_max: cfg.k_max }
    }

    fn presentation(&self) -> Option<(String, String, String)> {
        let c = self.verdict.certificate()?;
        if !matches!(c.case, CaseTag::LoxPosEven | CaseTag::LoxPosOdd) {
            return None;
        }
        let p = presentation_for(c.witnesses.u?, c.witnesses.v?).ok()?;
        Some((p.symbol(), p.render(RenderMode::Kleinian), p.render(RenderMode::Abstract)))
    }

    fn region(&self) -> Option<String> {
        if self.gamma == 0.0 {
            return None;
        }
        free_region(self.beta, self.gamma, self.k_max).map(|t| t.id().to_string())
    }

    pub fn to_json(&self) -> Value {
        let cert = self.verdict.certificate();
        let mut out = json!({
            "beta": self.beta,
            "gamma": self.gamma,
            "verdict": self.verdict.label(),
            "case": cert.map(|c| c.case.name()),
            "witnesses": witnesses_json(cert.map(|c| c.witnesses).unwrap_or_default()),
            "alternates": cert.map(|c| c.alternates.iter().map(|a| a.name()).collect::<Vec<_>>()).unwrap_or_default(),
            "within_tolerance": cert.map(|c| c.within_tolerance),
            "notes": cert.map(|c| c.notes.clone()).unwrap_or_default(),
            "free_region": self.region(),
        });
        if let Verdict::Indeterminate { reason } | Verdict::OutOfDomain { reason } = &self.verdict {
            out["reason"] = json!(reason);
        }
        if let Some((symbol, kleinian, abstract_)) = self.presentation() {
            out["presentation"] = json!(symbol);
            out["presentation_text"] = json!({ "kleinian": kleinian, "abstract": abstract_ });
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("beta={} gamma={} {}", self.beta, self.gamma, self.verdict.label());
        match &self.verdict {
            Verdict::Discrete(c) => {
                s.push(' ');
                s.push_str(c.case.name());
                let w = witnesses_text(&c.witnesses);
                if !w.is_empty() {
                    s.push(' ');
                    s.push_str(&w);
                }
            }
            Verdict::Indeterminate { reason } | Verdict::OutOfDomain { reason } => {
                s.push_str(&format!(" ({reason})"));
            }
            Verdict::NotDiscrete => {}
        }
        if let Some(r) = self.region() {
            s.push_str(&format!(" region={r}"));
        }
        if let Some((symbol, kleinian, _)) = self.presentation() {
            s.push_str(&format!(" presentation={symbol} {kleinian}"));
        }
        s
    }
}

pub fn witnesses_json(w: WitnessSet) -> Value {
    json!({
        "u": w.u.map(half_length_token),
        "v": w.v.map(half_length_token),
        "n": w.n,
        "q": w.q,
        "k": w.k,
        "p": w.p,
        "sign": w.sign.map(|s| s.symbol().to_string()),
    })
}

fn witnesses_text(w: &WitnessSet) -> String {
    let mut parts = Vec::new();
    let nums = [("n", w.n), ("q", w.q), ("k", w.k), ("p", w.p)];
    parts.extend(nums.iter().filter_map(|(k, v)| v.map(|v| format!("{k}={v}"))));
    if let Some(s) = w.sign {
        parts.push(format!("sign={}", s.symbol()));
    }
    for (k, v) in [("u", w.u), ("v", w.v)] {
        if let Some(h) = v {
            parts.push(format!("{k}={}", half_length_token(h)));
        }
    }
    parts.join(" ")
}
