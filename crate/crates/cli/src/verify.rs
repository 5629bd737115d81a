//! Matrix-level consistency checks for one parameter point.

use rpslice_core::classifier::{fuchsian_ceiling_index, lox_ceiling_index, reproduce};
use rpslice_core::oracle::{
    class_name, classify_mobius, compute_h1, compute_h2, jorgensen_check, params_of, realize, verify_criterion_psl,
    Mobius, MobiusPair,
};
use rpslice_core::trace::{fricke_commutator_gamma, gamma_parabolic, TraceTriple};
use rpslice_core::{classify_point, CaseTag, Config, Verdict};
use serde_json::{json, Value};

use crate::report::exit_code;

/// Exit status when a consistency check fails.
pub const EXIT_INCONSISTENT: i32 = 70;

/// Upper limit for the brute-force index search.
const K_SEARCH: i64 = 100_000;

struct Check {
    name: &'static str,
    pass: bool,
    /// Counts toward the consistency verdict; the criterion check itself
    /// only reports discreteness.
    consistency: bool,
    residual: Option<f64>,
    detail: String,
}

impl Check {
    fn failed(name: &'static str, detail: String) -> Self {
        Check { name, pass: false, consistency: true, residual: None, detail }
    }
}

pub struct VerifyReport {
    pub json: Value,
    pub text: String,
    pub exit: i32,
}

pub fn run(beta: f64, gamma: f64, cfg: &Config) -> VerifyReport {
    let classified = classify_point(beta, gamma, cfg);
    let scale = 1f64.max(beta.abs()).max(gamma.abs());
    let mut checks = Vec::new();
    let mut oracle: Option<Verdict> = None;
    let mut classes = serde_json::Map::new();

    match realize(beta, gamma) {
        Err(e) => checks.push(Check::failed("realize", e.to_string())),
        Ok(pair) => {
            checks.push(round_trip(&pair, beta, gamma, scale));
            checks.push(fricke(&pair, gamma, scale));
            if let Some(c) = k_formula(&pair, beta, gamma) {
                checks.push(c);
            }
            let (b, _, g) = params_of(&pair);
            let jorgensen = jorgensen_check(b, g);
            checks.push(Check {
                name: "jorgensen",
                pass: jorgensen || !classified.is_discrete(),
                consistency: true,
                residual: Some(b.norm() + g.norm()),
                detail: "|beta| + |gamma| >= 1 for a discrete pair".into(),
            });
            if beta < -4.0 && gamma > 0.0 {
                criterion(&pair, cfg, &classified, &mut checks, &mut oracle, &mut classes);
            }
        }
    }
    if let Some(c) = witness_check(&classified, beta, gamma, scale) {
        checks.push(c);
    }

    let consistent = checks.iter().all(|c| c.pass || !c.consistency);
    let verdict = oracle.as_ref().unwrap_or(&classified);
    let exit = if consistent { exit_code(verdict) } else { EXIT_INCONSISTENT };

    let mut json = json!({
        "beta": beta,
        "gamma": gamma,
        "verdict": verdict.label(),
        "classify_verdict": classified.label(),
        "case": verdict.case().map(CaseTag::name),
        "consistent": consistent,
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "pass": c.pass,
            "residual": c.residual,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    });
    for (k, v) in classes.iter() {
        json[k] = v.clone();
    }

    let mut text = format!("beta={beta} gamma={gamma} verdict={}", verdict.label());
    for (k, v) in classes.iter() {
        text.push_str(&format!(" {k}={}", v.as_str().unwrap_or("")));
    }
    text.push('\n');
    for c in &checks {
        let res = c.residual.map(|r| format!(" residual={r:e}")).unwrap_or_default();
        text.push_str(&format!("{} {}{} {}\n", if c.pass { "PASS" } else { "FAIL" }, c.name, res, c.detail));
    }
    VerifyReport { json, text, exit }
}

fn round_trip(pair: &MobiusPair, beta: f64, gamma: f64, scale: f64) -> Check {
    let (b, b2, g) = params_of(pair);
    let r = (b - beta).norm().max(b2.norm()).max((g - gamma).norm());
    Check {
        name: "round_trip",
        pass: r <= 1e-9 * scale,
        consistency: true,
        residual: Some(r),
        detail: "params_of(realize(beta, gamma)) reproduces (beta, 0, gamma)".into(),
    }
}

fn fricke(pair: &MobiusPair, gamma: f64, scale: f64) -> Check {
    let t = TraceTriple::new(pair.f.trace(), pair.g.trace(), (pair.f * pair.g).trace());
    let full = fricke_commutator_gamma(t);
    match gamma_parabolic(t) {
        Err(e) => Check::failed("fricke", e.to_string()),
        Ok(short) => {
            let r = (full - short).norm().max((full - gamma).norm());
            Check {
                name: "fricke",
                pass: r <= 1e-9 * scale,
                consistency: true,
                residual: Some(r),
                detail: "Fricke polynomial equals the parabolic form and gamma".into(),
            }
        }
    }
}

/// Least `k >= 1` for which `stop(tr(f g^k))` holds, by repeated
/// multiplication.
fn least_power(f: &Mobius, g: &Mobius, stop: impl Fn(f64, f64) -> bool) -> Option<i64> {
    let mut m = *f;
    for k in 1..=K_SEARCH {
        m = m * *g;
        let t = m.trace();
        if stop(t.re, t.im) {
            return Some(k);
        }
    }
    None
}

fn k_formula(pair: &MobiusPair, beta: f64, gamma: f64) -> Option<Check> {
    let (formula, brute, what) = if beta > 0.0 && gamma > 0.0 {
        let k = fuchsian_ceiling_index(beta, gamma).max(1);
        (k, least_power(&pair.f, &pair.g, |re, _| re <= 2.0), "least k with tr(f g^k) <= 2")
    } else if beta < -4.0 && gamma < 0.0 {
        let k = lox_ceiling_index(beta, gamma).max(1);
        (k, least_power(&pair.f, &pair.g, |_, im| im <= 0.0), "least k with Im tr(f g^k) <= 0")
    } else {
        return None;
    };
    Some(match brute {
        None => Check::failed("k_formula", format!("no k <= {K_SEARCH} found")),
        Some(b) => Check {
            name: "k_formula",
            pass: b == formula,
            consistency: true,
            residual: Some((b - formula).abs() as f64),
            detail: format!("k={formula} ({what}; brute force gives {b})"),
        },
    })
}

fn criterion(
    pair: &MobiusPair,
    cfg: &Config,
    classified: &Verdict,
    checks: &mut Vec<Check>,
    oracle: &mut Option<Verdict>,
    classes: &mut serde_json::Map<String, Value>,
) {
    let tol = cfg.tol.max(1e-9);
    let h1 = compute_h1(pair, tol);
    let h2 = compute_h2(pair, tol);
    if let Ok(h1) = &h1 {
        classes.insert("h1_class".into(), json!(class_name(classify_mobius(h1, cfg.n_max, cfg.tol))));
    }
    if let Ok(h2) = &h2 {
        classes.insert("h2_class".into(), json!(class_name(classify_mobius(h2, cfg.n_max, cfg.tol))));
        if let Ok(h1) = &h1 {
            classes.insert("h2h1_class".into(), json!(class_name(classify_mobius(&(*h2 * *h1), cfg.n_max, cfg.tol))));
        }
    }
    match verify_criterion_psl(pair, cfg) {
        Err(e) => checks.push(Check::failed("criterion", e.to_string())),
        Ok(v) => {
            checks.push(Check {
                name: "criterion",
                pass: v.is_discrete(),
                consistency: false,
                residual: None,
                detail: format!("h1/h2 criterion gives {}", v.label()),
            });
            let undecided = |v: &Verdict| matches!(v, Verdict::Indeterminate { .. });
            let agree = undecided(&v) || undecided(classified) || v.is_discrete() == classified.is_discrete();
            checks.push(Check {
                name: "agreement",
                pass: agree,
                consistency: true,
                residual: None,
                detail: format!("classify gives {}, criterion gives {}", classified.label(), v.label()),
            });
            *oracle = Some(v);
        }
    }
}

fn witness_check(v: &Verdict, beta: f64, gamma: f64, scale: f64) -> Option<Check> {
    let c = v.certificate()?;
    Some(match reproduce(c.case, &c.witnesses, beta, gamma) {
        Err(e) => Check::failed("witnesses", e.to_string()),
        Ok((b, g)) => {
            let r = (b - beta).abs().max((g - gamma).abs());
            Check {
                name: "witnesses",
                pass: r <= 1e-6 * scale,
                consistency: true,
                residual: Some(r),
                detail: format!("{} formula reproduces the point", c.case.name()),
            }
        }
    })
}
