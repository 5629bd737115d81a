use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::{half_length_token, witness_key, CurveFamily, Window};
use crate::math;

pub const CSV_HEADER: &str = "case,n,q,k,p,sign,u,v,gamma,beta";

/// Decimal rendering with 12 significant digits, trailing zeros removed.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return alloc::format!("{x}");
    }
    let e = math::floor(math::log10(x.abs())) as i32;
    let decimals = (11 - e).clamp(0, 60) as usize;
    let mut s = alloc::format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// One row per sample inside the window, sorted by case, indices, `gamma`
/// and `beta`.
pub fn emit_csv(families: &[CurveFamily], w: &Window) -> String {
    let mut rows = Vec::new();
    for f in families {
        let key = witness_key(&f.indices);
        for s in f.samples.iter().filter(|s| w.contains(s.gamma, s.beta)) {
            rows.push((f.case, key, s.gamma, s.beta, f, s));
        }
    }
    rows.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then(a.2.total_cmp(&b.2)).then(a.3.total_cmp(&b.3)));
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    let opt = |x: Option<u32>| x.map(|v| alloc::format!("{v}")).unwrap_or_default();
    for (case, _, gamma, beta, f, s) in rows {
        let ws = s.witnesses(&f.indices);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            case.name(),
            opt(ws.n),
            opt(ws.q),
            opt(ws.k),
            opt(ws.p),
            ws.sign.map(|x| String::from(x.symbol())).unwrap_or_default(),
            ws.u.map(half_length_token).unwrap_or_default(),
            ws.v.map(half_length_token).unwrap_or_default(),
            format_sig(gamma),
            format_sig(beta),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{enumerate_families, Limits};
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(1.0), "1");
        assert_eq!(format_sig(-4.5), "-4.5");
        assert_eq!(format_sig(core::f64::consts::PI), "3.14159265359");
        assert_eq!(format_sig(1234.56789012345), "1234.56789012");
        assert_eq!(format_sig(0.000123456789012345), "0.000123456789012");
        assert_eq!(format_sig(0.0), "0");
    }

    #[test]
    fn empty_window_gives_header_only() {
        let w = Window::new(1000.0, 1001.0, -1001.0, -1000.0, 8).unwrap();
        let fams = enumerate_families(&w, &Limits { n_max: 4, p_max: 4, k_max: 1 });
        assert_eq!(emit_csv(&fams, &w), "case,n,q,k,p,sign,u,v,gamma,beta\n");
    }

    #[test]
    fn row_count_matches_samples() {
        let w = Window::new(-20.0, 20.0, -20.0, 20.0, 16).unwrap();
        let fams = enumerate_families(&w, &Limits { n_max: 5, p_max: 5, k_max: 2 });
        let total: usize = fams.iter().map(|f| f.samples.len()).sum();
        assert_eq!(emit_csv(&fams, &w).lines().count(), total + 1);
    }
}
