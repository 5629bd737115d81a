use std::path::Path;

use anyhow::{bail, Context, Result};
use rpslice_core::Config;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Csv,
    Svg,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format> {
        Ok(match s {
            "json" => Format::Json,
            "text" => Format::Text,
            "csv" => Format::Csv,
            "svg" => Format::Svg,
            _ => bail!("unknown format {s:?} (expected json, text, csv or svg)"),
        })
    }
}

/// Tolerance, recognition bounds and output format.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CliConfig {
    pub tol: f64,
    pub n_max: u32,
    pub p_max: u32,
    pub k_max: u32,
    pub format: Option<Format>,
}

impl Default for CliConfig {
    fn default() -> Self {
        let c = Config::default();
        Self { tol: c.tol, n_max: c.n_max, p_max: c.p_max, k_max: c.k_max, format: None }
    }
}

impl CliConfig {
    /// Applies a flat `key = value` file. Blank lines and `#` comments are
    /// skipped; keys may use `-` or `_`.
    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        self.apply_text(&text)
    }

    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').with_context(|| format!("line {}: expected key=value", no + 1))?;
            let (k, v) = (k.trim().replace('-', "_"), v.trim());
            let bad = || format!("line {}: bad value {v:?} for {k}", no + 1);
            match k.as_str() {
                "tol" => self.tol = v.parse().with_context(bad)?,
                "n_max" => self.n_max = v.parse().with_context(bad)?,
                "p_max" => self.p_max = v.parse().with_context(bad)?,
                "k_max" => self.k_max = v.parse().with_context(bad)?,
                "format" => self.format = Some(Format::parse(v)?),
                _ => bail!("line {}: unknown key {k:?}", no + 1),
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            bail!("tol must be positive, got {}", self.tol);
        }
        if self.n_max < 2 || self.p_max < 2 {
            bail!("n-max and p-max must be at least 2");
        }
        if self.k_max < 1 {
            bail!("k-max must be at least 1");
        }
        Ok(())
    }

    pub fn core(&self) -> Config {
        Config { tol: self.tol, n_max: self.n_max, p_max: self.p_max, k_max: self.k_max }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_overrides_defaults() {
        let mut c = CliConfig::default();
        c.apply_text("# bounds\ntol = 1e-8\nn-max=50\n\nformat = text\n").unwrap();
        assert_eq!(c.tol, 1e-8);
        assert_eq!(c.n_max, 50);
        assert_eq!(c.p_max, 200);
        assert_eq!(c.format, Some(Format::Text));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_bounds() {
        assert!(CliConfig::default().apply_text("colour = red").is_err());
        assert!(CliConfig::default().apply_text("tol").is_err());
        let c = CliConfig { n_max: 1, ..CliConfig::default() };
        assert!(c.validate().is_err());
        let c = CliConfig { tol: 0.0, ..CliConfig::default() };
        assert!(c.validate().is_err());
    }
}
