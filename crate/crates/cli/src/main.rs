#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod config;
mod report;
mod tokens;
mod verify;

use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rpslice_core::classifier::Hints;
use rpslice_core::orbifold::{parse_symbol, presentation_for, Presentation, RenderMode};
use rpslice_core::slice::{emit_csv, emit_svg, enumerate_families, enumerate_regions, Limits, SvgStyle, Window};
use rpslice_core::{free_region, Config};
use serde_json::json;

use config::{CliConfig, Format};
use report::{exit_code, Classification};

const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "rpslice", version, about = "Discreteness of two-generator groups with a parabolic generator")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Flat key=value file with tol, n_max, p_max, k_max, format.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true)]
    n_max: Option<u32>,
    #[arg(long, global = true)]
    p_max: Option<u32>,
    #[arg(long, global = true)]
    k_max: Option<u32>,
    /// json, text, csv or svg, depending on the command.
    #[arg(long, global = true)]
    format: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide discreteness at one point, or at every row read from stdin.
    #[command(allow_negative_numbers = true)]
    Classify {
        /// A real, or ell:n/q.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "stdin")]
        beta: Option<String>,
        /// A real, u=<half-length> or -u=<half-length>.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "stdin")]
        gamma: Option<String>,
        /// Read CSV rows (with a header naming beta and gamma, or plain
        /// `beta,gamma` lines).
        #[arg(long, conflicts_with_all = ["beta", "gamma"])]
        stdin: bool,
    },
    /// Report the free region containing a point.
    #[command(allow_negative_numbers = true)]
    Region {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Matrix realization and consistency checks at one point.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Print an orbifold presentation.
    #[command(allow_negative_numbers = true)]
    Present {
        /// Half-length u, e.g. pi/4.
        #[arg(long, requires = "v")]
        u: Option<String>,
        /// Half-length v, e.g. par.
        #[arg(long, requires = "u")]
        v: Option<String>,
        /// Short form such as PH[inf,2;3].
        #[arg(long, conflicts_with_all = ["u", "v", "beta", "gamma"])]
        symbol: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "gamma", conflicts_with_all = ["u", "v"])]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "beta")]
        gamma: Option<String>,
        /// Render the abstract form, with infbar relations dropped.
        #[arg(long = "abstract")]
        abstract_: bool,
    },
    /// Enumerate the curve families in a window as CSV or SVG.
    #[command(allow_negative_numbers = true)]
    Enumerate {
        #[arg(long, default_value_t = -40.0, allow_hyphen_values = true)]
        gmin: f64,
        #[arg(long, default_value_t = 40.0, allow_hyphen_values = true)]
        gmax: f64,
        #[arg(long, default_value_t = -40.0, allow_hyphen_values = true)]
        bmin: f64,
        #[arg(long, default_value_t = 40.0, allow_hyphen_values = true)]
        bmax: f64,
        /// Samples per curve.
        #[arg(long, default_value_t = 256)]
        samples: usize,
        /// Largest elliptic order enumerated.
        #[arg(long, default_value_t = 12)]
        orders: u32,
        /// Also outline the Sigma_k bands in SVG output.
        #[arg(long)]
        bands: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cfg = match settings(&cli.global) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    match dispatch(cli.command, &cfg) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Usage(e)) => usage(e),
    }
}

fn usage(e: anyhow::Error) -> ExitCode {
    eprintln!("error: {e:#}");
    ExitCode::from(EXIT_USAGE)
}

fn settings(g: &GlobalArgs) -> Result<CliConfig> {
    let mut c = CliConfig::default();
    if let Some(p) = &g.config {
        c.apply_file(p)?;
    }
    if let Some(t) = g.tol {
        c.tol = t;
    }
    if let Some(n) = g.n_max {
        c.n_max = n;
    }
    if let Some(p) = g.p_max {
        c.p_max = p;
    }
    if let Some(k) = g.k_max {
        c.k_max = k;
    }
    if let Some(f) = &g.format {
        c.format = Some(Format::parse(f)?);
    }
    c.validate()?;
    Ok(c)
}

fn pick_format(cfg: &CliConfig, default: Format, allowed: &[Format], cmd: &str) -> Result<Format> {
    let f = cfg.format.unwrap_or(default);
    if !allowed.contains(&f) {
        bail!("{cmd} does not support format {f:?}");
    }
    Ok(f)
}

fn point(beta: &str, gamma: &str) -> Result<(f64, f64, Hints)> {
    let mut hints = Hints::default();
    let b = tokens::parse_beta(beta, &mut hints).context("--beta")?;
    let g = tokens::parse_gamma(gamma, &mut hints).context("--gamma")?;
    Ok((b, g, hints))
}

fn dispatch(cmd: Command, cli: &CliConfig) -> std::result::Result<i32, Usage> {
    let cfg = cli.core();
    let out = io::stdout();
    let mut out = out.lock();
    match cmd {
        Command::Classify { beta, gamma, stdin } => {
            let fmt = pick_format(cli, Format::Json, &[Format::Json, Format::Text], "classify")?;
            let emit = |out: &mut io::StdoutLock<'_>, c: &Classification| -> io::Result<()> {
                match fmt {
                    Format::Text => writeln!(out, "{}", c.to_text()),
                    _ => writeln!(out, "{}", c.to_json()),
                }
            };
            if stdin {
                let mut worst = 0;
                for (b, g, h) in read_points(io::stdin().lock())? {
                    let c = Classification::run(b, g, &cfg, &h);
                    worst = worst.max(exit_code(&c.verdict));
                    emit(&mut out, &c)?;
                }
                Ok(worst)
            } else {
                let (b, g, h) = point(beta.as_deref().unwrap_or_default(), gamma.as_deref().unwrap_or_default())?;
                let c = Classification::run(b, g, &cfg, &h);
                emit(&mut out, &c)?;
                Ok(exit_code(&c.verdict))
            }
        }
        Command::Region { beta, gamma } => {
            let fmt = pick_format(cli, Format::Json, &[Format::Json, Format::Text], "region")?;
            let (b, g, _) = point(&beta, &gamma)?;
            let r = if g == 0.0 { None } else { free_region(b, g, cli.k_max) };
            let id = r.map(|t| t.id().to_string());
            match fmt {
                Format::Text => writeln!(out, "{}", id.as_deref().unwrap_or("none"))?,
                _ => writeln!(out, "{}", json!({ "beta": b, "gamma": g, "free_region": id }))?,
            }
            Ok(if r.is_some() { 0 } else { 1 })
        }
        Command::Verify { beta, gamma } => {
            let fmt = pick_format(cli, Format::Json, &[Format::Json, Format::Text], "verify")?;
            let b = tokens::parse_beta(&beta, &mut Hints::default()).context("--beta")?;
            let g = tokens::parse_gamma(&gamma, &mut Hints::default()).context("--gamma")?;
            let r = verify::run(b, g, &cfg);
            match fmt {
                Format::Text => write!(out, "{}", r.text)?,
                _ => writeln!(out, "{}", serde_json::to_string_pretty(&r.json)?)?,
            }
            Ok(r.exit)
        }
        Command::Present { u, v, symbol, beta, gamma, abstract_ } => {
            let fmt = pick_format(cli, Format::Text, &[Format::Json, Format::Text], "present")?;
            let p = presentation(u, v, symbol, beta, gamma, &cfg)?;
            let Some(p) = p else {
                eprintln!("no presentation: the point is not a discrete beta < -4, gamma > 0 group");
                return Ok(1);
            };
            let mode = if abstract_ { RenderMode::Abstract } else { RenderMode::Kleinian };
            match fmt {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "symbol": p.symbol(),
                        "kind": p.kind.name(),
                        "generators": p.generators(),
                        "kleinian": p.render(RenderMode::Kleinian),
                        "abstract": p.render(RenderMode::Abstract),
                    })
                )?,
                _ => writeln!(out, "{}\n{}", p.symbol(), p.render(mode))?,
            }
            Ok(0)
        }
        Command::Enumerate { gmin, gmax, bmin, bmax, samples, orders, bands, output } => {
            let fmt = pick_format(cli, Format::Csv, &[Format::Csv, Format::Svg], "enumerate")?;
            if orders < 2 {
                return Err(anyhow::anyhow!("--orders must be at least 2").into());
            }
            let w = Window::new(gmin, gmax, bmin, bmax, samples).map_err(|e| anyhow::anyhow!("invalid window: {e}"))?;
            let lim = Limits { n_max: orders, p_max: orders, k_max: cli.k_max };
            let fams = enumerate_families(&w, &lim);
            let text = match fmt {
                Format::Svg => {
                    let regions = enumerate_regions(&w, lim.k_max);
                    let style = SvgStyle { dashed_k_max: lim.k_max, show_bands: bands, ..SvgStyle::default() };
                    emit_svg(&fams, &regions, &w, &style)
                }
                _ => emit_csv(&fams, &w),
            };
            match output {
                Some(p) => std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
    }
}

fn presentation(
    u: Option<String>,
    v: Option<String>,
    symbol: Option<String>,
    beta: Option<String>,
    gamma: Option<String>,
    cfg: &Config,
) -> Result<Option<Presentation>> {
    if let Some(s) = symbol {
        return parse_symbol(&s).map(Some).map_err(|e| anyhow::anyhow!("{e}"));
    }
    if let (Some(u), Some(v)) = (u, v) {
        let (u, v) = (tokens::parse_half_length(&u)?, tokens::parse_half_length(&v)?);
        return presentation_for(u, v).map(Some).map_err(|e| anyhow::anyhow!("{e}"));
    }
    if let (Some(b), Some(g)) = (beta, gamma) {
        let (b, g, h) = point(&b, &g)?;
        let c = Classification::run(b, g, cfg, &h);
        return Ok(c
            .verdict
            .certificate()
            .filter(|c| c.witnesses.u.is_some() && c.witnesses.v.is_some())
            .and_then(|c| presentation_for(c.witnesses.u?, c.witnesses.v?).ok()));
    }
    bail!("give --symbol, --u and --v, or --beta and --gamma")
}

/// Rows of `beta,gamma`, or CSV whose header names `beta` and `gamma`.
fn read_points(input: impl BufRead) -> Result<Vec<(f64, f64, Hints)>> {
    let mut cols = (0, 1);
    let mut rows = Vec::new();
    for (no, line) in input.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if no == 0 && fields.iter().any(|f| *f == "beta" || *f == "gamma") {
            let find =
                |name: &str| fields.iter().position(|f| *f == name).with_context(|| format!("header lacks {name}"));
            cols = (find("beta")?, find("gamma")?);
            continue;
        }
        let get =
            |i: usize| fields.get(i).copied().with_context(|| format!("line {}: missing column {}", no + 1, i + 1));
        let (b, g, h) = point(get(cols.0)?, get(cols.1)?).with_context(|| format!("line {}", no + 1))?;
        rows.push((b, g, h));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_plain_and_headed_rows() {
        let plain = read_points("0,1\n-4.5, 2\n\n".as_bytes()).unwrap();
        assert_eq!(plain.iter().map(|r| (r.0, r.1)).collect::<Vec<_>>(), vec![(0.0, 1.0), (-4.5, 2.0)]);
        let headed = read_points("case,gamma,beta\nX,2,-4.5\n".as_bytes()).unwrap();
        assert_eq!((headed[0].0, headed[0].1), (-4.5, 2.0));
        assert!(read_points("1\n".as_bytes()).is_err());
        assert!(read_points("a,b\n".as_bytes()).is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
