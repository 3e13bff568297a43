//! The `berger` command line.
//!
//! Exit codes: 0 ok, 1 failed check, 2 bad input, 3 truncation failure.

mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::berger::BergerParam;
use crate::error::Error;
use crate::exact::{fmt_q, parse_q, Q};
use crate::jacobi::{enumerate_index, enumerate_with_kmax, IndexReport, ModelSubmanifold, TruncationPolicy};
use crate::oracle::{curvature_suite, full_suite, tai_suite, CheckReport, SuiteConfig, DEFAULT_SEED};
use crate::spectra::{berger_modes, clifford_low_modes, clifford_modes, CliffordMode, LaplaceMode};
use crate::stability::{library_models, moduli_sweep, phase_rows, standard_grid, uniform_grid};
use output::{write_json, write_json_lines, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0} check(s) failed")]
    Checks(usize),
    #[error("output error: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Core(Error::Truncation { .. }) => 3,
            CliError::Core(_) => 2,
            CliError::Checks(_) | CliError::Output(_) => 1,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Berger,
    Clifford,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    TgBerger,
    Circle,
    VeroneseRp3,
    VeroneseS3,
    TotallyReal,
    Clifford,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GridKind {
    /// 1/k for k = 2..16 and a few interior points
    Standard,
    /// i/steps for i = 1..steps
    Uniform,
}

#[derive(Debug, Parser)]
#[command(name = "berger", version, about = "Spectra, Jacobi index tables and stability data for minimal submanifolds of Berger spheres")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Laplace spectrum of a Berger sphere or a Clifford hypersurface
    Spectrum(SpectrumArgs),
    /// Jacobi index and nullity of a model submanifold
    Index(IndexArgs),
    /// Stability verdicts over a grid of tau^2
    Phase(PhaseArgs),
    /// Conformal moduli of the minimal Clifford torus
    Moduli(ModuliArgs),
    /// Run every numerical and exact check
    Verify(CheckArgs),
    /// Checks of the embedding into Hermitian matrices
    TaiCheck(TaiArgs),
    /// Curvature identities of the Berger metric
    CurvatureCheck(CheckArgs),
}

fn parse_tau_sq(s: &str) -> Result<BergerParam, String> {
    let t = parse_q(s).map_err(|e| e.to_string())?;
    BergerParam::new(t).map_err(|e| e.to_string())
}

fn parse_fraction(s: &str) -> Result<Q, String> {
    parse_q(s).map_err(|e| e.to_string())
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let t = s.trim();
    match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    }
    .map_err(|e| format!("bad seed `{t}`: {e}"))
}

fn parse_tolerance(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected NAME=VALUE, got `{s}`"))?;
    let v: f64 = value.trim().parse().map_err(|_| format!("bad tolerance `{value}`"))?;
    if !(v.is_finite() && v >= 0.0) {
        return Err(format!("tolerance must be finite and >= 0, got {v}"));
    }
    Ok((name.trim().to_string(), v))
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: ModelKind,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub m1: Option<u32>,
    #[arg(long)]
    pub m2: Option<u32>,
}

fn need(v: Option<u32>, flag: &str, model: &str) -> Result<u32, CliError> {
    v.ok_or_else(|| CliError::Input(format!("--model {model} needs {flag}")))
}

impl ModelArgs {
    fn build(&self) -> Result<Option<ModelSubmanifold>, CliError> {
        use ModelSubmanifold::*;
        let m = match self.model {
            ModelKind::TgBerger => TotallyGeodesicBergerSphere {
                n: need(self.n, "--n", "tg-berger")?,
                m: need(self.m, "--m", "tg-berger")?,
            },
            ModelKind::Circle => CircleCover { n: need(self.n, "--n", "circle")?, s: need(self.s, "--s", "circle")? },
            ModelKind::VeroneseRp3 => VeroneseRp3,
            ModelKind::VeroneseS3 => VeroneseS3,
            ModelKind::TotallyReal => {
                TotallyRealSphere { n: need(self.n, "--n", "totally-real")?, d: need(self.d, "--d", "totally-real")? }
            }
            ModelKind::Clifford => {
                CliffordHypersurface { m1: need(self.m1, "--m1", "clifford")?, m2: need(self.m2, "--m2", "clifford")? }
            }
            ModelKind::All => return Ok(None),
        };
        m.validate()?;
        if let TotallyGeodesicBergerSphere { n, m } = m {
            if m >= n {
                return Err(CliError::Input(format!("tg-berger needs m < n, got m={m}, n={n}")));
            }
        }
        Ok(Some(m))
    }
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_enum, default_value_t = Space::Berger)]
    pub space: Space,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long, default_value_t = 0)]
    pub m1: u32,
    #[arg(long, default_value_t = 0)]
    pub m2: u32,
    /// exact fraction in (0, 1], e.g. 1/3
    #[arg(long, value_parser = parse_tau_sq)]
    pub tau_sq: BergerParam,
    #[arg(long, default_value_t = 4)]
    pub kmax: u32,
    /// only the four lowest Clifford modes
    #[arg(long)]
    pub low: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_parser = parse_tau_sq)]
    pub tau_sq: BergerParam,
    /// fixed truncation; fails with exit 3 if it is not certified
    #[arg(long)]
    pub kmax: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PhaseArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum, default_value_t = GridKind::Standard)]
    pub grid: GridKind,
    #[arg(long, default_value_t = 12)]
    pub steps: u32,
    /// largest ambient n when --model all
    #[arg(long, default_value_t = 3)]
    pub max_n: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ModuliArgs {
    #[arg(long, default_value_t = 21)]
    pub samples: usize,
    /// smallest tau^2 of the sweep
    #[arg(long, value_parser = parse_fraction, default_value = "1/3")]
    pub tau_sq_min: Q,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long, env = "BERGER_SEED", value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// override a check tolerance, NAME=VALUE (repeatable)
    #[arg(long = "tol", value_parser = parse_tolerance)]
    pub tolerances: Vec<(String, f64)>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TaiArgs {
    #[arg(long, value_parser = parse_tau_sq, default_value = "1/2")]
    pub tau_sq: BergerParam,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[command(flatten)]
    pub check: CheckArgs,
}

fn spectrum(a: &SpectrumArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let tau = &a.tau_sq;
    match a.space {
        Space::Berger => {
            if a.low {
                return Err(CliError::Input("--low applies to --space clifford".into()));
            }
            let modes: Vec<LaplaceMode> =
                berger_modes(a.n, tau, a.kmax).into_iter().filter(|m| m.multiplicity > 0).collect();
            if a.format == Format::Json {
                return write_json(&json!({ "space": "berger", "n": a.n, "tau_sq": fmt_q(tau.tau_sq()), "modes": modes }), out);
            }
            let mut t = Table::new(vec!["k", "p", "value", "multiplicity", "source"]);
            for m in modes {
                t.push(vec![m.k.to_string(), m.p.to_string(), fmt_q(&m.value), m.multiplicity.to_string(), "berger-laplace-spectrum".into()]);
            }
            t.write(a.format, out)
        }
        Space::Clifford => {
            let modes: Vec<CliffordMode> = if a.low {
                clifford_low_modes(a.m1, a.m2, tau)
            } else {
                clifford_modes(a.m1, a.m2, tau, a.kmax).into_iter().filter(|m| m.multiplicity > 0).collect()
            };
            if a.format == Format::Json {
                return write_json(
                    &json!({ "space": "clifford", "m1": a.m1, "m2": a.m2, "tau_sq": fmt_q(tau.tau_sq()), "modes": modes }),
                    out,
                );
            }
            let mut t = Table::new(vec!["k1", "k2", "p", "value", "multiplicity", "source"]);
            for m in modes {
                t.push(vec![
                    m.k1.to_string(),
                    m.k2.to_string(),
                    m.p.to_string(),
                    fmt_q(&m.value),
                    m.multiplicity.to_string(),
                    "clifford-laplace-spectrum".into(),
                ]);
            }
            t.write(a.format, out)
        }
    }
}

#[derive(Serialize)]
struct IndexOutput<'a> {
    model: String,
    tau_sq: String,
    index: u64,
    nullity: u64,
    truncation_k: u32,
    certificate: &'a str,
    closed_form: &'a Option<crate::jacobi::TableEntry>,
    agrees_with_closed_form: Option<bool>,
    modes: &'a [crate::jacobi::JacobiMode],
}

fn index(a: &IndexArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let model = a.model.build()?.ok_or_else(|| CliError::Input("index needs a single model, not `all`".into()))?;
    let r: IndexReport = match a.kmax {
        Some(k) => enumerate_with_kmax(&model, &a.tau_sq, k)?,
        None => enumerate_index(&model, &a.tau_sq, &TruncationPolicy::default())?,
    };
    let tag = r.closed_form.as_ref().map_or("jacobi-enumeration", |t| t.source);
    match a.format {
        Format::Json => write_json(
            &IndexOutput {
                model: model.slug(),
                tau_sq: fmt_q(&r.tau_sq),
                index: r.index,
                nullity: r.nullity,
                truncation_k: r.truncation_k,
                certificate: &r.certificate,
                closed_form: &r.closed_form,
                agrees_with_closed_form: r.agrees_with_closed_form(),
                modes: &r.nonpositive_modes,
            },
            out,
        ),
        Format::Csv => {
            let mut t = Table::new(vec!["model", "tau_sq", "index", "nullity", "truncation_k", "closed_index", "closed_nullity", "source"]);
            let (ci, cn) = match &r.closed_form {
                Some(e) => (e.index.to_string(), e.nullity.to_string()),
                None => (String::new(), String::new()),
            };
            t.push(vec![model.slug(), fmt_q(&r.tau_sq), r.index.to_string(), r.nullity.to_string(), r.truncation_k.to_string(), ci, cn, tag.into()]);
            t.write_csv(out)
        }
        Format::Table => {
            writeln!(out, "model        {}", model.slug())?;
            writeln!(out, "tau^2        {}", fmt_q(&r.tau_sq))?;
            writeln!(out, "index        {}", r.index)?;
            writeln!(out, "nullity      {}", r.nullity)?;
            if let Some(e) = &r.closed_form {
                writeln!(out, "closed form  index {} nullity {} ({})", e.index, e.nullity, e.source)?;
            }
            writeln!(out, "certificate  {}", r.certificate)?;
            writeln!(out)?;
            let mut t = Table::new(vec!["family", "labels", "value", "approx", "multiplicity"]);
            for m in &r.nonpositive_modes {
                t.push(vec![
                    serde_json::to_value(m.family)?.as_str().unwrap_or_default().to_string(),
                    m.label_string(),
                    m.value.to_string(),
                    format!("{:.6}", m.value.to_f64()),
                    m.multiplicity.to_string(),
                ]);
            }
            t.write_text(out)
        }
    }
}

fn phase(a: &PhaseArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let models = match a.model.build()? {
        Some(m) => vec![m],
        None => {
            if a.max_n == 0 {
                return Err(CliError::Input("--max-n must be >= 1".into()));
            }
            library_models(a.max_n)
        }
    };
    let grid = match a.grid {
        GridKind::Standard => standard_grid(),
        GridKind::Uniform => uniform_grid(a.steps)?,
    };
    let rows = phase_rows(&models, &grid)?;
    if a.format == Format::Json {
        return write_json(&json!({ "rows": rows }), out);
    }
    let mut t = Table::new(vec!["model", "d", "tau_sq_num", "tau_sq_den", "index", "nullity", "verdict", "theorem"]);
    for r in rows {
        t.push(vec![
            r.model,
            r.d.to_string(),
            r.tau_sq_num,
            r.tau_sq_den,
            r.index.to_string(),
            r.nullity.to_string(),
            r.verdict.to_string(),
            r.theorem.to_string(),
        ]);
    }
    t.write(a.format, out)
}

fn moduli(a: &ModuliArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let pts = moduli_sweep(a.samples, &a.tau_sq_min)?;
    if a.format == Format::Json {
        return write_json(&json!({ "points": pts }), out);
    }
    let mut t = Table::new(vec!["tau_sq", "x", "y", "source"]);
    for p in pts {
        t.push(vec![fmt_q(&p.tau_sq), p.x.to_string(), p.y.to_string(), "clifford-torus-moduli".into()]);
    }
    t.write(a.format, out)
}

fn suite_config(a: &CheckArgs) -> SuiteConfig {
    SuiteConfig { seed: a.seed, samples: a.samples, tolerances: a.tolerances.iter().cloned().collect() }
}

fn report_checks(reports: Vec<CheckReport>, a: &CheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    for (name, _) in &a.tolerances {
        if !reports.iter().any(|r| &r.name == name) {
            return Err(CliError::Input(format!("no check named `{name}`")));
        }
    }
    match a.format {
        Format::Json => write_json_lines(&reports, out)?,
        f => {
            let mut t = Table::new(vec!["name", "pass", "max_error", "tolerance", "samples", "seed"]);
            for r in &reports {
                t.push(vec![
                    r.name.clone(),
                    r.pass.to_string(),
                    format!("{:e}", r.max_error),
                    format!("{:e}", r.tolerance),
                    r.samples.to_string(),
                    r.seed.to_string(),
                ]);
            }
            t.write(f, out)?;
        }
    }
    match reports.iter().filter(|r| !r.pass).count() {
        0 => Ok(()),
        n => Err(CliError::Checks(n)),
    }
}

/// Runs one parsed command, writing results to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Spectrum(a) => spectrum(a, out),
        Command::Index(a) => index(a, out),
        Command::Phase(a) => phase(a, out),
        Command::Moduli(a) => moduli(a, out),
        Command::Verify(a) => report_checks(full_suite(&suite_config(a)), a, out),
        Command::TaiCheck(a) => {
            if a.tau_sq.is_round() {
                return Err(CliError::Input("the embedding needs tau^2 < 1".into()));
            }
            report_checks(tai_suite(&a.tau_sq, a.n, &suite_config(&a.check)), &a.check, out)
        }
        Command::CurvatureCheck(a) => report_checks(curvature_suite(&suite_config(a)), a, out),
    }
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "berger: {e}");
            e.exit_code()
        }
    }
}
