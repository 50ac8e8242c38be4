//! Command-line front end: argument model, dispatch and report formatting.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{
    find_classical_limit_crossing, find_threshold_alpha, format_sig, round_sig, sweep_figure3, sweep_figure4, sweep_figure5,
    unit_grid, SweepResult, FIGURE3_ALPHAS,
};
use crate::channels::{
    one_sided_depolarizing, one_sided_pauli, two_sided_depolarizing, two_sided_pauli, BipartiteChannel, PauliSpec,
};
use crate::coding::{
    brute_force_with, capacity_unital_with, BruteForceConfig, ConditionCheck, EncodingScheme, CONDITION_TOL,
};
use crate::error::{check_range, Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix};
use crate::qops::{bell_density, schmidt_state, werner_state};
use crate::verify::run_all;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Capacity of a resource state over a channel.
    Capacity,
    /// Figure data as CSV or JSON.
    Sweep,
    /// Threshold noise level and the one-bit crossing.
    Threshold,
    /// Run the property suite.
    Verify,
    /// Brute-force encoding search against the capacity formula.
    Optimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StateKind {
    Bell,
    Werner,
    Schmidt,
    File,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChannelKind {
    OneSidedPauli,
    TwoSidedPauli,
    OneSidedDep,
    TwoSidedDep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Figure {
    Figure3,
    Figure4,
    Figure5,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "densecode", version, about = "Dense coding capacities over noisy qudit channels")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    /// Local dimension of each party.
    #[arg(long, default_value_t = 2)]
    pub d: usize,

    /// Depolarizing noise parameter.
    #[arg(long, default_value_t = 0.0)]
    pub p: f64,

    /// Schmidt parameter of the `schmidt` state.
    #[arg(long, default_value_t = 0.5)]
    pub alpha: f64,

    /// Weight of the Bell projector in the `werner` state.
    #[arg(long, default_value_t = 1.0)]
    pub eta: f64,

    #[arg(long, value_enum, default_value_t = StateKind::Bell)]
    pub state: StateKind,

    /// JSON state file for `--state file`.
    #[arg(long)]
    pub state_path: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = ChannelKind::TwoSidedDep)]
    pub channel: ChannelKind,

    /// Pauli table JSON for the `*-pauli` channels.
    #[arg(long)]
    pub spec_path: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Figure::Figure4)]
    pub figure: Figure,

    /// Grid points on [0, 1] for sweeps.
    #[arg(long, default_value_t = 201)]
    pub points: usize,

    /// Output file; stdout when absent or `-`.
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Defaults to CSV for sweeps and JSON otherwise.
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    #[arg(long, env = "DENSECODE_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Haar samples in the entropy-condition check.
    #[arg(long, default_value_t = 64)]
    pub samples: usize,

    /// Brute-force restarts for `optimize`.
    #[arg(long, default_value_t = 100)]
    pub restarts: usize,

    /// Unitaries per brute-force ensemble; defaults to d².
    #[arg(long)]
    pub ensemble_size: Option<usize>,
}

/// On-disk state: `{"dims": [2, 2], "real": [[...]], "imag": [[...]]}`, `imag` optional.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub real: Vec<Vec<f64>>,
    #[serde(default)]
    pub imag: Option<Vec<Vec<f64>>>,
}

impl StateFile {
    pub fn into_density(self) -> Result<DensityMatrix> {
        let n = self.real.len();
        let zero_rows = vec![vec![0.0; n]; n];
        let imag = self.imag.unwrap_or(zero_rows);
        if imag.len() != n || self.real.iter().chain(&imag).any(|r| r.len() != n) {
            return Err(Error::Parse("state matrix must be square".into()));
        }
        let m = ComplexMatrix::from_fn(n, |r, c| Complex64::new(self.real[r][c], imag[r][c]));
        DensityMatrix::new(m, self.dims)
    }
}

impl RunConfig {
    fn format(&self) -> Format {
        self.format.unwrap_or(match self.command {
            Command::Sweep => Format::Csv,
            _ => Format::Json,
        })
    }

    /// Range checks done before any computation.
    pub fn validate(&self) -> Result<()> {
        if !(2..=8).contains(&self.d) {
            return Err(Error::UnsupportedDimension(self.d));
        }
        check_range("p", self.p, 0.0, 1.0)?;
        check_range("alpha", self.alpha, 0.0, 0.5)?;
        check_range("eta", self.eta, 0.0, 1.0)?;
        if self.points < 2 {
            return Err(Error::InvalidArgument("--points must be at least 2".into()));
        }
        if self.state == StateKind::File && self.state_path.is_none() {
            return Err(Error::InvalidArgument("--state file requires --state-path".into()));
        }
        if self.state == StateKind::Schmidt && self.d != 2 {
            return Err(Error::InvalidArgument("the schmidt state is defined for d = 2".into()));
        }
        if matches!(self.channel, ChannelKind::OneSidedPauli | ChannelKind::TwoSidedPauli) && self.spec_path.is_none() {
            return Err(Error::InvalidArgument("Pauli channels require --spec-path".into()));
        }
        if self.restarts == 0 {
            return Err(Error::InvalidArgument("--restarts must be positive".into()));
        }
        Ok(())
    }

    pub fn state(&self) -> Result<DensityMatrix> {
        match self.state {
            StateKind::Bell => bell_density(self.d),
            StateKind::Werner => werner_state(self.d, self.eta),
            StateKind::Schmidt => Ok(schmidt_state(self.alpha)?.density()),
            StateKind::File => {
                let path = self.state_path.as_deref().expect("validated");
                let file: StateFile = serde_json::from_str(&read(path)?)?;
                file.into_density()
            }
        }
    }

    pub fn channel(&self) -> Result<BipartiteChannel> {
        let spec = || -> Result<PauliSpec> {
            let spec: PauliSpec = serde_json::from_str(&read(self.spec_path.as_deref().expect("validated"))?)?;
            if spec.d() != self.d {
                return Err(Error::DimensionMismatch {
                    expected: self.d,
                    actual: spec.d(),
                });
            }
            Ok(spec)
        };
        match self.channel {
            ChannelKind::OneSidedDep => one_sided_depolarizing(self.d, self.p),
            ChannelKind::TwoSidedDep => two_sided_depolarizing(self.d, self.p),
            ChannelKind::OneSidedPauli => one_sided_pauli(&spec()?),
            ChannelKind::TwoSidedPauli => two_sided_pauli(&spec()?),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Rounds every number in a JSON tree to 12 significant digits.
fn round_json(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                *v = json!(round_sig(x));
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}

fn json_text(mut v: Value) -> Result<String> {
    round_json(&mut v);
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

fn fmt_num(x: f64) -> String {
    format_sig(x)
}

/// Header line plus rows, all fields already formatted.
fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io_err)?;
    for r in rows {
        w.write_record(&r).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// Emitted text and whether every requested check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub passed: bool,
}

/// Executes a validated configuration.
pub fn run(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    match cfg.command {
        Command::Capacity => run_capacity(cfg),
        Command::Sweep => run_sweep(cfg),
        Command::Threshold => run_threshold(cfg),
        Command::Verify => run_verify(cfg),
        Command::Optimize => run_optimize(cfg),
    }
}

fn run_capacity(cfg: &RunConfig) -> Result<Report> {
    let check = ConditionCheck {
        samples: cfg.samples,
        seed: cfg.seed,
    };
    let c = capacity_unital_with(&cfg.state()?, &cfg.channel()?, check)?;
    let text = match cfg.format() {
        Format::Json => json_text(serde_json::to_value(c)?)?,
        Format::Csv => csv_text(
            &["value_bits", "avg_state_entropy_bits", "channel_output_entropy_bits", "condition_residual"],
            vec![vec![
                fmt_num(c.value),
                fmt_num(c.average_state_entropy),
                fmt_num(c.channel_output_entropy),
                fmt_num(c.condition_residual),
            ]],
        )?,
    };
    Ok(Report { text, passed: true })
}

fn run_sweep(cfg: &RunConfig) -> Result<Report> {
    let grid = unit_grid(cfg.points);
    let sweep: SweepResult = match cfg.figure {
        Figure::Figure3 => sweep_figure3(&FIGURE3_ALPHAS, &grid)?,
        Figure::Figure4 => sweep_figure4(&grid)?,
        Figure::Figure5 => sweep_figure5(&grid)?,
    };
    let text = match cfg.format() {
        Format::Csv => sweep.to_csv()?,
        Format::Json => sweep.to_json()? + "\n",
    };
    Ok(Report { text, passed: true })
}

fn run_threshold(cfg: &RunConfig) -> Result<Report> {
    let reports = [
        ("threshold", find_threshold_alpha()?),
        ("classical_limit_crossing", find_classical_limit_crossing()?),
    ];
    let text = match cfg.format() {
        Format::Json => json_text(json!({
            "threshold": reports[0].1,
            "classical_limit_crossing": reports[1].1,
        }))?,
        Format::Csv => csv_text(
            &["name", "root", "bracket_lo", "bracket_hi", "iterations", "residual"],
            reports
                .iter()
                .map(|(name, r)| {
                    vec![
                        name.to_string(),
                        fmt_num(r.root),
                        fmt_num(r.bracket.0),
                        fmt_num(r.bracket.1),
                        r.iterations.to_string(),
                        fmt_num(r.residual),
                    ]
                })
                .collect(),
        )?,
    };
    Ok(Report { text, passed: true })
}

fn run_verify(cfg: &RunConfig) -> Result<Report> {
    let reports = run_all(cfg.seed);
    let passed = reports.iter().all(|r| r.passed);
    let text = match cfg.format() {
        Format::Json => json_text(json!({ "passed": passed, "properties": reports }))?,
        Format::Csv => csv_text(
            &["name", "module", "residual", "tolerance", "trials", "passed"],
            reports
                .iter()
                .map(|r| {
                    vec![
                        r.name.clone(),
                        r.module.clone(),
                        fmt_num(r.residual),
                        fmt_num(r.tolerance),
                        r.trials.to_string(),
                        r.passed.to_string(),
                    ]
                })
                .collect(),
        )?,
    };
    Ok(Report { text, passed })
}

#[derive(Debug, Clone, Serialize)]
struct OptimizeReport {
    best_chi_bits: f64,
    best_restart: usize,
    weyl_chi_bits: f64,
    /// `None` when the entropy condition fails and no capacity is claimed.
    formula_bits: Option<f64>,
    condition_residual: f64,
    restarts: usize,
    ensemble_size: usize,
    within_bound: bool,
}

fn run_optimize(cfg: &RunConfig) -> Result<Report> {
    let rho = cfg.state()?;
    let ch = cfg.channel()?;
    let size = cfg.ensemble_size.unwrap_or(cfg.d * cfg.d);
    let search = brute_force_with(&rho, &ch, &BruteForceConfig::new(size, cfg.restarts, cfg.seed))?;
    let weyl = EncodingScheme::weyl(cfg.d)?.holevo(&rho, &ch)?;
    let check = ConditionCheck {
        samples: cfg.samples,
        seed: cfg.seed,
    };
    let (formula, residual) = match capacity_unital_with(&rho, &ch, check) {
        Ok(c) => (Some(c.value), c.condition_residual),
        Err(Error::ConditionViolated { residual }) => (None, residual),
        Err(e) => return Err(e),
    };
    let within_bound = formula.is_none_or(|f| search.best_chi <= f + CONDITION_TOL);
    let report = OptimizeReport {
        best_chi_bits: search.best_chi,
        best_restart: search.best_restart,
        weyl_chi_bits: weyl,
        formula_bits: formula,
        condition_residual: residual,
        restarts: cfg.restarts,
        ensemble_size: size,
        within_bound,
    };
    let text = match cfg.format() {
        Format::Json => json_text(serde_json::to_value(&report)?)?,
        Format::Csv => csv_text(
            &["best_chi_bits", "weyl_chi_bits", "formula_bits", "condition_residual", "within_bound"],
            vec![vec![
                fmt_num(report.best_chi_bits),
                fmt_num(report.weyl_chi_bits),
                report.formula_bits.map(fmt_num).unwrap_or_default(),
                fmt_num(report.condition_residual),
                report.within_bound.to_string(),
            ]],
        )?,
    };
    Ok(Report {
        text,
        passed: within_bound,
    })
}

/// Machine-readable error object.
pub fn error_json(kind: &str, message: &str) -> String {
    json!({ "error": { "kind": kind, "message": message } }).to_string()
}

fn emit(cfg: &RunConfig, text: &str) -> Result<()> {
    match cfg.output.as_deref() {
        Some(path) if path != Path::new("-") => fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        _ => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

/// Parses arguments, runs, and returns the process exit code: 0 when every
/// check passed, 1 when a check failed, 2 on errors (reported on stderr as JSON).
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            let message = e.render().to_string();
            eprintln!("{}", error_json("invalid_config", message.trim()));
            return 2;
        }
    };
    match run(&cfg).and_then(|r| emit(&cfg, &r.text).map(|_| r.passed)) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("{}", error_json(e.kind(), &e.to_string()));
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("densecode").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn defaults() {
        let c = cfg(&["capacity"]);
        assert_eq!(c.d, 2);
        assert_eq!(c.channel, ChannelKind::TwoSidedDep);
        assert_eq!(c.format(), Format::Json);
        assert_eq!(cfg(&["sweep"]).format(), Format::Csv);
    }

    #[test]
    fn validation() {
        assert!(matches!(cfg(&["capacity", "--p", "1.5"]).validate(), Err(Error::OutOfRange { .. })));
        assert!(matches!(cfg(&["capacity", "--d", "9"]).validate(), Err(Error::UnsupportedDimension(9))));
        assert!(cfg(&["capacity", "--state", "file"]).validate().is_err());
        assert!(cfg(&["capacity", "--channel", "one-sided-pauli"]).validate().is_err());
        assert!(cfg(&["capacity", "--alpha", "0.7", "--state", "schmidt"]).validate().is_err());
    }

    #[test]
    fn capacity_json() {
        let r = run(&cfg(&["capacity", "--p", "0"])).unwrap();
        let v: Value = serde_json::from_str(&r.text).unwrap();
        assert_eq!(v["value_bits"], 2.0);
        assert!(v.get("condition_residual").is_some());
    }

    #[test]
    fn rounding_applies() {
        let mut v = json!({"a": [1.0 / 3.0, 2], "b": {"c": 0.1 + 0.2}});
        round_json(&mut v);
        assert_eq!(v.to_string(), r#"{"a":[0.333333333333,2],"b":{"c":0.3}}"#);
    }

    #[test]
    fn state_file_parsing() {
        let f: StateFile = serde_json::from_str(r#"{"dims":[2],"real":[[0.5,0.0],[0.0,0.5]]}"#).unwrap();
        assert_eq!(f.into_density().unwrap().dim(), 2);
        let bad: StateFile = serde_json::from_str(r#"{"dims":[2],"real":[[0.5,0.0],[0.0]]}"#).unwrap();
        assert!(bad.into_density().is_err());
    }
}
