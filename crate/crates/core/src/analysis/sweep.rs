use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channels::two_sided_depolarizing;
use crate::coding::{
    builtin_candidates, capacity_alpha, capacity_bell_one_sided_dep2, capacity_bell_two_sided_dep2,
    classical_dep2_capacity, preprocessing_capacity,
};
use crate::error::{Error, Result};
use crate::qops::bell_density;

/// Points in the default noise grid.
pub const DEFAULT_GRID_POINTS: usize = 201;

/// Schmidt parameters drawn in the capacity-versus-α figure.
pub const FIGURE3_ALPHAS: [f64; 4] = [0.0, 0.08, 0.2, 0.5];

/// `n` evenly spaced points on `[0, 1]`, endpoints included.
pub fn unit_grid(n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..n).map(|i| i as f64 / (n - 1) as f64).collect(),
    }
}

pub fn default_p_grid() -> Vec<f64> {
    unit_grid(DEFAULT_GRID_POINTS)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub name: String,
    pub values: Vec<f64>,
}

/// Named curves sampled on a shared parameter grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub parameter_name: String,
    pub grid: Vec<f64>,
    pub series: Vec<Series>,
}

impl SweepResult {
    pub fn new(parameter_name: impl Into<String>, grid: Vec<f64>, series: Vec<Series>) -> Result<Self> {
        for s in &series {
            if s.values.len() != grid.len() {
                return Err(Error::DimensionMismatch {
                    expected: grid.len(),
                    actual: s.values.len(),
                });
            }
            if let Some(x) = s.values.iter().find(|x| !x.is_finite()) {
                return Err(Error::InvalidArgument(format!("series {} has non-finite value {x}", s.name)));
            }
        }
        Ok(Self {
            parameter_name: parameter_name.into(),
            grid,
            series,
        })
    }

    pub fn series(&self, name: &str) -> Option<&[f64]> {
        self.series.iter().find(|s| s.name == name).map(|s| s.values.as_slice())
    }

    /// Copy with every number rounded to 12 significant digits.
    pub fn rounded(&self) -> Self {
        Self {
            parameter_name: self.parameter_name.clone(),
            grid: self.grid.iter().map(|&x| round_sig(x)).collect(),
            series: self
                .series
                .iter()
                .map(|s| Series {
                    name: s.name.clone(),
                    values: s.values.iter().map(|&x| round_sig(x)).collect(),
                })
                .collect(),
        }
    }

    /// Header `parameter,series…`, one row per grid point, 12 significant digits.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let header = std::iter::once(self.parameter_name.as_str()).chain(self.series.iter().map(|s| s.name.as_str()));
        w.write_record(header).map_err(csv_err)?;
        for (i, &x) in self.grid.iter().enumerate() {
            let row = std::iter::once(x)
                .chain(self.series.iter().map(|s| s.values[i]))
                .map(format_sig);
            w.write_record(row).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
    }

    /// JSON mirror of the CSV with the same rounding.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.rounded())?)
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let headers = r.headers().map_err(csv_err)?.clone();
        let mut cols: Vec<Vec<f64>> = vec![Vec::new(); headers.len()];
        for rec in r.records() {
            let rec = rec.map_err(csv_err)?;
            for (c, field) in rec.iter().enumerate() {
                cols[c].push(field.parse().map_err(|e| Error::Parse(format!("{field}: {e}")))?);
            }
        }
        let mut cols = cols.into_iter();
        let grid = cols.next().unwrap_or_default();
        let series = headers
            .iter()
            .skip(1)
            .zip(cols)
            .map(|(name, values)| Series {
                name: name.to_string(),
                values,
            })
            .collect();
        Self::new(headers.get(0).unwrap_or("p"), grid, series)
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// `x` rounded to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Text form of [`round_sig`]: plain decimals in `[1e-4, 1e15)`, exponent notation otherwise.
pub fn format_sig(x: f64) -> String {
    let r = round_sig(x);
    let a = r.abs();
    if r == 0.0 || !r.is_finite() || (1e-4..1e15).contains(&a) {
        r.to_string()
    } else {
        format!("{r:e}")
    }
}

fn series_over(grid: &[f64], name: impl Into<String>, f: impl Fn(f64) -> Result<f64> + Sync) -> Result<Series> {
    Ok(Series {
        name: name.into(),
        values: grid.par_iter().map(|&p| f(p)).collect::<Result<Vec<_>>>()?,
    })
}

/// Two-sided qubit depolarizing capacity of `|φ_α⟩` for each α, over `p`.
pub fn sweep_figure3(alphas: &[f64], p_grid: &[f64]) -> Result<SweepResult> {
    let series = alphas
        .iter()
        .map(|&a| series_over(p_grid, format!("alpha={a}"), |p| capacity_alpha(a, p)))
        .collect::<Result<Vec<_>>>()?;
    SweepResult::new("p", p_grid.to_vec(), series)
}

/// One-sided Bell, two-sided Bell, classical capacity, and the one-bit line.
pub fn sweep_figure4(p_grid: &[f64]) -> Result<SweepResult> {
    let series = vec![
        series_over(p_grid, "one_sided_bell", capacity_bell_one_sided_dep2)?,
        series_over(p_grid, "two_sided_bell", capacity_bell_two_sided_dep2)?,
        series_over(p_grid, "classical", classical_dep2_capacity)?,
        Series {
            name: "unit".into(),
            values: vec![1.0; p_grid.len()],
        },
    ];
    SweepResult::new("p", p_grid.to_vec(), series)
}

/// Bell state over two-sided qubit depolarizing noise, without and with
/// the best built-in pre-processing.
pub fn sweep_figure5(p_grid: &[f64]) -> Result<SweepResult> {
    let bell = bell_density(2)?;
    let candidates = builtin_candidates(2)?;
    let series = vec![
        series_over(p_grid, "bell_unitary", capacity_bell_two_sided_dep2)?,
        series_over(p_grid, "bell_preprocessed", |p| {
            Ok(preprocessing_capacity(&bell, &two_sided_depolarizing(2, p)?, &candidates)?.value)
        })?,
    ];
    SweepResult::new("p", p_grid.to_vec(), series)
}
