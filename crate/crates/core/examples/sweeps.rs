//! Writes the three capacity sweeps as CSV files, one column per curve.

use std::fs::File;
use std::path::{Path, PathBuf};

use densecode::analysis::{default_p_grid, sweep_figure3, sweep_figure4, sweep_figure5, FIGURE3_ALPHAS};

pub fn run(dir: &Path) -> densecode::Result<Vec<PathBuf>> {
    let grid = default_p_grid();
    let sweeps = [
        ("alpha_family.csv", sweep_figure3(&FIGURE3_ALPHAS, &grid)?),
        ("bell_vs_classical.csv", sweep_figure4(&grid)?),
        ("preprocessing.csv", sweep_figure5(&grid)?),
    ];
    let mut written = Vec::new();
    for (name, sweep) in sweeps {
        let path = dir.join(name);
        sweep.write_csv(File::create(&path)?)?;
        let names: Vec<&str> = sweep.series.iter().map(|s| s.name.as_str()).collect();
        println!("{} ({} rows): {}", path.display(), sweep.grid.len(), names.join(", "));
        written.push(path);
    }
    Ok(written)
}

#[allow(dead_code)]
fn main() -> densecode::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    run(&dir).map(|_| ())
}
