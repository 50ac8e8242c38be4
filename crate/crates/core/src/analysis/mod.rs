//! Root finding and figure-data sweeps over the capacity formulas.

pub mod root;
pub mod sweep;

pub use root::{bisect, find_classical_limit_crossing, find_threshold_alpha, RootReport};
pub use sweep::{
    default_p_grid, format_sig, round_sig, sweep_figure3, sweep_figure4, sweep_figure5, unit_grid, Series, SweepResult,
    DEFAULT_GRID_POINTS, FIGURE3_ALPHAS,
};
