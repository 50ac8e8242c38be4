//! Dense complex linear algebra: Kronecker products, partial traces,
//! Hermitian eigendecomposition and the entropy functionals built on it.

mod density;
mod eigen;
mod entropy;
mod matrix;

pub use density::{embed, partial_trace, partial_trace_index, DensityMatrix, Subsystem, PSD_TOL, TRACE_TOL};
pub use eigen::{hermitian_eigen, hermitian_eigenvalues, hermitian_function, HermitianEigen, Spectrum, HERMITIAN_TOL};
pub use entropy::{
    clip, relative_entropy, shannon_entropy, spectrum_entropy, trace_sigma_log_rho, von_neumann_entropy, xlog2x,
};
pub(crate) use entropy::matrix_entropy;
pub use matrix::{tensor, ComplexMatrix, MAX_DIM};
pub(crate) use matrix::ONE;
