//! Holevo quantities, capacity formulas, and encoding searches.

pub mod brute_force;
pub mod capacity;
pub mod closed_form;
pub mod encoding;
pub mod holevo;
pub mod preprocessing;

pub use brute_force::{brute_force_best_encoding, brute_force_with, BruteForceConfig, BruteForceReport};
pub use capacity::{
    capacity_noiseless, capacity_unital, capacity_unital_with, check_entropy_condition, weyl_capacity_terms,
    CapacityResult, ConditionCheck, CONDITION_TOL, DEFAULT_CONDITION_SAMPLES,
};
pub use closed_form::{
    alpha_eigenvalues, capacity_alpha, capacity_bell_one_sided_dep2, capacity_bell_one_sided_pauli,
    capacity_bell_two_sided_dep2, capacity_werner_one_sided_pauli, classical_dep2_capacity, AlphaSpectra,
    TELEPORTATION_CLASSICAL_LIMIT,
};
pub use encoding::{EncodingKind, EncodingScheme};
pub use holevo::{holevo, holevo_relative, Ensemble};
pub use preprocessing::{
    basis_measurement, builtin_candidates, measure_and_prepare, preprocessing_capacity, Preprocessing,
    PreprocessingResult,
};
