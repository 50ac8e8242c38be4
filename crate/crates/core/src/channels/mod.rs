//! Kraus channels, Pauli and depolarizing families, and their bipartite lifts.

mod bipartite;
mod kraus;
mod pauli;

pub use bipartite::{
    apply, lift, one_sided_depolarizing, one_sided_pauli, two_sided_depolarizing, two_sided_pauli, verify_covariance,
    BipartiteChannel, Channel, CovarianceReport,
};
pub use kraus::{pauli_channel, random_unitary_mixture, KrausChannel, CHANNEL_TOL};
pub use pauli::{depolarizing_spec, PauliSpec, PauliTable};
