//! Operator and state families: Weyl–Heisenberg unitaries, SU(d) generators,
//! Bell, Werner and Schmidt states, and Haar-random sampling.

mod gellmann;
mod haar;
mod states;
mod weyl;

pub use gellmann::{su_generators, HilbertSchmidt};
pub use haar::{
    complex_gaussian, ginibre, perturb_unitary, random_density, random_hermitian, random_pure, random_unitary,
    random_unitary_with, seeded_rng, SeededRng,
};
pub use states::{basis_product, bell_density, bell_state, schmidt_state, werner_state, PureState};
pub use weyl::{root_of_unity, weyl_operator, weyl_operators, WeylIndex};
pub(crate) use weyl::check_dim;
