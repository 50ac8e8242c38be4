//! Super dense coding capacities over noisy unital qudit channels.

pub mod analysis;
pub mod channels;
pub mod cli;
pub mod coding;
pub mod error;
pub mod linalg;
pub mod qops;
pub mod verify;

pub use error::{Error, Result};
