//! Thermodynamics of multi-level quantum heat engines running Otto-style
//! cycles: discrete spectra, Gibbs ensembles, net work and positive-work
//! conditions, the full 3-level spacing-change classification, and the
//! driven Λ-type atom whose dark state realizes a tunable 3-level engine.
//!
//! Natural units throughout: `k_B = 1`, `ħ = 1`.

pub mod cycle;
pub mod dark_state;
pub mod error;
pub mod linalg;
pub mod spectrum;
pub mod thermo;
pub mod three_level;

pub use error::Error;
pub use spectrum::{LevelSpectrum, SpectrumFamily};
pub use thermo::{HamiltonianFamily, HermitianOperator, ThermalState};
