//! Quantum limits on communication and information storage.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`]: spherical Bessel zeros, Bose integrals, monotone root
//!   finding and the partition-function sums of a uniformly spaced spectrum.
//! * [`spectra`]: one-quantum mode spectra `{ε_j, g_j}` for cavities, signals,
//!   hadrons, solitons and one-dimensional media.
//! * [`capacity`]: steady-state channel capacities and single-mode noisy
//!   channel information.
//! * [`burst`]: the characteristic information function of finite-duration
//!   signals and the linear bounds derived from it.
//! * [`counting`]: exact microcanonical state counts, spectral zeta
//!   estimates, rigorous bounds and storage examples.
//! * [`cli`]: the `qlimits` command-line front end.
//!
//! Natural units `ħ = c = k_B = 1` are used throughout the library.

pub mod burst;
pub mod capacity;
pub mod cli;
pub mod counting;
pub mod error;
pub mod numerics;
pub mod reference;
pub mod spectra;

pub use error::{Error, Result};

/// `log₂ e`, converts nits to bits.
pub const LOG2_E: f64 = std::f64::consts::LOG2_E;
