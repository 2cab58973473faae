//! Simulation and analysis toolkit for a resonantly driven two-level emitter
//! (quantum-dot exciton) coupled to longitudinal-acoustic phonons.
//!
//! The library predicts Mollow-triplet resonance-fluorescence spectra,
//! excitation-induced dephasing, and phonon-damped Rabi oscillations under
//! pulsed driving, and provides the fitting pipeline needed to analyse
//! measured or synthetic data sets of the same observables.
//!
//! All internal computation uses angular frequencies in ps⁻¹ and times in ps;
//! laboratory units (μeV, K, μW) are converted at module boundaries via
//! [`units`].

pub mod bloch;
pub mod error;
pub mod fitting;
pub mod ode;
pub mod phonon;
pub mod pulsed;
pub mod quadrature;
pub mod spectrum;
pub mod units;

pub use bloch::{BlochState, RateSet};
pub use error::{Error, Result};
pub use fitting::{FitReport, SeriesPoint};
pub use phonon::PhononParams;
pub use pulsed::PulseParams;
pub use spectrum::{PeakKind, PeakRecord, SpectrumResult};
pub use units::EmitterParams;
