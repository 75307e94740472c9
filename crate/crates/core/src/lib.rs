//! Photon-level simulator and analysis toolkit for a heralded
//! atomic-ensemble quantum memory node.
//!
//! The crate is organized around the life of one experimental trial:
//!
//! * [`qstate`] — exact state algebra over the 2/3/4-dimensional
//!   polarization and collective-excitation spaces;
//! * [`optics`] — the polarization analyzer convention and detector
//!   click model;
//! * [`memory`] — heralded preparation, storage decoherence and readout
//!   of the atomic qubit;
//! * [`simkernel`] — the Monte Carlo trial engine, its parametric
//!   imperfection model and the analytic joint-state oracle;
//! * [`tia`] — time-interval analysis: gating, start/stop coincidence
//!   matching and delay histograms;
//! * [`analysis`] — estimators: conditional-probability tables, fringe
//!   fits, density-matrix reconstruction, fidelity bounds and rates.
//!
//! All values are immutable after construction and all randomness is
//! injected through explicit seeds, so simulations are reproducible
//! bit-for-bit across runs and platforms.

pub mod analysis;
pub mod error;
pub mod memory;
pub mod optics;
pub mod qstate;
pub mod simkernel;
pub mod tia;
