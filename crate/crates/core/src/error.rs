//! Error types for the simulator crate, one enum per subsystem.

use thiserror::Error;

/// Failures of the state-algebra layer.
#[derive(Debug, Error)]
pub enum QstateError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("unsupported dimension {dim}; only 2, 3 and 4 are handled")]
    UnsupportedDim { dim: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("entry count {len} does not match dimension {dim}")]
    BadEntryCount { dim: usize, len: usize },
    #[error("amplitudes are not normalized: |ψ|² = {norm2}")]
    NotNormalized { norm2: f64 },
    #[error("zero-norm vector cannot be normalized")]
    ZeroNorm,
    #[error("value is not finite")]
    NonFinite,
    #[error("matrix is not Hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },
    #[error("trace is {trace}, expected 1")]
    BadTrace { trace: f64 },
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eig:.3e})")]
    NotPositive { min_eig: f64 },
    #[error("operator is not unitary (defect {defect:.3e})")]
    NotUnitary { defect: f64 },
    #[error("mixing weight {weight} outside [0,1]")]
    BadMixWeight { weight: f64 },
    #[error("empty weight list for an ensemble mode")]
    EmptyWeights,
    #[error("coupling chi = {chi} outside the perturbative range [0, 0.5]")]
    CouplingOutOfRange { chi: f64 },
}

/// Failures of the memory lifecycle operations.
#[derive(Debug, Error)]
pub enum MemoryError {
    #[error("time reversal: t_now = {t_now} ns precedes state time {as_of} ns")]
    TimeReversal { t_now: f64, as_of: f64 },
    #[error("decoherence time must be positive, got {tau} ns")]
    BadTau { tau: f64 },
    #[error(transparent)]
    State(#[from] QstateError),
}

/// Failures of the trial engine and its parametric model.
#[derive(Debug, Error)]
pub enum SimError {
    #[error("parameter {name} = {value} outside its valid range")]
    ParameterOutOfRange { name: &'static str, value: f64 },
    #[error("parameter combination yields a non-physical joint state: {source}")]
    NotPhysical {
        #[source]
        source: QstateError,
    },
    #[error("invalid pulse schedule: {reason}")]
    BadSchedule { reason: String },
    #[error(transparent)]
    State(#[from] QstateError),
    #[error(transparent)]
    Memory(#[from] MemoryError),
}

/// Failures of the time-interval analysis layer.
#[derive(Debug, Error)]
pub enum TiaError {
    #[error("coincidence window must satisfy lo < hi, got [{lo}, {hi})")]
    BadWindow { lo: i64, hi: i64 },
    #[error("histogram bin width must be a positive multiple of 2 ns, got {bin_ns}")]
    BadBinWidth { bin_ns: i64 },
}

/// Failures of event-stream serialization.
#[derive(Debug, Error)]
pub enum EventIoError {
    #[error("{path}:{row}: {reason}")]
    Malformed {
        path: String,
        row: usize,
        reason: String,
    },
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Failures of the estimator layer.
#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("fringe fit needs at least 3 points, got {n}")]
    TooFewPoints { n: usize },
    #[error("fringe fit needs angles spanning half a period; span is {span_rad} rad")]
    InsufficientSpan { span_rad: f64 },
    #[error("degenerate fringe data: all sample angles sit on fringe nodes")]
    DegenerateFit,
    #[error("weight list length {weights} does not match {points} data points")]
    WeightLengthMismatch { weights: usize, points: usize },
    #[error("fringe amplitude {amplitude} exceeds the physical bound {bound}")]
    InconsistentTables { amplitude: f64, bound: f64 },
    #[error("table row for signal outcome {row} has no counts")]
    EmptyRow { row: usize },
    #[error("fidelity argument {value} outside [0,1]")]
    FidelityOutOfRange { value: f64 },
    #[error(transparent)]
    State(#[from] QstateError),
    #[error(transparent)]
    Tia(#[from] TiaError),
}
