use thiserror::Error;

/// Unified error type for every fallible operation in the crate.
///
/// Display strings are stable: the CLI prints them verbatim and tests match
/// on them, so treat any change here as a breaking one.
#[derive(Debug, Error)]
pub enum Error {
    /// A signal-domain operation received zero samples.
    #[error("empty signal")]
    EmptySignal,

    /// A spectrum-domain operation received zero bins.
    #[error("empty spectrum")]
    EmptySpectrum,

    /// A sample was NaN or infinite.
    #[error("non-finite sample at index {0}")]
    NonFiniteSample(usize),

    /// A complex amplitude or matrix entry was NaN or infinite.
    #[error("non-finite value at index {0}")]
    NonFiniteValue(usize),

    /// A generator was asked for a non-positive or non-finite duration.
    #[error("duration must be positive and finite")]
    InvalidDuration,

    /// An amplitude vector length is not a power of two >= 2.
    #[error("state length {0} is not a power of two >= 2")]
    InvalidStateLength(usize),

    /// A qubit count fell outside the supported range for the operation.
    #[error("qubit count {n_qubits} out of range (1..={max})")]
    QubitCountOutOfRange { n_qubits: usize, max: usize },

    /// The squared norm of a state differed from 1 beyond the input guard.
    #[error("state not normalized")]
    NotNormalized,

    /// A polar entry violated r >= 0, theta in (-pi, pi], or r = 0 => theta = 0.
    #[error("invalid polar entry at index {0}")]
    InvalidPolarEntry(usize),

    /// A phase-shift rule contained a non-finite shift or negative tolerance.
    #[error("invalid phase-shift rule: {0}")]
    InvalidPhaseRule(&'static str),

    /// A transform trace failed its internal consistency checks.
    #[error("inconsistent transform trace: {0}")]
    InvalidTrace(&'static str),

    /// A bit string contained a character other than '0' or '1'.
    #[error("invalid bit string: expected only '0' and '1'")]
    InvalidBitString,

    /// A reference register was requested for zero bits.
    #[error("empty reference bit list")]
    EmptyReference,

    /// A reference register exceeded the supported size.
    #[error("reference length {0} exceeds maximum {1}")]
    ReferenceTooLong(usize, usize),

    /// A payload had zero bits.
    #[error("empty payload")]
    EmptyPayload,

    /// A scheme label was neither "10" nor "01".
    #[error("invalid scheme label (expected \"10\" or \"01\")")]
    InvalidScheme,

    /// The identifier length or weight disagreed with the register or payload.
    #[error("identifier/payload mismatch")]
    IdentifierPayloadMismatch,

    /// A frame's block sizes disagreed with the reference register.
    #[error("frame length mismatch (expected {expected} qubits, found {found})")]
    FrameLengthMismatch { expected: usize, found: usize },

    /// A serialized reference register's fields disagreed with each other.
    #[error("inconsistent reference register: {0}")]
    InconsistentReference(&'static str),

    /// A decoded qubit's amplitudes no longer form the recorded basis state.
    #[error("frame corrupted")]
    FrameCorrupted,

    /// A flagged qubit's phase offset matched none of the legal symbols.
    #[error("undecodable phase")]
    UndecodablePhase,

    /// A density matrix was not square.
    #[error("density matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    /// A density matrix differed from its conjugate transpose.
    #[error("density matrix is not Hermitian")]
    NotHermitian,

    /// A density matrix trace differed from 1.
    #[error("density matrix trace is not 1")]
    TraceNotOne,

    /// A density matrix had an eigenvalue below the PSD tolerance.
    #[error("density matrix is not positive semidefinite")]
    NotPositiveSemidefinite,

    /// An ensemble had no members.
    #[error("empty ensemble")]
    EmptyEnsemble,

    /// Ensemble probabilities were negative or did not sum to 1.
    #[error("ensemble probabilities do not sum to 1")]
    ProbabilitiesNotNormalized,

    /// Ensemble members had differing dimensions.
    #[error("ensemble dimension mismatch")]
    DimensionMismatch,

    /// A probability argument fell outside [0, 1].
    #[error("probability {0} out of range [0, 1]")]
    ProbabilityOutOfRange(f64),

    /// A noise parameter fell outside [0, 1].
    #[error("noise parameter {0} out of range [0, 1]")]
    NoiseOutOfRange(f64),

    /// A CSV document failed to parse.
    #[error("malformed CSV at line {line}: {message}")]
    Csv { line: usize, message: String },

    /// A JSON document failed to parse or validate.
    #[error("malformed JSON: {0}")]
    Json(String),

    /// An underlying I/O operation failed.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
