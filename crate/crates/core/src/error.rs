use alloc::string::String;
use alloc::vec::Vec;

use crate::distribution::Source;

/// Broad category of an [`Error`], used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Structurally malformed input or an invalid query.
    Input,
    /// The probability mass function violates its invariants.
    Distribution,
    /// A computed quantity contradicts a proven identity.
    Consistency,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("distribution has no variables")]
    NoVariables,
    #[error("variable {0} has an empty alphabet")]
    EmptyAlphabet(usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("duplicate symbol `{symbol}` in the alphabet of variable {variable}")]
    DuplicateSymbol { variable: usize, symbol: String },
    #[error("alphabet count {found} does not match variable count {expected}")]
    AlphabetCount { expected: usize, found: usize },
    #[error("outcome has {found} components, expected {expected}")]
    Arity { expected: usize, found: usize },
    #[error("symbol index {index} out of range for variable {variable}")]
    SymbolOutOfRange { variable: usize, index: usize },
    #[error("unknown symbol `{symbol}` for variable {variable}")]
    UnknownSymbol { variable: usize, symbol: String },
    #[error("outcome {0:?} listed more than once")]
    DuplicateOutcome(Vec<usize>),

    #[error("probability {0} is negative or not finite")]
    InvalidProbability(f64),
    #[error("probabilities sum to {0}, expected 1")]
    NotNormalized(f64),

    #[error("variable set is empty")]
    EmptyVariableSet,
    #[error("variable position {position} out of range for {count} variables")]
    VariableOutOfRange { position: usize, count: usize },
    #[error("a source needs at least one predictor")]
    EmptySource,
    #[error("predictor index {0} listed more than once")]
    DuplicateIndex(usize),
    #[error("predictor index {index} outside 1..={max}")]
    PredictorOutOfRange { index: usize, max: usize },
    #[error("conditioning event has zero probability")]
    ZeroProbabilityEvent,
    #[error("target outcome {0} is not in the support")]
    OutcomeNotInSupport(usize),
    #[error("source outcome {0:?} is not in the support")]
    ResponseNotInSupport(Vec<usize>),
    #[error("source {source_set} overlaps conditioning set {given}")]
    OverlappingSources { source_set: Source, given: Source },

    #[error("a collection needs at least one source")]
    EmptyCollection,
    #[error("sources {{{0}}} and {{{1}}} are nested, collection is not an antichain")]
    NotAntichain(Source, Source),
    #[error("predictor count {count} outside supported range {min}..={max}")]
    PredictorCount {
        count: usize,
        min: usize,
        max: usize,
    },
    #[error("variable count {count} outside supported range {min}..={max}")]
    VariableCount {
        count: usize,
        min: usize,
        max: usize,
    },
    #[error("cannot parse collection label `{0}`")]
    InvalidLabel(String),
    #[error("node {0} is not part of the lattice")]
    UnknownNode(String),
    #[error("lattice over {lattice} predictors used with a distribution over {distribution}")]
    LatticeMismatch { lattice: usize, distribution: usize },
    #[error("node has {0} covers, too many for inclusion-exclusion")]
    TooManyCovers(usize),
    #[error("tolerance must be finite and nonnegative, got {0}")]
    InvalidTolerance(f64),
    #[error("grid of {0} cells is too large to search exhaustively")]
    SearchTooLarge(usize),

    #[error("partial information at {node} is {value}, below the nonnegativity tolerance")]
    NegativeAtom { node: String, value: f64 },
    #[error("consistency check failed at {node}: {expected} vs {found}")]
    Consistency {
        node: String,
        expected: f64,
        found: f64,
    },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidProbability(_) | Error::NotNormalized(_) => ErrorKind::Distribution,
            Error::NegativeAtom { .. } | Error::Consistency { .. } => ErrorKind::Consistency,
            _ => ErrorKind::Input,
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
