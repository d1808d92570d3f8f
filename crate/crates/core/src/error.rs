use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification of an [`Error`], used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input itself is malformed.
    InvalidInput,
    /// The input is well formed but outside the domain of the requested operation.
    Precondition,
    /// Two independent computations disagreed. Always a bug.
    Internal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty generating set")]
    EmptyGeneratingSet,

    #[error("ambient dimension must be at least 1")]
    ZeroAmbientDimension,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("repeated interpolation node {0}")]
    RepeatedInterpolationNode(i64),

    #[error("interpolation needs at least one node")]
    NoInterpolationNodes,

    #[error("polynomial of degree {degree} exceeds the basis dimension {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("{operation} requires zero-dimensional ideal")]
    NotZeroDimensional { operation: &'static str },

    #[error("{operation} requires at least {required} variables, got {found}")]
    TooFewVariables {
        operation: &'static str,
        required: usize,
        found: usize,
    },

    #[error("variable index {index} out of range for {dim} variables")]
    VariableOutOfRange { index: usize, dim: usize },

    #[error("hypothesis <v_i, alpha_0> >= 1 fails for generator {0:?}")]
    AlphaHypothesisFails(Vec<u64>),

    #[error("Veronese cone requires r >= 2, got r = {0}")]
    VeroneseDegree(u64),

    #[error("non-polynomial count: region is not a lattice polytope (n = {n}: counted {counted}, interpolated {predicted})")]
    NonPolynomialCount {
        n: u64,
        counted: u64,
        predicted: String,
    },

    #[error("Ehrhart/length mismatch at n = {n}: Ehrhart difference {ehrhart}, complement count {length}")]
    EhrhartLengthMismatch {
        n: u64,
        ehrhart: String,
        length: u64,
    },

    #[error("Hilbert coefficient e_{index} = {value} is not an integer")]
    NonIntegralCoefficient { index: usize, value: String },

    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            EmptyGeneratingSet
            | ZeroAmbientDimension
            | DimensionMismatch { .. }
            | RepeatedInterpolationNode(_)
            | NoInterpolationNodes
            | VariableOutOfRange { .. } => ErrorKind::InvalidInput,
            DegreeTooLarge { .. }
            | NotZeroDimensional { .. }
            | TooFewVariables { .. }
            | AlphaHypothesisFails(_)
            | VeroneseDegree(_) => ErrorKind::Precondition,
            NonPolynomialCount { .. }
            | EhrhartLengthMismatch { .. }
            | NonIntegralCoefficient { .. }
            | CrossCheck(_) => ErrorKind::Internal,
        }
    }
}
