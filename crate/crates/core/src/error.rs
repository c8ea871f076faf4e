use alloc::string::String;

use thiserror::Error;

/// Failures while reading the textual formats (rationals, partitions,
/// multisegments, parameter vectors).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("invalid partition `{0}`")]
    Partition(String),
    #[error("invalid segment `{0}`: {1}")]
    Segment(String, &'static str),
    #[error("invalid multisegment `{0}`")]
    Multisegment(String),
    #[error("invalid parameter vector `{0}`: {1}")]
    Parameter(String, &'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{what} = {value} is out of range (maximum {max})")]
    Bounds {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("segments {0} and {1} are not linked")]
    NotLinked(usize, usize),
    #[error("index {0} is out of range for a multisegment of {1} segments")]
    SegmentIndex(usize, usize),
    #[error("multisegment {0} is not Hermitian")]
    NotHermitian(String),
    #[error("multisegment {0} is not unitary")]
    NotUnitary(String),
    #[error("coefficient at {0} is {1}, normalization needs +-1")]
    NormalizationUndefined(String, i64),
    #[error("sign-representation coefficient is zero, crossing sign is undefined")]
    EpsilonUndefined,
    #[error("invalid Hermitian parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid Langlands datum: {0}")]
    InvalidLanglands(String),
    #[error("family point out of range: {0}")]
    FamilyRange(String),
    #[error("requires conjecture: {0}")]
    RequiresConjecture(String),
    #[error("no transversal path found after {0} perturbations")]
    PerturbationFailed(usize),
    #[error("no signature route available for {0}")]
    NoRoute(String),
    #[error("oracle consistency failure: {0}")]
    Oracle(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
