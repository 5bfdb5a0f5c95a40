use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("BadRank: rank {r} outside [0, {n}]")]
    BadRank { r: usize, n: usize },
    #[error("MixedCardinality: bases of sizes {0} and {1}")]
    MixedCardinality(usize, usize),
    #[error("AxiomViolation: {0}")]
    AxiomViolation(String),
    #[error("EmptyMatroid")]
    EmptyMatroid,
    #[error("NotDependent: I + e is independent")]
    NotDependent,
    #[error("NotABasis: {0:?}")]
    NotABasis(Vec<usize>),
    #[error("NotACircuit: {0:?}")]
    NotACircuit(Vec<usize>),
    #[error("NotAFace: {0}")]
    NotAFace(String),
    #[error("NotPure")]
    NotPure,
    #[error("RankZero: cannot truncate a rank-0 matroid")]
    RankZero,
    #[error("TooLarge: {0}")]
    TooLarge(String),
    #[error("CommonLoop: element {0} is a loop of both matroids")]
    CommonLoop(usize),
    #[error("GroundSetMismatch: {0} vs {1}")]
    GroundSetMismatch(usize, usize),
    #[error("TieError: {0}")]
    TieError(String),
    #[error("PoleAtOne")]
    PoleAtOne,
    #[error("NotPolynomial: {0}")]
    NotPolynomial(String),
    #[error("RouteDisagreement: {0}")]
    RouteDisagreement(String),
    #[error("NonGenericWeight: {0}")]
    NonGenericWeight(String),
    #[error("CycleError: intersection graph has a cycle through element {0}")]
    CycleError(usize),
    #[error("NotExpectedRank")]
    NotExpectedRank,
    #[error("NotSquare: rank sum {0} vs |C| = {1}")]
    NotSquare(usize, usize),
    #[error("RealizationFailed: {0}")]
    RealizationFailed(String),
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("BadInput: {0}")]
    BadInput(String),
}

impl Error {
    /// Short class name, used by the CLI when reporting failures.
    pub fn class(&self) -> &'static str {
        match self {
            Error::BadRank { .. } => "BadRank",
            Error::MixedCardinality(..) => "MixedCardinality",
            Error::AxiomViolation(_) => "AxiomViolation",
            Error::EmptyMatroid => "EmptyMatroid",
            Error::NotDependent => "NotDependent",
            Error::NotABasis(_) => "NotABasis",
            Error::NotACircuit(_) => "NotACircuit",
            Error::NotAFace(_) => "NotAFace",
            Error::NotPure => "NotPure",
            Error::RankZero => "RankZero",
            Error::TooLarge(_) => "TooLarge",
            Error::CommonLoop(_) => "CommonLoop",
            Error::GroundSetMismatch(..) => "GroundSetMismatch",
            Error::TieError(_) => "TieError",
            Error::PoleAtOne => "PoleAtOne",
            Error::NotPolynomial(_) => "NotPolynomial",
            Error::RouteDisagreement(_) => "RouteDisagreement",
            Error::NonGenericWeight(_) => "NonGenericWeight",
            Error::CycleError(_) => "CycleError",
            Error::NotExpectedRank => "NotExpectedRank",
            Error::NotSquare(..) => "NotSquare",
            Error::RealizationFailed(_) => "RealizationFailed",
            Error::OutOfRange(_) => "OutOfRange",
            Error::BadInput(_) => "BadInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
