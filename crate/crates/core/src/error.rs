use thiserror::Error;

/// Every failure the geometry and spectral routines can report.
///
/// Variant names are part of the public contract: the CLI prints them
/// verbatim, so renaming one is a breaking change.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("metric is not symmetric (g12 = {g12}, g21 = {g21})")]
    NonSymmetricMetric { g12: f64, g21: f64 },
    #[error("induced metric is degenerate at q = {q:?}")]
    DegenerateMetric { q: [f64; 2] },
    #[error("point q = {q:?} lies outside the chart domain")]
    OutOfDomain { q: [f64; 2] },
    #[error("surface is light-like at q = {q:?}")]
    LightLikePoint { q: [f64; 2] },
    #[error("focal point: volume factor vanishes at q = {q:?}, q3 = {q3}")]
    FocalPoint { q: [f64; 2], q3: f64 },
    #[error("profile is not arc-length parametrized at q2 = {q2} (residual {residual:e})")]
    ArcLengthViolation { q2: f64, residual: f64 },
    #[error("profile causal character {found} does not match family ({expected})")]
    WrongCausalCharacter { expected: &'static str, found: &'static str },
    #[error("division by zero: {what} vanishes at q2 = {q2}")]
    DivisionByZero { what: &'static str, q2: f64 },
    #[error("ell = {ell} must be an integer for a periodic (time-like axis) family")]
    NonIntegerEll { ell: f64 },
    #[error("grid has {n} points, at least {min} are required")]
    GridTooCoarse { n: usize, min: usize },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("eigensolver did not converge: {0}")]
    NotConverged(String),
    #[error("the ell = 0 sphere channel has a singular csc^2 coefficient at the poles")]
    SingularChannel,
    #[error("linear solve failed in time step: {0}")]
    UnstableStep(String),
    #[error("wavefunction grid does not match ({0})")]
    GridMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable identifier of the variant, e.g. `"NonIntegerEll"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonSymmetricMetric { .. } => "NonSymmetricMetric",
            Error::DegenerateMetric { .. } => "DegenerateMetric",
            Error::OutOfDomain { .. } => "OutOfDomain",
            Error::LightLikePoint { .. } => "LightLikePoint",
            Error::FocalPoint { .. } => "FocalPoint",
            Error::ArcLengthViolation { .. } => "ArcLengthViolation",
            Error::WrongCausalCharacter { .. } => "WrongCausalCharacter",
            Error::DivisionByZero { .. } => "DivisionByZero",
            Error::NonIntegerEll { .. } => "NonIntegerEll",
            Error::GridTooCoarse { .. } => "GridTooCoarse",
            Error::InvalidGrid(_) => "InvalidGrid",
            Error::NotConverged(_) => "NotConverged",
            Error::SingularChannel => "SingularChannel",
            Error::UnstableStep(_) => "UnstableStep",
            Error::GridMismatch(_) => "GridMismatch",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
