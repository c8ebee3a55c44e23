use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("torus knot parameters must both exceed 1 (got p={p}, q={q})")]
    ParameterTooSmall { p: i64, q: i64 },
    #[error("torus knot parameters must be coprime (gcd({p}, {q}) = {gcd})")]
    NotCoprime { p: i64, q: i64, gcd: i64 },
    #[error("torus knot parameters must differ (p = q = {0})")]
    EqualParameters(i64),
    #[error("({alpha}, {beta}) does not index a non-abelian component of the ({p},{q}) character variety")]
    InvalidComponent { p: u32, q: u32, alpha: u32, beta: u32 },
    #[error("argument lies within the pole tolerance of iπ·{k}/pq")]
    PoleProximity { k: i64 },
    #[error("iπ·{k}/pq is not a simple pole (p or q divides {k})")]
    NotSimplePole { k: i64 },
    #[error("the two bundle points do not share a boundary character")]
    BaseMismatch,
    #[error("requested tail order {requested} exceeds the optimal truncation index {optimal}")]
    DivergenceWarning { requested: usize, optimal: usize },
    #[error("quadrature needs {demand} digits of working precision, above the cap of {cap}")]
    PrecisionExhausted { cap: u32, demand: u32 },
    #[error("bifurcation pairing failed: {0}")]
    Pairing(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ParameterTooSmall { .. } => "ParameterTooSmall",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::EqualParameters(_) => "EqualParameters",
            Error::InvalidComponent { .. } => "InvalidComponent",
            Error::PoleProximity { .. } => "PoleProximity",
            Error::NotSimplePole { .. } => "NotSimplePole",
            Error::BaseMismatch => "BaseMismatch",
            Error::DivergenceWarning { .. } => "DivergenceWarning",
            Error::PrecisionExhausted { .. } => "PrecisionExhausted",
            Error::Pairing(_) => "Pairing",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
