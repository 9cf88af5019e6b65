use thiserror::Error;

/// Every failure the geometry can report.
///
/// Degeneracies are values, not panics: a construction that meets an
/// undefined join or meet names the element it could not build.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero coordinate vector")]
    ZeroVector,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("lines coincide")]
    CoincidentLines,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("repeated points")]
    DegeneratePoints,
    #[error("four points are not in general position")]
    DegenerateQuadruple,
    #[error("singular matrix")]
    Singular,
    #[error("solution space has dimension {0}")]
    UnderDetermined(usize),
    #[error("parameter line is tangent at the base point")]
    TangentParameter,
    #[error("point is not on the conic")]
    NotOnConic,
    #[error("conic is degenerate")]
    DegenerateConic,
    #[error("degenerate construction: {0} is undefined")]
    DegenerateConstruction(String),
    #[error("general position not reached after {0} attempts")]
    GeneralPositionExhausted(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("lines are not concurrent")]
    NotConcurrent,
    #[error("sides are not parallel to the reference triangle")]
    SideMismatch,
    #[error("coordinate sum is zero")]
    ZeroSum,
    #[error("completely-pseudo element has no direction triple")]
    CompletelyPseudo,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn undefined(label: impl Into<String>) -> Self {
        Error::DegenerateConstruction(label.into())
    }
}
