use thiserror::Error;

use crate::field::FieldError;

/// Failures of the geometric operations.
///
/// `Undecided` is not a fault: it reports that a budgeted dyadic query ran
/// out of precision before a witness appeared.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(FieldError),
    #[error("undecided within budget {budget}")]
    Undecided { budget: u32 },
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("points are not apart")]
    PointsNotApart,
    #[error("point lies on the line")]
    NotOutside,
    #[error("lines are parallel")]
    Parallel,
    #[error("lines are equal")]
    LinesEqual,
    #[error("precondition witness missing or invalid: {0}")]
    MissingWitness(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("points are not collinear with the centre")]
    NotCollinear,
    #[error("point coincides with the centre")]
    PointEqualsCenter,
    #[error("dilatation ratio is one")]
    RatioIsOne,
    #[error("no trace at this point")]
    NoTraceAtP,
    #[error("inconsistent partial map: {0}")]
    InconsistentPartialMap(String),
    #[error("scalar is zero")]
    ScalarZero,
    #[error("base translation is the identity")]
    BaseIsIdentity,
    #[error("translation directions differ")]
    DirectionsDiffer,
    #[error("translations have the same direction")]
    SameDirection,
    #[error("malformed configuration: {0}")]
    Malformed(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid frame: {0}")]
    InvalidFrame(&'static str),
}

impl From<FieldError> for Error {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::Undecided { budget } => Error::Undecided { budget },
            other => Error::Field(other),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
