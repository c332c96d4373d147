use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value")]
    NonFinite,

    #[error("taylor components have different centers")]
    CenterMismatch,

    #[error("taylor components have different degree caps ({left} vs {right})")]
    CapMismatch { left: usize, right: usize },

    #[error("polynomial of degree {degree} does not fit in a series of cap {cap}")]
    DegreeExceedsCap { degree: usize, cap: usize },

    #[error("order bounds differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("point at distance {distance} from the series center is outside its validity radius {radius}")]
    OutsideValidity { distance: f64, radius: f64 },

    #[error("series is not invertible: constant term {constant:.3e} below floor {floor:.3e}")]
    SeriesNotInvertible { constant: f64, floor: f64 },

    #[error("element is not invertible: margin {margin:.3e} below floor {floor:.3e}")]
    NotInvertible { margin: f64, floor: f64 },

    #[error("need at least {need} samples, got {got}")]
    TooFewSamples { need: usize, got: usize },

    #[error("design matrix is rank deficient (rank {rank} of {columns})")]
    RankDeficient { rank: usize, columns: usize },

    #[error("invalid finite-difference step {step} (must lie in (0, {max}])")]
    InvalidStep { step: f64, max: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{message} at offset {offset}")]
    Parse { message: String, offset: usize },

    #[error("malformed sample data: {0}")]
    Data(String),
}

impl Error {
    /// True for failures caused by the caller's input rather than by the
    /// numerics.
    pub fn is_user_error(&self) -> bool {
        !matches!(
            self,
            Error::NonFinite | Error::OutsideValidity { .. } | Error::SeriesNotInvertible { .. }
        )
    }

    pub fn offset(&self) -> Option<usize> {
        match self {
            Error::Parse { offset, .. } => Some(*offset),
            _ => None,
        }
    }
}
