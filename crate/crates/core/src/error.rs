use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("integer square root of a negative number")]
    NegativeSqrt,
    #[error("zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("singular curve: discriminant is zero")]
    Singular,
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("exceptional point {point}: {reason}")]
    Exceptional { point: String, reason: String },
    #[error("{map} inapplicable: {reason}")]
    Inapplicable { map: &'static str, reason: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn exceptional(point: impl ToString, reason: impl Into<String>) -> Self {
        Error::Exceptional {
            point: point.to_string(),
            reason: reason.into(),
        }
    }

    pub(crate) fn inapplicable(map: &'static str, reason: impl Into<String>) -> Self {
        Error::Inapplicable {
            map,
            reason: reason.into(),
        }
    }
}
