use alloc::string::String;
use core::fmt;

use crate::poly::parse::ParseError;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    ZeroDenominator,
    ZeroPolynomial,
    /// A polynomial of positive degree was required.
    ConstantPolynomial,
    DegreeOutOfRange { degree: usize, min: usize, max: usize },
    NotSquarefree,
    /// `P` shares a factor with `dP/dX` over `Q(T)`.
    Inseparable,
    GroupTooLarge { bound: usize },
    TrivialGroup,
    InvalidPermutation(String),
    ZeroArgument,
    NotOnCurve,
    SingularCurve,
    NonIntegralModel,
    /// Sampling could not settle a question (all samples exceptional, etc).
    Inconclusive(String),
    Domain(String),
    Parse(ParseError),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => f.write_str("zero denominator"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::ConstantPolynomial => f.write_str("polynomial has degree 0"),
            Error::DegreeOutOfRange { degree, min, max } => {
                write!(f, "degree {degree} outside supported range {min}..={max}")
            }
            Error::NotSquarefree => f.write_str("polynomial is not squarefree"),
            Error::Inseparable => f.write_str("polynomial is not separable over Q(T)"),
            Error::GroupTooLarge { bound } => write!(f, "group order exceeds bound {bound}"),
            Error::TrivialGroup => f.write_str("group is trivial"),
            Error::InvalidPermutation(s) => write!(f, "invalid permutation: {s}"),
            Error::ZeroArgument => f.write_str("zero argument"),
            Error::NotOnCurve => f.write_str("point is not on the curve"),
            Error::SingularCurve => f.write_str("curve is singular"),
            Error::NonIntegralModel => f.write_str("model does not have integer coefficients"),
            Error::Inconclusive(s) => write!(f, "inconclusive: {s}"),
            Error::Domain(s) => f.write_str(s),
            Error::Parse(e) => write!(f, "{e}"),
        }
    }
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}
