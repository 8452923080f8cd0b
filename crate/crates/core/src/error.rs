use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A checked `u64` operation left the representable range.
    Overflow,
    /// An input violated the documented precondition of an operation.
    Domain(&'static str),
    ZeroDenominator,
    /// `prop4_decompose` input with a shared factor between two entries.
    NotPairwiseCoprime {
        first: usize,
        second: usize,
    },
    ProductNotSquare,
    NotPythagorean,
    /// `c` was not a multiple of `p² + q²` while classifying a triple.
    InternalNonIntegral,
    /// A factor was not a square although the product was.
    InternalNotSquare {
        index: usize,
    },
    /// A descent step produced a state whose measure did not strictly drop.
    MeasureViolation {
        from: u64,
        to: u64,
    },
}

impl Error {
    /// Whether the error is an arithmetic overflow rather than bad input.
    pub fn is_overflow(&self) -> bool {
        matches!(self, Error::Overflow)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow => f.write_str("arithmetic overflow"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::ZeroDenominator => f.write_str("zero denominator"),
            Error::NotPairwiseCoprime { first, second } => {
                write!(f, "factors {first} and {second} are not relatively prime")
            }
            Error::ProductNotSquare => f.write_str("product of factors is not a square"),
            Error::NotPythagorean => f.write_str("not a Pythagorean triple"),
            Error::InternalNonIntegral => {
                f.write_str("internal error: hypotenuse is not a multiple of p^2+q^2")
            }
            Error::InternalNotSquare { index } => {
                write!(f, "internal error: factor {index} is not a square")
            }
            Error::MeasureViolation { from, to } => {
                write!(f, "descent measure did not decrease ({from} -> {to})")
            }
        }
    }
}

impl core::error::Error for Error {}
