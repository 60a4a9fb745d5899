use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The characteristic handed to a prime field is not prime.
    NotPrime(u64),
    /// An extension modulus is not monic irreducible of degree at least 2.
    ReducibleModulus(String),
    /// The element does not live in an algebra over the requested field.
    MismatchedTower,
    ZeroPolynomial,
    /// Polynomials that were required to be coprime share a factor.
    NotCoprime,
    DivisionByZero,
    /// Inversion of an element or series that is not a unit.
    NotAUnit,
    /// An operation needed a coefficient at or beyond the known precision.
    PrecisionExhausted { needed: i64, available: i64 },
    ZeroSeries,
    /// A series is not in the group of units reducing to one.
    NotInG1(String),
    /// A diagonal block that must be invertible is singular.
    SingularBlock(&'static str),
    WindowTooSmall { needed: usize, got: usize },
    NonCommuting,
    SizeMismatch,
    /// A polynomial over the rationals could not be split by the supported methods.
    Unsplit(String),
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ReducibleModulus(m) => write!(f, "modulus {m} is not irreducible"),
            Error::MismatchedTower => write!(f, "element is not in an algebra over the requested field"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::NotCoprime => write!(f, "inputs are not coprime"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotAUnit => write!(f, "element is not a unit"),
            Error::PrecisionExhausted { needed, available } => write!(
                f,
                "precision exhausted: coefficient z^{needed} requested, known below z^{available}"
            ),
            Error::ZeroSeries => write!(f, "zero series"),
            Error::NotInG1(why) => write!(f, "series is not in G1: {why}"),
            Error::SingularBlock(which) => write!(f, "block {which} is singular"),
            Error::WindowTooSmall { needed, got } => {
                write!(f, "window {got} too small, need at least {needed}")
            }
            Error::NonCommuting => write!(f, "operators do not commute"),
            Error::SizeMismatch => write!(f, "size mismatch"),
            Error::Unsplit(p) => write!(
                f,
                "factor {p} resists rational-root splitting; supply it in factored form"
            ),
            Error::InvalidInput(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
