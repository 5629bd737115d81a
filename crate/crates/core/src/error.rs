use core::fmt;

/// Errors raised when an operation is called outside its domain.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A real argument lies outside the interval the operation accepts.
    OutOfRange { what: &'static str, value: f64 },
    /// `(q, n)` is not an admissible rotation pair.
    InvalidRotation { q: u32, n: u32 },
    /// A trace that must be `+2` or `-2` is not.
    NotParabolicTrace,
    /// Division by a zero parameter.
    ZeroDivisor(&'static str),
    /// The matrix is `+-I`; it has infinitely many square roots.
    IdentityMatrix,
    /// No square root satisfies the involution condition within tolerance.
    NoInvolutionRoot { best_residual: f64 },
    /// A witness pair does not satisfy the parity and order constraints.
    InvalidWitness(&'static str),
    /// Presentation text could not be parsed.
    Parse(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRange { what, value } => write!(f, "{what} out of range: {value}"),
            Error::InvalidRotation { q, n } => write!(f, "invalid rotation pair q={q}, n={n}"),
            Error::NotParabolicTrace => f.write_str("trace of g must be +2 or -2"),
            Error::ZeroDivisor(what) => write!(f, "{what} must be nonzero"),
            Error::IdentityMatrix => f.write_str("matrix is the identity in PSL(2,C)"),
            Error::NoInvolutionRoot { best_residual } => {
                write!(f, "no square root satisfies the involution test (best residual {best_residual:e})")
            }
            Error::InvalidWitness(why) => write!(f, "invalid witness: {why}"),
            Error::Parse(why) => write!(f, "parse error: {why}"),
        }
    }
}

impl core::error::Error for Error {}
