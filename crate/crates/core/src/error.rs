use core::fmt;

use crate::lattice::Vertex;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The level `k` must be at least 1.
    InvalidLevel(u32),
    /// The vertex does not belong to `V_k`.
    VertexOutOfRange { vertex: Vertex, k: u32 },
    /// Row lengths are not weakly decreasing.
    InvalidShape { rows: [u32; 3] },
    /// `gcd(0, 0)` is undefined.
    ZeroGcd,
    /// A rational function with a zero denominator.
    ZeroDenominator,
    /// The denominator vanishes at `t = 0`, so there is no power series.
    SingularAtOrigin,
    /// The polynomial matrix has identically zero determinant.
    SingularMatrix,
    /// Matrix dimensions do not fit the requested operation.
    DimensionMismatch,
    /// Power iteration did not settle within the iteration budget.
    NoConvergence { iterations: usize },
    /// No sign change was found on `(0, upper]`.
    NoRootFound { upper: f64 },
    /// The brute-force enumerator refuses shapes above its size cap.
    CapExceeded { n: u32, cap: u32 },
    /// Malformed polynomial text.
    Parse,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidLevel(k) => write!(f, "invalid level k = {k}; k must be at least 1"),
            Error::VertexOutOfRange { vertex, k } => {
                write!(f, "vertex {vertex} is not in V_{k} (needs i + j <= {k})")
            }
            Error::InvalidShape { rows } => {
                write!(f, "rows {rows:?} are not weakly decreasing")
            }
            Error::ZeroGcd => f.write_str("gcd of two zero polynomials is undefined"),
            Error::ZeroDenominator => f.write_str("zero denominator"),
            Error::SingularAtOrigin => f.write_str("denominator vanishes at t = 0"),
            Error::SingularMatrix => f.write_str("matrix is singular"),
            Error::DimensionMismatch => f.write_str("matrix dimensions do not match"),
            Error::NoConvergence { iterations } => {
                write!(f, "power iteration did not converge after {iterations} iterations")
            }
            Error::NoRootFound { upper } => {
                write!(f, "no sign change found on (0, {upper}]")
            }
            Error::CapExceeded { n, cap } => {
                write!(f, "shape with {n} boxes exceeds the brute-force cap of {cap}")
            }
            Error::Parse => f.write_str("malformed polynomial"),
        }
    }
}

impl core::error::Error for Error {}
