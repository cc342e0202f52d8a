//! Error types shared by the lattice, Hamiltonian, and solver modules.

use std::error::Error;
use std::fmt;

/// Errors from lattice primitives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// A slope must have at least one nonzero entry.
    ZeroVector,
    /// Site lies outside the field's box.
    OutOfBox { site: Vec<i64> },
    /// Enumeration would exceed the configured site limit.
    CapacityExceeded { requested: usize, limit: usize },
    /// Box corners out of order or dimension mismatch.
    BadBox,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::ZeroVector => write!(f, "slope has no nonzero entry"),
            LatticeError::OutOfBox { site } => write!(f, "site {:?} outside box", site),
            LatticeError::CapacityExceeded { requested, limit } => {
                write!(f, "enumeration of {} sites exceeds limit {}", requested, limit)
            }
            LatticeError::BadBox => write!(f, "box corners out of order"),
        }
    }
}

impl Error for LatticeError {}

/// Errors from the Hamiltonian evaluators.
#[derive(Debug, Clone, PartialEq)]
pub enum HamError {
    /// Roots could not be partitioned into reciprocal pairs within tolerance.
    RootPairingFailed { detail: String },
    /// The root product has a relative imaginary part above tolerance.
    NonRealProduct { imag_over_real: f64 },
    /// Root iteration did not converge.
    RootSolveFailed { degree: usize },
    /// Quadrature node doubling hit the cap without agreement.
    NoConvergence { nodes: usize },
    /// The walk series cannot reach the requested tolerance within the depth cap.
    ToleranceUnreachable { depth_cap: usize },
    /// The banded hitting system was singular (contract violation).
    SingularSystem,
    Lattice(LatticeError),
}

impl fmt::Display for HamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HamError::RootPairingFailed { detail } => {
                write!(f, "reciprocal root pairing failed: {}", detail)
            }
            HamError::NonRealProduct { imag_over_real } => {
                write!(f, "root product not real: |Im|/|Re| = {:e}", imag_over_real)
            }
            HamError::RootSolveFailed { degree } => {
                write!(f, "root iteration failed to converge at degree {}", degree)
            }
            HamError::NoConvergence { nodes } => {
                write!(f, "quadrature did not settle below cap of {} nodes", nodes)
            }
            HamError::ToleranceUnreachable { depth_cap } => {
                write!(f, "series tolerance unreachable within depth {}", depth_cap)
            }
            HamError::SingularSystem => write!(f, "hitting system singular"),
            HamError::Lattice(e) => write!(f, "{}", e),
        }
    }
}

impl Error for HamError {}

impl From<LatticeError> for HamError {
    fn from(e: LatticeError) -> Self {
        HamError::Lattice(e)
    }
}

/// Errors from the free-boundary solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveError {
    /// The positive set reached the box frame; caller should enlarge the box.
    BoxTooSmall,
    /// Residual failed to reach the target within the iteration cap.
    IterationCap { iterations: usize, residual: f64 },
    /// The active-set outer loop cycled.
    NonMonotoneActiveSet { iterations: usize },
    /// Operation requires a non-empty support.
    EmptySupport,
    /// Limit half-space directions must be pairwise orthogonal.
    NonOrthogonal,
    /// Operation not implemented for this dimension.
    UnsupportedDimension { d: usize },
    Lattice(LatticeError),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::BoxTooSmall => write!(f, "positive set touched the box frame"),
            SolveError::IterationCap { iterations, residual } => {
                write!(f, "iteration cap {} hit at residual {:e}", iterations, residual)
            }
            SolveError::NonMonotoneActiveSet { iterations } => {
                write!(f, "active set cycled after {} outer iterations", iterations)
            }
            SolveError::EmptySupport => write!(f, "support is empty"),
            SolveError::NonOrthogonal => write!(f, "directions are not pairwise orthogonal"),
            SolveError::UnsupportedDimension { d } => {
                write!(f, "operation not supported in dimension {}", d)
            }
            SolveError::Lattice(e) => write!(f, "{}", e),
        }
    }
}

impl Error for SolveError {}

impl From<LatticeError> for SolveError {
    fn from(e: LatticeError) -> Self {
        SolveError::Lattice(e)
    }
}
