//! Numerical laboratory for a lattice free boundary problem with facets.
//!
//! Three layers:
//!
//! * [`lattice`] — exact integer-lattice primitives (slopes, boxes, fields,
//!   the discrete Laplacian, Diophantine kernel lattices);
//! * [`hamiltonian`] — the pinning threshold `H(p)` of the lattice
//!   half-space profile, computed by four independent routes (root product,
//!   log-periodic quadrature, walk-series lattice sum, projected hitting
//!   system), plus the dual threshold and level-set boundary sampling;
//! * [`solver`] — the least supersolution of the free boundary system by
//!   divisible-sandpile flow and by an accelerated active-set method, with
//!   energy, first-variation, facet, and convexity diagnostics.
//!
//! Numeric kernels are generic over the scalar type via [`Real`]
//! (`f32`/`f64`); every tolerance in the test suite assumes `f64`. Lattice
//! coordinates are always exact `i64`.

pub mod error;
pub mod hamiltonian;
pub mod lattice;
pub mod scalar;
pub mod solver;

pub use scalar::Real;

/// Concrete `f64` aliases for the main types.
pub type Field64 = lattice::ScalarField<f64>;
pub type Estimate64 = hamiltonian::HEstimate<f64>;
pub type Problem64 = solver::Problem<f64>;
pub type Report64 = solver::SolveReport<f64>;

/// Concrete `f32` aliases (compiles and runs; not tolerance-calibrated).
pub type Field32 = lattice::ScalarField<f32>;
pub type Estimate32 = hamiltonian::HEstimate<f32>;
pub type Problem32 = solver::Problem<f32>;
pub type Report32 = solver::SolveReport<f32>;
