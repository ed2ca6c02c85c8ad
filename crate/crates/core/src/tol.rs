//! Numerical tolerances used across the crate.
//!
//! Validation thresholds are sized for double precision accumulation on
//! dense operators of dimension up to ~256. Anything tighter starts
//! tripping on legitimate rounding; anything looser hides real bugs.

/// Max entrywise deviation from the adjoint tolerated by Hermiticity checks.
pub const TAU_HERM: f64 = 1e-9;

/// Eigenvalue floor for positive-semidefiniteness checks.
pub const TAU_PSD: f64 = 1e-9;

/// Tolerated deviation of a density-matrix trace from 1.
pub const TAU_TR: f64 = 1e-9;

/// Unitarity residual allowed on sampled or user-supplied unitaries.
pub const TAU_UNITARY: f64 = 1e-10;

/// Eigenvalues below this are treated as zero when building supports
/// and pseudo-inverses.
pub const SUPPORT_CUTOFF: f64 = 1e-10;

/// Squared-overlap slack for the support inclusion test.
pub const SUPPORT_OVERLAP_SLACK: f64 = 1e-8;
