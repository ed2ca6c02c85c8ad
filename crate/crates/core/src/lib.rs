//! Desk-scale simulation and verification lab for distributed quantum
//! state certification under communication constraints.
//!
//! The crate simulates the public-coin certification protocol end to end
//! on dense density matrices and numerically verifies the closed-form
//! quantities its analysis rests on: Haar moment integrals, quantum
//! χ²-divergences and the Ingster–Suslina identity, channel norm bounds,
//! and Bell-sampling distributions.

pub mod bell;
pub mod certify;
pub mod channels;
pub mod error;
pub mod linalg;
pub mod lowerbound;
pub mod random;
pub mod tol;

pub use error::{Error, Result};
